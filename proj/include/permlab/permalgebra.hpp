#pragma once

#include "permlab/matrix.hpp"

namespace permlab {

/// All weakly increasing k-tuples over {0,...,n-1} in lexicographic order.
std::vector<std::vector<size_t>> multisets(size_t n, size_t k);

/// The matrix of column-multiset permanents: rows indexed by single columns
/// i of the generic d x n matrix, columns by (d-1)-multisets J, with entry
/// (i, J) the d x d permanent on the column multiset {i} now J.
struct HMatrix {
    RingPtr ring;
    size_t d = 0, n = 0;
    std::vector<std::vector<size_t>> cols; // the multisets J
    PolyMatrix grid;                       // n rows, one column per J

    HMatrix(RingPtr r, PolyMatrix g) : ring(std::move(r)), grid(std::move(g)) {}

    /// Permanent on the full column multiset (sorted), for cross reference.
    Poly entry_for(const std::vector<size_t>& multiset) const;
};

HMatrix build_h(const Field* f, size_t d, size_t n);

struct HRankReport {
    bool pass = true;
    size_t minors_checked = 0;
    std::string failed_selector;
};

/// Expands every (d+1) x (d+1) minor of H and requires it to vanish.
HRankReport verify_h_rank(const Field* f, size_t d, size_t n);

/// Checks the expansion of each H column along its distinguished index:
/// entry (r, J) = sum_i x_{i,r} * (permanent on J omitting row i).
bool verify_h_span(const HMatrix& h);

/// det of the 3x3 symbol matrix (a_ij) minus its diagonal product lies in
/// the ideal of the off-diagonal symbols, and pushing the symbols to their
/// permanent values reproduces det H_{2,3}.
bool verify_h23_determinant(const Field* f);

/// The three-column pattern cut from H(3,5): after clearing columns 4 and 5
/// of the generic matrix, the top block matches the stated permanents and
/// the three remaining off-pattern entries coincide in a single polynomial.
bool verify_h_prime_pattern(const Field* f);

} // namespace permlab
