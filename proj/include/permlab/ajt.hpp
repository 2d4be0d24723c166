#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permlab/groebner.hpp"
#include "permlab/matrix.hpp"

namespace permlab {

// Product over the rows of a d x n matrix of the linear forms they define in
// X_1..X_n, expanded; primed additionally multiplies by X_1*...*X_n.
Poly p_poly(const ScalarMatrix& a, bool primed = false);

// Matrix with alpha_i copies of column i, in index order; sum(alpha) columns.
ScalarMatrix repeat_columns(const ScalarMatrix& a, const std::vector<uint32_t>& alpha);

enum class CoeffMethod { expand, coset };

// Coefficient of X^alpha in p_poly(a).  expand reads it off the expanded
// product; coset sums row-block assignments, one term per coset of the
// column-stabilizer inside S_d.
Scalar c_alpha(const ScalarMatrix& a, const std::vector<uint32_t>& alpha,
               CoeffMethod method = CoeffMethod::expand);

// Rewrite by x^q = x until every exponent is < q (q = field size).
Poly reduce_q(const Poly& f);

struct WitnessReport {
    std::optional<std::vector<Scalar>> witness; // lexicographically first
    uint64_t nodes = 0;                         // assignments explored
};

// Search (k*)^n depth-first for X with A*X fully supported.
WitnessReport find_witness(const ScalarMatrix& a);

struct ComponentTag {
    std::string tag = "unclassified";
    std::vector<size_t> rows, cols; // placement, tag-dependent
    std::string str() const;
};

enum class ClassifyContext { c23, c35, c44 };

// Certificate that a variety point lies on one of the candidate components
// for the context; fixed priority order, lexicographically first placement.
ComponentTag classify_solution(const ScalarMatrix& m, ClassifyContext ctx);

// True when all eleven generators of the 3x4 block ideal vanish at the point.
bool block_ideal_vanishes(const ScalarMatrix& m);

struct NoWitnessEntry {
    std::vector<uint32_t> codes; // row-major
    ComponentTag tag;
};

struct NoWitnessReport {
    size_t d = 0, n = 0;
    uint32_t q = 0;
    uint64_t total = 0; // matrices scanned
    std::vector<NoWitnessEntry> entries;
    std::map<std::string, uint64_t> tag_counts;
    uint64_t unclassified = 0;
};

// Exhaustively tags every d x n matrix over F_q admitting no witness as
// zero-row, classified-two-column, or unclassified.
NoWitnessReport enumerate_no_witness(size_t d, size_t n, uint32_t q);

// Visits every m x n matrix over f (row-major codes) whose d x d
// subpermanents all vanish; stops early if the visitor returns false.
// Returns the number of solutions visited.
uint64_t variety_enumerate(const Field* f, size_t d, size_t m, size_t n,
                           const std::function<bool(const std::vector<uint32_t>&)>& visit);

struct VarietySummary {
    uint64_t solutions = 0;
    std::map<std::string, uint64_t> by_tag;
    uint64_t unclassified = 0;
    std::vector<std::vector<uint32_t>> unclassified_samples; // first few
};

VarietySummary variety_classified(const Field* f, size_t d, size_t m, size_t n,
                                  ClassifyContext ctx);

struct ContainmentReport {
    bool contained = true;
    size_t checked = 0;
    std::vector<std::string> failing; // non-member polynomials, printed
};

// det(M)^d against the d x d subpermanents of (M | M).
ContainmentReport doubled_det_power(const Field* f, size_t d, GroebnerCache* cache = nullptr);

// det(M) * I_{d-1}(d,d) against the d x d subpermanents of (M | M).
ContainmentReport doubled_det_times_subideal(const Field* f, size_t d,
                                             GroebnerCache* cache = nullptr);

// prod_i D_i(M_i) against the same ideal, where M_i is the top i x d block
// and D_i its i x i minor ideal; one product per choice of minors.
ContainmentReport minor_chain_products(const Field* f, size_t d, GroebnerCache* cache = nullptr);

// Embedded-ideal containment: every d x d subpermanent of the full m x n grid
// reduces to zero modulo the d1 x d1 subpermanents of the (rows1, cols1)
// submatrix, provided d - d1 >= (m + n) - (|rows1| + |cols1|).
ContainmentReport embedded_subideal(const Field* f, size_t d, size_t m, size_t n, size_t d1,
                                    const std::vector<size_t>& rows1,
                                    const std::vector<size_t>& cols1,
                                    GroebnerCache* cache = nullptr);

struct RandomWitnessScan {
    uint64_t trials = 0;
    uint64_t witness_found = 0;
    uint64_t retries = 0; // singular matrices rejected while sampling
    std::vector<std::vector<uint32_t>> failures;
};

// Samples invertible size x size matrices over F_q uniformly (rejection on
// determinant) and runs the witness search on each.
RandomWitnessScan random_invertible_witness_scan(uint32_t q, size_t size, uint64_t trials,
                                                 uint64_t seed);

struct LargeCharReport {
    uint64_t scanned = 0;
    uint64_t counterexamples = 0;
    std::vector<std::vector<uint32_t>> samples; // offending matrices, if any
};

// Exhaustive d x n sweep over F_q checking: witness exists iff no zero row.
LargeCharReport witness_iff_no_zero_row(size_t d, size_t n, uint32_t q);

// Randomized version of the same check.
LargeCharReport witness_iff_no_zero_row_random(size_t d, size_t n, uint32_t q, uint64_t trials,
                                               uint64_t seed);

} // namespace permlab
