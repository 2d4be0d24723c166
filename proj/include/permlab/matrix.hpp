#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "permlab/polyring.hpp"

namespace permlab {

/// Row/column selection for a submatrix. Row indices are strictly increasing;
/// column indices are weakly increasing so a column may repeat (needed for
/// permanents of column multisets). All indices are 0-based internally and
/// printed 1-based.
struct Selector {
    std::vector<size_t> rows;
    std::vector<size_t> cols;

    std::string str() const;
};

/// All k-subsets of {0,...,n-1} in lexicographic order.
std::vector<std::vector<size_t>> combinations(size_t n, size_t k);

/// Dense scalar matrix over a fixed field.
class ScalarMatrix {
public:
    ScalarMatrix(const Field* f, size_t rows, size_t cols);

    /// Entries given as Scalar text literals, row by row.
    static ScalarMatrix parse_rows(const Field* f,
                                   const std::vector<std::vector<std::string>>& rows);
    static ScalarMatrix from_json(const nlohmann::ordered_json& j);
    nlohmann::ordered_json to_json() const;

    const Field* field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, Scalar v) { a_[i * cols_ + j] = std::move(v); }

    ScalarMatrix submatrix(const std::vector<size_t>& rows,
                           const std::vector<size_t>& cols) const;
    ScalarMatrix transpose() const;
    bool is_zero() const;

private:
    const Field* field_;
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Dense matrix of polynomials sharing one ring.
class PolyMatrix {
public:
    PolyMatrix(RingPtr ring, size_t rows, size_t cols);

    const RingPtr& ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const Poly& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, Poly v) { a_[i * cols_ + j] = std::move(v); }

    PolyMatrix submatrix(const std::vector<size_t>& rows,
                         const std::vector<size_t>& cols) const;
    PolyMatrix transpose() const;

    /// Entry-wise evaluation at a point of the coefficient field.
    ScalarMatrix evaluate(const std::vector<Scalar>& point) const;

private:
    RingPtr ring_;
    size_t rows_, cols_;
    std::vector<Poly> a_;
};

/// The m-by-n matrix of independent variables x_i_j (row major, 1-based
/// names) over the polynomial ring it creates.
PolyMatrix generic_matrix(const Field* f, size_t m, size_t n,
                          const std::string& prefix = "x");

/// Wraps existing ring variables var_index(i*n+j) as an m-by-n matrix; the
/// ring may carry extra variables after the grid block.
PolyMatrix matrix_of_vars(const RingPtr& ring, size_t m, size_t n);

PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b);

enum class PermMethod { automatic, laplace, ryser };

Scalar permanent(const ScalarMatrix& m, PermMethod method = PermMethod::automatic);
Poly permanent(const PolyMatrix& m, PermMethod method = PermMethod::automatic);

Scalar determinant(const ScalarMatrix& m);
Poly determinant(const PolyMatrix& m);

/// Largest r such that some r-by-r submatrix has nonzero permanent.
size_t perrank(const ScalarMatrix& m);

std::vector<std::pair<Selector, Scalar>> sub_permanents(const ScalarMatrix& m, size_t d);
std::vector<std::pair<Selector, Poly>> sub_permanents(const PolyMatrix& m, size_t d);

} // namespace permlab
