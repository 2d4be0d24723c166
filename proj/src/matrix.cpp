#include "permlab/matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "permlab/error.hpp"

namespace permlab {

namespace {

std::string index_set_str(const std::vector<size_t>& v) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i] + 1;
    }
    os << '}';
    return os.str();
}

} // namespace

std::string Selector::str() const {
    return index_set_str(rows) + "x" + index_set_str(cols);
}

std::vector<std::vector<size_t>> combinations(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k > n) return out;
    std::vector<size_t> c(k);
    for (size_t i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        out.push_back(c);
        // advance to the next k-subset in lexicographic order
        size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

ScalarMatrix::ScalarMatrix(const Field* f, size_t rows, size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

ScalarMatrix ScalarMatrix::parse_rows(const Field* f,
                                      const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty() || rows[0].empty()) throw ArgError("matrix must be nonempty");
    ScalarMatrix m(f, rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw ArgError("ragged matrix rows");
        for (size_t j = 0; j < m.cols_; ++j) m.set(i, j, Scalar::parse(f, rows[i][j]));
    }
    return m;
}

ScalarMatrix ScalarMatrix::from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("rows"))
        throw IoError("matrix json needs \"field\" and \"rows\"");
    const Field* f = Field::parse(j["field"].get<std::string>());
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : j["rows"]) {
        std::vector<std::string> row;
        for (const auto& e : r) row.push_back(e.get<std::string>());
        rows.push_back(std::move(row));
    }
    return parse_rows(f, rows);
}

nlohmann::ordered_json ScalarMatrix::to_json() const {
    nlohmann::ordered_json j;
    j["field"] = field_->name();
    auto rows = nlohmann::ordered_json::array();
    for (size_t i = 0; i < rows_; ++i) {
        auto row = nlohmann::ordered_json::array();
        for (size_t jx = 0; jx < cols_; ++jx) row.push_back(at(i, jx).str());
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

ScalarMatrix ScalarMatrix::submatrix(const std::vector<size_t>& rows,
                                     const std::vector<size_t>& cols) const {
    ScalarMatrix m(field_, rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) {
            if (rows[i] >= rows_ || cols[j] >= cols_) throw ArgError("submatrix index out of range");
            m.set(i, j, at(rows[i], cols[j]));
        }
    return m;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix m(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
    return m;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

PolyMatrix::PolyMatrix(RingPtr ring, size_t rows, size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, Poly::zero(ring)) {}

PolyMatrix PolyMatrix::submatrix(const std::vector<size_t>& rows,
                                 const std::vector<size_t>& cols) const {
    PolyMatrix m(ring_, rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) {
            if (rows[i] >= rows_ || cols[j] >= cols_) throw ArgError("submatrix index out of range");
            m.set(i, j, at(rows[i], cols[j]));
        }
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix m(ring_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
    return m;
}

ScalarMatrix PolyMatrix::evaluate(const std::vector<Scalar>& point) const {
    ScalarMatrix m(ring_->field(), rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j).evaluate(point));
    return m;
}

PolyMatrix generic_matrix(const Field* f, size_t m, size_t n, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(m * n);
    for (size_t i = 1; i <= m; ++i)
        for (size_t j = 1; j <= n; ++j)
            names.push_back(prefix + "_" + std::to_string(i) + "_" + std::to_string(j));
    RingPtr ring = PolyRing::make(f, names);
    return matrix_of_vars(ring, m, n);
}

PolyMatrix matrix_of_vars(const RingPtr& ring, size_t m, size_t n) {
    if (ring->nvars() < m * n) throw RingError("ring too small for variable grid");
    PolyMatrix mat(ring, m, n);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) mat.set(i, j, Poly::variable(ring, i * n + j));
    return mat;
}

PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows() || a.ring() != b.ring())
        throw ArgError("hconcat shape or ring mismatch");
    PolyMatrix m(a.ring(), a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
        for (size_t j = 0; j < b.cols(); ++j) m.set(i, a.cols() + j, b.at(i, j));
    }
    return m;
}

namespace {

// ---------------------------------------------------------------------------
// Ryser with Gray-code subset stepping: perm(A) = (-1)^n sum over nonempty
// column subsets S of (-1)^|S| prod_i rowsum_i(S). One column toggles per
// step, so the n running row sums update in O(n).
// ---------------------------------------------------------------------------

template <class T, class Add, class Sub, class IsZero, class Mul>
T ryser_generic(size_t n, const std::vector<T>& entry, T zero, T one, Add add, Sub sub,
                IsZero is_zero, Mul mul) {
    std::vector<T> sums(n, zero);
    T acc = zero;
    uint64_t gray = 0;
    unsigned popcnt = 0;
    for (uint64_t k = 1; k < (uint64_t(1) << n); ++k) {
        size_t j = (size_t)std::countr_zero(k);
        uint64_t bit = uint64_t(1) << j;
        gray ^= bit;
        bool added = (gray & bit) != 0;
        popcnt += added ? 1 : -1;
        for (size_t i = 0; i < n; ++i) {
            const T& e = entry[i * n + j];
            sums[i] = added ? add(sums[i], e) : sub(sums[i], e);
        }
        T prod = one;
        bool zerod = false;
        for (size_t i = 0; i < n; ++i) {
            if (is_zero(sums[i])) {
                zerod = true;
                break;
            }
            prod = mul(prod, sums[i]);
        }
        if (zerod) continue;
        if ((n + popcnt) & 1)
            acc = sub(acc, prod);
        else
            acc = add(acc, prod);
    }
    return acc;
}

mpz_class mpz_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
    mpz_class hi((unsigned long)(u >> 64));
    mpz_class lo((unsigned long)(u & ~0ULL));
    mpz_class out = (hi << 64) + lo;
    return neg ? mpz_class(-out) : out;
}

// Machine-integer Ryser for rational matrices with integer entries. Row sums
// stay in int64; products are chunked through __int128 before touching GMP.
Scalar ryser_int_fast(const ScalarMatrix& m) {
    const size_t n = m.rows();
    std::vector<long> entry(n * n);
    long maxabs = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            long v = mpz_get_si(m.at(i, j).rat().get_num().get_mpz_t());
            entry[i * n + j] = v;
            maxabs = std::max(maxabs, std::labs(v));
        }
    // bound row sums, then pick how many fit in a 126-bit product
    long bound = (long)n * std::max(maxabs, 1L);
    int bits = 1;
    while ((bound >> bits) != 0) ++bits;
    size_t chunk = std::max<size_t>(1, 126 / (size_t)(bits + 1));

    std::vector<long> sums(n, 0);
    mpz_class acc = 0;
    uint64_t gray = 0;
    unsigned popcnt = 0;
    for (uint64_t k = 1; k < (uint64_t(1) << n); ++k) {
        size_t j = (size_t)std::countr_zero(k);
        uint64_t bit = uint64_t(1) << j;
        gray ^= bit;
        if (gray & bit) {
            ++popcnt;
            for (size_t i = 0; i < n; ++i) sums[i] += entry[i * n + j];
        } else {
            --popcnt;
            for (size_t i = 0; i < n; ++i) sums[i] -= entry[i * n + j];
        }
        mpz_class prod = 1;
        __int128 part = 1;
        size_t in_part = 0;
        bool zerod = false;
        for (size_t i = 0; i < n; ++i) {
            if (sums[i] == 0) {
                zerod = true;
                break;
            }
            part *= sums[i];
            if (++in_part == chunk) {
                prod *= mpz_from_i128(part);
                part = 1;
                in_part = 0;
            }
        }
        if (zerod) continue;
        if (in_part) prod *= mpz_from_i128(part);
        if ((n + popcnt) & 1)
            acc -= prod;
        else
            acc += prod;
    }
    return Scalar::from_rat(m.field(), Rat(acc));
}

bool all_small_integers(const ScalarMatrix& m) {
    if (m.field()->kind() != FieldKind::rationals) return false;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            const Scalar& s = m.at(i, j);
            if (!s.is_integer()) return false;
            if (mpz_sizeinbase(s.rat().get_num().get_mpz_t(), 2) > 32) return false;
        }
    return true;
}

Scalar ryser_scalar(const ScalarMatrix& m) {
    const size_t n = m.rows();
    if (n >= 8 && all_small_integers(m)) return ryser_int_fast(m);
    const Field* f = m.field();
    std::vector<Scalar> entry;
    entry.reserve(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) entry.push_back(m.at(i, j));
    return ryser_generic<Scalar>(
        n, entry, Scalar::zero(f), Scalar::one(f),
        [](const Scalar& a, const Scalar& b) { return a + b; },
        [](const Scalar& a, const Scalar& b) { return a - b; },
        [](const Scalar& a) { return a.is_zero(); },
        [](const Scalar& a, const Scalar& b) { return a * b; });
}

// Column-subset DP (Laplace over subsets): D[S] = permanent of the first
// |S| rows on column set S.
template <class T, class AddMul>
T laplace_generic(size_t n, T zero, T one, AddMul add_mul_entry) {
    if (n > 24) throw ArgError("permanent: matrix too large for subset DP");
    std::vector<T> d((size_t(1) << n), zero);
    d[0] = one;
    for (uint64_t s = 1; s < (uint64_t(1) << n); ++s) {
        size_t row = (size_t)std::popcount(s) - 1;
        T acc = zero;
        for (uint64_t rest = s; rest;) {
            uint64_t bit = rest & (~rest + 1);
            size_t j = (size_t)std::countr_zero(bit);
            acc = add_mul_entry(acc, row, j, d[s ^ bit]);
            rest ^= bit;
        }
        d[s] = acc;
    }
    return d[(size_t(1) << n) - 1];
}

Scalar laplace_scalar(const ScalarMatrix& m) {
    return laplace_generic<Scalar>(
        m.rows(), Scalar::zero(m.field()), Scalar::one(m.field()),
        [&](const Scalar& acc, size_t i, size_t j, const Scalar& sub) {
            return acc + m.at(i, j) * sub;
        });
}

Poly laplace_poly(const PolyMatrix& m) {
    return laplace_generic<Poly>(
        m.rows(), Poly::zero(m.ring()), Poly::from_int(m.ring(), 1),
        [&](const Poly& acc, size_t i, size_t j, const Poly& sub) {
            return acc + m.at(i, j) * sub;
        });
}

Poly ryser_poly(const PolyMatrix& m) {
    const size_t n = m.rows();
    std::vector<Poly> entry;
    entry.reserve(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) entry.push_back(m.at(i, j));
    return ryser_generic<Poly>(
        n, entry, Poly::zero(m.ring()), Poly::from_int(m.ring(), 1),
        [](const Poly& a, const Poly& b) { return a + b; },
        [](const Poly& a, const Poly& b) { return a - b; },
        [](const Poly& a) { return a.is_zero(); },
        [](const Poly& a, const Poly& b) { return a * b; });
}

} // namespace

Scalar permanent(const ScalarMatrix& m, PermMethod method) {
    if (m.rows() != m.cols()) throw ArgError("permanent needs a square matrix");
    if (m.rows() == 0) return Scalar::one(m.field());
    switch (method) {
        case PermMethod::laplace: return laplace_scalar(m);
        case PermMethod::ryser:
        case PermMethod::automatic: return ryser_scalar(m);
    }
    throw ArgError("unknown permanent method");
}

Poly permanent(const PolyMatrix& m, PermMethod method) {
    if (m.rows() != m.cols()) throw ArgError("permanent needs a square matrix");
    if (m.rows() == 0) return Poly::from_int(m.ring(), 1);
    switch (method) {
        case PermMethod::ryser: return ryser_poly(m);
        case PermMethod::laplace:
        case PermMethod::automatic: return laplace_poly(m);
    }
    throw ArgError("unknown permanent method");
}

Scalar determinant(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) throw ArgError("determinant needs a square matrix");
    const size_t n = m.rows();
    const Field* f = m.field();
    if (n == 0) return Scalar::one(f);
    // fraction-free Bareiss with row pivoting; every division is exact
    std::vector<Scalar> a;
    a.reserve(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a.push_back(m.at(i, j));
    bool negate = false;
    Scalar prev = Scalar::one(f);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t p = k;
        while (p < n && a[p * n + k].is_zero()) ++p;
        if (p == n) return Scalar::zero(f);
        if (p != k) {
            for (size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i * n + j] =
                    (a[k * n + k] * a[i * n + j] - a[i * n + k] * a[k * n + j]) / prev;
            a[i * n + k] = Scalar::zero(f);
        }
        prev = a[k * n + k];
    }
    Scalar det = a[n * n - 1];
    return negate ? -det : det;
}

Poly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw ArgError("determinant needs a square matrix");
    const size_t n = m.rows();
    if (n == 0) return Poly::from_int(m.ring(), 1);
    if (n > 24) throw ArgError("determinant: matrix too large for subset DP");
    // signed column-subset DP: expand along the last included row
    std::vector<Poly> d((size_t(1) << n), Poly::zero(m.ring()));
    d[0] = Poly::from_int(m.ring(), 1);
    for (uint64_t s = 1; s < (uint64_t(1) << n); ++s) {
        size_t row = (size_t)std::popcount(s) - 1;
        Poly acc = Poly::zero(m.ring());
        size_t pos = 0;
        for (uint64_t rest = s; rest; ++pos) {
            uint64_t bit = rest & (~rest + 1);
            size_t j = (size_t)std::countr_zero(bit);
            Poly part = m.at(row, j) * d[s ^ bit];
            if ((row + pos) & 1)
                acc -= part;
            else
                acc += part;
            rest ^= bit;
        }
        d[s] = acc;
    }
    return d[(size_t(1) << n) - 1];
}

size_t perrank(const ScalarMatrix& m) {
    size_t bound = std::min(m.rows(), m.cols());
    for (size_t r = bound; r >= 1; --r) {
        for (const auto& ri : combinations(m.rows(), r))
            for (const auto& ci : combinations(m.cols(), r))
                if (!permanent(m.submatrix(ri, ci)).is_zero()) return r;
    }
    return 0;
}

std::vector<std::pair<Selector, Scalar>> sub_permanents(const ScalarMatrix& m, size_t d) {
    if (d == 0 || d > std::min(m.rows(), m.cols()))
        throw ArgError("subpermanent order out of range");
    std::vector<std::pair<Selector, Scalar>> out;
    for (const auto& ri : combinations(m.rows(), d))
        for (const auto& ci : combinations(m.cols(), d))
            out.push_back({Selector{ri, ci}, permanent(m.submatrix(ri, ci))});
    return out;
}

std::vector<std::pair<Selector, Poly>> sub_permanents(const PolyMatrix& m, size_t d) {
    if (d == 0 || d > std::min(m.rows(), m.cols()))
        throw ArgError("subpermanent order out of range");
    std::vector<std::pair<Selector, Poly>> out;
    for (const auto& ri : combinations(m.rows(), d))
        for (const auto& ci : combinations(m.cols(), d))
            out.push_back({Selector{ri, ci}, permanent(m.submatrix(ri, ci))});
    return out;
}

} // namespace permlab
