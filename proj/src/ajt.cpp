#include "permlab/ajt.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "permlab/error.hpp"

namespace permlab {

namespace {

RingPtr x_ring(const Field* f, size_t n) {
    std::vector<std::string> names;
    for (size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    return PolyRing::make(f, names);
}

const Field* field_of_order(uint32_t q) {
    for (uint32_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        uint32_t k = 0, m = q;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        if (m != 1) throw ArgError("field order must be a prime power: " + std::to_string(q));
        return k == 1 ? Field::prime(p) : Field::extension(p, k);
    }
    return Field::prime(q);
}

void check_alpha(const ScalarMatrix& a, const std::vector<uint32_t>& alpha) {
    if (alpha.size() != a.cols()) throw ArgError("alpha length must match column count");
    uint64_t sum = 0;
    for (uint32_t v : alpha) sum += v;
    if (sum != a.rows()) throw ArgError("alpha must sum to the row count");
}

} // namespace

Poly p_poly(const ScalarMatrix& a, bool primed) {
    RingPtr ring = x_ring(a.field(), a.cols());
    Poly acc = Poly::constant(ring, Scalar::one(a.field()));
    for (size_t i = 0; i < a.rows(); ++i) {
        Poly row = Poly::zero(ring);
        for (size_t j = 0; j < a.cols(); ++j)
            row += Poly::term(ring, Monomial::var(j), a.at(i, j));
        acc *= row;
    }
    if (primed)
        for (size_t j = 0; j < a.cols(); ++j) acc *= Poly::variable(ring, j);
    return acc;
}

ScalarMatrix repeat_columns(const ScalarMatrix& a, const std::vector<uint32_t>& alpha) {
    check_alpha(a, alpha);
    ScalarMatrix out(a.field(), a.rows(), a.rows());
    size_t c = 0;
    for (size_t j = 0; j < alpha.size(); ++j)
        for (uint32_t rep = 0; rep < alpha[j]; ++rep, ++c)
            for (size_t i = 0; i < a.rows(); ++i) out.set(i, c, a.at(i, j));
    return out;
}

namespace {

// sum over row-to-column-block assignments with block capacities alpha
void coset_sum(const ScalarMatrix& a, std::vector<uint32_t>& rem, size_t row, const Scalar& acc,
               Scalar& total) {
    if (row == a.rows()) {
        total += acc;
        return;
    }
    for (size_t j = 0; j < rem.size(); ++j) {
        if (!rem[j] || a.at(row, j).is_zero()) continue;
        --rem[j];
        coset_sum(a, rem, row + 1, acc * a.at(row, j), total);
        ++rem[j];
    }
}

} // namespace

Scalar c_alpha(const ScalarMatrix& a, const std::vector<uint32_t>& alpha, CoeffMethod method) {
    check_alpha(a, alpha);
    if (method == CoeffMethod::expand) {
        Monomial m;
        for (size_t j = 0; j < alpha.size(); ++j) {
            m.e[j] = static_cast<uint16_t>(alpha[j]);
            m.deg += alpha[j];
        }
        return p_poly(a).coefficient_of(m);
    }
    Scalar total = Scalar::zero(a.field());
    std::vector<uint32_t> rem = alpha;
    coset_sum(a, rem, 0, Scalar::one(a.field()), total);
    return total;
}

Poly reduce_q(const Poly& f) {
    const Field* k = f.ring()->field();
    if (!k->finite()) throw ArgError("reduction by x^q = x needs a finite field");
    uint32_t q = k->size();
    std::vector<Term> out;
    for (const Term& t : f.terms()) {
        Monomial m;
        for (size_t v = 0; v < f.ring()->nvars(); ++v) {
            uint16_t e = t.m[v];
            if (e >= q) e = static_cast<uint16_t>((e - 1) % (q - 1) + 1);
            m.e[v] = e;
            m.deg += e;
        }
        out.push_back({m, t.c});
    }
    return Poly::from_terms(f.ring(), std::move(out));
}

namespace {

struct WitnessSearch {
    const Field* f;
    size_t d, n;
    const std::vector<uint32_t>& a; // row-major d x n codes
    std::vector<size_t> last;       // per row, last column with nonzero coefficient
    std::vector<uint32_t> sums;     // partial row sums
    std::vector<uint32_t> x;
    uint64_t nodes = 0;

    WitnessSearch(const Field* f, size_t d, size_t n, const std::vector<uint32_t>& a)
        : f(f), d(d), n(n), a(a), sums(d, 0), x(n, 0) {
        last.assign(d, n);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < n; ++j)
                if (a[i * n + j]) last[i] = j;
    }

    bool run() {
        for (size_t i = 0; i < d; ++i)
            if (last[i] == n) return false; // zero row: image always has a zero
        return descend(0);
    }

    bool descend(size_t j) {
        if (j == n) return true;
        uint32_t q = f->size();
        for (uint32_t v = 1; v < q; ++v) {
            ++nodes;
            std::vector<uint32_t> saved = sums;
            bool ok = true;
            for (size_t i = 0; i < d; ++i) {
                if (a[i * n + j]) sums[i] = f->ff_add(sums[i], f->ff_mul(a[i * n + j], v));
                if (last[i] == j && sums[i] == 0) ok = false;
            }
            if (ok) {
                x[j] = v;
                if (descend(j + 1)) return true;
            }
            sums = saved;
        }
        return false;
    }
};

std::vector<uint32_t> matrix_codes(const ScalarMatrix& m) {
    if (!m.field()->finite()) throw ArgError("operation needs a finite field");
    std::vector<uint32_t> codes(m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) codes[i * m.cols() + j] = m.at(i, j).code();
    return codes;
}

} // namespace

WitnessReport find_witness(const ScalarMatrix& a) {
    if (a.cols() > 16) throw ArgError("witness search supports at most 16 columns");
    std::vector<uint32_t> codes = matrix_codes(a);
    WitnessSearch search(a.field(), a.rows(), a.cols(), codes);
    WitnessReport rep;
    if (search.run()) {
        std::vector<Scalar> w;
        for (uint32_t v : search.x) w.push_back(Scalar::from_code(a.field(), v));
        rep.witness = std::move(w);
    }
    rep.nodes = search.nodes;
    return rep;
}

std::string ComponentTag::str() const {
    std::ostringstream os;
    os << tag;
    auto list = [&os](const char* label, const std::vector<size_t>& v) {
        if (v.empty()) return;
        os << ' ' << label << '{';
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i] + 1;
        os << '}';
    };
    list("rows", rows);
    list("cols", cols);
    return os.str();
}

namespace {

struct Grid {
    const Field* f;
    size_t m, n;
    const std::vector<uint32_t>& g;
    uint32_t at(size_t r, size_t c) const { return g[r * n + c]; }
};

bool zero_row(const Grid& g, size_t r) {
    for (size_t c = 0; c < g.n; ++c)
        if (g.at(r, c)) return false;
    return true;
}

bool zero_col(const Grid& g, size_t c) {
    for (size_t r = 0; r < g.m; ++r)
        if (g.at(r, c)) return false;
    return true;
}

uint32_t perm2(const Grid& g, size_t r1, size_t r2, size_t c1, size_t c2) {
    return g.f->ff_add(g.f->ff_mul(g.at(r1, c1), g.at(r2, c2)),
                       g.f->ff_mul(g.at(r1, c2), g.at(r2, c1)));
}

uint32_t det2(const Grid& g, size_t r1, size_t r2, size_t c1, size_t c2) {
    return g.f->ff_sub(g.f->ff_mul(g.at(r1, c1), g.at(r2, c2)),
                       g.f->ff_mul(g.at(r1, c2), g.at(r2, c1)));
}

uint32_t perm_general(const Grid& g, const std::vector<size_t>& rows,
                      const std::vector<size_t>& cols) {
    std::array<size_t, 8> idx{};
    size_t k = rows.size();
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    uint32_t acc = 0;
    do {
        uint32_t prod = 1;
        for (size_t i = 0; i < k && prod; ++i) prod = g.f->ff_mul(prod, g.at(rows[i], cols[idx[i]]));
        acc = g.f->ff_add(acc, prod);
    } while (std::next_permutation(idx.begin(), idx.begin() + k));
    return acc;
}

// determinant over codes; permutations carry their inversion parity
uint32_t det_general(const Field* f, const std::vector<std::vector<uint32_t>>& a) {
    size_t k = a.size();
    uint32_t acc = 0;
    std::vector<size_t> p(k);
    for (size_t i = 0; i < k; ++i) p[i] = i;
    do {
        size_t inv = 0;
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                if (p[i] > p[j]) ++inv;
        uint32_t prod = 1;
        for (size_t i = 0; i < k && prod; ++i) prod = f->ff_mul(prod, a[i][p[i]]);
        acc = (inv & 1) ? f->ff_sub(acc, prod) : f->ff_add(acc, prod);
    } while (std::next_permutation(p.begin(), p.end()));
    return acc;
}

// all eleven generators of the d=3 block ideal vanish on a 3x4 code grid
bool j3_vanishes(const Grid& g, const std::vector<size_t>& rows, const std::vector<size_t>& cols) {
    const Field* f = g.f;
    auto b = [&](size_t r, size_t p, size_t q) -> uint32_t {
        if (p == q) return 0;
        size_t r1 = rows[(r + 1) % 3], r2 = rows[(r + 2) % 3];
        // derivative of the permanent omitting column q by the (r,p) entry:
        // the complementary rows on the two columns outside {p,q}
        size_t c1 = 5, c2 = 5;
        for (size_t c = 0; c < 4; ++c) {
            if (c == p || c == q) continue;
            (c1 == 5 ? c1 : c2) = c;
        }
        return perm2(g, std::min(r1, r2), std::max(r1, r2), cols[c1], cols[c2]);
    };
    for (size_t q = 0; q < 4; ++q) {
        std::vector<size_t> cs;
        for (size_t c = 0; c < 4; ++c)
            if (c != q) cs.push_back(cols[c]);
        if (perm_general(g, rows, cs)) return false;
    }
    for (size_t p = 0; p < 4; ++p) {
        std::vector<std::vector<uint32_t>> l(3, std::vector<uint32_t>(3));
        size_t cj = 0;
        for (size_t col = 0; col < 4; ++col) {
            if (col == p) continue;
            for (size_t r = 0; r < 3; ++r) l[r][cj] = b(r, col, p);
            ++cj;
        }
        if (det_general(f, l)) return false;
    }
    for (size_t r = 0; r < 3; ++r) {
        std::vector<std::vector<uint32_t>> w(4, std::vector<uint32_t>(4));
        for (size_t p = 0; p < 4; ++p)
            for (size_t q = 0; q < 4; ++q) w[p][q] = b(r, p, q);
        if (det_general(f, w)) return false;
    }
    return true;
}

ComponentTag classify_c23(const Grid& g) {
    for (size_t c = 0; c < g.n; ++c)
        if (zero_col(g, c)) return {"zero-column", {}, {c}};
    for (size_t r = 0; r < g.m; ++r)
        if (zero_row(g, r)) return {"zero-row", {r}, {}};
    return {};
}

ComponentTag classify_c35(const Grid& g) {
    for (size_t c = 0; c < g.n; ++c)
        if (zero_col(g, c)) return {"zero-column", {}, {c}};
    for (size_t r1 = 0; r1 < g.m; ++r1)
        for (size_t r2 = r1 + 1; r2 < g.m; ++r2) {
            bool all = true;
            for (size_t c1 = 0; c1 < g.n && all; ++c1)
                for (size_t c2 = c1 + 1; c2 < g.n && all; ++c2)
                    all = perm2(g, r1, r2, c1, c2) == 0;
            if (all) return {"perm2-rows", {r1, r2}, {}};
        }
    for (const auto& cs : combinations(g.n, 4)) {
        bool all = true;
        for (size_t r1 = 0; r1 < g.m && all; ++r1)
            for (size_t r2 = r1 + 1; r2 < g.m && all; ++r2)
                for (size_t i = 0; i < 4 && all; ++i)
                    for (size_t j = i + 1; j < 4 && all; ++j)
                        all = det2(g, r1, r2, cs[i], cs[j]) == 0;
        if (all) return {"minors-on-4-columns", {}, cs};
    }
    return {};
}

bool zero_outside(const Grid& g, const std::vector<size_t>& rows, const std::vector<size_t>& cols,
                  const std::vector<size_t>& brows, const std::vector<size_t>& bcols) {
    for (size_t r : rows)
        for (size_t c : cols) {
            bool inb = std::count(brows.begin(), brows.end(), r) &&
                       std::count(bcols.begin(), bcols.end(), c);
            if (!inb && g.at(r, c)) return false;
        }
    return true;
}

ComponentTag classify_c44(const Grid& g) {
    std::vector<size_t> all = {0, 1, 2, 3};
    // blank 2x4 / 4x2 / 3x3 submatrix
    for (const auto& rs : combinations(4, 2))
        if (zero_outside(g, rs, all, {}, {})) return {"type-1", rs, {}};
    for (const auto& cs : combinations(4, 2))
        if (zero_outside(g, all, cs, {}, {})) return {"type-1", {}, cs};
    for (const auto& rs : combinations(4, 3))
        for (const auto& cs : combinations(4, 3))
            if (zero_outside(g, rs, cs, {}, {})) return {"type-1", rs, cs};
    // one vanishing 2x2 block permanent inside an otherwise blank 3x4 / 4x3
    for (size_t omit = 0; omit < 4; ++omit) {
        std::vector<size_t> rows;
        for (size_t r = 0; r < 4; ++r)
            if (r != omit) rows.push_back(r);
        for (const auto& bi : combinations(3, 2))
            for (const auto& bc : combinations(4, 2)) {
                std::vector<size_t> br = {rows[bi[0]], rows[bi[1]]};
                if (zero_outside(g, rows, all, br, bc) &&
                    perm2(g, br[0], br[1], bc[0], bc[1]) == 0)
                    return {"type-2", br, bc};
            }
    }
    for (size_t omit = 0; omit < 4; ++omit) {
        std::vector<size_t> cols;
        for (size_t c = 0; c < 4; ++c)
            if (c != omit) cols.push_back(c);
        for (const auto& br : combinations(4, 2))
            for (const auto& bi : combinations(3, 2)) {
                std::vector<size_t> bc = {cols[bi[0]], cols[bi[1]]};
                if (zero_outside(g, all, cols, br, bc) &&
                    perm2(g, br[0], br[1], bc[0], bc[1]) == 0)
                    return {"type-2", br, bc};
            }
    }
    // one vanishing 3x3 block permanent, zero outside
    for (const auto& rs : combinations(4, 3))
        for (const auto& cs : combinations(4, 3))
            if (zero_outside(g, all, all, rs, cs) && perm_general(g, rs, cs) == 0)
                return {"type-3", rs, cs};
    // block ideal on a 3x4 (or 4x3) submatrix plus a blank line
    for (size_t omit = 0; omit < 4; ++omit) {
        if (!zero_row(g, omit)) continue;
        std::vector<size_t> rows;
        for (size_t r = 0; r < 4; ++r)
            if (r != omit) rows.push_back(r);
        if (j3_vanishes(g, rows, all)) return {"type-3A", rows, {}};
    }
    for (size_t omit = 0; omit < 4; ++omit) {
        if (!zero_col(g, omit)) continue;
        std::vector<size_t> cols;
        for (size_t c = 0; c < 4; ++c)
            if (c != omit) cols.push_back(c);
        // transpose: block ideal lives on the 3x4 flip of the 4x3 submatrix
        std::vector<uint32_t> tg(12);
        for (size_t i = 0; i < 3; ++i)
            for (size_t r = 0; r < 4; ++r) tg[i * 4 + r] = g.at(r, cols[i]);
        Grid t{g.f, 3, 4, tg};
        if (j3_vanishes(t, {0, 1, 2}, {0, 1, 2, 3})) return {"type-3A", {}, cols};
    }
    // two disjoint vanishing 2x2 block permanents covering all rows/columns
    const std::vector<std::array<std::vector<size_t>, 2>> parts = {
        {{{0, 1}, {2, 3}}}, {{{0, 2}, {1, 3}}}, {{{0, 3}, {1, 2}}}};
    for (const auto& rp : parts)
        for (const auto& cp : parts)
            for (int match = 0; match < 2; ++match) {
                const auto& ca = cp[match];
                const auto& cb = cp[1 - match];
                if (perm2(g, rp[0][0], rp[0][1], ca[0], ca[1]) == 0 &&
                    perm2(g, rp[1][0], rp[1][1], cb[0], cb[1]) == 0 &&
                    zero_outside(g, rp[0], cb, {}, {}) && zero_outside(g, rp[1], ca, {}, {})) {
                    ComponentTag tag{"type-2-2", {}, {}};
                    tag.rows = {rp[0][0], rp[0][1], rp[1][0], rp[1][1]};
                    tag.cols = {ca[0], ca[1], cb[0], cb[1]};
                    return tag;
                }
            }
    // rank one: every 2x2 minor vanishes
    bool rank1 = true;
    for (size_t r1 = 0; r1 < 4 && rank1; ++r1)
        for (size_t r2 = r1 + 1; r2 < 4 && rank1; ++r2)
            for (size_t c1 = 0; c1 < 4 && rank1; ++c1)
                for (size_t c2 = c1 + 1; c2 < 4 && rank1; ++c2)
                    rank1 = det2(g, r1, r2, c1, c2) == 0;
    if (rank1) return {"minors-2x2", {}, {}};
    return {};
}

ComponentTag classify_codes(const Field* f, const std::vector<uint32_t>& codes, size_t m, size_t n,
                            ClassifyContext ctx) {
    Grid g{f, m, n, codes};
    switch (ctx) {
        case ClassifyContext::c23: return classify_c23(g);
        case ClassifyContext::c35: return classify_c35(g);
        case ClassifyContext::c44: return classify_c44(g);
    }
    throw ArgError("unknown classification context");
}

void context_dims(ClassifyContext ctx, size_t& m, size_t& n) {
    switch (ctx) {
        case ClassifyContext::c23: m = 2, n = 3; return;
        case ClassifyContext::c35: m = 3, n = 5; return;
        case ClassifyContext::c44: m = 4, n = 4; return;
    }
    throw ArgError("unknown classification context");
}

} // namespace

ComponentTag classify_solution(const ScalarMatrix& m, ClassifyContext ctx) {
    size_t em = 0, en = 0;
    context_dims(ctx, em, en);
    if (m.rows() != em || m.cols() != en)
        throw ArgError("matrix shape does not fit the classification context");
    return classify_codes(m.field(), matrix_codes(m), em, en, ctx);
}

bool block_ideal_vanishes(const ScalarMatrix& m) {
    if (m.rows() != 3 || m.cols() != 4) throw ArgError("block ideal test expects a 3x4 matrix");
    std::vector<uint32_t> codes = matrix_codes(m);
    Grid g{m.field(), 3, 4, codes};
    return j3_vanishes(g, {0, 1, 2}, {0, 1, 2, 3});
}

NoWitnessReport enumerate_no_witness(size_t d, size_t n, uint32_t q) {
    const Field* f = field_of_order(q);
    size_t cells = d * n;
    uint64_t space = 1;
    for (size_t i = 0; i < cells; ++i) {
        space *= q;
        if (space > 100'000'000ull) throw BudgetError("matrix space too large to enumerate");
    }
    NoWitnessReport rep;
    rep.d = d;
    rep.n = n;
    rep.q = q;
    std::vector<uint32_t> codes(cells, 0);
    for (uint64_t id = 0; id < space; ++id) {
        uint64_t v = id;
        for (size_t i = 0; i < cells; ++i) {
            codes[i] = static_cast<uint32_t>(v % q);
            v /= q;
        }
        ++rep.total;
        WitnessSearch search(f, d, n, codes);
        if (search.run()) continue;

        NoWitnessEntry entry;
        entry.codes = codes;
        Grid g{f, d, n, codes};
        for (size_t r = 0; r < d && entry.tag.tag == "unclassified"; ++r)
            if (zero_row(g, r)) entry.tag = {"zero-row", {r}, {}};
        if (entry.tag.tag == "unclassified") {
            std::vector<size_t> nonzero;
            for (size_t c = 0; c < n; ++c)
                if (!zero_col(g, c)) nonzero.push_back(c);
            if (nonzero.size() == 2 && d == q - 1) {
                size_t j1 = nonzero[0], j2 = nonzero[1];
                std::vector<uint32_t> count(q, 0);
                bool ok = true;
                for (size_t r = 0; r < d && ok; ++r) {
                    if (!g.at(r, j1) || !g.at(r, j2)) {
                        ok = false;
                        break;
                    }
                    ++count[f->ff_mul(g.at(r, j2), f->ff_inv(g.at(r, j1)))];
                }
                for (uint32_t x = 1; x < q && ok; ++x) ok = count[x] == 1;
                if (ok) entry.tag = {"classified-two-column", {}, {j1, j2}};
            }
        }
        ++rep.tag_counts[entry.tag.tag];
        if (entry.tag.tag == "unclassified") ++rep.unclassified;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

uint64_t variety_enumerate(const Field* f, size_t d, size_t m, size_t n,
                           const std::function<bool(const std::vector<uint32_t>&)>& visit) {
    if (!f->finite()) throw ArgError("variety enumeration needs a finite field");
    if (d > m || d > n) throw ArgError("subpermanent size exceeds matrix shape");
    uint32_t q = f->size();
    double states = 1;
    for (size_t i = 0; i < m * n; ++i) states *= q;
    if (states > 6e7) throw BudgetError("enumeration space too large");

    auto rowsets = combinations(m, d);
    auto colsets = combinations(n, d);
    // selectors indexed by the cell completing them; cells fill column-major
    std::vector<std::vector<std::pair<const std::vector<size_t>*, const std::vector<size_t>*>>>
        completing(m * n);
    for (const auto& rs : rowsets)
        for (const auto& cs : colsets) {
            size_t cell = cs.back() * m + rs.back();
            completing[cell].push_back({&rs, &cs});
        }

    std::vector<uint32_t> g(m * n, 0);
    Grid grid{f, m, n, g};
    uint64_t found = 0;
    bool stop = false;

    std::function<void(size_t)> descend = [&](size_t t) {
        if (stop) return;
        if (t == m * n) {
            ++found;
            if (!visit(g)) stop = true;
            return;
        }
        size_t c = t / m, r = t % m;
        for (uint32_t v = 0; v < q && !stop; ++v) {
            g[r * n + c] = v;
            bool ok = true;
            for (const auto& sel : completing[t]) {
                if (perm_general(grid, *sel.first, *sel.second)) {
                    ok = false;
                    break;
                }
            }
            if (ok) descend(t + 1);
        }
        g[r * n + c] = 0;
    };
    descend(0);
    return found;
}

VarietySummary variety_classified(const Field* f, size_t d, size_t m, size_t n,
                                  ClassifyContext ctx) {
    size_t em = 0, en = 0;
    context_dims(ctx, em, en);
    if (m != em || n != en) throw ArgError("context does not match requested shape");
    VarietySummary sum;
    sum.solutions = variety_enumerate(f, d, m, n, [&](const std::vector<uint32_t>& codes) {
        ComponentTag tag = classify_codes(f, codes, m, n, ctx);
        ++sum.by_tag[tag.tag];
        if (tag.tag == "unclassified") {
            ++sum.unclassified;
            if (sum.unclassified_samples.size() < 8) sum.unclassified_samples.push_back(codes);
        }
        return true;
    });
    return sum;
}

namespace {

std::vector<Poly> doubled_matrix_gens(const Field* f, size_t d) {
    PolyMatrix x = generic_matrix(f, d, d);
    PolyMatrix mm = hconcat(x, x);
    std::vector<Poly> gens;
    auto subs = sub_permanents(mm, d);
    for (auto& sc : subs) gens.push_back(sc.second);
    return gens;
}

const std::vector<Poly>& doubled_basis(const Field* f, size_t d, uint32_t truncate,
                                       GroebnerCache* cache, std::vector<Poly>& local) {
    GroebnerOptions opts;
    opts.truncate_degree = truncate;
    auto gens = doubled_matrix_gens(f, d);
    if (cache) return cache->get(gens, opts);
    local = groebner_basis(gens, opts);
    return local;
}

void check_membership(const std::vector<Poly>& gb, const std::vector<Poly>& targets,
                      ContainmentReport& rep) {
    for (const Poly& t : targets) {
        ++rep.checked;
        if (!normal_form(t, gb).is_zero()) {
            rep.contained = false;
            rep.failing.push_back(t.str());
        }
    }
}

} // namespace

ContainmentReport doubled_det_power(const Field* f, size_t d, GroebnerCache* cache) {
    std::vector<Poly> local;
    const auto& gb = doubled_basis(f, d, static_cast<uint32_t>(d * d), cache, local);
    PolyMatrix x = generic_matrix(f, d, d);
    ContainmentReport rep;
    check_membership(gb, {determinant(x).pow(static_cast<uint32_t>(d))}, rep);
    return rep;
}

ContainmentReport doubled_det_times_subideal(const Field* f, size_t d, GroebnerCache* cache) {
    std::vector<Poly> local;
    const auto& gb = doubled_basis(f, d, static_cast<uint32_t>(2 * d - 1), cache, local);
    PolyMatrix x = generic_matrix(f, d, d);
    Poly det = determinant(x);
    std::vector<Poly> targets;
    auto subs = sub_permanents(x, d - 1);
    for (auto& sc : subs) targets.push_back(det * sc.second);
    ContainmentReport rep;
    check_membership(gb, targets, rep);
    return rep;
}

ContainmentReport minor_chain_products(const Field* f, size_t d, GroebnerCache* cache) {
    std::vector<Poly> local;
    uint32_t deg = static_cast<uint32_t>(d * (d + 1) / 2);
    const auto& gb = doubled_basis(f, d, deg, cache, local);
    PolyMatrix x = generic_matrix(f, d, d);
    std::vector<size_t> all_cols(d);
    for (size_t c = 0; c < d; ++c) all_cols[c] = c;

    std::vector<std::vector<Poly>> levels; // i-th: minors of the top (i+1)-row block
    for (size_t i = 1; i <= d; ++i) {
        std::vector<size_t> rows(i);
        for (size_t r = 0; r < i; ++r) rows[r] = r;
        std::vector<Poly> minors;
        for (const auto& cs : combinations(d, i)) minors.push_back(determinant(x.submatrix(rows, cs)));
        levels.push_back(std::move(minors));
    }
    std::vector<Poly> targets;
    std::vector<size_t> pick(d, 0);
    for (;;) {
        Poly prod = levels[0][pick[0]];
        for (size_t i = 1; i < d; ++i) prod *= levels[i][pick[i]];
        targets.push_back(prod);
        size_t lvl = 0;
        while (lvl < d && ++pick[lvl] == levels[lvl].size()) pick[lvl++] = 0;
        if (lvl == d) break;
    }
    ContainmentReport rep;
    check_membership(gb, targets, rep);
    return rep;
}

ContainmentReport embedded_subideal(const Field* f, size_t d, size_t m, size_t n, size_t d1,
                                    const std::vector<size_t>& rows1,
                                    const std::vector<size_t>& cols1, GroebnerCache* cache) {
    PolyMatrix x = generic_matrix(f, m, n);
    PolyMatrix sub = x.submatrix(rows1, cols1);
    std::vector<Poly> gens;
    auto subgens = sub_permanents(sub, d1);
    for (auto& sc : subgens) gens.push_back(sc.second);
    GroebnerOptions opts;
    opts.truncate_degree = static_cast<uint32_t>(d);
    std::vector<Poly> local;
    const std::vector<Poly>* gb;
    if (cache)
        gb = &cache->get(gens, opts);
    else {
        local = groebner_basis(gens, opts);
        gb = &local;
    }
    std::vector<Poly> targets;
    auto full = sub_permanents(x, d);
    for (auto& sc : full) targets.push_back(sc.second);
    ContainmentReport rep;
    check_membership(*gb, targets, rep);
    return rep;
}

RandomWitnessScan random_invertible_witness_scan(uint32_t q, size_t size, uint64_t trials,
                                                 uint64_t seed) {
    const Field* f = field_of_order(q);
    std::mt19937_64 rng(seed);
    RandomWitnessScan scan;
    std::vector<uint32_t> codes(size * size);
    for (uint64_t t = 0; t < trials; ++t) {
        for (;;) {
            for (auto& c : codes) c = static_cast<uint32_t>(rng() % q);
            std::vector<std::vector<uint32_t>> rows(size, std::vector<uint32_t>(size));
            for (size_t i = 0; i < size; ++i)
                for (size_t j = 0; j < size; ++j) rows[i][j] = codes[i * size + j];
            if (det_general(f, rows)) break;
            ++scan.retries;
        }
        ++scan.trials;
        WitnessSearch search(f, size, size, codes);
        if (search.run())
            ++scan.witness_found;
        else if (scan.failures.size() < 8)
            scan.failures.push_back(codes);
    }
    return scan;
}

namespace {

void largechar_check(const Field* f, size_t d, size_t n, const std::vector<uint32_t>& codes,
                     LargeCharReport& rep) {
    ++rep.scanned;
    Grid g{f, d, n, codes};
    bool zr = false;
    for (size_t r = 0; r < d && !zr; ++r) zr = zero_row(g, r);
    WitnessSearch search(f, d, n, codes);
    bool witness = search.run();
    if (witness == zr) {
        ++rep.counterexamples;
        if (rep.samples.size() < 8) rep.samples.push_back(codes);
    }
}

} // namespace

LargeCharReport witness_iff_no_zero_row(size_t d, size_t n, uint32_t q) {
    const Field* f = field_of_order(q);
    size_t cells = d * n;
    uint64_t space = 1;
    for (size_t i = 0; i < cells; ++i) {
        space *= q;
        if (space > 100'000'000ull) throw BudgetError("matrix space too large to enumerate");
    }
    LargeCharReport rep;
    std::vector<uint32_t> codes(cells);
    for (uint64_t id = 0; id < space; ++id) {
        uint64_t v = id;
        for (size_t i = 0; i < cells; ++i) {
            codes[i] = static_cast<uint32_t>(v % q);
            v /= q;
        }
        largechar_check(f, d, n, codes, rep);
    }
    return rep;
}

LargeCharReport witness_iff_no_zero_row_random(size_t d, size_t n, uint32_t q, uint64_t trials,
                                               uint64_t seed) {
    const Field* f = field_of_order(q);
    std::mt19937_64 rng(seed);
    LargeCharReport rep;
    std::vector<uint32_t> codes(d * n);
    for (uint64_t t = 0; t < trials; ++t) {
        for (auto& c : codes) c = static_cast<uint32_t>(rng() % q);
        largechar_check(f, d, n, codes, rep);
    }
    return rep;
}

} // namespace permlab
