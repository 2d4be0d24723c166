#include "permlab/permalgebra.hpp"

#include <algorithm>

#include "permlab/error.hpp"

namespace permlab {

std::vector<std::vector<size_t>> multisets(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    if (n == 0) return out;
    std::vector<size_t> cur(k, 0);
    for (;;) {
        out.push_back(cur);
        size_t i = k;
        while (i > 0 && cur[i - 1] == n - 1) --i;
        if (i == 0) break;
        size_t v = cur[i - 1] + 1;
        for (size_t j = i - 1; j < k; ++j) cur[j] = v;
    }
    return out;
}

Poly HMatrix::entry_for(const std::vector<size_t>& multiset) const {
    if (multiset.size() != d) throw ArgError("need a d-element column multiset");
    std::vector<size_t> sorted = multiset;
    std::sort(sorted.begin(), sorted.end());
    PolyMatrix x = matrix_of_vars(ring, d, n);
    std::vector<size_t> all_rows;
    for (size_t r = 0; r < d; ++r) all_rows.push_back(r);
    return permanent(x.submatrix(all_rows, sorted));
}

HMatrix build_h(const Field* f, size_t d, size_t n) {
    if (d < 2) throw ArgError("H needs d >= 2");
    PolyMatrix x = generic_matrix(f, d, n);
    auto js = multisets(n, d - 1);
    PolyMatrix grid(x.ring(), n, js.size());
    std::vector<size_t> all_rows;
    for (size_t r = 0; r < d; ++r) all_rows.push_back(r);
    for (size_t c = 0; c < js.size(); ++c)
        for (size_t r = 0; r < n; ++r) {
            std::vector<size_t> cols = js[c];
            cols.push_back(r);
            std::sort(cols.begin(), cols.end());
            grid.set(r, c, permanent(x.submatrix(all_rows, cols)));
        }
    HMatrix h(x.ring(), std::move(grid));
    h.d = d;
    h.n = n;
    h.cols = std::move(js);
    return h;
}

HRankReport verify_h_rank(const Field* f, size_t d, size_t n) {
    HMatrix h = build_h(f, d, n);
    HRankReport rep;
    size_t k = d + 1;
    if (h.grid.rows() < k || h.grid.cols() < k) {
        rep.pass = true; // no minors of that size exist
        return rep;
    }
    for (const auto& ri : combinations(h.grid.rows(), k)) {
        for (const auto& ci : combinations(h.grid.cols(), k)) {
            Poly minor = determinant(h.grid.submatrix(ri, ci));
            ++rep.minors_checked;
            if (!minor.is_zero()) {
                rep.pass = false;
                rep.failed_selector = Selector{ri, ci}.str();
                return rep;
            }
        }
    }
    return rep;
}

bool verify_h_span(const HMatrix& h) {
    PolyMatrix x = matrix_of_vars(h.ring, h.d, h.n);
    for (size_t c = 0; c < h.cols.size(); ++c) {
        const auto& j = h.cols[c];
        // permanents of J omitting one row each
        std::vector<Poly> hat;
        for (size_t omit = 0; omit < h.d; ++omit) {
            std::vector<size_t> rows;
            for (size_t r = 0; r < h.d; ++r)
                if (r != omit) rows.push_back(r);
            hat.push_back(permanent(x.submatrix(rows, j)));
        }
        for (size_t r = 0; r < h.n; ++r) {
            Poly expand = Poly::zero(h.ring);
            for (size_t i = 0; i < h.d; ++i) expand += x.at(i, r) * hat[i];
            if (expand != h.grid.at(r, c)) return false;
        }
    }
    return true;
}

bool verify_h23_determinant(const Field* f) {
    // symbol ring: a_i_j for 1 <= i <= j <= 3
    std::vector<std::string> names;
    for (size_t i = 1; i <= 3; ++i)
        for (size_t j = i; j <= 3; ++j)
            names.push_back("a_" + std::to_string(i) + "_" + std::to_string(j));
    RingPtr aring = PolyRing::make(f, names);
    auto sym = [&](size_t i, size_t j) {
        if (i > j) std::swap(i, j);
        return Poly::parse(aring, "a_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    };
    PolyMatrix hsym(aring, 3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) hsym.set(i, j, sym(i, j));
    Poly det = determinant(hsym);
    Poly diag = sym(0, 0) * sym(1, 1) * sym(2, 2);

    // off-diagonal specialization: every stray term must carry an a_i_j, i<j
    Poly rest = det - diag;
    const size_t nv = aring->nvars();
    std::vector<Monomial> off;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j)
            off.push_back(sym(i, j).terms()[0].m);
    for (const auto& t : rest.terms()) {
        bool hit = false;
        for (const auto& m : off)
            if (m.divides(t.m, nv)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }

    // pushing symbols to the actual permanents must reproduce det H_{2,3}
    HMatrix h = build_h(f, 2, 3);
    std::map<std::string, Poly> bind;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i; j < 3; ++j)
            bind["a_" + std::to_string(i + 1) + "_" + std::to_string(j + 1)] =
                h.entry_for({i, j});
    return det.substitute(bind, h.ring) == determinant(h.grid);
}

bool verify_h_prime_pattern(const Field* f) {
    HMatrix h = build_h(f, 3, 5);
    // locate the columns J = {1,2}, {1,3}, {2,3} (0-based {0,1},{0,2},{1,2})
    auto col_of = [&](std::vector<size_t> j) {
        auto it = std::find(h.cols.begin(), h.cols.end(), j);
        if (it == h.cols.end()) throw Error("missing multiset column");
        return (size_t)(it - h.cols.begin());
    };
    size_t c12 = col_of({0, 1}), c13 = col_of({0, 2}), c23 = col_of({1, 2});

    // clear the two extra generic columns
    std::map<std::string, Poly> kill;
    for (size_t i = 1; i <= 3; ++i)
        for (size_t j = 4; j <= 5; ++j)
            kill["x_" + std::to_string(i) + "_" + std::to_string(j)] = Poly::zero(h.ring);
    auto cleared = [&](size_t r, size_t c) { return h.grid.at(r, c).substitute(kill, h.ring); };

    // rows 4 and 5 must vanish entirely
    for (size_t r = 3; r <= 4; ++r)
        for (size_t c : {c12, c13, c23})
            if (!cleared(r, c).is_zero()) return false;

    // the top 3x3 block: diagonal-free pattern of stated permanents
    if (cleared(0, c12) != h.entry_for({0, 0, 1})) return false;
    if (cleared(1, c12) != h.entry_for({0, 1, 1})) return false;
    if (cleared(0, c13) != h.entry_for({0, 0, 2})) return false;
    if (cleared(2, c13) != h.entry_for({0, 2, 2})) return false;
    if (cleared(1, c23) != h.entry_for({1, 1, 2})) return false;
    if (cleared(2, c23) != h.entry_for({1, 2, 2})) return false;

    // the three remaining entries coincide: they are all A_{1,2,3}
    Poly a123 = h.entry_for({0, 1, 2});
    return cleared(2, c12) == a123 && cleared(1, c13) == a123 && cleared(0, c23) == a123;
}

} // namespace permlab
