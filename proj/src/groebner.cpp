#include "permlab/groebner.hpp"

#include <algorithm>
#include <sstream>

#include "permlab/error.hpp"

namespace permlab {

size_t leading_index(const Poly& f, MonomialOrder order) {
    if (f.is_zero()) throw ArgError("leading term of zero polynomial");
    if (order.kind == MonomialOrder::Kind::degrevlex) return 0;
    size_t nv = f.ring()->nvars();
    size_t best = 0;
    for (size_t k = 1; k < f.nterms(); ++k)
        if (mono_cmp(f.terms()[k].m, f.terms()[best].m, nv, order) > 0) best = k;
    return best;
}

namespace {

struct LeadInfo {
    Monomial m;
    Scalar c;
};

LeadInfo lead_of(const Poly& f, MonomialOrder order) {
    const Term& t = f.terms()[leading_index(f, order)];
    return {t.m, t.c};
}

// Multivariate division.  Repeatedly rewrites the highest reducible term;
// terms above it are already irreducible and stay fixed.  When `quot` is
// given, accumulates the cofactor applied to each divisor.
Poly divide_full(const Poly& f, const std::vector<Poly>& basis, MonomialOrder order,
                 std::vector<Poly>* quot) {
    if (f.is_zero()) return f;
    size_t nv = f.ring()->nvars();
    std::vector<LeadInfo> leads;
    leads.reserve(basis.size());
    for (const Poly& g : basis) {
        if (g.is_zero()) throw ArgError("zero divisor polynomial in basis");
        if (g.ring() != f.ring()) throw RingError("basis and argument live in different rings");
        leads.push_back(lead_of(g, order));
    }
    Poly p = f;
    for (;;) {
        // highest term of p under `order` divisible by some basis lead
        size_t tk = p.nterms(), gk = 0;
        for (size_t t = 0; t < p.nterms(); ++t) {
            const Monomial& m = p.terms()[t].m;
            for (size_t g = 0; g < leads.size(); ++g) {
                if (!leads[g].m.divides(m, nv)) continue;
                if (tk == p.nterms() || mono_cmp(m, p.terms()[tk].m, nv, order) > 0) {
                    tk = t;
                    gk = g;
                }
                break;
            }
        }
        if (tk == p.nterms()) return p;
        Scalar s = p.terms()[tk].c / leads[gk].c;
        Monomial u = p.terms()[tk].m.divide(leads[gk].m, nv);
        p -= basis[gk].scaled_shifted(s, u);
        if (quot) (*quot)[gk] += Poly::term(f.ring(), u, s);
    }
}

} // namespace

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, MonomialOrder order) {
    if (basis.empty()) return f;
    return divide_full(f, basis, order, nullptr);
}

Poly s_polynomial(const Poly& f, const Poly& g, MonomialOrder order) {
    if (f.ring() != g.ring()) throw RingError("s-polynomial of different rings");
    size_t nv = f.ring()->nvars();
    LeadInfo lf = lead_of(f, order), lg = lead_of(g, order);
    Monomial L = Monomial::lcm(lf.m, lg.m, nv);
    return f.scaled_shifted(lf.c.inv(), L.divide(lf.m, nv)) -
           g.scaled_shifted(lg.c.inv(), L.divide(lg.m, nv));
}

namespace {

struct SPair {
    uint32_t i, j;
    Monomial lcm;
    uint32_t deg;
};

bool pair_before(const SPair& a, const SPair& b, size_t nv, MonomialOrder order) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = mono_cmp(a.lcm, b.lcm, nv, order);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

// Gebauer-Moller pair update: filters the candidate pairs of the new element
// through the multiple/equal-lcm/coprime criteria and prunes old pairs whose
// lcm factors through the new lead.
void update_pairs(std::vector<SPair>& pairs, const std::vector<Monomial>& lm, size_t t,
                  size_t nv) {
    uint32_t ut = static_cast<uint32_t>(t);
    std::vector<SPair> cand;
    cand.reserve(t);
    for (uint32_t i = 0; i < ut; ++i) {
        Monomial L = Monomial::lcm(lm[i], lm[t], nv);
        cand.push_back({i, ut, L, L.deg});
    }
    std::vector<SPair> kept;
    for (size_t a = 0; a < cand.size(); ++a) {
        bool coprime = lm[cand[a].i].coprime(lm[t], nv);
        bool dominated = false;
        if (!coprime) {
            for (size_t b = a + 1; b < cand.size() && !dominated; ++b)
                dominated = cand[b].lcm.divides(cand[a].lcm, nv);
            for (size_t b = 0; b < kept.size() && !dominated; ++b)
                dominated = kept[b].lcm.divides(cand[a].lcm, nv);
        }
        if (!dominated) kept.push_back(cand[a]);
    }
    std::vector<SPair> fresh;
    for (const SPair& k : kept)
        if (!lm[k.i].coprime(lm[t], nv)) fresh.push_back(k);

    std::vector<SPair> survivors;
    survivors.reserve(pairs.size());
    for (const SPair& p : pairs) {
        if (!lm[t].divides(p.lcm, nv) ||
            Monomial::lcm(lm[p.i], lm[t], nv).equal(p.lcm, nv) ||
            Monomial::lcm(lm[p.j], lm[t], nv).equal(p.lcm, nv))
            survivors.push_back(p);
    }
    survivors.insert(survivors.end(), fresh.begin(), fresh.end());
    pairs = std::move(survivors);
}

Poly make_monic(const Poly& p, MonomialOrder order) {
    Scalar lc = lead_of(p, order).c;
    return p.scaled(lc.inv());
}

std::vector<Poly> autoreduce(std::vector<Poly> g, MonomialOrder order) {
    if (g.empty()) return g;
    size_t nv = g[0].ring()->nvars();
    std::vector<size_t> idx(g.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        int c = mono_cmp(lead_of(g[a], order).m, lead_of(g[b], order).m, nv, order);
        return c != 0 ? c > 0 : a < b;
    });
    std::vector<Poly> ordered;
    for (size_t i : idx) ordered.push_back(g[i]);

    std::vector<bool> drop(ordered.size(), false);
    for (size_t i = 0; i < ordered.size(); ++i) {
        Monomial mi = lead_of(ordered[i], order).m;
        for (size_t j = 0; j < ordered.size() && !drop[i]; ++j) {
            if (j == i || drop[j]) continue;
            Monomial mj = lead_of(ordered[j], order).m;
            if (!mj.divides(mi, nv)) continue;
            drop[i] = !mj.equal(mi, nv) || j < i;
        }
    }
    std::vector<Poly> minimal;
    for (size_t i = 0; i < ordered.size(); ++i)
        if (!drop[i]) minimal.push_back(ordered[i]);

    std::vector<Poly> reduced = minimal;
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        if (!others.empty()) reduced[i] = normal_form(reduced[i], others, order);
        reduced[i] = make_monic(reduced[i], order);
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return mono_cmp(lead_of(a, order).m, lead_of(b, order).m, nv, order) > 0;
    });
    return reduced;
}

} // namespace

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const GroebnerOptions& opts) {
    std::vector<Poly> seed;
    for (const Poly& g : gens)
        if (!g.is_zero()) seed.push_back(g);
    if (seed.empty()) return {};
    RingPtr ring = seed[0].ring();
    for (const Poly& g : seed)
        if (g.ring() != ring) throw RingError("generators live in different rings");
    size_t nv = ring->nvars();

    std::vector<Poly> basis;
    std::vector<Monomial> lm;
    std::vector<SPair> pairs;
    auto push = [&](const Poly& p) {
        basis.push_back(make_monic(p, opts.order));
        lm.push_back(lead_of(basis.back(), opts.order).m);
        update_pairs(pairs, lm, basis.size() - 1, nv);
        if (basis.size() > opts.max_basis)
            throw BudgetError("basis size exceeded " + std::to_string(opts.max_basis));
    };
    for (const Poly& g : seed) push(g);

    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (pair_before(pairs[k], pairs[best], nv, opts.order)) best = k;
        SPair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<ptrdiff_t>(best));
        if (opts.truncate_degree && p.deg > opts.truncate_degree) continue;

        Poly s = s_polynomial(basis[p.i], basis[p.j], opts.order);
        Poly h = normal_form(s, basis, opts.order);
        if (h.is_zero()) continue;
        if (h.total_degree() > opts.max_degree)
            throw BudgetError("degree exceeded " + std::to_string(opts.max_degree));
        push(h);
    }
    return autoreduce(std::move(basis), opts.order);
}

MembershipResult ideal_member(const Poly& f, const std::vector<Poly>& gb, MonomialOrder order) {
    MembershipResult r;
    r.remainder = normal_form(f, gb, order);
    r.member = r.remainder.is_zero();
    return r;
}

bool ideal_contains(const std::vector<Poly>& gb, const std::vector<Poly>& sub,
                    MonomialOrder order) {
    for (const Poly& f : sub)
        if (!normal_form(f, gb, order).is_zero()) return false;
    return true;
}

std::optional<std::vector<Poly>> lift_combination(const Poly& f, const std::vector<Poly>& gens,
                                                  MonomialOrder order) {
    std::vector<Poly> quot(gens.size(), Poly::zero(f.ring()));
    Poly rem = divide_full(f, gens, order, &quot);
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

const std::vector<Poly>& GroebnerCache::get(const std::vector<Poly>& gens,
                                            const GroebnerOptions& opts) {
    std::ostringstream key;
    key << opts.order.name() << '#' << opts.truncate_degree << '|';
    if (!gens.empty()) {
        const RingPtr& r = gens[0].ring();
        key << r->field()->name() << '|';
        for (const auto& v : r->vars()) key << v << ',';
    }
    std::vector<std::string> texts;
    for (const Poly& g : gens) texts.push_back(g.str());
    std::sort(texts.begin(), texts.end());
    for (const auto& t : texts) key << '|' << t;
    auto it = store_.find(key.str());
    if (it == store_.end()) it = store_.emplace(key.str(), groebner_basis(gens, opts)).first;
    return it->second;
}

GroebnerCache& GroebnerCache::global() {
    static GroebnerCache cache;
    return cache;
}

} // namespace permlab
