#include "permlab/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "permlab/error.hpp"

namespace permlab {

namespace {

const Field* QQ() { return Field::rationals(); }

ScalarMatrix dxd1_matrix(size_t d) {
    if (d < 2) throw ArgError("dxd1 needs d >= 2");
    ScalarMatrix m(QQ(), d, d + 1);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j <= d; ++j) m.set(i, j, Scalar::one(QQ()));
    long dd = (long)d;
    for (size_t i = 0; i + 2 < d; ++i) m.set(i, d, Scalar::from_int(QQ(), 2 - 3 * dd));
    m.set(d - 2, d - 1, Scalar::from_int(QQ(), 2 - 2 * dd));
    m.set(d - 2, d, Scalar::from_int(QQ(), (dd - 2) * (dd - 1)));
    m.set(d - 1, d - 1, Scalar::from_int(QQ(), dd));
    m.set(d - 1, d, Scalar::from_int(QQ(), (2 * dd - 1) * (dd - 2)));
    return m;
}

ScalarMatrix four_by_six() {
    const Field* f = Field::gaussian_rationals();
    ScalarMatrix m(f, 4, 6);
    Scalar i = Scalar::from_gaussian(Rat(0), Rat(1));
    Scalar mi = Scalar::from_gaussian(Rat(0), Rat(-1));
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 6; ++c) m.set(r, c, Scalar::one(f));
    for (size_t c = 3; c < 6; ++c) {
        m.set(1, c, Scalar::from_int(f, -1));
        m.set(2, c, i);
        m.set(3, c, mi);
    }
    return m;
}

PolyMatrix parse_matrix(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows) {
    PolyMatrix m(ring, rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[0].size(); ++j) m.set(i, j, Poly::parse(ring, rows[i][j]));
    return m;
}

PolyMatrix param_a_matrix() {
    auto ring = PolyRing::make(QQ(), {"a"});
    return parse_matrix(ring, {{"1", "1", "1", "a+2"},
                               {"1", "a", "a", "-2a^2-a"},
                               {"a+1", "-a", "-a", "a-a^2"}});
}

PolyMatrix param_b_matrix() {
    auto ring = PolyRing::make(QQ(), {"a"});
    return parse_matrix(ring, {{"1", "1", "a+1", "3a+3"},
                               {"1", "a", "-a", "a^2+a+1"},
                               {"a+2", "-2a^2-a", "a-a^2", "2a^3+3a^2-3a-2"}});
}

PolyMatrix degenerate_matrix(int k) {
    switch (k) {
    case 1: {
        auto ring = PolyRing::make(QQ(), {"b", "c", "e"});
        return parse_matrix(ring,
                            {{"1", "1", "1", "1"}, {"0", "0", "b", "c"}, {"0", "0", "be", "-ce"}});
    }
    case 2: {
        auto ring = PolyRing::make(QQ(), {"d", "e", "f"});
        return parse_matrix(ring,
                            {{"1", "1", "1", "1"}, {"0", "0", "0", "0"}, {"0", "d", "e", "f"}});
    }
    case 3: {
        auto ring = PolyRing::make(QQ(), {"u", "e"});
        return parse_matrix(ring,
                            {{"1", "1", "1", "1"}, {"u", "-u", "0", "0"}, {"u", "u", "e", "-e"}});
    }
    default: {
        auto ring = PolyRing::make(QQ(), {"u", "e"});
        return parse_matrix(ring,
                            {{"1", "1", "1", "1"}, {"u", "-u", "u", "u"}, {"u", "0", "e", "-u-e"}});
    }
    }
}

} // namespace

std::vector<std::string> family_ids() {
    return {"dxd1",        "four-by-six",  "param-A",      "param-B",
            "degenerate-1", "degenerate-2", "degenerate-3", "degenerate-4"};
}

Family family_matrix(const std::string& id, size_t d) {
    Family fam;
    fam.id = id;
    if (id == "dxd1") {
        fam.d = d ? d : 3;
        fam.numeric = dxd1_matrix(fam.d);
    } else if (id == "four-by-six") {
        fam.d = 4;
        fam.numeric = four_by_six();
    } else if (id == "param-A") {
        fam.d = 3;
        fam.symbolic = param_a_matrix();
        fam.params = {"a"};
    } else if (id == "param-B") {
        fam.d = 3;
        fam.symbolic = param_b_matrix();
        fam.params = {"a"};
    } else if (id.rfind("degenerate-", 0) == 0 && id.size() == 12 && id[11] >= '1' &&
               id[11] <= '4') {
        fam.d = 3;
        fam.symbolic = degenerate_matrix(id[11] - '0');
        for (size_t i = 0; i < fam.symbolic->ring()->nvars(); ++i)
            fam.params.push_back(fam.symbolic->ring()->var_name(i));
    } else {
        throw ArgError("unknown family id: " + id);
    }
    return fam;
}

FamilyReport verify_family(const std::string& id, size_t d) {
    Family fam = family_matrix(id, d);
    FamilyReport rep;
    rep.id = fam.id;
    rep.d = fam.d;
    if (fam.numeric) {
        for (const auto& [sel, value] : sub_permanents(*fam.numeric, fam.d)) {
            ++rep.checked;
            if (!value.is_zero()) {
                rep.pass = false;
                rep.failing.push_back(sel.str() + " = " + value.str());
            }
        }
    } else {
        for (const auto& [sel, value] : sub_permanents(*fam.symbolic, fam.d)) {
            ++rep.checked;
            if (!value.is_zero()) {
                rep.pass = false;
                rep.failing.push_back(sel.str() + " = " + value.str());
            }
        }
    }
    return rep;
}

HSigmaReport verify_h_sigma() {
    auto ring = PolyRing::make(QQ(), {"a", "b", "c", "u"});
    Poly h = Poly::parse(ring, "u^2ab + u^2ac + u^2bc"
                               " + ua^2b + ua^2c + uab^2 + uac^2 + ub^2c + ubc^2"
                               " + a^2bc + ab^2c + abc^2");
    Poly s1 = Poly::parse(ring, "a + b + c + u");
    Poly s3 = Poly::parse(ring, "abc + abu + acu + bcu");
    Poly s4 = Poly::parse(ring, "abcu");

    HSigmaReport rep;
    rep.difference = s1 * s3 - s4 - h;
    rep.printed_identity_holds = rep.difference.is_zero();
    if (rep.printed_identity_holds) {
        rep.finding = "identity holds as printed";
    } else {
        rep.finding = "sigma1*sigma3 - sigma4 - h = " + rep.difference.str();
    }
    return rep;
}

JPrimeReport jprime_generators(GroebnerCache* cache) {
    auto base = PolyRing::make(QQ(), {"u", "a", "b", "c", "d", "e", "f"});
    PolyMatrix m = parse_matrix(base, {{"1", "1", "1", "1"}, {"u", "a", "b", "c"},
                                       {"u", "d", "e", "f"}});
    auto shifted = PolyRing::make(QQ(), {"u", "A", "B", "C", "D", "E", "F"});
    std::map<std::string, Poly> bind;
    const char* lower = "abcdef";
    const char* upper = "ABCDEF";
    for (int i = 0; i < 6; ++i)
        bind.emplace(std::string(1, lower[i]),
                     Poly::parse(shifted, std::string(1, upper[i]) + " - u"));

    JPrimeReport rep;
    rep.set_a.ring = shifted;
    rep.set_a.label = "shifted subpermanents";
    auto subs = sub_permanents(m, 3);
    for (auto& sc : subs) {
        size_t omitted = 0;
        std::set<size_t> used(sc.first.cols.begin(), sc.first.cols.end());
        while (used.count(omitted)) ++omitted;
        rep.set_a.gens.push_back(sc.second.substitute(bind, shifted));
        rep.set_a.labels.push_back("P" + std::to_string(omitted + 1));
    }

    rep.set_b.ring = shifted;
    rep.set_b.label = "reorganized quadruple";
    for (const char* text : {"AE + BD - 2u^2", "AF + CD - 2u^2", "BF + CE - 2u^2",
                             "uA + uB + uC + uD + uE + uF - 6u^2"}) {
        rep.set_b.gens.push_back(Poly::parse(shifted, text));
        rep.set_b.labels.push_back("q" + std::to_string(rep.set_b.gens.size()));
    }

    GroebnerOptions opts;
    const std::vector<Poly>& gb_a =
        cache ? cache->get(rep.set_a.gens, opts) : groebner_basis(rep.set_a.gens, opts);
    const std::vector<Poly>& gb_b =
        cache ? cache->get(rep.set_b.gens, opts) : groebner_basis(rep.set_b.gens, opts);

    rep.a_in_b = ideal_contains(gb_b, rep.set_a.gens, opts.order);
    rep.b_in_a = ideal_contains(gb_a, rep.set_b.gens, opts.order);

    Poly rel = Poly::parse(shifted, "BCD + u^2A - u^2B - u^2C");
    auto mem = ideal_member(rel, gb_b, opts.order);
    rep.relation_member = mem.member;
    rep.relation_remainder = mem.remainder;
    return rep;
}

J3PointsReport verify_j3_points() {
    auto jb = j_ideal(QQ(), 3);
    J3PointsReport rep;
    rep.pass = true;

    for (const char* id : {"param-A", "param-B"}) {
        Family fam = family_matrix(id);
        const PolyMatrix& m = *fam.symbolic;
        std::map<std::string, Poly> bind;
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 4; ++j)
                bind.emplace("x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                             m.at(i, j));
        for (size_t k = 0; k < jb.gens.size(); ++k) {
            Poly value = jb.gens[k].substitute(bind, m.ring());
            if (!value.is_zero()) {
                rep.pass = false;
                rep.failing.push_back(std::string(id) + " " + jb.labels[k] + " = " + value.str());
            }
        }
    }

    // the d=3 point: permanents must vanish; the other forms are informational
    ScalarMatrix p = dxd1_matrix(3);
    std::vector<Scalar> point;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 4; ++j) point.push_back(p.at(i, j));
    for (size_t k = 0; k < jb.gens.size(); ++k) {
        Scalar value = jb.gens[k].evaluate(point);
        if (k < 4) {
            if (!value.is_zero()) {
                rep.pass = false;
                rep.failing.push_back("dxd1 " + jb.labels[k] + " = " + value.str());
            }
        } else {
            rep.dxd1_values.push_back(jb.labels[k] + " = " + value.str());
        }
    }
    return rep;
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    for (mpz_class k = 1; k * k <= a; ++k)
        if (a % k == 0) {
            out.push_back(k);
            out.push_back(a / k);
        }
    return out;
}

} // namespace

std::vector<Rat> param_a_exclusions() {
    Family fam = family_matrix("param-A");
    std::set<Rat> roots;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 4; ++j) {
            const Poly& p = fam.symbolic->at(i, j);
            // coefficient list in the single parameter
            std::map<uint32_t, Rat> coeff;
            for (const auto& t : p.terms()) coeff[t.m.e[0]] = t.c.rat();
            if (coeff.empty() || coeff.size() == 1) {
                if (!coeff.empty() && coeff.begin()->first > 0) roots.insert(Rat(0));
                continue;
            }
            uint32_t low = coeff.begin()->first, high = coeff.rbegin()->first;
            if (low > 0) roots.insert(Rat(0));
            mpz_class den(1);
            for (auto& [e, c] : coeff) den = den * c.get_den() / gcd(den, mpz_class(c.get_den()));
            Rat c0q = coeff.at(low) * den, cnq = coeff.at(high) * den;
            mpz_class c0 = c0q.get_num(), cn = cnq.get_num();
            for (const auto& pnum : divisors(c0))
                for (const auto& qden : divisors(cn))
                    for (int sign : {1, -1}) {
                        Rat cand(sign * pnum, qden);
                        cand.canonicalize();
                        if (p.evaluate({Scalar::from_rat(QQ(), cand)}).is_zero())
                            roots.insert(cand);
                    }
        }
    return {roots.begin(), roots.end()};
}

} // namespace permlab
