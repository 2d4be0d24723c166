#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permlab/groebner.hpp"
#include "permlab/matrix.hpp"
#include "permlab/permideal.hpp"

using namespace permlab;

namespace {

RingPtr xy() { return PolyRing::make(Field::rationals(), {"x", "y"}); }
RingPtr xyz() { return PolyRing::make(Field::rationals(), {"x", "y", "z"}); }

Poly P(const RingPtr& r, const std::string& s) { return Poly::parse(r, s); }

std::vector<std::string> strs(const std::vector<Poly>& v) {
    std::vector<std::string> out;
    for (const auto& p : v) out.push_back(p.str());
    return out;
}

Poly random_poly(const RingPtr& r, std::mt19937_64& rng, int terms, int maxdeg) {
    Poly acc = Poly::zero(r);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int budget = (int)(rng() % (unsigned)(maxdeg + 1));
        for (int d = 0; d < budget; ++d) {
            size_t v = rng() % r->nvars();
            m.e[v] = (uint16_t)(m.e[v] + 1);
            m.deg++;
        }
        long c = (long)(rng() % 13) - 6;
        acc += Poly::term(r, m, Scalar::from_int(r->field(), c));
    }
    return acc;
}

} // namespace

TEST_CASE("a basis closed under s-reduction is its own groebner basis") {
    auto r = xy();
    std::vector<Poly> gens = {P(r, "x - y"), P(r, "y^2")};
    auto lex = groebner_basis(gens, {MonomialOrder::lex()});
    REQUIRE(lex.size() == 2);
    CHECK(lex[0] == P(r, "x - y")); // x beats y^2 under lex
    CHECK(lex[1] == P(r, "y^2"));
    auto grl = groebner_basis(gens, {MonomialOrder::degrevlex()});
    REQUIRE(grl.size() == 2);
    CHECK(grl[0] == P(r, "y^2")); // degree decides first here
    CHECK(grl[1] == P(r, "x - y"));
}

TEST_CASE("completion of a non-basis pair") {
    auto r = xy();
    std::vector<Poly> gens = {P(r, "x^3 - 2xy"), P(r, "x^2y - 2y^2 + x")};
    auto gb = groebner_basis(gens);
    auto got = strs(gb);
    std::vector<std::string> want = {"x^2", "x*y", "y^2 - 1/2*x"};
    CHECK(got == want);
}

TEST_CASE("cyclic-3 reduced basis") {
    auto r = xyz();
    std::vector<Poly> gens = {P(r, "x + y + z"), P(r, "xy + yz + zx"), P(r, "xyz - 1")};
    auto gb = groebner_basis(gens);
    auto got = strs(gb);
    std::vector<std::string> want = {"z^3 - 1", "y^2 + y*z + z^2", "x + y + z"};
    CHECK(got == want);

    auto again = strs(groebner_basis(gens));
    CHECK(again == got);
}

TEST_CASE("monomial generators are already reduced") {
    auto r = xyz();
    std::vector<Poly> gens = {P(r, "x^2y"), P(r, "y^3z"), P(r, "xz^4")};
    auto gb = groebner_basis(gens);
    REQUIRE(gb.size() == 3);
    CHECK(normal_form(P(r, "x^2y^5z"), gb).is_zero());
    CHECK(!normal_form(P(r, "x*y*z"), gb).is_zero());
}

TEST_CASE("normal form is idempotent and respects addition") {
    auto r = xyz();
    std::mt19937_64 rng(7);
    auto gb = groebner_basis({P(r, "x^2 - y"), P(r, "y^2 - z"), P(r, "xz - y")});
    for (int trial = 0; trial < 40; ++trial) {
        Poly f = random_poly(r, rng, 5, 4);
        Poly g = random_poly(r, rng, 5, 4);
        Poly nf = normal_form(f, gb);
        CHECK(normal_form(nf, gb) == nf);
        CHECK(normal_form(f + g, gb) == normal_form(normal_form(f, gb) + normal_form(g, gb), gb));
        CHECK(normal_form(f - nf, gb).is_zero());
    }
}

TEST_CASE("buchberger criterion holds for computed bases over F7") {
    const Field* f7 = Field::prime(7);
    auto r = PolyRing::make(f7, {"a", "b", "c"});
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Poly> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(random_poly(r, rng, 4, 2));
        auto gb = groebner_basis(gens);
        if (gb.empty()) continue;
        for (const Poly& g : gens) CHECK(normal_form(g, gb).is_zero());
        for (size_t i = 0; i < gb.size(); ++i)
            for (size_t j = i + 1; j < gb.size(); ++j)
                CHECK(normal_form(s_polynomial(gb[i], gb[j], MonomialOrder::degrevlex()), gb)
                          .is_zero());
        // random element of the ideal must reduce to zero
        Poly mix = Poly::zero(r);
        for (const Poly& g : gens) mix += random_poly(r, rng, 3, 2) * g;
        CHECK(normal_form(mix, gb).is_zero());
    }
}

TEST_CASE("column-minor determinants multiply into the pair ideal") {
    const Field* q = Field::rationals();
    auto basis = permanental_ideal(q, 2, 2, 3);
    auto gb = groebner_basis(basis.gens);
    auto r = basis.ring;
    Poly det23 = P(r, "x_1_2 x_2_3 - x_1_3 x_2_2");
    CHECK(ideal_member(P(r, "x_1_1") * det23, gb).member);
    CHECK(ideal_member(P(r, "x_2_1") * det23, gb).member);
    CHECK(!ideal_member(det23, gb).member);
    CHECK(!ideal_member(P(r, "x_1_1"), gb).member);

    auto lifted = lift_combination(P(r, "x_1_1") * det23, gb);
    REQUIRE(lifted.has_value());
    Poly recomb = Poly::zero(r);
    for (size_t k = 0; k < gb.size(); ++k) recomb += (*lifted)[k] * gb[k];
    CHECK(recomb == P(r, "x_1_1") * det23);
}

TEST_CASE("squared determinant lies in the duplicated-column pair ideal") {
    const Field* q = Field::rationals();
    PolyMatrix m = generic_matrix(q, 2, 2);
    PolyMatrix mm = hconcat(m, m);
    std::vector<Poly> gens;
    for (auto& [sel, p] : sub_permanents(mm, 2)) gens.push_back(p);
    auto gb = groebner_basis(gens);
    Poly det = determinant(m);
    CHECK(ideal_member(det * det, gb).member);
    CHECK(!ideal_member(det, gb).member);
}

TEST_CASE("ideal containment over a groebner basis") {
    const Field* q = Field::rationals();
    auto basis = permanental_ideal(q, 2, 2, 3);
    auto gb = groebner_basis(basis.gens);
    auto r = basis.ring;
    std::vector<Poly> inside = {basis.gens[0] * P(r, "x_2_2") - basis.gens[2],
                                Poly::zero(r) + basis.gens[1]};
    CHECK(ideal_contains(gb, inside));
    inside.push_back(P(r, "x_1_1x_2_2"));
    CHECK(!ideal_contains(gb, inside));
}

TEST_CASE("resource caps throw budget errors") {
    auto r = xy();
    std::vector<Poly> gens = {P(r, "x^3 - 2xy"), P(r, "x^2y - 2y^2 + x")};
    GroebnerOptions tight_deg;
    tight_deg.max_degree = 1;
    CHECK_THROWS_AS(groebner_basis(gens, tight_deg), BudgetError);
    GroebnerOptions tight_size;
    tight_size.max_basis = 2;
    CHECK_THROWS_AS(groebner_basis(gens, tight_size), BudgetError);
}

TEST_CASE("lift fails cleanly when the trail leaves a remainder") {
    auto r = xy();
    CHECK(!lift_combination(P(r, "x"), {P(r, "y")}).has_value());
}

TEST_CASE("cache returns the memoized basis") {
    GroebnerCache cache;
    auto r = xy();
    std::vector<Poly> gens = {P(r, "x^3 - 2xy"), P(r, "x^2y - 2y^2 + x")};
    const auto& a = cache.get(gens);
    CHECK(cache.size() == 1);
    std::vector<Poly> shuffled = {gens[1], gens[0]};
    const auto& b = cache.get(shuffled);
    CHECK(cache.size() == 1);
    CHECK(strs(a) == strs(b));
    GroebnerOptions lex_opts;
    lex_opts.order = MonomialOrder::lex();
    cache.get(gens, lex_opts);
    CHECK(cache.size() == 2);
}

TEST_CASE("mixed rings are rejected") {
    auto r1 = xy();
    auto r2 = xyz();
    CHECK_THROWS_AS(groebner_basis({P(r1, "x"), P(r2, "z")}), RingError);
    CHECK_THROWS_AS(s_polynomial(P(r1, "x"), P(r2, "z"), MonomialOrder::degrevlex()), RingError);
}
