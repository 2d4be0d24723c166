#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permlab/field.hpp"

using namespace permlab;

namespace {

// Independent irreducibility test for tiny F_p[x] polynomials: a monic
// quadratic or cubic is reducible iff it has a root.
bool has_root_mod_p(const std::vector<uint32_t>& coeffs, uint32_t p) {
    for (uint32_t x = 0; x < p; ++x) {
        uint64_t v = 0, xp = 1;
        for (uint32_t c : coeffs) {
            v = (v + c * xp) % p;
            xp = xp * x % p;
        }
        if (v == 0) return true;
    }
    return false;
}

} // namespace

TEST_CASE("field parse and names") {
    CHECK(Field::parse("QQ") == Field::rationals());
    CHECK(Field::parse("QQi") == Field::gaussian_rationals());
    CHECK(Field::parse("F5") == Field::prime(5));
    CHECK(Field::parse("GF2^2") == Field::extension(2, 2));
    CHECK(Field::prime(7)->name() == "F7");
    CHECK(Field::extension(3, 2)->name() == "GF3^2");
    CHECK(Field::rationals()->characteristic() == 0);
    CHECK(Field::prime(13)->characteristic() == 13);
    CHECK(Field::extension(2, 3)->size() == 8);

    CHECK_THROWS_AS(Field::parse("F4"), FieldError);        // not prime
    CHECK_THROWS_AS(Field::parse("GF6^2"), FieldError);     // not prime
    CHECK_THROWS_AS(Field::parse("GF2^17"), FieldError);    // 2^17 > 2^16
    CHECK_THROWS_AS(Field::parse("ZZ"), FieldError);
    CHECK_THROWS_AS(Field::parse("F99999999"), FieldError);
}

TEST_CASE("GF(4) modulus is the unique irreducible monic quadratic") {
    // enumerate all 4 monic quadratics over F2 by brute force
    int irreducible_count = 0;
    std::vector<uint32_t> the_one;
    for (uint32_t c1 = 0; c1 < 2; ++c1)
        for (uint32_t c0 = 0; c0 < 2; ++c0) {
            std::vector<uint32_t> f = {c0, c1, 1};
            if (!has_root_mod_p(f, 2)) {
                ++irreducible_count;
                the_one = f;
            }
        }
    CHECK(irreducible_count == 1);
    CHECK(the_one == std::vector<uint32_t>{1, 1, 1}); // x^2 + x + 1
    CHECK(Field::extension(2, 2)->modulus() == the_one);
}

TEST_CASE("GF(9) and GF(8) moduli are the smallest irreducible (high-degree-first order)") {
    // for F3: candidates in order x^2, x^2+1, ... first irreducible must win
    const Field* f9 = Field::extension(3, 2);
    bool found_earlier = false;
    for (uint32_t c1 = 0; c1 <= f9->modulus()[1]; ++c1) {
        for (uint32_t c0 = 0; c0 < 3; ++c0) {
            if (c1 == f9->modulus()[1] && c0 >= f9->modulus()[0]) break;
            if (!has_root_mod_p({c0, c1, 1}, 3)) found_earlier = true;
        }
        if (c1 == f9->modulus()[1]) break;
    }
    CHECK_FALSE(found_earlier);
    CHECK(f9->modulus() == std::vector<uint32_t>{1, 0, 1}); // x^2 + 1

    const Field* f8 = Field::extension(2, 3);
    CHECK(f8->modulus() == std::vector<uint32_t>{1, 1, 0, 1}); // x^3 + x + 1
}

TEST_CASE("exp/log tables are mutually inverse and generator has full order") {
    for (const Field* f : {Field::extension(2, 2), Field::extension(2, 3),
                           Field::extension(3, 2), Field::extension(2, 4),
                           Field::extension(5, 2), Field::extension(2, 1)}) {
        uint32_t q = f->size();
        const auto& exp = f->exp_table();
        const auto& log = f->log_table();
        REQUIRE(exp.size() == q - 1);
        std::vector<bool> seen(q, false);
        for (uint32_t e = 0; e + 1 < q; ++e) {
            uint32_t c = exp[e];
            CHECK(c != 0);
            CHECK_FALSE(seen[c]);
            seen[c] = true;
            CHECK(log[c] == e);
        }
        // generator really generates: every nonzero code appears
        for (uint32_t c = 1; c < q; ++c) CHECK(seen[c]);
    }
}

TEST_CASE("finite field arithmetic satisfies inverse and Frobenius laws") {
    std::mt19937 rng(12345);
    for (const Field* f : {Field::prime(2), Field::prime(5), Field::prime(13),
                           Field::prime(65521), Field::extension(2, 2),
                           Field::extension(3, 2), Field::extension(2, 3)}) {
        uint32_t q = f->size(), p = f->p();
        for (int t = 0; t < 1000; ++t) {
            uint32_t a = 1 + rng() % (q - 1);
            CHECK(f->ff_mul(a, f->ff_inv(a)) == f->ff_from_int(1));
            uint32_t b = rng() % q;
            // commutativity and distributivity spot checks
            CHECK(f->ff_add(a, b) == f->ff_add(b, a));
            CHECK(f->ff_mul(a, b) == f->ff_mul(b, a));
            uint32_t c = rng() % q;
            CHECK(f->ff_mul(a, f->ff_add(b, c)) == f->ff_add(f->ff_mul(a, b), f->ff_mul(a, c)));
            // (a+b)^p = a^p + b^p
            CHECK(f->ff_pow(f->ff_add(a, b), p) == f->ff_add(f->ff_pow(a, p), f->ff_pow(b, p)));
        }
    }
}

TEST_CASE("prime field examples") {
    const Field* f13 = Field::prime(13);
    Scalar five = Scalar::from_int(f13, 5);
    CHECK((five * five).str() == "12");
    CHECK(Scalar::from_int(f13, -1) == Scalar::from_int(f13, 12));
}

TEST_CASE("rational scalars are kept in lowest terms with positive denominator") {
    const Field* qq = Field::rationals();
    CHECK(Scalar::parse(qq, "4/6").str() == "2/3");
    CHECK(Scalar::parse(qq, "-7").str() == "-7");
    Scalar a = Scalar::parse(qq, "2/3"), b = Scalar::parse(qq, "1/6");
    CHECK((a + b).str() == "5/6");
    CHECK((a / b).str() == "4");
    CHECK(Scalar::parse(qq, "0").is_zero());
    CHECK_THROWS_AS(Scalar::parse(qq, "1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(qq, "x"), ParseError);
    CHECK_THROWS_AS(a / Scalar::zero(qq), FieldError);
}

TEST_CASE("gaussian rational parsing, printing, arithmetic") {
    const Field* qi = Field::gaussian_rationals();
    Scalar z = Scalar::parse(qi, "3+2i");
    CHECK(z.gauss().re == 3);
    CHECK(z.gauss().im == 2);
    CHECK(z.str() == "3+2i");
    CHECK(Scalar::parse(qi, "-i").str() == "-i");
    CHECK(Scalar::parse(qi, "i").str() == "i");
    CHECK(Scalar::parse(qi, "5").str() == "5");
    CHECK(Scalar::parse(qi, "3-2i").str() == "3-2i");
    CHECK(Scalar::parse(qi, "1/2+1/3i").str() == "1/2+1/3i");

    Scalar i = Scalar::parse(qi, "i");
    CHECK((i * i) == Scalar::from_int(qi, -1));
    // (3+2i)(3-2i) = 13
    CHECK((z * Scalar::parse(qi, "3-2i")) == Scalar::from_int(qi, 13));
    CHECK((z * z.inv()).is_one());
}

TEST_CASE("extension field scalar text round trips") {
    const Field* f4 = Field::extension(2, 2);
    Scalar g = Scalar::parse(f4, "g");
    CHECK(g.pow(3).is_one());
    CHECK_FALSE(g.pow(2).is_one()); // order 3 generator in GF(4)
    CHECK(Scalar::parse(f4, "g^5") == g.pow(5));
    CHECK(Scalar::parse(f4, "0").is_zero());
    CHECK(Scalar::parse(f4, "1").is_one());

    const Field* f9 = Field::extension(3, 2);
    Scalar h = Scalar::parse(f9, "g");
    // multiplicative group of GF(9) is cyclic of order 8
    std::vector<Scalar> pows;
    Scalar acc = Scalar::one(f9);
    for (int e = 0; e < 8; ++e) {
        for (const auto& prev : pows) CHECK(prev != acc);
        pows.push_back(acc);
        acc = acc * h;
    }
    CHECK(acc.is_one());
    // 2 = -1 embeds from the prime subfield
    CHECK(Scalar::parse(f9, "2") == -Scalar::one(f9));
    // round trip through text for every element
    for (uint32_t c = 0; c < 9; ++c) {
        Scalar s = Scalar::from_code(f9, c);
        CHECK(Scalar::parse(f9, s.str()) == s);
    }
}

TEST_CASE("mixed-field arithmetic is rejected") {
    Scalar a = Scalar::from_int(Field::prime(5), 2);
    Scalar b = Scalar::from_int(Field::prime(7), 2);
    CHECK_THROWS_AS(a + b, FieldError);
    CHECK(a != b);
}

TEST_CASE("random inverse law over QQ and QQi") {
    std::mt19937 rng(777);
    const Field* qq = Field::rationals();
    const Field* qi = Field::gaussian_rationals();
    for (int t = 0; t < 1000; ++t) {
        long n = (long)(rng() % 2001) - 1000, d = 1 + (long)(rng() % 50);
        if (n == 0) n = 3;
        Scalar a = Scalar::from_rat(qq, Rat(n, d));
        CHECK((a * a.inv()).is_one());
        Scalar z = Scalar::from_gaussian(Rat(n, d), Rat((long)(rng() % 19) - 9, 1 + (long)(rng() % 7)));
        if (!z.is_zero()) CHECK((z * z.inv()).is_one());
        CHECK(Scalar::parse(qq, a.str()) == a);
        CHECK(Scalar::parse(qi, z.str()) == z);
    }
}

TEST_CASE("pow matches repeated multiplication") {
    std::mt19937 rng(99);
    for (const Field* f : {Field::prime(7), Field::extension(3, 2)}) {
        for (int t = 0; t < 200; ++t) {
            Scalar a = Scalar::from_code(f, rng() % f->size());
            Scalar acc = Scalar::one(f);
            for (unsigned e = 0; e < 9; ++e) {
                CHECK(a.pow(e) == acc);
                acc = acc * a;
            }
        }
    }
}
