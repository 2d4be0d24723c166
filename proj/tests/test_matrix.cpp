#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <random>

#include "permlab/matrix.hpp"

using namespace permlab;

namespace {

ScalarMatrix random_matrix(const Field* f, size_t n, std::mt19937& rng) {
    ScalarMatrix m(f, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (f->finite())
                m.set(i, j, Scalar::from_code(f, rng() % f->size()));
            else if (f->kind() == FieldKind::gaussian_rationals)
                m.set(i, j, Scalar::from_gaussian(Rat((long)(rng() % 9) - 4),
                                                  Rat((long)(rng() % 9) - 4)));
            else
                m.set(i, j, Scalar::from_rat(f, Rat((long)(rng() % 19) - 9, 1 + (long)(rng() % 3))));
        }
    return m;
}

const std::vector<std::vector<std::string>> kDegenerate3x4 = {
    {"1", "1", "1", "-7"}, {"1", "1", "-4", "2"}, {"1", "1", "3", "5"}};

} // namespace

TEST_CASE("combinations are lexicographic") {
    auto c = combinations(4, 2);
    std::vector<std::vector<size_t>> want = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(c == want);
    CHECK(combinations(3, 0).size() == 1);
    CHECK(combinations(2, 3).empty());
}

TEST_CASE("permanent and determinant of small numeric matrices") {
    auto m = ScalarMatrix::parse_rows(Field::rationals(), {{"1", "2"}, {"3", "4"}});
    CHECK(permanent(m).str() == "10");
    CHECK(permanent(m, PermMethod::laplace).str() == "10");
    CHECK(determinant(m).str() == "-2");
    CHECK_THROWS_AS(permanent(ScalarMatrix(Field::rationals(), 2, 3)), ArgError);

    auto deg = ScalarMatrix::parse_rows(Field::rationals(), kDegenerate3x4);
    CHECK(permanent(deg.submatrix({0, 1, 2}, {0, 1, 2})).is_zero());
}

TEST_CASE("generic symbolic permanent and determinant") {
    PolyMatrix x = generic_matrix(Field::rationals(), 2, 2);
    auto r = x.ring();
    CHECK(permanent(x) == Poly::parse(r, "x_1_1*x_2_2 + x_1_2*x_2_1"));
    CHECK(determinant(x) == Poly::parse(r, "x_1_1*x_2_2 - x_1_2*x_2_1"));
    CHECK(permanent(x, PermMethod::ryser) == permanent(x, PermMethod::laplace));

    PolyMatrix y = generic_matrix(Field::rationals(), 2, 3);
    Poly det23 = determinant(y.submatrix({0, 1}, {1, 2}));
    CHECK(det23 == Poly::parse(y.ring(), "x_1_2*x_2_3 - x_1_3*x_2_2"));

    PolyMatrix z = generic_matrix(Field::prime(3), 3, 3);
    CHECK(permanent(z, PermMethod::ryser) == permanent(z, PermMethod::laplace));
    CHECK(permanent(z).nterms() == 6);
}

TEST_CASE("ryser agrees with laplace on random scalar matrices") {
    std::vector<const Field*> fields = {Field::rationals(), Field::gaussian_rationals(),
                                        Field::prime(7), Field::extension(2, 2)};
    std::mt19937 rng(99);
    for (const Field* f : fields) {
        for (int t = 0; t < 500; ++t) {
            size_t n = 1 + rng() % 9;
            auto m = random_matrix(f, n, rng);
            CHECK(permanent(m, PermMethod::ryser) == permanent(m, PermMethod::laplace));
        }
    }
}

TEST_CASE("integer fast path agrees with exact rational path") {
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        size_t n = 8 + rng() % 3;
        ScalarMatrix m(Field::rationals(), n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                m.set(i, j, Scalar::from_int(Field::rationals(), (long)(rng() % 19) - 9));
        CHECK(permanent(m, PermMethod::ryser) == permanent(m, PermMethod::laplace));
    }
}

TEST_CASE("20x20 integer permanent finishes quickly") {
    std::mt19937 rng(42);
    ScalarMatrix m(Field::rationals(), 20, 20);
    for (size_t i = 0; i < 20; ++i)
        for (size_t j = 0; j < 20; ++j)
            m.set(i, j, Scalar::from_int(Field::rationals(), (long)(rng() % 19) - 9));
    auto t0 = std::chrono::steady_clock::now();
    Scalar p = permanent(m);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    CHECK(p == permanent(m)); // deterministic
    CHECK(ms < 10000);
    MESSAGE("20x20 permanent: " << ms << " ms");
}

TEST_CASE("multilinearity in the appended column") {
    std::mt19937 rng(1234);
    const Field* f = Field::rationals();
    for (size_t d = 2; d <= 6; ++d) {
        for (int t = 0; t < 20; ++t) {
            auto a = random_matrix(f, d, rng).submatrix(
                combinations(d, d)[0], combinations(d, d - 1)[0]); // d x (d-1)
            ScalarMatrix av(f, d, d);
            std::vector<Scalar> v;
            for (size_t i = 0; i < d; ++i) {
                for (size_t j = 0; j + 1 < d; ++j) av.set(i, j, a.at(i, j));
                v.push_back(Scalar::from_rat(f, Rat((long)(rng() % 9) - 4)));
                av.set(i, d - 1, v[i]);
            }
            // perm(A|v) = sum_i v_i * perm(A with row i omitted)
            Scalar rhs = Scalar::zero(f);
            for (size_t i = 0; i < d; ++i) {
                std::vector<size_t> omit;
                for (size_t k = 0; k < d; ++k)
                    if (k != i) omit.push_back(k);
                std::vector<size_t> allc;
                for (size_t k = 0; k + 1 < d; ++k) allc.push_back(k);
                rhs = rhs + v[i] * permanent(a.submatrix(omit, allc));
            }
            CHECK(permanent(av) == rhs);
        }
    }
}

TEST_CASE("vectors annihilating the cofactor vector form a singular matrix") {
    std::mt19937 rng(77);
    const Field* f = Field::rationals();
    for (int t = 0; t < 25; ++t) {
        size_t d = 2 + rng() % 4;
        ScalarMatrix a(f, d, d - 1);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j + 1 < d; ++j)
                a.set(i, j, Scalar::from_int(f, (long)(rng() % 9) - 4));
        // cofactor vector c_i = perm(a with row i omitted)
        std::vector<Scalar> c;
        Scalar c2 = Scalar::zero(f);
        for (size_t i = 0; i < d; ++i) {
            std::vector<size_t> omit;
            for (size_t k = 0; k < d; ++k)
                if (k != i) omit.push_back(k);
            std::vector<size_t> allc;
            for (size_t k = 0; k + 1 < d; ++k) allc.push_back(k);
            c.push_back(permanent(a.submatrix(omit, allc)));
            c2 = c2 + c.back() * c.back();
        }
        if (c2.is_zero()) continue; // zero cofactor vector carries no constraint
        // project random rows orthogonal to c; the resulting matrix kills c,
        // so its determinant must vanish
        ScalarMatrix vmat(f, d, d);
        for (size_t i = 0; i < d; ++i) {
            std::vector<Scalar> w;
            Scalar dot = Scalar::zero(f);
            for (size_t j = 0; j < d; ++j) {
                w.push_back(Scalar::from_int(f, (long)(rng() % 9) - 4));
                dot = dot + w[j] * c[j];
            }
            for (size_t j = 0; j < d; ++j) vmat.set(i, j, w[j] - dot / c2 * c[j]);
        }
        CHECK(determinant(vmat).is_zero());
    }
}

TEST_CASE("row scaling scales the permanent") {
    std::mt19937 rng(5150);
    const Field* f = Field::prime(11);
    for (int t = 0; t < 50; ++t) {
        size_t n = 2 + rng() % 4;
        auto m = random_matrix(f, n, rng);
        Scalar lam = Scalar::from_code(f, 1 + rng() % 10);
        size_t r = rng() % n;
        auto scaled = m;
        for (size_t j = 0; j < n; ++j) scaled.set(r, j, lam * m.at(r, j));
        CHECK(permanent(scaled) == lam * permanent(m));
    }
}

TEST_CASE("bareiss determinant agrees with expansion") {
    std::mt19937 rng(31337);
    for (const Field* f : {Field::rationals(), Field::prime(13)}) {
        for (int t = 0; t < 60; ++t) {
            size_t n = 1 + rng() % 5;
            auto m = random_matrix(f, n, rng);
            PolyMatrix pm(PolyRing::make(f, {"t"}), n, n);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    pm.set(i, j, Poly::constant(pm.ring(), m.at(i, j)));
            Poly dd = determinant(pm);
            Scalar want = dd.is_zero() ? Scalar::zero(f) : dd.terms()[0].c;
            CHECK(determinant(m) == want);
        }
    }
}

TEST_CASE("perrank") {
    const Field* f = Field::rationals();
    auto id2 = ScalarMatrix::parse_rows(f, {{"1", "0"}, {"0", "1"}});
    CHECK(perrank(id2) == 2);
    auto m = ScalarMatrix::parse_rows(f, {{"1", "1"}, {"1", "-1"}});
    CHECK(perrank(m) == 1);
    CHECK(perrank(ScalarMatrix(f, 3, 2)) == 0);
}

TEST_CASE("sub_permanents enumerates selectors lexicographically") {
    PolyMatrix x = generic_matrix(Field::rationals(), 2, 3);
    auto subs = sub_permanents(x, 2);
    REQUIRE(subs.size() == 3);
    CHECK(subs[0].first.str() == "{1,2}x{1,2}");
    CHECK(subs[1].first.str() == "{1,2}x{1,3}");
    CHECK(subs[2].first.str() == "{1,2}x{2,3}");
    CHECK(subs[0].second == Poly::parse(x.ring(), "x_1_1x_2_2 + x_1_2x_2_1"));

    auto deg = ScalarMatrix::parse_rows(Field::rationals(), kDegenerate3x4);
    auto s3 = sub_permanents(deg, 3);
    REQUIRE(s3.size() == 4);
    for (auto& [sel, val] : s3) CHECK(val.is_zero());
    CHECK_THROWS_AS(sub_permanents(deg, 4), ArgError);
}

TEST_CASE("repeated columns are allowed in submatrix selections") {
    PolyMatrix x = generic_matrix(Field::rationals(), 2, 3);
    Poly p = permanent(x.submatrix({0, 1}, {0, 0}));
    CHECK(p == Poly::parse(x.ring(), "2x_1_1x_2_1"));
}

TEST_CASE("matrix json round trip") {
    auto m = ScalarMatrix::parse_rows(Field::extension(3, 2), {{"g", "2"}, {"0", "g^3"}});
    auto j = m.to_json();
    CHECK(j["field"] == "GF3^2");
    auto back = ScalarMatrix::from_json(j);
    CHECK(back.rows() == 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t k = 0; k < 2; ++k) CHECK(back.at(i, k) == m.at(i, k));
    CHECK_THROWS_AS(ScalarMatrix::from_json(nlohmann::ordered_json::object()), IoError);
}

TEST_CASE("hconcat, transpose, evaluate") {
    PolyMatrix x = generic_matrix(Field::rationals(), 2, 2);
    PolyMatrix both = hconcat(x, x.transpose());
    CHECK(both.cols() == 4);
    CHECK(both.at(0, 3) == x.at(1, 0));
    std::vector<Scalar> pt;
    for (long v : {1, 2, 3, 4}) pt.push_back(Scalar::from_int(Field::rationals(), v));
    auto num = x.evaluate(pt);
    CHECK(permanent(num).str() == "10");
}
