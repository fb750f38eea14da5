#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wsos/interval.hpp"
#include "wsos/linalg.hpp"

using namespace wsos;

namespace {

Rational rnd_rational(std::mt19937_64& rng, long den_max = 12) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, den_max);
    return Rational(num(rng), den(rng));
}

SymMatrix sym_from(std::initializer_list<std::initializer_list<long>> rows) {
    const size_t n = rows.size();
    SymMatrix m(n);
    size_t i = 0;
    for (const auto& row : rows) {
        size_t j = 0;
        for (long v : row) {
            if (j >= i) m.set(i, j, Rational(v));
            ++j;
        }
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(-3, 6).str() == "-1/2");
    CHECK(Rational::parse("-36") == Rational(-36));
    CHECK(Rational::parse("498/5029") == Rational(498, 5029));
    CHECK(Rational::parse("-16/4563").str() == "-16/4563");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("3/-4"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(a > b);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational::pow(Rational(3, 2), 3) == Rational(27, 8));
    CHECK(Rational::pow(Rational(3, 2), -2) == Rational(4, 9));
}

TEST_CASE("ldl_factor worked examples") {
    // identity
    auto f = ldl_factor(SymMatrix::identity(3));
    REQUIRE(f.has_value());
    CHECK(f->pivots == Vec{Rational(1), Rational(1), Rational(1)});

    // hand elimination of [[4,2],[2,2]]
    auto g = ldl_factor(sym_from({{4, 2}, {2, 2}}));
    REQUIRE(g.has_value());
    CHECK(g->pivots == Vec{Rational(4), Rational(1)});
    CHECK(g->lower[1][0] == Rational(1, 2));
    CHECK(g->reconstruct() == sym_from({{4, 2}, {2, 2}}));

    // zero pivot with nonzero residual
    CHECK_FALSE(ldl_factor(sym_from({{0, 1}, {1, 0}})).has_value());
}

TEST_CASE("ldl reconstruction on random factorable matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const size_t n = 2 + trial % 4;
        // B^T B + I is SPD, hence factorable with no pivoting
        std::vector<Vec> b(n, Vec(n));
        for (auto& row : b)
            for (auto& v : row) v = rnd_rational(rng);
        SymMatrix a(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                Rational s(i == j ? 1 : 0);
                for (size_t k = 0; k < n; ++k) s += b[k][i] * b[k][j];
                a.set(i, j, s);
            }
        auto f = ldl_factor(a);
        REQUIRE(f.has_value());
        CHECK(f->reconstruct() == a);
        CHECK(is_pd(a));
    }
}

TEST_CASE("is_pd examples") {
    CHECK(is_pd(SymMatrix::identity(2)));
    CHECK_FALSE(is_pd(sym_from({{1, 2}, {2, 1}})));  // eigenvalues 3, -1
    // Lambda(x1) of the disk example in graded-lex order: diag blocks
    CHECK(is_pd(sym_from({{4, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
}

TEST_CASE("is_psd examples and pd/psd consistency") {
    SymMatrix zero(3);
    CHECK(is_psd(zero));
    CHECK_FALSE(is_pd(zero));
    CHECK(is_psd(sym_from({{1, 1}, {1, 1}})));
    CHECK_FALSE(is_psd(sym_from({{1, 2}, {2, 1}})));
    CHECK_FALSE(is_psd(sym_from({{0, 1}, {1, 0}})));
    CHECK(is_psd(sym_from({{0, 0}, {0, 5}})));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const size_t n = 2 + trial % 3;
        SymMatrix a(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) a.set(i, j, rnd_rational(rng, 6));
        if (is_pd(a)) CHECK(is_psd(a));
        if (is_psd(a) && is_psd(-a)) {
            // only the zero matrix is PSD both ways
            CHECK(a == SymMatrix(n));
        }
    }
}

TEST_CASE("solve_spd") {
    const Vec b{Rational(3), Rational(-1, 2), Rational(7, 3)};
    CHECK(solve_spd(SymMatrix::identity(3), b) == b);
    CHECK_THROWS_AS(solve_spd(sym_from({{1, 2}, {2, 1}}), Vec{Rational(1), Rational(0)}),
                    NotPdError);

    // random SPD round trip
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const size_t n = 4;
        std::vector<Vec> bm(n, Vec(n));
        for (auto& row : bm)
            for (auto& v : row) v = rnd_rational(rng);
        SymMatrix a(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                Rational s(i == j ? 1 : 0);
                for (size_t k = 0; k < n; ++k) s += bm[k][i] * bm[k][j];
                a.set(i, j, s);
            }
        Vec xs(n);
        for (auto& v : xs) v = rnd_rational(rng);
        CHECK(solve_spd(a, a.apply(xs)) == xs);
    }
}

TEST_CASE("sqrt_ceil") {
    CHECK(sqrt_ceil(Rational(0)) == 0);
    CHECK(sqrt_ceil(Rational(2)) == 2);
    CHECK(sqrt_ceil(Rational(25, 4)) == 3);
    CHECK(sqrt_ceil(Rational(4)) == 2);
    CHECK(sqrt_ceil(Rational(9, 4)) == 2);  // sqrt = 3/2
    CHECK_THROWS_AS(sqrt_ceil(Rational(-1)), std::domain_error);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<long> num(1, 100000);
        std::uniform_int_distribution<long> den(1, 1000);
        const Rational q(num(rng), den(rng));
        const Integer n = sqrt_ceil(q);
        CHECK(Rational(Integer(n * n)) >= q);
        if (n > 0) CHECK(Rational(Integer((n - 1) * (n - 1))) < q);
    }
}

TEST_CASE("sqrt_interval") {
    const auto p = sqrt_interval(Rational(4), 10);
    CHECK(p.lo == Rational(2));
    CHECK(p.hi == Rational(2));
    const auto z = sqrt_interval(Rational(0), 4);
    CHECK(z.lo == Rational(0));
    CHECK(z.hi == Rational(0));
    const auto s2 = sqrt_interval(Rational(2), 10);
    CHECK(s2.width() <= Rational(1, 1024));
    CHECK(s2.lo * s2.lo <= Rational(2));
    CHECK(s2.hi * s2.hi >= Rational(2));
    CHECK_THROWS_AS(sqrt_interval(Rational(-1), 4), std::domain_error);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<long> num(0, 5000);
        std::uniform_int_distribution<long> den(1, 500);
        const Rational q(num(rng), den(rng));
        const auto iv = sqrt_interval(q, 20);
        CHECK(iv.lo * iv.lo <= q);
        CHECK(iv.hi * iv.hi >= q);
        CHECK(iv.width() <= Rational(1, 1 << 20));
    }
}

TEST_CASE("min_denominator_rational worked examples") {
    // the golden-run rounding interval: integers win,
    // and among integers the largest is taken
    CHECK(min_denominator_rational({Rational::parse("-186/5"), Rational::parse("-177/5")}) ==
          Rational(-36));
    CHECK(min_denominator_rational({Rational(1, 3), Rational(1, 3)}) == Rational(1, 3));
    CHECK(min_denominator_rational({Rational(2, 7), Rational(3, 7)}) == Rational(1, 3));
}

TEST_CASE("min_denominator_rational is minimal (brute force)") {
    std::mt19937_64 rng(13);
    auto brute = [](const RationalInterval& iv) {
        for (long den = 1; den <= 50; ++den) {
            // largest numerator first so ties at the same denominator pick the
            // larger value, matching the documented tie-break
            const Integer hi_num = (iv.hi * Rational(den)).floor();
            const Integer lo_num = (iv.lo * Rational(den)).ceil();
            if (hi_num >= lo_num) return Rational(hi_num, Integer(den));
        }
        return Rational(0);
    };
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<long> num(-60, 60);
        std::uniform_int_distribution<long> den(1, 40);
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        if (b < a) std::swap(a, b);
        const RationalInterval iv{a, b};
        const Rational got = brute(iv);
        if (got.denominator() > 50) continue;  // outside the brute-force window
        const Rational simplest = min_denominator_rational(iv);
        CHECK(iv.contains(simplest));
        CHECK(simplest.denominator() == got.denominator());
        // at denominator >= 2 the minimal-denominator rational is unique
        if (got.denominator() > 1) CHECK(simplest == got);
        if (got.denominator() == 1) CHECK(simplest == got);
    }
}

TEST_CASE("eigenvalue bounds") {
    CHECK(lambda_min_lower(SymMatrix::identity(4)) == Rational(1));
    const SymMatrix scaled = SymMatrix::identity(3).scaled(Rational(7, 3));
    CHECK(lambda_min_lower(scaled) == Rational(7, 3));
    // diag(1,2): lambda_min hit exactly by the PSD catch at the midpoint
    CHECK(lambda_min_lower(sym_from({{1, 0}, {0, 2}})) == Rational(1));
    CHECK_THROWS_AS(lambda_min_lower(sym_from({{0, 0}, {0, 1}})), NotPdError);

    const auto br = lambda_max_bracket(sym_from({{3, 1}, {1, 3}}), Rational(1, 1024));
    CHECK(br.lo <= Rational(4));
    CHECK(Rational(4) <= br.hi);
    CHECK(lambda_max_at_most(sym_from({{3, 1}, {1, 3}}), Rational(4)));
    CHECK_FALSE(lambda_max_at_most(sym_from({{3, 1}, {1, 3}}), Rational(39, 10)));
}

TEST_CASE("log2_interval") {
    auto exact = log2_interval(Rational(8), 20);
    CHECK(exact.lo == Rational(3));
    CHECK(exact.hi == Rational(3));
    auto half = log2_interval(Rational(1, 4), 20);
    CHECK(half.lo == Rational(-2));
    auto three = log2_interval(Rational(3), 20);
    CHECK(three.width() <= Rational(1, 1 << 20));
    // log2(3) = 1.58496250072...
    CHECK(three.lo <= Rational(1584963, 1000000));
    CHECK(three.hi >= Rational(1584962, 1000000));
}
