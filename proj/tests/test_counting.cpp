#include "dscx/complex.hpp"
#include "dscx/counting.hpp"
#include "dscx/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace dscx;

namespace {

std::vector<Int> iv(std::initializer_list<long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

const std::vector<std::vector<long>> kFVectors = {
    {1},
    {2, 1},
    {5, 5, 1},
    {16, 23, 9, 1},
    {65, 116, 65, 14, 1},
    {326, 669, 470, 145, 20, 1},
    {1957, 4429, 3634, 1415, 280, 27, 1},
    {13700, 33375, 30681, 14084, 3535, 490, 35, 1},
    {109601, 283072, 284066, 147532, 43939, 7756, 798, 44, 1},
    {986410, 2673321, 2878284, 1646714, 558642, 117579, 15456, 1230, 54, 1},
};

} // namespace

TEST_CASE("f-vector recursion reproduces the printed tables") {
    for (std::size_t n = 0; n < kFVectors.size(); ++n) {
        FVector f = fvector_recursive(static_cast<int>(n));
        REQUIRE(f.counts.size() == kFVectors[n].size());
        for (std::size_t d = 0; d < f.counts.size(); ++d) {
            CHECK(f.counts[d] == kFVectors[n][d]);
        }
    }
}

TEST_CASE("recursion agrees with enumeration up to generation 6") {
    for (int n = 0; n <= 6; ++n) {
        CHECK(fvector_recursive(n) == fvector_of(generate_dsc(n)));
    }
}

TEST_CASE("closed form for the number of vertices") {
    CHECK(n0_closed(0) == 1);
    CHECK(n0_closed(9) == 986410);
    // independent oracle: iterate N0(n) = n N0(n-1) + 1
    Int rec = 1;
    for (int n = 1; n <= 20; ++n) {
        rec = rec * n + 1;
        CHECK(n0_closed(n) == rec);
    }
}

TEST_CASE("total simplex count and its telescopes") {
    CHECK(total_simplices(0) == 1);
    CHECK(total_simplices(2) == 11);
    CHECK(total_simplices(8) == 876809); // 986410 - 109601
    for (int n = 0; n <= 20; ++n) {
        CHECK(total_simplices(n) == n0_closed(n + 1) - n0_closed(n));
    }
    for (int n = 0; n <= 12; ++n) {
        CHECK(total_simplices(n) == fvector_recursive(n).total());
    }
}

TEST_CASE("series extraction equals the recursion") {
    CHECK(nd_by_series(2, 9) == 2878284);
    CHECK(nd_by_series(7, 7) == 1);
    CHECK(nd_by_series(5, 3) == 0);
    for (int n = 0; n <= 12; ++n) {
        FVector f = fvector_recursive(n);
        for (int d = 0; d <= n; ++d) {
            CHECK(nd_by_series(d, n) == f.counts[d]);
        }
    }
}

TEST_CASE("EGF of the total count is e^x/(1-x)^2") {
    std::size_t T = 12;
    RationalSeries s = RationalSeries::exp_x(T) * RationalSeries::geometric(T) *
                       RationalSeries::geometric(T);
    for (int n = 0; n <= 12; ++n) {
        Rat v = s[n] * Rat(factorial(n));
        REQUIRE(v.get_den() == 1);
        CHECK(v.get_num() == total_simplices(n));
    }
}

TEST_CASE("co-diagonal closed forms") {
    CHECK(codiagonal(4, 1) == 14);
    CHECK(codiagonal(9, 2) == 1230);
    CHECK(codiagonal(9, 4) == 117579);
    CHECK(codiagonal(9, 5) == 558642);
    for (int p = 0; p <= 5; ++p) {
        for (int n = p; n <= 14; ++n) {
            CHECK(codiagonal(n, p) == fvector_recursive(n).counts[n - p]);
        }
    }
    CHECK_THROWS_AS(codiagonal(10, 6), domain_error);
    CHECK_THROWS_AS(codiagonal(2, 3), domain_error);
}

TEST_CASE("logarithmic numbers") {
    const long expected[] = {1, 3, 8, 24, 89, 415, 2372, 16072};
    for (int n = 1; n <= 8; ++n) {
        CHECK(log_numbers(n) == expected[n - 1]);
    }
    CHECK(log_numbers(9) == 125673); // 16072 + 109601
    CHECK_THROWS_AS(log_numbers(0), domain_error);
    // telescopes through the vertex counts
    for (int n = 1; n <= 10; ++n) {
        CHECK(log_numbers(n + 1) - log_numbers(n) == n0_closed(n));
        CHECK(total_simplices(n) ==
              log_numbers(n + 2) - 2 * log_numbers(n + 1) + log_numbers(n));
    }
}

TEST_CASE("gap between the two largest degrees") {
    CHECK(max_degree_gap(3) == 2);
    CHECK(max_degree_gap(5) == 16);
    CHECK(max_degree_gap(8) == 1957); // 16072 - 14115
    CHECK_THROWS_AS(max_degree_gap(1), domain_error);
    // the extraction collapses to a vertex count two generations back
    for (int n = 2; n <= 14; ++n) {
        CHECK(max_degree_gap(n) == n0_closed(n - 2));
    }
}

TEST_CASE("constrained f-vectors") {
    FVector t = fvector_constrained(10, 1);
    CHECK(t.counts == iv({1024, 1023}));

    // closed forms for m = 2 evaluated with g+- = (5 +- sqrt(5))/2
    double s5 = std::sqrt(5.0);
    double gp = (5 + s5) / 2, gm = (5 - s5) / 2;
    for (int n = 0; n <= 15; ++n) {
        FVector f = fvector_constrained(n, 2);
        double n0 = (5 - s5) / 10 * std::pow(gp, n) + (5 + s5) / 10 * std::pow(gm, n);
        double n1 = (std::pow(gp, n) - std::pow(gm, n)) / s5;
        double n2 = 1 + (3 * s5 - 5) / 10 * std::pow(gp, n) - (3 * s5 + 5) / 10 * std::pow(gm, n);
        CHECK(f.counts[0] == Int(static_cast<long>(std::llround(n0))));
        CHECK(f.counts[1] == Int(static_cast<long>(std::llround(n1))));
        if (n >= 1) CHECK(f.counts[2] == Int(static_cast<long>(std::llround(n2))));
    }

    // structural identities of the m = 2 model
    for (int n = 1; n <= 20; ++n) {
        FVector f = fvector_constrained(n, 2);
        CHECK(f.counts[1] == f.counts[0] + f.counts[2] - 1);
        CHECK(f.total() == 2 * f.counts[1] + 1);
    }
}

TEST_CASE("constrained recursion agrees with enumeration") {
    for (int m : {1, 2, 3}) {
        for (int n = 0; n <= 8; ++n) {
            FVector f = fvector_constrained(n, m);
            FVector e = fvector_of(generate_dsc_m(n, m));
            // enumeration omits trailing zero dimensions
            REQUIRE(e.counts.size() <= f.counts.size());
            for (std::size_t d = 0; d < f.counts.size(); ++d) {
                Int en = d < e.counts.size() ? e.counts[d] : Int(0);
                CHECK(f.counts[d] == en);
            }
        }
    }
}

TEST_CASE("growth rates") {
    GrowthRate g1 = g_plus(1);
    CHECK(g1.g_plus == 2.0);

    GrowthRate g2 = g_plus(2);
    double exact2 = (5 + std::sqrt(5.0)) / 2;
    CHECK(std::abs(g2.g_plus - exact2) < 1e-12);
    CHECK(g2.char_poly == iv({5, -5, 1}));

    GrowthRate g3 = g_plus(3);
    CHECK(g3.g_plus == doctest::Approx(5.491).epsilon(0.0002));
    CHECK(g3.char_poly == iv({-15, 22, -9, 1}));

    // the bracket really brackets: characteristic polynomial changes sign
    CHECK(g2.lower < g2.upper);
    CHECK(g2.g_plus > 1.0);
}

TEST_CASE("fit ratio of the growth rate") {
    CHECK(g_plus_fit_ratio(2) == doctest::Approx(1.047).epsilon(0.002));
    CHECK(g_plus_fit_ratio(3) == doctest::Approx(1.092).epsilon(0.002));
    for (int m = 8; m <= 20; ++m) {
        double r = g_plus_fit_ratio(m);
        CHECK(r > 0.9);
        CHECK(r < 1.1);
    }
}

TEST_CASE("asymptotic estimates in log space") {
    // e n! against the exact vertex count at n = 9
    double est = asymptotic_estimate(AsymptoticKind::n0, 9);
    double exact = ln(n0_closed(9));
    CHECK(std::abs(std::exp(est - exact) - 1.0) < 1e-5);

    // logarithmic numbers: log-space ratio within 3 percent at n = 8
    double m0 = asymptotic_estimate(AsymptoticKind::m0, 8);
    CHECK(std::abs(m0 / ln(log_numbers(8)) - 1.0) < 0.03);

    // slow co-diagonal convergence: 9^4/8 vs 1230
    double cd = asymptotic_estimate(AsymptoticKind::codiag, 9, 2);
    double ratio = std::exp(cd - ln(codiagonal(9, 2)));
    CHECK(ratio > 0.65);
    CHECK(ratio < 1.35);

    // large-argument evaluation stays finite (n = 10000)
    CHECK(std::isfinite(asymptotic_estimate(AsymptoticKind::n0, 10000)));
    CHECK_THROWS_AS(asymptotic_estimate(AsymptoticKind::md, 3, 2), domain_error);
}

TEST_CASE("count table memoization is consistent") {
    const CountTable& t = dsc_counts();
    CHECK(t.row(6).counts == iv({1957, 4429, 3634, 1415, 280, 27, 1}));
    CHECK(t.row(3).counts == iv({16, 23, 9, 1}));
    CHECK(dsc_m_counts(2).row(6).counts == iv({625, 1000, 376}));
}
