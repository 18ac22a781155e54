#include "dscx/census.hpp"
#include "dscx/complex.hpp"
#include "dscx/counting.hpp"
#include "dscx/errors.hpp"
#include "dscx/hodge.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

using namespace dscx;

namespace {

const Complex& dsc_complex(int n) {
    static std::map<int, Complex> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, generate_dsc(n)).first;
    return it->second;
}

const Complex& dsc_m_complex(int n, int m) {
    static std::map<std::pair<int, int>, Complex> cache;
    auto key = std::make_pair(n, m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, generate_dsc_m(n, m)).first;
    return it->second;
}

std::vector<std::vector<long>> to_dense(const SignedIncidence& b) {
    std::vector<std::vector<long>> m(b.n_rows, std::vector<long>(b.n_cols, 0));
    for (const auto& e : b.entries) m[e.row][e.col] = e.sign;
    return m;
}

long expected_trace(const Complex& c, int d) {
    const FVector f = fvector_of(c);
    long t = 0;
    if (d >= 1) t += (d + 1) * f.counts[d].get_si();
    if (d + 1 <= f.max_dim()) t += (d + 2) * f.counts[d + 1].get_si();
    return t;
}

} // namespace

TEST_CASE("incidence matrix structure and signs") {
    SignedIncidence b = incidence(dsc_complex(1), 1);
    REQUIRE(b.entries.size() == 2);
    CHECK(b.n_rows == 2);
    CHECK(b.n_cols == 1);
    // rows {v0},{v1} carry signs -1,+1
    std::vector<int> sign_by_row(2, 0);
    for (const auto& e : b.entries) sign_by_row[e.row] = e.sign;
    CHECK(sign_by_row[0] == -1);
    CHECK(sign_by_row[1] == +1);

    // triangle column: signs alternate with the deletion index
    SignedIncidence b2 = incidence(dsc_complex(2), 2);
    REQUIRE(b2.entries.size() == 3);
    CHECK(b2.entries[0].sign == +1);
    CHECK(b2.entries[1].sign == -1);
    CHECK(b2.entries[2].sign == +1);

    CHECK_THROWS_AS(incidence(dsc_complex(2), 0), domain_error);
    CHECK_THROWS_AS(incidence(dsc_complex(2), 3), domain_error);
}

TEST_CASE("composition of boundary maps vanishes") {
    for (int d = 1; d < 4; ++d) CHECK(boundary_square_is_zero(dsc_complex(4), d));
    CHECK(boundary_square_is_zero(dsc_m_complex(4, 2), 1));
    for (int d = 1; d < 3; ++d) CHECK(boundary_square_is_zero(dsc_m_complex(4, 3), d));

    // dense-matrix oracle on the generation-3 complex
    const Complex& k3 = dsc_complex(3);
    for (int d = 1; d < k3.max_dim(); ++d) {
        auto bd = to_dense(incidence(k3, d));
        auto bd1 = to_dense(incidence(k3, d + 1));
        for (std::size_t i = 0; i < bd.size(); ++i) {
            for (std::size_t j = 0; j < bd1[0].size(); ++j) {
                long s = 0;
                for (std::size_t k = 0; k < bd[0].size(); ++k) s += bd[i][k] * bd1[k][j];
                REQUIRE(s == 0);
            }
        }
    }
}

TEST_CASE("Hodge Laplacian assembly") {
    IntMatrix l0 = hodge_laplacian(dsc_complex(1), 0);
    REQUIRE(l0.n == 2);
    CHECK(l0.at(0, 0) == 1);
    CHECK(l0.at(0, 1) == -1);
    CHECK(l0.at(1, 0) == -1);
    CHECK(l0.at(1, 1) == 1);

    // diagonal of the graph Laplacian carries the vertex degrees
    IntMatrix l = hodge_laplacian(dsc_complex(2), 0);
    std::vector<long> diag = {3, 3, 2, 1, 1};
    for (std::size_t i = 0; i < 5; ++i) CHECK(l.at(i, i) == diag[i]);

    // dense-matrix oracle on the generation-3 complex, every dimension
    const Complex& k3 = dsc_complex(3);
    for (int d = 0; d <= k3.max_dim(); ++d) {
        IntMatrix got = hodge_laplacian(k3, d);
        std::size_t nd = k3.count(d);
        std::vector<std::vector<long>> want(nd, std::vector<long>(nd, 0));
        if (d >= 1) {
            auto b = to_dense(incidence(k3, d));
            for (std::size_t i = 0; i < nd; ++i)
                for (std::size_t j = 0; j < nd; ++j)
                    for (std::size_t r = 0; r < b.size(); ++r)
                        want[i][j] += b[r][i] * b[r][j];
        }
        if (d + 1 <= k3.max_dim()) {
            auto b = to_dense(incidence(k3, d + 1));
            for (std::size_t i = 0; i < nd; ++i)
                for (std::size_t j = 0; j < nd; ++j)
                    for (std::size_t cidx = 0; cidx < b[0].size(); ++cidx)
                        want[i][j] += b[i][cidx] * b[j][cidx];
        }
        for (std::size_t i = 0; i < nd; ++i)
            for (std::size_t j = 0; j < nd; ++j) REQUIRE(got.at(i, j) == want[i][j]);
    }
}

TEST_CASE("trace identity") {
    for (int n = 1; n <= 5; ++n) {
        const Complex& c = dsc_complex(n);
        for (int d = 0; d <= c.max_dim(); ++d) {
            CHECK(hodge_laplacian(c, d).trace() == expected_trace(c, d));
        }
    }
    for (int n = 2; n <= 5; ++n) {
        const Complex& c = dsc_m_complex(n, 2);
        for (int d = 0; d <= c.max_dim(); ++d) {
            CHECK(hodge_laplacian(c, d).trace() == expected_trace(c, d));
        }
    }
}

TEST_CASE("spectrum basics") {
    SpectrumReport rep = spectrum(dsc_complex(1), 0);
    REQUIRE(rep.eigenvalues.size() == 2);
    CHECK(rep.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rep.eigenvalues[1] == doctest::Approx(2.0));
    CHECK(rep.zero_count == 1);
    CHECK(rep.lambda2 == doctest::Approx(2.0));

    for (int n = 1; n <= 5; ++n) {
        SpectrumReport r = spectrum(dsc_complex(n), 0);
        CHECK(r.zero_count == 1); // connected: exactly one zero
        CHECK(r.min_eigenvalue >= -r.tol_zero);
        double sum = 0;
        for (double v : r.eigenvalues) sum += v;
        double tol = static_cast<double>(r.size) * 1e-12 * std::max(r.scale, 1.0);
        CHECK(std::abs(sum - static_cast<double>(hodge_laplacian(dsc_complex(n), 0).trace())) <=
              tol);
    }
}

TEST_CASE("cumulative spectral density staircase") {
    auto stair = cumulative_spectral_density(spectrum(dsc_complex(1), 0));
    REQUIRE(stair.size() == 2);
    CHECK(stair[0].second == Rat(1, 2));
    CHECK(stair[1].second == Rat(1));

    auto s5 = cumulative_spectral_density(spectrum(dsc_complex(4), 2));
    CHECK(s5.back().second == Rat(1));
    for (std::size_t i = 1; i < s5.size(); ++i) CHECK(s5[i].second > s5[i - 1].second);
}

TEST_CASE("Betti numbers") {
    for (int n = 1; n <= 4; ++n) {
        const Complex& c = dsc_complex(n);
        CHECK(betti(c, 0) == 1);
        for (int d = 1; d <= c.max_dim(); ++d) CHECK(betti(c, d) == 0);
    }
    for (int n = 2; n <= 4; ++n) {
        const Complex& c = dsc_m_complex(n, 2);
        CHECK(betti(c, 0) == 1);
        CHECK(betti(c, 1) == 0);
        CHECK(betti(c, 2) == 0);
    }

    // exact-rank oracle: b_d = N_d - rank B_d - rank B_{d+1}
    const Complex& k3 = dsc_complex(3);
    FVector f = fvector_of(k3);
    for (int d = 0; d <= k3.max_dim(); ++d) {
        long rank_d = d >= 1 ? static_cast<long>(exact_rank(incidence(k3, d))) : 0;
        long rank_d1 =
            d + 1 <= k3.max_dim() ? static_cast<long>(exact_rank(incidence(k3, d + 1))) : 0;
        long expect = f.counts[d].get_si() - rank_d - rank_d1;
        CHECK(betti(k3, d) == expect);
    }
}

TEST_CASE("adjacent Hodge Laplacians share their nonzero spectra") {
    for (int d = 0; d < 3; ++d) {
        MatchReport r = hodge_matching_check(dsc_complex(3), d, 1e-8);
        CHECK(r.ok);
    }
    CHECK(hodge_matching_check(dsc_complex(2), 1, 1e-8).ok);
    for (int d = 0; d < 2; ++d) {
        CHECK(hodge_matching_check(dsc_m_complex(4, 2), d, 1e-8).ok);
    }
}

TEST_CASE("smallest nonzero eigenvalue trajectories") {
    auto rows = lambda2_trajectory(0, 2, 4);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].lambda2_l0 > rows[1].lambda2_l0);
    CHECK(rows[1].lambda2_l0 > rows[2].lambda2_l0);

    auto rows2 = lambda2_trajectory(2, 2, 5);
    for (const auto& r : rows2) {
        CHECK(std::abs(r.lambda2_l0 - r.lambda1_l1) < 1e-8);
        CHECK(std::isfinite(r.lambda1_l2));
    }
}

TEST_CASE("spectral dimension estimators") {
    // the m = 1 trees have a known spectral dimension of 2
    std::vector<std::pair<double, double>> gaps;
    std::vector<SpectrumReport> reports;
    for (int n = 7; n <= 10; ++n) {
        SpectrumReport rep = spectrum(dsc_m_complex(n, 1), 0);
        gaps.emplace_back(static_cast<double>(rep.size), rep.lambda2);
        reports.push_back(rep);
    }
    double ds = spectral_dimension_from_gaps(gaps);
    CHECK(ds == doctest::Approx(2.0).epsilon(0.02));

    SpectralDimEstimate est = spectral_dimension_estimate(reports);
    CHECK(est.gap_ds == doctest::Approx(ds));
    REQUIRE(est.gap_pairs.size() == 3);
    for (double v : est.gap_pairs) CHECK(v == doctest::Approx(2.0).epsilon(0.05));

    CHECK_THROWS_AS(spectral_dimension_estimate({spectrum(dsc_complex(1), 0)}),
                    insufficient_data);
}

TEST_CASE("eigensolve guard") {
    EigenGuard tiny;
    tiny.max_dim = 4;
    CHECK_THROWS_AS(spectrum(dsc_complex(2), 0, tiny), resource_error);
}
