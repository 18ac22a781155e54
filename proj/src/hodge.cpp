#include "dscx/hodge.hpp"

#include "dscx/errors.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace dscx {

namespace {

std::string model_string(const Complex& c) {
    if (c.model() == Model::constrained) {
        return "dsc(" + std::to_string(c.constraint()) + ")";
    }
    return "dsc";
}

} // namespace

long IntMatrix::trace() const {
    long t = 0;
    for (std::size_t i = 0; i < n; ++i) t += at(i, i);
    return t;
}

SignedIncidence incidence(const Complex& c, int d) {
    if (d < 1 || d > c.max_dim()) {
        throw domain_error("incidence: d must lie in [1, " + std::to_string(c.max_dim()) + "]");
    }
    SignedIncidence b;
    b.d = d;
    b.n_rows = c.count(d - 1);
    b.n_cols = c.count(d);
    b.entries.reserve(b.n_cols * (d + 1));
    std::vector<VertexId> facet;
    for (std::size_t col = 0; col < b.n_cols; ++col) {
        auto vs = c.vertices_of(d, col);
        for (int p = 0; p <= d; ++p) {
            facet.clear();
            for (int q = 0; q <= d; ++q)
                if (q != p) facet.push_back(vs[q]);
            auto row = c.find(facet);
            if (!row) throw domain_error("incidence: complex is not face-closed");
            b.entries.push_back({static_cast<std::uint32_t>(*row),
                                 static_cast<std::uint32_t>(col),
                                 static_cast<std::int8_t>(p % 2 == 0 ? 1 : -1)});
        }
    }
    return b;
}

IntMatrix hodge_laplacian(const Complex& c, int d) {
    if (d < 0 || d > c.max_dim()) {
        throw domain_error("hodge_laplacian: d out of range");
    }
    IntMatrix l(c.count(d));

    if (d >= 1) {
        // down part: columns sharing a facet
        SignedIncidence b = incidence(c, d);
        std::vector<std::vector<std::pair<std::uint32_t, int>>> by_row(b.n_rows);
        for (const auto& e : b.entries) by_row[e.row].emplace_back(e.col, e.sign);
        for (const auto& incident : by_row) {
            for (std::size_t i = 0; i < incident.size(); ++i) {
                for (std::size_t j = 0; j < incident.size(); ++j) {
                    l.at(incident[i].first, incident[j].first) +=
                        incident[i].second * incident[j].second;
                }
            }
        }
    }
    if (d + 1 <= c.max_dim()) {
        // up part: facets of each (d+1)-simplex
        SignedIncidence b = incidence(c, d + 1);
        std::size_t per_col = static_cast<std::size_t>(d + 2);
        for (std::size_t col = 0; col < b.n_cols; ++col) {
            const auto* es = &b.entries[col * per_col];
            for (std::size_t i = 0; i < per_col; ++i) {
                for (std::size_t j = 0; j < per_col; ++j) {
                    l.at(es[i].row, es[j].row) += es[i].sign * es[j].sign;
                }
            }
        }
    }
    return l;
}

bool boundary_square_is_zero(const Complex& c, int d) {
    if (d < 1 || d + 1 > c.max_dim()) {
        throw domain_error("boundary_square_is_zero: need 1 <= d < max dimension");
    }
    // compose column by column; every signed count must cancel exactly
    std::vector<VertexId> facet, facet2;
    std::map<std::size_t, long> acc;
    for (std::size_t col = 0; col < c.count(d + 1); ++col) {
        acc.clear();
        auto vs = c.vertices_of(d + 1, col);
        for (int p = 0; p <= d + 1; ++p) {
            facet.clear();
            for (int q = 0; q <= d + 1; ++q)
                if (q != p) facet.push_back(vs[q]);
            int sign_outer = p % 2 == 0 ? 1 : -1;
            for (int r = 0; r <= d; ++r) {
                facet2.clear();
                for (int q = 0; q <= d; ++q)
                    if (q != r) facet2.push_back(facet[q]);
                auto row = c.find(facet2);
                if (!row) return false;
                acc[*row] += sign_outer * (r % 2 == 0 ? 1 : -1);
            }
        }
        for (const auto& [row, v] : acc)
            if (v != 0) return false;
    }
    return true;
}

std::vector<double> eig_sym(std::vector<double> a, std::size_t n, const EigenGuard& guard) {
    if (n > guard.max_dim) {
        throw resource_error("dense eigensolve of order " + std::to_string(n) +
                                 " exceeds the max_dim guard (" + std::to_string(guard.max_dim) +
                                 ")",
                             "max_eigensolve_dim", "--ack-resources");
    }
    if (n == 0) return {};
    std::vector<double> w(n);
    lapack_int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'N', 'U', static_cast<lapack_int>(n),
                                     a.data(), static_cast<lapack_int>(n), w.data());
    if (info != 0) {
        throw domain_error("eig_sym: LAPACK dsyevd failed with info " + std::to_string(info));
    }
    return w;
}

SpectrumReport spectrum_from_eigenvalues(std::vector<double> w, std::size_t n) {
    SpectrumReport rep;
    rep.size = n;
    rep.eigenvalues = std::move(w);
    if (rep.eigenvalues.empty()) return rep;
    rep.min_eigenvalue = rep.eigenvalues.front();
    rep.lambda_max = rep.eigenvalues.back();
    rep.scale = std::max(std::abs(rep.min_eigenvalue), std::abs(rep.lambda_max));
    rep.tol_zero = 1e-9 * std::max(rep.scale, 1.0);
    rep.tol_deg = 1e-8 * std::max(rep.scale, 1.0);
    rep.lambda2 = std::numeric_limits<double>::quiet_NaN();
    for (double v : rep.eigenvalues) {
        if (std::abs(v) <= rep.tol_zero) {
            ++rep.zero_count;
        } else if (v > rep.tol_zero && std::isnan(rep.lambda2)) {
            rep.lambda2 = v;
        }
    }
    // merge degeneracies for the staircase
    for (double v : rep.eigenvalues) {
        if (!rep.distinct.empty() && v - rep.distinct.back().first <= rep.tol_deg) {
            ++rep.distinct.back().second;
        } else {
            rep.distinct.emplace_back(v, 1);
        }
    }
    return rep;
}

SpectrumReport spectrum(const IntMatrix& m, const EigenGuard& guard) {
    std::vector<double> a(m.a.begin(), m.a.end());
    return spectrum_from_eigenvalues(eig_sym(std::move(a), m.n, guard), m.n);
}

SpectrumReport spectrum(const Complex& c, int d, const EigenGuard& guard) {
    SpectrumReport rep = spectrum(hodge_laplacian(c, d), guard);
    rep.d = d;
    rep.n = c.generation();
    rep.model = model_string(c);
    return rep;
}

std::vector<std::pair<double, Rat>> cumulative_spectral_density(const SpectrumReport& rep) {
    std::vector<std::pair<double, Rat>> out;
    out.reserve(rep.distinct.size());
    unsigned long below = 0;
    for (const auto& [v, mult] : rep.distinct) {
        below += static_cast<unsigned long>(mult);
        Rat g(below, static_cast<unsigned long>(rep.size));
        g.canonicalize();
        out.emplace_back(v, g);
    }
    return out;
}

int betti(const Complex& c, int d, const EigenGuard& guard) {
    return spectrum(c, d, guard).zero_count;
}

std::size_t exact_rank(const SignedIncidence& b, std::size_t max_dim) {
    if (b.n_rows > max_dim || b.n_cols > max_dim) {
        throw resource_error("exact_rank: matrix exceeds the small-complex guard",
                             "exact_rank_dim", "(none)");
    }
    std::vector<std::vector<Int>> m(b.n_rows, std::vector<Int>(b.n_cols, Int(0)));
    for (const auto& e : b.entries) m[e.row][e.col] = e.sign;

    // fraction-free Gaussian elimination (Bareiss)
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < b.n_cols && rank < b.n_rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < b.n_rows && m[pivot][col] == 0) ++pivot;
        if (pivot == b.n_rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < b.n_rows; ++i) {
            for (std::size_t j = col + 1; j < b.n_cols; ++j) {
                m[i][j] = exact_div(m[rank][col] * m[i][j] - m[i][col] * m[rank][j], prev);
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

MatchReport hodge_matching_check(const Complex& c, int d, double tol, const EigenGuard& guard) {
    if (d < 0 || d + 1 > c.max_dim()) {
        throw domain_error("hodge_matching_check: need 0 <= d < max dimension");
    }
    SignedIncidence b = incidence(c, d + 1);
    std::size_t per_col = static_cast<std::size_t>(d + 2);

    IntMatrix up(b.n_rows); // B B^T
    for (std::size_t col = 0; col < b.n_cols; ++col) {
        const auto* es = &b.entries[col * per_col];
        for (std::size_t i = 0; i < per_col; ++i)
            for (std::size_t j = 0; j < per_col; ++j)
                up.at(es[i].row, es[j].row) += es[i].sign * es[j].sign;
    }
    IntMatrix down(b.n_cols); // B^T B
    {
        std::vector<std::vector<std::pair<std::uint32_t, int>>> by_row(b.n_rows);
        for (const auto& e : b.entries) by_row[e.row].emplace_back(e.col, e.sign);
        for (const auto& incident : by_row)
            for (std::size_t i = 0; i < incident.size(); ++i)
                for (std::size_t j = 0; j < incident.size(); ++j)
                    down.at(incident[i].first, incident[j].first) +=
                        incident[i].second * incident[j].second;
    }

    SpectrumReport ru = spectrum(up, guard);
    SpectrumReport rd = spectrum(down, guard);
    auto nonzero = [](const SpectrumReport& r) {
        std::vector<double> v;
        for (double x : r.eigenvalues)
            if (x > r.tol_zero) v.push_back(x);
        return v;
    };
    std::vector<double> nu = nonzero(ru), nd = nonzero(rd);
    MatchReport rep;
    rep.d = d;
    rep.nonzero_up = nu.size();
    rep.nonzero_down = nd.size();
    if (nu.size() != nd.size()) {
        rep.ok = false;
        rep.worst_gap = std::numeric_limits<double>::infinity();
        return rep;
    }
    for (std::size_t i = 0; i < nu.size(); ++i) {
        rep.worst_gap = std::max(rep.worst_gap, std::abs(nu[i] - nd[i]));
    }
    rep.ok = rep.worst_gap <= tol;
    return rep;
}

std::vector<Lambda2Row> lambda2_trajectory(int m, int n_lo, int n_hi, const EigenGuard& guard) {
    if (n_lo < 1 || n_hi < n_lo) throw domain_error("lambda2_trajectory: bad range");
    std::vector<Lambda2Row> rows;
    Complex c = Complex::primordial();
    for (int n = 1; n <= n_hi; ++n) {
        c = m == 0 ? grow(c) : grow_constrained(c, m);
        if (n < n_lo) continue;
        Lambda2Row row;
        row.n = n;
        row.lambda2_l0 = spectrum(c, 0, guard).lambda2;
        row.lambda1_l1 = std::numeric_limits<double>::quiet_NaN();
        row.lambda1_l2 = std::numeric_limits<double>::quiet_NaN();
        if (m == 2 && c.max_dim() >= 1) {
            row.lambda1_l1 = spectrum(c, 1, guard).lambda2;
            if (c.max_dim() >= 2) row.lambda1_l2 = spectrum(c, 2, guard).lambda2;
        }
        rows.push_back(row);
    }
    return rows;
}

namespace {

double least_squares_slope(const std::vector<std::pair<double, double>>& xy) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double n = static_cast<double>(xy.size());
    for (const auto& [x, y] : xy) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

SpectralDimEstimate spectral_dimension_estimate(const std::vector<SpectrumReport>& reports,
                                                double window_factor) {
    if (reports.size() < 2) {
        throw insufficient_data("spectral_dimension_estimate: need at least 2 reports");
    }
    SpectralDimEstimate est;
    for (const SpectrumReport& rep : reports) {
        double lo = rep.lambda2;
        double hi = window_factor * rep.lambda2;
        est.window_lo = lo;
        est.window_hi = hi;
        std::vector<std::pair<double, double>> pts;
        auto stair = cumulative_spectral_density(rep);
        for (const auto& [lambda, g] : stair) {
            if (lambda >= lo * (1 - 1e-12) && lambda <= hi) {
                pts.emplace_back(std::log(lambda), std::log(g.get_d()));
            }
        }
        if (pts.size() < 3) {
            throw insufficient_data(
                "spectral_dimension_estimate: fewer than 3 distinct nonzero eigenvalues in "
                "window at n = " + std::to_string(rep.n));
        }
        est.slope_ds.push_back(2.0 * least_squares_slope(pts));
    }
    std::vector<std::pair<double, double>> size_lambda;
    for (const SpectrumReport& rep : reports) {
        size_lambda.emplace_back(static_cast<double>(rep.size), rep.lambda2);
        }
    for (std::size_t i = 1; i < size_lambda.size(); ++i) {
        double dn = std::log(size_lambda[i].first) - std::log(size_lambda[i - 1].first);
        double dl = std::log(size_lambda[i].second) - std::log(size_lambda[i - 1].second);
        est.gap_pairs.push_back(-2.0 * dn / dl);
    }
    est.gap_ds = spectral_dimension_from_gaps(size_lambda);
    return est;
}

double spectral_dimension_from_gaps(const std::vector<std::pair<double, double>>& size_lambda2) {
    if (size_lambda2.size() < 2) {
        throw insufficient_data("spectral_dimension_from_gaps: need at least 2 generations");
    }
    std::vector<std::pair<double, double>> pts;
    for (const auto& [n0, l2] : size_lambda2) pts.emplace_back(std::log(n0), std::log(l2));
    double slope = least_squares_slope(pts); // ln lambda2 vs ln N
    return -2.0 / slope;
}

} // namespace dscx
