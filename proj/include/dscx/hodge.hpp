#ifndef DSCX_HODGE_HPP
#define DSCX_HODGE_HPP

#include "dscx/complex.hpp"
#include "dscx/numeric.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dscx {

/// Oriented incidence between (d-1)- and d-simplices; orientation is fixed
/// by ascending vertex order, signs by vertex-deletion parity. Entries are
/// stored column-major, exactly d+1 per column.
struct SignedIncidence {
    int d = 0;
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    struct Entry {
        std::uint32_t row;
        std::uint32_t col;
        std::int8_t sign;
    };
    std::vector<Entry> entries;
};

SignedIncidence incidence(const Complex& c, int d);

/// Dense symmetric integer matrix, row-major.
struct IntMatrix {
    std::size_t n = 0;
    std::vector<long> a;

    explicit IntMatrix(std::size_t n = 0) : n(n), a(n * n, 0) {}
    long& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    long at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    long trace() const;
};

/// L(d) = B(d)^T B(d) + B(d+1) B(d+1)^T with missing boundaries treated as zero.
IntMatrix hodge_laplacian(const Complex& c, int d);

/// Exact check that composing consecutive boundary maps annihilates.
bool boundary_square_is_zero(const Complex& c, int d);

struct EigenGuard {
    std::size_t max_dim = 10'000;
};

/// All eigenvalues of a symmetric matrix, ascending (LAPACK dense solver).
std::vector<double> eig_sym(std::vector<double> a, std::size_t n,
                            const EigenGuard& guard = {});

struct SpectrumReport {
    int d = 0;
    int n = 0;
    std::string model = "dsc";
    std::size_t size = 0;
    std::vector<double> eigenvalues;                // ascending
    std::vector<std::pair<double, int>> distinct;   // merged under tol_deg
    int zero_count = 0;
    double lambda2 = 0.0;   // smallest eigenvalue above tol_zero
    double lambda_max = 0.0;
    double min_eigenvalue = 0.0;
    double scale = 0.0;     // max |eigenvalue|
    double tol_zero = 0.0;
    double tol_deg = 0.0;
};

SpectrumReport spectrum(const IntMatrix& m, const EigenGuard& guard = {});
SpectrumReport spectrum(const Complex& c, int d, const EigenGuard& guard = {});

/// Report assembly from a precomputed ascending eigenvalue list.
SpectrumReport spectrum_from_eigenvalues(std::vector<double> ascending, std::size_t size);

/// Staircase of the cumulative spectral density: exact fraction of
/// eigenvalues at or below each distinct eigenvalue.
std::vector<std::pair<double, Rat>> cumulative_spectral_density(const SpectrumReport& rep);

/// Multiplicity of the zero eigenvalue of the d-th Hodge Laplacian.
int betti(const Complex& c, int d, const EigenGuard& guard = {});

/// Exact rank of an incidence matrix by fraction-free elimination
/// (small complexes only; the Betti oracle).
std::size_t exact_rank(const SignedIncidence& b, std::size_t max_dim = 200);

struct MatchReport {
    int d = 0;
    std::size_t nonzero_up = 0;
    std::size_t nonzero_down = 0;
    double worst_gap = 0.0;
    bool ok = false;
};

/// Verifies that the nonzero spectra of B(d+1) B(d+1)^T and B(d+1)^T B(d+1)
/// coincide within tol (the eigenvalue matching between adjacent Hodge
/// Laplacians).
MatchReport hodge_matching_check(const Complex& c, int d, double tol,
                                 const EigenGuard& guard = {});

struct Lambda2Row {
    int n = 0;
    double lambda2_l0 = 0.0;
    double lambda1_l1 = 0.0; // m = 2 only, else NaN
    double lambda1_l2 = 0.0; // m = 2 only, else NaN
};

/// Smallest nonzero Laplacian eigenvalues per generation; m = 0 selects the
/// unconstrained model.
std::vector<Lambda2Row> lambda2_trajectory(int m, int n_lo, int n_hi,
                                           const EigenGuard& guard = {});

struct SpectralDimEstimate {
    std::vector<double> slope_ds;   // estimator (a), one value per report
    double gap_ds = 0.0;            // estimator (b) over the report sequence
    std::vector<double> gap_pairs;  // estimator (b) per successive pair
    double window_lo = 0.0;
    double window_hi = 0.0;
};

/// Two spectral-dimension estimators: (a) doubled log-log slope of the
/// cumulative density over [lambda2, window_factor * lambda2]; (b) the
/// size-scaling of lambda2 across generations.
SpectralDimEstimate spectral_dimension_estimate(const std::vector<SpectrumReport>& reports,
                                                double window_factor = 10.0);

/// Estimator (b) from raw (size, lambda2) pairs, least squares over all of them.
double spectral_dimension_from_gaps(const std::vector<std::pair<double, double>>& size_lambda2);

} // namespace dscx

#endif
