#ifndef DSCX_CHARPOLY_HPP
#define DSCX_CHARPOLY_HPP

#include "dscx/hodge.hpp"
#include "dscx/numeric.hpp"

#include <string>
#include <vector>

namespace dscx {

/// Dense integer polynomial, ascending coefficients, arbitrary precision.
class IntPolynomial {
public:
    IntPolynomial() = default; // the zero polynomial
    explicit IntPolynomial(std::vector<Int> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);
    static IntPolynomial monomial(std::size_t k, const Int& c = Int(1));

    bool is_zero() const { return coeff_.empty(); }
    long degree() const { return static_cast<long>(coeff_.size()) - 1; }
    Int coeff(std::size_t k) const { return k < coeff_.size() ? coeff_[k] : Int(0); }
    const std::vector<Int>& coeffs() const { return coeff_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& c) const;
    bool operator==(const IntPolynomial& o) const = default;

    /// p(x) shifted up by k powers: x^k p(x).
    IntPolynomial shifted(std::size_t k) const;
    /// p(-x).
    IntPolynomial reflected() const;

    Rat eval(const Rat& x) const;
    std::string str() const; // decimal coefficients, ascending, space-separated

private:
    void trim();
    std::vector<Int> coeff_;
};

struct CharpolyGuard {
    int max_coeff_n = 14;  // coefficient mode: polynomials of degree 2^n
    int max_eval_n = 22;   // exact rational point evaluation
};

/// Characteristic polynomial of the generation-n tree adjacency matrix,
/// built by the squared-branch recursion.
IntPolynomial adjacency_charpoly(int n, const CharpolyGuard& guard = {});

/// Half-tree factor: adjacency_charpoly(n) = omega(x) * omega(-x). Defined
/// for n >= 2.
IntPolynomial adjacency_half_factor(int n, const CharpolyGuard& guard = {});

struct CoeffCheckRow {
    std::string what;
    Int got;
    Int want;
    bool pass = false;
};

struct CoeffReport {
    std::vector<CoeffCheckRow> rows;
    bool all_pass() const;
    std::string summary() const;
};

/// Checks the printed low- and high-order coefficients of the adjacency
/// characteristic polynomial (n >= 4) and of its half factor (n >= 5).
CoeffReport adjacency_coeff_check(int n, const CharpolyGuard& guard = {});

/// The factor polynomials of the tree Laplacian characteristic polynomial
/// together with the auxiliary sequences driving their recursion.
struct PiBundle {
    int n = 0;
    std::vector<IntPolynomial> pi;          // index 1..n
    std::vector<IntPolynomial> theta;       // index 3..n
    std::vector<IntPolynomial> sigma;       // index 4..n
    std::vector<IntPolynomial> sigma_tilde; // index 4..n

    /// -x * prod_i pi_i(x): the full Laplacian characteristic polynomial.
    IntPolynomial full() const;
};

PiBundle laplacian_charpoly_bundle(int n, const CharpolyGuard& guard = {});

/// Checks the printed coefficients of pi_n and of the full product (n >= 3).
CoeffReport pi_coeff_check(int n, const CharpolyGuard& guard = {});

/// pi_n evaluated at an exact rational point by running the recursion on
/// values; no coefficients are materialized.
Rat evaluate_pi(int n, const Rat& x, const CharpolyGuard& guard = {});

/// Sign of prod_{i=1..n} pi_i(x), the sign of Pi_n(x)/(-x).
int pi_product_sign(int n, const Rat& x, const CharpolyGuard& guard = {});

struct Lambda2Result {
    int n = 0;
    Rat lower, upper; // exact bracket, sign verified at both ends
    double value = 0.0;
};

/// Smallest positive root of the Laplacian characteristic polynomial by
/// exact-sign bisection. Exact rational mode for n <= guard.max_eval_n;
/// above that (n <= 30) signs come from high-precision floating point
/// verified at two precisions.
Lambda2Result lambda2_exact(int n, double rel_tol = 1e-9, const CharpolyGuard& guard = {});

struct InertiaCount {
    std::size_t below = 0; // eigenvalues < x
    std::size_t at = 0;    // multiplicity of x
};

/// Exact eigenvalue counting for the generation-n tree Laplacian by
/// leaf-to-root elimination in rational arithmetic.
InertiaCount tree_laplacian_count_below(int n, const Rat& x);

struct StaircaseCheck {
    int n_tilde = 0;
    int n = 0;
    Int expected_count;  // 2^(n - n_tilde) + 1
    Int count_at_or_below;
    bool pass = false;
};

/// Exact verification that the cumulative spectral density of the
/// generation-n tree at lambda2(n_tilde) equals 2^-n_tilde + 2^-n.
StaircaseCheck staircase_identity_check(int n_tilde, int n);

/// Full Laplacian spectrum of the generation-n tree (dense matrix route).
SpectrumReport dsc1_spectrum(int n, const EigenGuard& guard = {});

/// Cross-validates the eigensolver spectrum against the factor polynomials:
/// between consecutive distinct eigenvalues the exact sign of the factor
/// product must match the parity of the eigenvalue count, and exact inertia
/// counts must agree with the eigensolver's cumulative counts.
bool dsc1_spectrum_consistency(int n, const SpectrumReport& rep);

struct AdjacencyStats {
    int n = 0;
    double lambda_max = 0.0;
    double lambda_min_pos = 0.0;
    double gauss_tail_b = 0.0; // slope of -ln rho_cum against lambda^2, top quartile
    std::size_t fit_points = 0;
};

AdjacencyStats adjacency_stats_for(int n, const EigenGuard& guard = {});

struct AdjacencyStatsSummary {
    std::vector<AdjacencyStats> per_n;
    double lambda_max_intercept = 0.0; // lambda_max/sqrt(n) extrapolated to 1/n -> 0
};

AdjacencyStatsSummary adjacency_spectrum_stats(int n_lo, int n_hi, const EigenGuard& guard = {});

struct MatchingCheck {
    int n = 0;
    std::vector<Int> matchings; // M_k, k = 0..
    bool matches_charpoly = false;
};

/// Brute-force matching enumeration of the generation-n tree (n <= 4)
/// compared against the recursion's characteristic polynomial.
MatchingCheck matching_polynomial_check(int n);

} // namespace dscx

#endif
