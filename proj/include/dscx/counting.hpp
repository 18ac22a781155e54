#ifndef DSCX_COUNTING_HPP
#define DSCX_COUNTING_HPP

#include "dscx/numeric.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace dscx {

/// Power series with exact rational coefficients c_0..c_T; every operation
/// is exact through the truncation order.
class RationalSeries {
public:
    explicit RationalSeries(std::size_t order) : coeff_(order + 1, Rat(0)) {}

    static RationalSeries exp_x(std::size_t order);       // e^x
    static RationalSeries neg_log1mx(std::size_t order);  // -ln(1-x)
    static RationalSeries geometric(std::size_t order);   // 1/(1-x)

    std::size_t order() const { return coeff_.size() - 1; }
    const Rat& operator[](std::size_t k) const { return coeff_[k]; }
    Rat& operator[](std::size_t k) { return coeff_[k]; }

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries operator*(const RationalSeries& o) const; // truncated product
    RationalSeries pow(unsigned e) const;

private:
    std::vector<Rat> coeff_;
};

/// Memoized table of N_d(n) rows for one model (m = 0 means unconstrained).
/// Safe for concurrent readers; writes are serialized internally.
class CountTable {
public:
    explicit CountTable(int m = 0);
    const FVector& row(int n) const;
    int model_m() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

/// Shared process-wide tables (censuses and spectra re-query counts heavily).
const CountTable& dsc_counts();
const CountTable& dsc_m_counts(int m);

/// Exact f-vector of the unconstrained model at generation n, by recursion.
FVector fvector_recursive(int n);

/// Exact f-vector of the constrained model DSC(m) at generation n.
FVector fvector_constrained(int n, int m);

/// N_0(n) as the closed-form sum of n!/k!, k = 0..n.
Int n0_closed(int n);

/// Total number of simplices of the generation-n unconstrained complex.
Int total_simplices(int n);

/// N_d(n) extracted from the exponential generating function
/// e^x (-ln(1-x))^d / ((1-x) d!); returns 0 when d > n.
Int nd_by_series(int d, int n);

/// Closed co-diagonal count N_{n-p}(n) for p <= 5.
Int codiagonal(int n, int p);

/// Logarithmic numbers M(n): n! [x^n] of -e^x ln(1-x). Requires n >= 1.
Int log_numbers(int n);

/// Gap between the two largest vertex degrees: (n-2)! [x^(n-2)] of e^x/(1-x).
Int max_degree_gap(int n);

/// Dominant growth rate of the DSC(m) counting recursion.
struct GrowthRate {
    int m = 0;
    double g_plus = 0.0;
    Rat lower, upper;            // exact bisection bracket around the root
    std::vector<Int> char_poly;  // det(lambda I - A), ascending coefficients
};

/// Largest eigenvalue of the m x m recursion matrix A[d][j] = C(j+1,d) + delta_dj,
/// isolated by exact-sign bisection on the integer characteristic polynomial.
GrowthRate g_plus(int m, int precision_bits = 64);

/// g_plus(m) divided by the reference fit 2.645 (m - ln m).
double g_plus_fit_ratio(int m);

enum class AsymptoticKind {
    n0,       // e n!
    n1,       // e n! (ln n + euler_gamma)
    n_total,  // e n n!
    nd,       // e n! (ln n)^d / d!
    m0,       // e n! / n
    max_gap,  // e n! / ((n-1) n)
    md,       // e (n-d-1)!
    md_gap,   // e (n-d-2)!
    codiag,   // n^(2m) / (2^m m!), with d standing in for m
};

/// Natural log of the requested leading asymptotic (log-space to survive
/// n in the thousands).
double asymptotic_estimate(AsymptoticKind kind, long n, long d = 0);

} // namespace dscx

#endif
