#ifndef DSCX_CENSUS_HPP
#define DSCX_CENSUS_HPP

#include "dscx/complex.hpp"
#include "dscx/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dscx {

/// Upper-degree census of the d-simplices at generation n: ascending
/// (degree, multiplicity) pairs with no empty bins.
struct DegreeCensus {
    int d = 0;
    int n = 0;
    std::string model = "dsc";
    std::vector<std::pair<long, Int>> entries;

    Int mass() const;
    Int weighted_sum() const;
    std::vector<long> distinct_degrees() const;
    long max_degree() const;
    long second_max_degree() const;
    Int multiplicity_of(long k) const;
};

/// Number of (dim(s)+1)-simplices sharing s as a face. Throws if s is absent.
long upper_degree(const Complex& c, const Simplex& s);

DegreeCensus census(const Complex& c, int d);

std::vector<long> distinct_degrees(const Complex& c, int d);

/// Mean upper degree from exact counts, (d+2) N_{d+1}(n) / N_d(n);
/// m = 0 selects the unconstrained model.
Rat mean_upper_degree(int n, int d, int m = 0);

/// Exact tail distribution: for each distinct degree k, the fraction of
/// d-simplices of degree >= k.
std::vector<std::pair<long, Rat>> cumulative_distribution(const DegreeCensus& cen);

enum class GammaMethod { endpoint, closed_form_d0, closed_form_delta, dsc1_exact };

struct GammaEstimate {
    long n = 0;
    int d = 0;
    double gamma = 0.0;
    GammaMethod method = GammaMethod::endpoint;
};

/// Endpoint exponent estimator evaluated on an explicit census.
GammaEstimate gamma_endpoint(const DegreeCensus& cen);

/// Endpoint estimator for the unconstrained model from exact counts alone
/// (largest degree, its multiplicity d+2, and the degree-0 bin come from the
/// closed identities). Valid for any n where the counts fit in log space.
GammaEstimate gamma_endpoint_dsc(long n, int d);

/// Closed-form endpoint exponent for d = 0 at generation n.
GammaEstimate gamma_closed_form_d0(long n);

/// Closed-form exponent at fixed ratio delta = d/n.
GammaEstimate gamma_closed_form_delta(long n, double delta);

/// Exact degree census of the generation-n tree (the m = 1 model).
DegreeCensus dsc1_degree_distribution(int n);

/// Distinct-degree ladder 1, 2, 3, 5, 7, 11, ... of the degree-doubling
/// recursion, 2n-1 entries.
std::vector<Int> dsc1_distinct_degree_ladder(int n);

/// Census generated by the degree-doubling recursion: fresh bins of degree 1
/// and 2 each step, old degrees mapped k -> 2k+1. These are the vertex
/// degrees of the m = 2 model.
DegreeCensus doubling_recursion_census(int n);

/// Power-law exponent of the doubling-recursion degree distribution,
/// ln(5 + sqrt 5)/ln 2.
double dsc1_gamma();

/// Closed-form 1-degree census of the m = 2 model.
DegreeCensus dsc2_one_degree_distribution(int n);

/// Closed-form 2-degree census of the m = 3 model.
DegreeCensus dsc3_two_degree_distribution(int n);

struct CheckResult {
    std::string identity;
    int n = 0;
    int d = 0;
    bool pass = true;
    std::string detail; // mismatched values, populated on failure
};

struct ConjectureReport {
    std::vector<CheckResult> rows;
    bool all_pass() const;
    std::size_t failure_count() const;
    std::string summary() const;
};

/// Checks every degree identity and conjecture against enumerated censuses
/// for generations 2..n_max. Failures become report rows, not exceptions.
ConjectureReport verify_degree_conjectures(int n_max);

} // namespace dscx

#endif
