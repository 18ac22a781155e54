#ifndef DSCX_NUMERIC_HPP
#define DSCX_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace dscx {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow2(unsigned long e) { return pow_int(2, e); }

/// Exact quotient; throws if the division leaves a remainder.
Int exact_div(const Int& num, const Int& den);

/// Natural log of a positive big integer (log-space bridge for counts that
/// exceed double range).
double ln(const Int& v);

/// Dimension-indexed simplex counts, the f-vector.
struct FVector {
    std::vector<Int> counts;

    int max_dim() const { return static_cast<int>(counts.size()) - 1; }
    Int total() const;
    bool operator==(const FVector&) const = default;
    std::string str() const;
};

} // namespace dscx

#endif
