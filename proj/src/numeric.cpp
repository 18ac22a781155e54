#include "dscx/numeric.hpp"

#include "dscx/errors.hpp"

#include <cmath>
#include <sstream>

namespace dscx {

Int exact_div(const Int& num, const Int& den) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) {
        throw domain_error("exact_div: " + num.get_str() + " not divisible by " + den.get_str());
    }
    return q;
}

double ln(const Int& v) {
    if (v <= 0) throw domain_error("ln: argument must be positive");
    // mpz -> mantissa*2^exp without overflowing double
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

Int FVector::total() const {
    Int s = 0;
    for (const auto& c : counts) s += c;
    return s;
}

std::string FVector::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < counts.size(); ++i) {
        if (i) os << ", ";
        os << counts[i].get_str();
    }
    os << "]";
    return os.str();
}

} // namespace dscx
