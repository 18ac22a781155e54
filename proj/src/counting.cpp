#include "dscx/counting.hpp"

#include "dscx/errors.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace dscx {

RationalSeries RationalSeries::exp_x(std::size_t order) {
    RationalSeries s(order);
    Int kfac = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) kfac *= static_cast<unsigned long>(k);
        s[k] = Rat(1) / Rat(kfac);
    }
    return s;
}

RationalSeries RationalSeries::neg_log1mx(std::size_t order) {
    RationalSeries s(order);
    for (std::size_t k = 1; k <= order; ++k) s[k] = Rat(1, static_cast<unsigned long>(k));
    return s;
}

RationalSeries RationalSeries::geometric(std::size_t order) {
    RationalSeries s(order);
    for (std::size_t k = 0; k <= order; ++k) s[k] = 1;
    return s;
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    RationalSeries r(std::min(order(), o.order()));
    for (std::size_t k = 0; k <= r.order(); ++k) r[k] = coeff_[k] + o[k];
    return r;
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    RationalSeries r(std::min(order(), o.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
        if (coeff_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= r.order(); ++j) {
            if (o[j] == 0) continue;
            r[i + j] += coeff_[i] * o[j];
        }
    }
    return r;
}

RationalSeries RationalSeries::pow(unsigned e) const {
    RationalSeries r(order());
    r[0] = 1;
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
}

namespace {

/// One step of the counting recursion. spawn_limit is the largest dimension
/// whose simplices spawn plus one (n+1 for unconstrained, m for DSC(m));
/// next_max fixes the width of the produced row.
FVector recursion_step(const FVector& row, int spawn_limit, int next_max) {
    int cur_max = row.max_dim();
    FVector next;
    next.counts.assign(next_max + 1, Int(0));
    for (int d = 0; d <= next_max; ++d) {
        Int v = d <= cur_max ? row.counts[d] : Int(0);
        int j_lo = std::max(d - 1, 0);
        int j_hi = std::min(cur_max, spawn_limit - 1);
        for (int j = j_lo; j <= j_hi; ++j) {
            v += binomial(j + 1, d) * row.counts[j];
        }
        next.counts[d] = v;
    }
    return next;
}

} // namespace

struct CountTable::Impl {
    int m = 0;
    mutable std::mutex mu;
    mutable std::vector<FVector> rows;
};

CountTable::CountTable(int m) : impl_(std::make_shared<Impl>()) {
    if (m < 0) throw domain_error("CountTable: m must be >= 0");
    impl_->m = m;
    // constrained rows carry all m+1 dimensions from the start
    FVector first;
    first.counts.assign(m == 0 ? 1 : m + 1, Int(0));
    first.counts[0] = 1;
    impl_->rows.push_back(std::move(first));
}

int CountTable::model_m() const { return impl_->m; }

const FVector& CountTable::row(int n) const {
    if (n < 0) throw domain_error("CountTable::row: n must be >= 0");
    std::lock_guard<std::mutex> lock(impl_->mu);
    while (static_cast<int>(impl_->rows.size()) <= n) {
        const FVector& last = impl_->rows.back();
        int gen = static_cast<int>(impl_->rows.size()) - 1;
        if (impl_->m == 0) {
            impl_->rows.push_back(recursion_step(last, gen + 1, gen + 1));
        } else {
            impl_->rows.push_back(recursion_step(last, impl_->m, impl_->m));
        }
    }
    return impl_->rows[n];
}

const CountTable& dsc_counts() {
    static CountTable table(0);
    return table;
}

const CountTable& dsc_m_counts(int m) {
    if (m < 1) throw domain_error("dsc_m_counts: m must be >= 1");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CountTable>> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(m);
    if (it == tables.end()) {
        it = tables.emplace(m, std::make_unique<CountTable>(m)).first;
    }
    return *it->second;
}

FVector fvector_recursive(int n) {
    if (n < 0) throw domain_error("fvector_recursive: n must be >= 0");
    return dsc_counts().row(n);
}

FVector fvector_constrained(int n, int m) {
    if (n < 0) throw domain_error("fvector_constrained: n must be >= 0");
    if (m < 1) throw domain_error("fvector_constrained: m must be >= 1");
    return dsc_m_counts(m).row(n);
}

Int n0_closed(int n) {
    if (n < 0) throw domain_error("n0_closed: n must be >= 0");
    // sum_{k=0..n} n!/k!, accumulated as falling factorials
    Int acc = 1, term = 1;
    for (int k = n - 1; k >= 0; --k) {
        term *= static_cast<unsigned long>(k + 1);
        acc += term;
    }
    return acc;
}

Int total_simplices(int n) {
    if (n < 0) throw domain_error("total_simplices: n must be >= 0");
    return n0_closed(n + 1) - n0_closed(n);
}

Int nd_by_series(int d, int n) {
    if (n < 0 || d < 0) throw domain_error("nd_by_series: arguments must be >= 0");
    if (d > n) return 0;
    std::size_t T = static_cast<std::size_t>(n);
    RationalSeries s = RationalSeries::exp_x(T) * RationalSeries::neg_log1mx(T).pow(d) *
                       RationalSeries::geometric(T);
    Rat v = s[T] * Rat(factorial(n)) / Rat(factorial(d));
    if (v.get_den() != 1) throw domain_error("nd_by_series: non-integer extraction");
    return v.get_num();
}

Int codiagonal(int n, int p) {
    if (p < 0 || p > 5) {
        throw domain_error("codiagonal: closed forms are available for 0 <= p <= 5 only");
    }
    if (n < p) throw domain_error("codiagonal: requires n >= p");
    Int nn = n;
    Int poly;
    Int den;
    switch (p) {
        case 0: return 1;
        case 1:
            poly = nn + 3;
            den = 2;
            break;
        case 2:
            poly = (nn + 1) * (3 * nn + 14);
            den = 12;
            break;
        case 3:
            poly = nn * nn * nn + 8 * nn * nn + 11 * nn - 4;
            den = 8;
            break;
        case 4:
            poly = 15 * pow_int(nn, 4) + 150 * pow_int(nn, 3) + 245 * nn * nn - 378 * nn - 248;
            den = 240;
            break;
        default:
            poly = 3 * pow_int(nn, 5) + 35 * pow_int(nn, 4) + 55 * pow_int(nn, 3) -
                   243 * nn * nn - 202 * nn + 256;
            den = 96;
            break;
    }
    Int r = exact_div(binomial(n, p) * poly, den);
    if (r < 0) throw domain_error("codiagonal: negative count");
    return r;
}

Int log_numbers(int n) {
    if (n < 1) throw domain_error("log_numbers: n must be >= 1");
    std::size_t T = static_cast<std::size_t>(n);
    RationalSeries s = RationalSeries::exp_x(T) * RationalSeries::neg_log1mx(T);
    Rat v = s[T] * Rat(factorial(n));
    if (v.get_den() != 1) throw domain_error("log_numbers: non-integer extraction");
    return v.get_num();
}

Int max_degree_gap(int n) {
    if (n < 2) throw domain_error("max_degree_gap: n must be >= 2");
    std::size_t T = static_cast<std::size_t>(n - 2);
    RationalSeries s = RationalSeries::exp_x(T) * RationalSeries::geometric(T);
    Rat v = s[T] * Rat(factorial(n - 2));
    if (v.get_den() != 1) throw domain_error("max_degree_gap: non-integer extraction");
    return v.get_num();
}

namespace {

/// det(lambda I - A) for an integer matrix, by the Faddeev-LeVerrier scheme;
/// every division is exact.
std::vector<Int> charpoly_of(const std::vector<std::vector<Int>>& a) {
    std::size_t n = a.size();
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // am = a * m
        std::vector<std::vector<Int>> am(n, std::vector<Int>(n, Int(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) am[i][j] += a[i][l] * m[l][j];
            }
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
        c[n - k] = exact_div(-tr, Int(static_cast<unsigned long>(k)));
        m = am;
        for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k];
    }
    return c;
}

int sign_at(const std::vector<Int>& poly, const Rat& x) {
    Rat acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = acc * x + Rat(poly[i]);
    }
    return sgn(acc);
}

} // namespace

GrowthRate g_plus(int m, int precision_bits) {
    if (m < 1) throw domain_error("g_plus: m must be >= 1");
    if (precision_bits < 8) precision_bits = 8;
    std::size_t dim = static_cast<std::size_t>(m);
    std::vector<std::vector<Int>> a(dim, std::vector<Int>(dim, Int(0)));
    for (std::size_t d = 0; d < dim; ++d) {
        for (std::size_t j = 0; j < dim; ++j) {
            a[d][j] = binomial(j + 1, d);
            if (d == j) a[d][j] += 1;
        }
    }
    GrowthRate out;
    out.m = m;
    out.char_poly = charpoly_of(a);

    if (m == 1) {
        out.g_plus = 2.0;
        out.lower = out.upper = Rat(2);
        return out;
    }

    // double-precision power iteration seeds the bracket; the matrix is
    // nonnegative and irreducible, so the dominant root is real and simple
    std::vector<double> ad(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) ad[i * dim + j] = a[i][j].get_d();
    std::vector<double> v(dim, 1.0), w(dim);
    double lambda = 1.0;
    for (int it = 0; it < 400; ++it) {
        double norm = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            double s = 0;
            for (std::size_t j = 0; j < dim; ++j) s += ad[i * dim + j] * v[j];
            w[i] = s;
            norm = std::max(norm, std::abs(s));
        }
        lambda = norm;
        for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / norm;
    }

    // p is positive above the largest real root and negative just below it
    Rat half(1, 2);
    Rat width(1, 1024);
    Rat est(lambda);
    Rat lo = est - width * est, hi = est + width * est;
    int tries = 0;
    while (!(sign_at(out.char_poly, lo) < 0 && sign_at(out.char_poly, hi) > 0)) {
        width *= 2;
        lo = est - width * est;
        hi = est + width * est;
        if (lo < 1) lo = 1;
        if (++tries > 64) throw domain_error("g_plus: failed to bracket the dominant root");
    }
    Rat tol = hi / pow_int(2, static_cast<unsigned long>(precision_bits));
    while (hi - lo > tol) {
        Rat mid = (lo + hi) * half;
        if (sign_at(out.char_poly, mid) < 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    out.lower = lo;
    out.upper = hi;
    Rat mid = (lo + hi) * half;
    out.g_plus = mid.get_d();
    return out;
}

double g_plus_fit_ratio(int m) {
    if (m < 2) throw domain_error("g_plus_fit_ratio: m must be >= 2");
    double g = g_plus(m).g_plus;
    return g / (2.645 * (m - std::log(static_cast<double>(m))));
}

double asymptotic_estimate(AsymptoticKind kind, long n, long d) {
    auto lfac = [](long k) { return std::lgamma(static_cast<double>(k) + 1.0); };
    double ln_n = n > 0 ? std::log(static_cast<double>(n)) : 0.0;
    switch (kind) {
        case AsymptoticKind::n0:
            if (n < 1) throw domain_error("asymptotic_estimate: n must be >= 1");
            return 1.0 + lfac(n);
        case AsymptoticKind::n1:
            if (n < 2) throw domain_error("asymptotic_estimate: n must be >= 2");
            return 1.0 + lfac(n) + std::log(ln_n + std::numbers::egamma);
        case AsymptoticKind::n_total:
            if (n < 1) throw domain_error("asymptotic_estimate: n must be >= 1");
            return 1.0 + ln_n + lfac(n);
        case AsymptoticKind::nd:
            if (n < 2 || d < 0) throw domain_error("asymptotic_estimate: need n >= 2, d >= 0");
            return 1.0 + lfac(n) + d * std::log(ln_n) - lfac(d);
        case AsymptoticKind::m0:
            if (n < 1) throw domain_error("asymptotic_estimate: n must be >= 1");
            return 1.0 + lfac(n) - ln_n;
        case AsymptoticKind::max_gap:
            if (n < 2) throw domain_error("asymptotic_estimate: n must be >= 2");
            return 1.0 + lfac(n) - std::log(static_cast<double>(n - 1)) - ln_n;
        case AsymptoticKind::md:
            if (n - d < 2) throw domain_error("asymptotic_estimate: need n - d >= 2");
            return 1.0 + lfac(n - d - 1);
        case AsymptoticKind::md_gap:
            if (n - d < 3) throw domain_error("asymptotic_estimate: need n - d >= 3");
            return 1.0 + lfac(n - d - 2);
        case AsymptoticKind::codiag:
            if (n < 1 || d < 0) throw domain_error("asymptotic_estimate: need n >= 1, m >= 0");
            return 2.0 * d * ln_n - d * std::log(2.0) - lfac(d);
    }
    throw domain_error("asymptotic_estimate: unsupported kind");
}

} // namespace dscx
