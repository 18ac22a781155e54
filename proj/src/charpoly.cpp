#include "dscx/charpoly.hpp"

#include "dscx/complex.hpp"
#include "dscx/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace dscx {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeff_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeff_.assign(coeffs.begin(), coeffs.end());
    trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t k, const Int& c) {
    IntPolynomial p;
    if (c != 0) {
        p.coeff_.assign(k + 1, Int(0));
        p.coeff_[k] = c;
    }
    return p;
}

void IntPolynomial::trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(coeff_.size(), o.coeff_.size()), Int(0));
    for (std::size_t i = 0; i < coeff_.size(); ++i) r[i] += coeff_[i];
    for (std::size_t i = 0; i < o.coeff_.size(); ++i) r[i] += o.coeff_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(coeff_.size(), o.coeff_.size()), Int(0));
    for (std::size_t i = 0; i < coeff_.size(); ++i) r[i] += coeff_[i];
    for (std::size_t i = 0; i < o.coeff_.size(); ++i) r[i] -= o.coeff_[i];
    return IntPolynomial(std::move(r));
}

namespace {

// schoolbook product into r (size adjusted by caller)
void mul_basecase(const Int* a, std::size_t na, const Int* b, std::size_t nb,
                  std::vector<Int>& r) {
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
}

constexpr std::size_t kKaratsubaCutoff = 512;

std::vector<Int> mul_vec(const Int* a, std::size_t na, const Int* b, std::size_t nb);

// Karatsuba split at half of the longer operand
std::vector<Int> mul_karatsuba(const Int* a, std::size_t na, const Int* b, std::size_t nb) {
    std::size_t half = std::max(na, nb) / 2;
    std::size_t alo = std::min(na, half), blo = std::min(nb, half);
    const Int* ahi = a + alo;
    const Int* bhi = b + blo;
    std::size_t nahi = na - alo, nbhi = nb - blo;

    std::vector<Int> z0 = mul_vec(a, alo, b, blo);
    std::vector<Int> z2 = mul_vec(ahi, nahi, bhi, nbhi);

    std::vector<Int> asum(std::max(alo, nahi), Int(0));
    for (std::size_t i = 0; i < alo; ++i) asum[i] += a[i];
    for (std::size_t i = 0; i < nahi; ++i) asum[i] += ahi[i];
    std::vector<Int> bsum(std::max(blo, nbhi), Int(0));
    for (std::size_t i = 0; i < blo; ++i) bsum[i] += b[i];
    for (std::size_t i = 0; i < nbhi; ++i) bsum[i] += bhi[i];
    std::vector<Int> z1 = mul_vec(asum.data(), asum.size(), bsum.data(), bsum.size());
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

    std::vector<Int> r(na + nb - 1, Int(0));
    for (std::size_t i = 0; i < z0.size(); ++i) r[i] += z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i) r[i + half] += z1[i];
    for (std::size_t i = 0; i < z2.size(); ++i) r[i + 2 * half] += z2[i];
    return r;
}

std::vector<Int> mul_vec(const Int* a, std::size_t na, const Int* b, std::size_t nb) {
    if (na == 0 || nb == 0) return {};
    std::vector<Int> r(na + nb - 1, Int(0));
    if (std::min(na, nb) < kKaratsubaCutoff) {
        mul_basecase(a, na, b, nb, r);
        return r;
    }
    return mul_karatsuba(a, na, b, nb);
}

} // namespace

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    return IntPolynomial(mul_vec(coeff_.data(), coeff_.size(), o.coeff_.data(), o.coeff_.size()));
}

IntPolynomial IntPolynomial::operator*(const Int& c) const {
    if (c == 0) return {};
    std::vector<Int> r = coeff_;
    for (Int& v : r) v *= c;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Int> r(coeff_.size() + k, Int(0));
    for (std::size_t i = 0; i < coeff_.size(); ++i) r[i + k] = coeff_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::reflected() const {
    std::vector<Int> r = coeff_;
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return IntPolynomial(std::move(r));
}

Rat IntPolynomial::eval(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t i = coeff_.size(); i-- > 0;) {
        acc = acc * x + Rat(coeff_[i]);
    }
    acc.canonicalize();
    return acc;
}

std::string IntPolynomial::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (i) os << ' ';
        os << coeff_[i].get_str();
    }
    if (coeff_.empty()) os << '0';
    return os.str();
}

namespace {

/// Adjacency-polynomial ladder: ups[k] plus the running product
/// prod_{i=1..k-1} ups[i] needed for both the next step and the half factor.
struct UpsLadder {
    std::vector<IntPolynomial> ups; // index 1..n
    IntPolynomial prod_to_nm1;      // prod of ups[1..n-1]

    UpsLadder(int n) {
        ups.resize(n + 1);
        ups[1] = IntPolynomial{-1, 0, 1};
        IntPolynomial x2 = IntPolynomial::monomial(2);
        IntPolynomial prod{1}; // prod of ups[1 .. k-2]
        for (int k = 2; k <= n; ++k) {
            ups[k] = ups[k - 1] * ups[k - 1] - x2 * (prod * prod);
            prod = prod * ups[k - 1];
        }
        prod_to_nm1 = prod; // after the loop: prod of ups[1..n-1]
    }
};

} // namespace

IntPolynomial adjacency_charpoly(int n, const CharpolyGuard& guard) {
    if (n < 1) throw domain_error("adjacency_charpoly: n must be >= 1");
    if (n > guard.max_coeff_n) {
        throw resource_error("adjacency_charpoly: degree 2^" + std::to_string(n) +
                                 " exceeds the coefficient-mode guard",
                             "max_coeff_n", "--ack-resources");
    }
    return UpsLadder(n).ups[n];
}

IntPolynomial adjacency_half_factor(int n, const CharpolyGuard& guard) {
    if (n < 2) throw domain_error("adjacency_half_factor: n must be >= 2");
    if (n > guard.max_coeff_n) {
        throw resource_error("adjacency_half_factor: guard exceeded", "max_coeff_n",
                             "--ack-resources");
    }
    UpsLadder l(n - 1);
    IntPolynomial prod_to_nm2 = n == 2 ? IntPolynomial{1} : l.prod_to_nm1;
    // for n-1 the ladder's running product covers 1..n-2
    return l.ups[n - 1] + prod_to_nm2.shifted(1);
}

bool CoeffReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const CoeffCheckRow& r) { return r.pass; });
}

std::string CoeffReport::summary() const {
    std::ostringstream os;
    std::size_t fails = 0;
    for (const auto& r : rows)
        if (!r.pass) ++fails;
    os << rows.size() << " coefficient checks, " << fails << " failures";
    for (const auto& r : rows) {
        if (!r.pass) {
            os << "\n  FAIL " << r.what << ": " << r.got.get_str() << " != " << r.want.get_str();
        }
    }
    return os.str();
}

namespace {

void check_row(CoeffReport& rep, const std::string& what, const Int& got, const Int& want) {
    rep.rows.push_back({what, got, want, got == want});
}

} // namespace

CoeffReport adjacency_coeff_check(int n, const CharpolyGuard& guard) {
    if (n < 4) throw domain_error("adjacency_coeff_check: n must be >= 4");
    CoeffReport rep;
    IntPolynomial u = adjacency_charpoly(n, guard);
    std::size_t deg = static_cast<std::size_t>(1) << n;
    Int lam2 = -(pow2(n) - 1);
    Int lam4 = pow2(2 * n - 1) - 7 * pow2(n - 1) + 2 * n + 3;
    std::string tag = "ups_" + std::to_string(n);
    check_row(rep, tag + "[0]", u.coeff(0), 1);
    check_row(rep, tag + "[top]", u.coeff(deg), 1);
    check_row(rep, tag + "[2]", u.coeff(2), lam2);
    check_row(rep, tag + "[top-2]", u.coeff(deg - 2), lam2);
    check_row(rep, tag + "[4]", u.coeff(4), lam4);
    check_row(rep, tag + "[top-4]", u.coeff(deg - 4), lam4);
    bool even = true;
    for (std::size_t k = 1; k <= deg; k += 2) even = even && u.coeff(k) == 0;
    check_row(rep, tag + " even", even ? Int(1) : Int(0), 1);

    if (n >= 5) {
        IntPolynomial om = adjacency_half_factor(n, guard);
        std::size_t hdeg = static_cast<std::size_t>(1) << (n - 1);
        std::string otag = "omega_" + std::to_string(n);
        Int o2 = -(pow2(n - 1) - 1);
        Int o3 = pow2(n - 1) - n;
        Int o4 = pow2(2 * n - 3) - 7 * pow2(n - 2) + 2 * n + 1;
        check_row(rep, otag + "[0]", om.coeff(0), 1);
        check_row(rep, otag + "[top]", om.coeff(hdeg), 1);
        check_row(rep, otag + "[1]", om.coeff(1), -1);
        check_row(rep, otag + "[top-1]", om.coeff(hdeg - 1), 1);
        check_row(rep, otag + "[2]", om.coeff(2), o2);
        check_row(rep, otag + "[top-2]", om.coeff(hdeg - 2), o2);
        check_row(rep, otag + "[3]", om.coeff(3), o3);
        check_row(rep, otag + "[top-3]", om.coeff(hdeg - 3), -o3);
        check_row(rep, otag + "[4]", om.coeff(4), o4);
        check_row(rep, otag + "[top-4]", om.coeff(hdeg - 4), o4);
        // the two half factors reassemble the full polynomial exactly
        bool product_ok = om * om.reflected() == u;
        check_row(rep, otag + " product", product_ok ? Int(1) : Int(0), 1);
    }
    return rep;
}

namespace {

/// The factor recursion, shared by the coefficient, exact-value, and
/// floating-point evaluation modes.
template <typename R>
struct PiSeq {
    std::vector<R> pi, theta, sigma, sigma_tilde;

    PiSeq(const R& x, int n, const R& one, const R& two) {
        int cap = std::max(n + 1, 6);
        pi.assign(cap, R());
        theta.assign(cap, R());
        sigma.assign(cap, R());
        sigma_tilde.assign(cap, R());
        pi[1] = two - x;
        if (n >= 2) pi[2] = pi[1] * pi[1] - two;
        if (n >= 3) {
            theta[3] = one - x;
            pi[3] = pi[2] * pi[2] - (theta[3] * theta[3]) * two;
        }
        if (n >= 4) {
            theta[4] = theta[3] * theta[3] - x;
            R t34 = theta[3] * theta[4];
            pi[4] = pi[3] * pi[3] - (t34 * t34) * two;
            sigma[4] = two;
            sigma_tilde[4] = one;
        }
        if (n >= 5) {
            // prod[k] = prod_{i=5..k} sigma_i sigma~_i, empty product = 1
            std::vector<R> prod(n + 1, one);
            R theta_prod = theta[3] * theta[4];
            for (int k = 5; k <= n; ++k) {
                const R& lag = prod[k - 2];
                sigma[k] = sigma[k - 1] * sigma_tilde[k - 1] - x * lag;
                sigma_tilde[k] = sigma_tilde[k - 1] * sigma_tilde[k - 1] - x * lag;
                prod[k] = prod[k - 1] * (sigma[k] * sigma_tilde[k]);
                theta[k] = theta[k - 1] * theta[k - 1] - x * prod[k];
                theta_prod = theta_prod * theta[k];
                pi[k] = pi[k - 1] * pi[k - 1] - (theta_prod * theta_prod) * two;
            }
        }
    }
};

} // namespace

IntPolynomial PiBundle::full() const {
    IntPolynomial acc{1};
    for (int i = 1; i <= n; ++i) acc = acc * pi[i];
    // multiply by -x
    return acc.shifted(1) * Int(-1);
}

PiBundle laplacian_charpoly_bundle(int n, const CharpolyGuard& guard) {
    if (n < 1) throw domain_error("laplacian_charpoly_bundle: n must be >= 1");
    if (n > guard.max_coeff_n) {
        throw resource_error("laplacian_charpoly_bundle: degree 2^" + std::to_string(n - 1) +
                                 " factor exceeds the coefficient-mode guard",
                             "max_coeff_n", "--ack-resources");
    }
    PiSeq<IntPolynomial> seq(IntPolynomial::monomial(1), n, IntPolynomial{1}, IntPolynomial{2});
    PiBundle b;
    b.n = n;
    b.pi = std::move(seq.pi);
    b.theta = std::move(seq.theta);
    b.sigma = std::move(seq.sigma);
    b.sigma_tilde = std::move(seq.sigma_tilde);
    return b;
}

CoeffReport pi_coeff_check(int n, const CharpolyGuard& guard) {
    if (n < 3) throw domain_error("pi_coeff_check: n must be >= 3");
    CoeffReport rep;
    PiBundle b = laplacian_charpoly_bundle(n, guard);
    const IntPolynomial& p = b.pi[n];
    std::size_t hdeg = static_cast<std::size_t>(1) << (n - 1);
    std::string tag = "pi_" + std::to_string(n);
    check_row(rep, tag + "[0]", p.coeff(0), 2);
    check_row(rep, tag + "[1]", p.coeff(1), -Int(n) * pow2(n - 1));
    check_row(rep, tag + "[top-1]", p.coeff(hdeg - 1), -pow2(n));
    check_row(rep, tag + "[top]", p.coeff(hdeg), 1);

    IntPolynomial full = b.full();
    std::size_t deg = static_cast<std::size_t>(1) << n;
    std::string ftag = "full_" + std::to_string(n);
    check_row(rep, ftag + "[0]", full.coeff(0), 0);
    check_row(rep, ftag + "[1]", full.coeff(1), -pow2(n));
    check_row(rep, ftag + "[2]", full.coeff(2), pow2(n - 1) * (1 + Int(n - 1) * pow2(n)));
    check_row(rep, ftag + "[top-1]", full.coeff(deg - 1), -(pow2(n + 1) - 2));
    check_row(rep, ftag + "[top]", full.coeff(deg), 1);
    return rep;
}

Rat evaluate_pi(int n, const Rat& x, const CharpolyGuard& guard) {
    if (n < 1) throw domain_error("evaluate_pi: n must be >= 1");
    if (n > guard.max_eval_n) {
        throw resource_error(
            "evaluate_pi: exact rational values at n = " + std::to_string(n) +
                " exceed the evaluation guard (value size grows as 2^n)",
            "max_eval_n", "(use the floating-point lambda2 path)");
    }
    PiSeq<Rat> seq(x, n, Rat(1), Rat(2));
    Rat v = seq.pi[n];
    v.canonicalize();
    return v;
}

int pi_product_sign(int n, const Rat& x, const CharpolyGuard& guard) {
    if (n < 1) throw domain_error("pi_product_sign: n must be >= 1");
    if (n > guard.max_eval_n) {
        throw resource_error("pi_product_sign: exact mode guard exceeded", "max_eval_n",
                             "(use the floating-point lambda2 path)");
    }
    PiSeq<Rat> seq(x, n, Rat(1), Rat(2));
    int s = 1;
    for (int i = 1; i <= n; ++i) {
        int si = sgn(seq.pi[i]);
        if (si == 0) return 0;
        s *= si;
    }
    return s;
}

namespace {

/// Sign of prod pi_i(x) from floating-point evaluation, certified by
/// agreement at two precisions.
int pi_product_sign_float(int n, const Rat& x) {
    unsigned long prec = 192 + 16ul * static_cast<unsigned long>(n);
    for (int attempt = 0; attempt < 4; ++attempt, prec *= 2) {
        int signs[2] = {0, 0};
        bool certain = true;
        for (int half = 0; half < 2 && certain; ++half) {
            unsigned long p = prec << half;
            mpf_class xf(0, p), one(1, p), two(2, p);
            mpf_set_q(xf.get_mpf_t(), x.get_mpq_t());
            PiSeq<mpf_class> seq(xf, n, one, two);
            int s = 1;
            for (int i = 1; i <= n && certain; ++i) {
                int si = sgn(seq.pi[i]);
                if (si == 0) certain = false;
                s *= si;
            }
            signs[half] = s;
        }
        if (certain && signs[0] == signs[1]) return signs[0];
    }
    throw domain_error("pi_product_sign_float: sign could not be certified");
}

} // namespace

Lambda2Result lambda2_exact(int n, double rel_tol, const CharpolyGuard& guard) {
    if (n < 2) throw domain_error("lambda2_exact: n must be >= 2");
    if (n > 30) throw resource_error("lambda2_exact: n > 30 unsupported", "max_float_n", "(none)");
    if (rel_tol <= 0 || rel_tol >= 1) throw domain_error("lambda2_exact: bad rel_tol");
    bool exact = n <= guard.max_eval_n;
    auto sign_at = [&](const Rat& x) {
        return exact ? pi_product_sign(n, x, guard) : pi_product_sign_float(n, x);
    };

    // asymptotic seed 1.77525 * 2^-n
    Rat lam_hat = Rat(7101, 4000) / Rat(pow2(n));
    lam_hat.canonicalize();
    Rat a = lam_hat * Rat(5, 6);
    Rat b = lam_hat * Rat(6, 5);
    int sa = sign_at(a), sb = sign_at(b);
    int widen = 0;
    while (sa < 0 && widen++ < 8) { // seed overshot: slide down
        b = a;
        sb = sa;
        a = a * Rat(10, 13);
        sa = sign_at(a);
    }
    widen = 0;
    while (sb > 0 && widen++ < 8) { // seed undershot: slide up
        a = b;
        sa = sb;
        b = b * Rat(13, 10);
        sb = sign_at(b);
    }
    if (!(sa > 0 && sb < 0)) {
        throw domain_error("lambda2_exact: failed to bracket the smallest positive root");
    }

    Rat tol_width = Rat(rel_tol) * a;
    for (int it = 0; it < 400 && b - a > tol_width; ++it) {
        Rat mid = (a + b) / 2;
        mid.canonicalize();
        int s = sign_at(mid);
        if (s == 0) {
            a = b = mid;
            break;
        }
        (s > 0 ? a : b) = mid;
    }
    Lambda2Result out;
    out.n = n;
    out.lower = a;
    out.upper = b;
    Rat mid = (a + b) / 2;
    out.value = mid.get_d();
    return out;
}

namespace {

struct TreeShape {
    std::vector<int> degree;
    std::vector<int> parent;      // -1 at the root
    std::vector<int> order;       // breadth-first from vertex 0
};

const TreeShape& tree_shape(int n) {
    static std::mutex mu;
    static std::map<int, TreeShape> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GrowthGuard guard;
    guard.max_total_simplices = 20'000'000;
    Complex tree = generate_dsc_m(n, 1, guard);
    std::size_t nv = tree.count(0);
    std::vector<std::vector<VertexId>> adj = adjacency_lists(tree);
    TreeShape shape;
    shape.degree.assign(nv, 0);
    shape.parent.assign(nv, -1);
    shape.order.reserve(nv);
    for (std::size_t v = 0; v < nv; ++v) shape.degree[v] = static_cast<int>(adj[v].size());
    std::vector<char> seen(nv, 0);
    shape.order.push_back(0);
    seen[0] = 1;
    for (std::size_t head = 0; head < shape.order.size(); ++head) {
        int u = shape.order[head];
        for (VertexId w : adj[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                shape.parent[w] = u;
                shape.order.push_back(static_cast<int>(w));
            }
        }
    }
    return cache.emplace(n, std::move(shape)).first->second;
}

} // namespace

InertiaCount tree_laplacian_count_below(int n, const Rat& x) {
    if (n < 1) throw domain_error("tree_laplacian_count_below: n must be >= 1");
    const TreeShape& t = tree_shape(n);
    std::size_t nv = t.order.size();
    std::vector<Rat> d(nv);
    std::vector<char> pinned(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) d[v] = Rat(t.degree[v]) - x;

    // leaf-to-root elimination; a zero pivot pins its parent at -1/2 and
    // cuts the parent from the grandparent
    for (std::size_t i = nv; i-- > 0;) {
        int v = t.order[i];
        if (pinned[v]) continue;
        int p = t.parent[v];
        if (p < 0) continue;
        if (d[v] != 0) {
            if (!pinned[p]) d[p] -= 1 / d[v];
        } else if (!pinned[p]) {
            d[p] = Rat(-1, 2);
            pinned[p] = 1;
            d[v] = 2;
        }
    }
    InertiaCount c;
    for (std::size_t v = 0; v < nv; ++v) {
        int s = sgn(d[v]);
        if (s < 0) ++c.below;
        if (s == 0) ++c.at;
    }
    return c;
}

StaircaseCheck staircase_identity_check(int n_tilde, int n) {
    if (n_tilde < 1 || n < n_tilde) {
        throw domain_error("staircase_identity_check: need 1 <= n_tilde <= n");
    }
    StaircaseCheck out;
    out.n_tilde = n_tilde;
    out.n = n;
    out.expected_count = pow2(n - n_tilde) + 1;

    if (n_tilde == 1) {
        // lambda2(1) = 2 exactly
        InertiaCount self = tree_laplacian_count_below(1, Rat(2));
        InertiaCount c = tree_laplacian_count_below(n, Rat(2));
        out.count_at_or_below = static_cast<unsigned long>(c.below + c.at);
        out.pass = self.below == 1 && self.at == 1 && out.count_at_or_below == out.expected_count;
        return out;
    }

    Lambda2Result iso = lambda2_exact(n_tilde, std::pow(2.0, -40));
    Rat a = iso.lower, b = iso.upper;

    // the bracket isolates exactly one eigenvalue of the smaller tree
    InertiaCount small_a = tree_laplacian_count_below(n_tilde, a);
    InertiaCount small_b = tree_laplacian_count_below(n_tilde, b);
    if (!(small_a.below == 1 && small_a.at == 0 && small_b.below == 2 && small_b.at == 0)) {
        out.pass = false;
        return out;
    }

    // shrink and require stable counts at three successive widths
    unsigned long target = out.expected_count.get_ui();
    bool ok = true;
    for (int stage = 0; stage < 3 && ok; ++stage) {
        InertiaCount ca = tree_laplacian_count_below(n, a);
        InertiaCount cb = tree_laplacian_count_below(n, b);
        ok = ca.below == target - 1 && ca.at == 0 && cb.below == target && cb.at == 0;
        if (stage == 2) {
            out.count_at_or_below = static_cast<unsigned long>(cb.below);
            break;
        }
        for (int it = 0; it < 10; ++it) { // one decimal order tighter
            Rat mid = (a + b) / 2;
            mid.canonicalize();
            int s = pi_product_sign(n_tilde, mid);
            if (s == 0) break;
            (s > 0 ? a : b) = mid;
        }
    }
    out.pass = ok;
    return out;
}

SpectrumReport dsc1_spectrum(int n, const EigenGuard& guard) {
    if (n < 1) throw domain_error("dsc1_spectrum: n must be >= 1");
    const TreeShape& t = tree_shape(n);
    std::size_t nv = t.order.size();
    if (nv > guard.max_dim) {
        throw resource_error("dsc1_spectrum: matrix of order " + std::to_string(nv) +
                                 " exceeds the eigensolve guard",
                             "max_eigensolve_dim", "--ack-resources");
    }
    std::vector<double> l(nv * nv, 0.0);
    for (std::size_t v = 0; v < nv; ++v) {
        l[v * nv + v] = static_cast<double>(t.degree[v]);
        int p = t.parent[v];
        if (p >= 0) {
            l[v * nv + p] = -1.0;
            l[static_cast<std::size_t>(p) * nv + v] = -1.0;
        }
    }
    SpectrumReport rep = spectrum_from_eigenvalues(eig_sym(std::move(l), nv, guard), nv);
    rep.d = 0;
    rep.n = n;
    rep.model = "dsc(1)";
    return rep;
}

bool dsc1_spectrum_consistency(int n, const SpectrumReport& rep) {
    if (n > 8) throw domain_error("dsc1_spectrum_consistency: intended for n <= 8");
    std::size_t nv = rep.size;
    unsigned long cum = 0;
    // probe each gap between consecutive distinct eigenvalues
    for (std::size_t i = 0; i + 1 <= rep.distinct.size(); ++i) {
        cum += static_cast<unsigned long>(rep.distinct[i].second);
        double left = rep.distinct[i].first;
        double right = i + 1 < rep.distinct.size() ? rep.distinct[i + 1].first : left + 1.0;
        if (right - left < 1e-6 * std::max(rep.scale, 1.0)) continue;
        double mid = 0.5 * (left + right);
        Rat x(mid);
        x.canonicalize();
        InertiaCount c = tree_laplacian_count_below(n, x);
        if (c.below != cum || c.at != 0) return false;
        int parity_sign = (nv - cum) % 2 == 0 ? -1 : 1; // sign of prod pi_i at x
        if (pi_product_sign(n, x) != parity_sign) return false;
    }
    return true;
}

AdjacencyStats adjacency_stats_for(int n, const EigenGuard& guard) {
    if (n < 1) throw domain_error("adjacency_stats_for: n must be >= 1");
    const TreeShape& t = tree_shape(n);
    std::size_t nv = t.order.size();
    if (nv > guard.max_dim) {
        throw resource_error("adjacency_stats_for: matrix too large", "max_eigensolve_dim",
                             "--ack-resources");
    }
    std::vector<double> a(nv * nv, 0.0);
    for (std::size_t v = 0; v < nv; ++v) {
        int p = t.parent[v];
        if (p >= 0) {
            a[v * nv + p] = 1.0;
            a[static_cast<std::size_t>(p) * nv + v] = 1.0;
        }
    }
    SpectrumReport rep = spectrum_from_eigenvalues(eig_sym(std::move(a), nv, guard), nv);

    AdjacencyStats st;
    st.n = n;
    st.lambda_max = rep.lambda_max;
    st.lambda_min_pos = rep.lambda2;

    // Gaussian tail: -ln rho_cum against lambda^2 over the top quartile of
    // distinct eigenvalues, where rho_cum counts from above
    std::size_t dcount = rep.distinct.size();
    std::size_t take = std::max<std::size_t>(2, dcount / 4);
    if (take > dcount) take = dcount;
    unsigned long from_above = 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t used = 0;
    for (std::size_t i = dcount; i-- > 0 && used < take;) {
        from_above += static_cast<unsigned long>(rep.distinct[i].second);
        double lambda = rep.distinct[i].first;
        if (lambda <= 0) break;
        double xx = lambda * lambda;
        double yy = -std::log(static_cast<double>(from_above) / static_cast<double>(nv));
        sx += xx;
        sy += yy;
        sxx += xx * xx;
        sxy += xx * yy;
        ++used;
    }
    st.fit_points = used;
    if (used >= 2) {
        double m = static_cast<double>(used);
        st.gauss_tail_b = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    } else {
        st.gauss_tail_b = std::numeric_limits<double>::quiet_NaN();
    }
    return st;
}

AdjacencyStatsSummary adjacency_spectrum_stats(int n_lo, int n_hi, const EigenGuard& guard) {
    if (n_lo < 1 || n_hi < n_lo) throw domain_error("adjacency_spectrum_stats: bad range");
    AdjacencyStatsSummary sum;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int n = n_lo; n <= n_hi; ++n) {
        AdjacencyStats st = adjacency_stats_for(n, guard);
        double x = 1.0 / static_cast<double>(n);
        double y = st.lambda_max / std::sqrt(static_cast<double>(n));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        sum.per_n.push_back(std::move(st));
    }
    double m = static_cast<double>(sum.per_n.size());
    double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    sum.lambda_max_intercept = (sy - slope * sx) / m;
    return sum;
}

MatchingCheck matching_polynomial_check(int n) {
    if (n < 1 || n > 4) throw domain_error("matching_polynomial_check: n must lie in [1, 4]");
    const TreeShape& t = tree_shape(n);
    std::size_t nv = t.order.size();
    std::vector<std::pair<int, int>> edges;
    for (std::size_t v = 0; v < nv; ++v) {
        if (t.parent[v] >= 0) edges.emplace_back(static_cast<int>(v), t.parent[v]);
    }
    std::size_t ne = edges.size();
    MatchingCheck out;
    out.n = n;
    out.matchings.assign(nv / 2 + 1, Int(0));
    for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
        std::uint32_t used = 0;
        bool ok = true;
        int k = 0;
        for (std::size_t e = 0; e < ne && ok; ++e) {
            if (mask & (1u << e)) {
                std::uint32_t vmask =
                    (1u << edges[e].first) | (1u << edges[e].second);
                if (used & vmask) {
                    ok = false;
                } else {
                    used |= vmask;
                    ++k;
                }
            }
        }
        if (ok) out.matchings[k] += 1;
    }
    std::vector<Int> coeffs(nv + 1, Int(0));
    for (std::size_t k = 0; k < out.matchings.size(); ++k) {
        if (nv >= 2 * k) {
            coeffs[nv - 2 * k] = (k % 2 == 0 ? out.matchings[k] : -out.matchings[k]);
        }
    }
    out.matches_charpoly = IntPolynomial(coeffs) == adjacency_charpoly(n);
    return out;
}

} // namespace dscx
