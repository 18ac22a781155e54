#include "dscx/census.hpp"

#include "dscx/counting.hpp"
#include "dscx/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace dscx {

namespace {

std::string model_string(const Complex& c) {
    if (c.model() == Model::constrained) {
        return "dsc(" + std::to_string(c.constraint()) + ")";
    }
    return "dsc";
}

} // namespace

Int DegreeCensus::mass() const {
    Int s = 0;
    for (const auto& [k, m] : entries) s += m;
    return s;
}

Int DegreeCensus::weighted_sum() const {
    Int s = 0;
    for (const auto& [k, m] : entries) s += Int(k) * m;
    return s;
}

std::vector<long> DegreeCensus::distinct_degrees() const {
    std::vector<long> ks;
    ks.reserve(entries.size());
    for (const auto& [k, m] : entries) ks.push_back(k);
    return ks;
}

long DegreeCensus::max_degree() const {
    if (entries.empty()) throw domain_error("max_degree: empty census");
    return entries.back().first;
}

long DegreeCensus::second_max_degree() const {
    if (entries.size() < 2) throw domain_error("second_max_degree: census has fewer than 2 bins");
    return entries[entries.size() - 2].first;
}

Int DegreeCensus::multiplicity_of(long k) const {
    for (const auto& [kk, m] : entries)
        if (kk == k) return m;
    return 0;
}

long upper_degree(const Complex& c, const Simplex& s) {
    auto ord = c.find(s.vertices);
    if (!ord) throw domain_error("upper_degree: simplex " + s.str() + " not in complex");
    int d = s.dim();
    long deg = 0;
    std::vector<VertexId> facet;
    for (std::size_t i = 0; i < c.count(d + 1); ++i) {
        auto vs = c.vertices_of(d + 1, i);
        for (int p = 0; p <= d + 1; ++p) {
            facet.clear();
            for (int q = 0; q <= d + 1; ++q)
                if (q != p) facet.push_back(vs[q]);
            if (std::equal(facet.begin(), facet.end(), s.vertices.begin(), s.vertices.end())) {
                ++deg;
                break;
            }
        }
    }
    return deg;
}

DegreeCensus census(const Complex& c, int d) {
    if (d < 0 || d > c.max_dim()) {
        throw domain_error("census: dimension " + std::to_string(d) + " out of range");
    }
    // one pass over the (d+1)-simplices accumulates every facet incidence
    std::vector<long> deg(c.count(d), 0);
    std::vector<VertexId> facet;
    for (std::size_t i = 0; i < c.count(d + 1); ++i) {
        auto vs = c.vertices_of(d + 1, i);
        for (int p = 0; p <= d + 1; ++p) {
            facet.clear();
            for (int q = 0; q <= d + 1; ++q)
                if (q != p) facet.push_back(vs[q]);
            auto ord = c.find(facet);
            if (!ord) throw domain_error("census: complex is not face-closed");
            ++deg[*ord];
        }
    }
    std::map<long, Int> bins;
    for (long k : deg) bins[k] += 1;
    DegreeCensus out;
    out.d = d;
    out.n = c.generation();
    out.model = model_string(c);
    out.entries.assign(bins.begin(), bins.end());
    return out;
}

std::vector<long> distinct_degrees(const Complex& c, int d) {
    return census(c, d).distinct_degrees();
}

Rat mean_upper_degree(int n, int d, int m) {
    const CountTable& t = m == 0 ? dsc_counts() : dsc_m_counts(m);
    const FVector& f = t.row(n);
    if (d < 0 || d > f.max_dim() || f.counts[d] == 0) {
        throw domain_error("mean_upper_degree: N_d(n) vanishes");
    }
    Int up = d + 1 <= f.max_dim() ? f.counts[d + 1] : Int(0);
    Rat r = Rat(Int(d + 2) * up) / Rat(f.counts[d]);
    r.canonicalize();
    return r;
}

std::vector<std::pair<long, Rat>> cumulative_distribution(const DegreeCensus& cen) {
    if (cen.entries.empty()) throw domain_error("cumulative_distribution: empty census");
    Int mass = cen.mass();
    std::vector<std::pair<long, Rat>> out(cen.entries.size());
    Int tail = 0;
    for (std::size_t i = cen.entries.size(); i-- > 0;) {
        tail += cen.entries[i].second;
        Rat p = Rat(tail) / Rat(mass);
        p.canonicalize();
        out[i] = {cen.entries[i].first, p};
    }
    return out;
}

GammaEstimate gamma_endpoint(const DegreeCensus& cen) {
    long m = cen.max_degree();
    if (m <= 1) throw domain_error("gamma_endpoint: largest degree must exceed 1");
    Int mass = cen.mass();
    Int top = cen.entries.back().second;
    Int at_least_one = mass - cen.multiplicity_of(0);
    double ln_pcum_m = ln(top) - ln(mass);
    double ln_pcum_1 = ln(at_least_one) - ln(mass);
    GammaEstimate g;
    g.n = cen.n;
    g.d = cen.d;
    g.method = GammaMethod::endpoint;
    g.gamma = 1.0 - (ln_pcum_m - ln_pcum_1) / std::log(static_cast<double>(m));
    return g;
}

GammaEstimate gamma_endpoint_dsc(long n, int d) {
    if (n - d < 2) throw domain_error("gamma_endpoint_dsc: largest degree must exceed 1");
    // the largest d-degree, its multiplicity d+2, and the size of the
    // degree-zero bin come from the shift identities
    Int m = log_numbers(static_cast<int>(n - d));
    const FVector& row_n = dsc_counts().row(static_cast<int>(n));
    Int nd = row_n.counts[d];
    Int zero_bin = 0;
    if (d >= 1) zero_bin = dsc_counts().row(static_cast<int>(n - 1)).counts[d - 1];
    GammaEstimate g;
    g.n = n;
    g.d = d;
    g.method = GammaMethod::endpoint;
    g.gamma = 1.0 - (ln(Int(d + 2)) - ln(nd - zero_bin)) / ln(m);
    return g;
}

GammaEstimate gamma_closed_form_d0(long n) {
    if (n < 2) throw domain_error("gamma_closed_form_d0: n must be >= 2");
    double big_l = 1.0 + std::lgamma(static_cast<double>(n) + 1.0); // ln(e n!)
    GammaEstimate g;
    g.n = n;
    g.d = 0;
    g.method = GammaMethod::closed_form_d0;
    g.gamma = 1.0 + big_l / (big_l - std::log(static_cast<double>(n)));
    return g;
}

GammaEstimate gamma_closed_form_delta(long n, double delta) {
    if (n < 3) throw domain_error("gamma_closed_form_delta: n must be >= 3");
    if (!(delta > 0.0 && delta < 1.0)) {
        throw domain_error("gamma_closed_form_delta: delta must lie in (0, 1)");
    }
    double ln_n = std::log(static_cast<double>(n));
    double lnln_n = std::log(ln_n);
    double num = ln_n + delta / (1.0 - delta) * (lnln_n - std::log(delta)) - 1.0;
    double den = ln_n + std::log(1.0 - delta) - 1.0;
    GammaEstimate g;
    g.n = n;
    g.d = static_cast<int>(delta * static_cast<double>(n));
    g.method = GammaMethod::closed_form_delta;
    g.gamma = 1.0 + num / den;
    return g;
}

DegreeCensus dsc1_degree_distribution(int n) {
    if (n < 1) throw domain_error("dsc1_degree_distribution: n must be >= 1");
    DegreeCensus out;
    out.d = 0;
    out.n = n;
    out.model = "dsc(1)";
    if (n == 1) {
        out.entries = {{1, Int(2)}};
        return out;
    }
    for (long k = 1; k <= n - 1; ++k) {
        out.entries.emplace_back(k, pow2(static_cast<unsigned long>(n - k)));
    }
    out.entries.emplace_back(n, Int(2));
    return out;
}

std::vector<Int> dsc1_distinct_degree_ladder(int n) {
    if (n < 1) throw domain_error("dsc1_distinct_degree_ladder: n must be >= 1");
    std::vector<Int> ks;
    ks.reserve(2 * n - 1);
    for (int i = 1; i <= 2 * n - 1; ++i) {
        if (i % 2 == 1) {
            ks.push_back(pow2(static_cast<unsigned long>((i + 1) / 2)) - 1);
        } else {
            ks.push_back(3 * pow2(static_cast<unsigned long>(i / 2 - 1)) - 1);
        }
    }
    return ks;
}

DegreeCensus doubling_recursion_census(int n) {
    if (n < 1) throw domain_error("doubling_recursion_census: n must be >= 1");
    const CountTable& t = dsc_m_counts(2);
    std::vector<std::pair<Int, Int>> cur = {{Int(1), Int(2)}};
    for (int g = 2; g <= n; ++g) {
        std::vector<std::pair<Int, Int>> next;
        next.reserve(cur.size() + 2);
        const FVector& prev = t.row(g - 1);
        next.emplace_back(Int(1), prev.counts[0]);
        next.emplace_back(Int(2), prev.counts[1]);
        for (const auto& [k, mult] : cur) next.emplace_back(2 * k + 1, mult);
        cur = std::move(next);
    }
    DegreeCensus out;
    out.d = 0;
    out.n = n;
    out.model = "dsc(2)";
    out.entries.reserve(cur.size());
    for (const auto& [k, mult] : cur) {
        out.entries.emplace_back(k.get_si(), mult);
    }
    return out;
}

double dsc1_gamma() { return std::log(5.0 + std::sqrt(5.0)) / std::log(2.0); }

DegreeCensus dsc2_one_degree_distribution(int n) {
    if (n < 2) throw domain_error("dsc2_one_degree_distribution: n must be >= 2");
    const CountTable& t = dsc_m_counts(2);
    DegreeCensus out;
    out.d = 1;
    out.n = n;
    out.model = "dsc(2)";
    out.entries.emplace_back(0, t.row(n - 1).counts[0]);
    for (int k = 1; k <= n - 1; ++k) {
        out.entries.emplace_back(k, exact_div(3 * t.row(n - k + 1).counts[1], Int(5)));
    }
    return out;
}

DegreeCensus dsc3_two_degree_distribution(int n) {
    if (n < 3) throw domain_error("dsc3_two_degree_distribution: n must be >= 3");
    const CountTable& t = dsc_m_counts(3);
    DegreeCensus out;
    out.d = 2;
    out.n = n;
    out.model = "dsc(3)";
    out.entries.emplace_back(0, t.row(n - 1).counts[1]);
    for (int k = 1; k <= n - 2; ++k) {
        out.entries.emplace_back(k, 4 * (t.row(n - k).counts[2] - t.row(n - k - 1).counts[2]));
    }
    return out;
}

bool ConjectureReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const CheckResult& r) { return r.pass; });
}

std::size_t ConjectureReport::failure_count() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const CheckResult& r) { return !r.pass; }));
}

std::string ConjectureReport::summary() const {
    std::ostringstream os;
    os << rows.size() << " checks, " << failure_count() << " failures";
    for (const auto& r : rows) {
        if (!r.pass) {
            os << "\n  FAIL " << r.identity << " (n=" << r.n << ", d=" << r.d << "): " << r.detail;
        }
    }
    return os.str();
}

namespace {

// stationary distinct-degree lists, index = co-dimension p
const std::vector<std::vector<long>> kStationaryLists = {
    {},
    {0, 1},
    {0, 1, 2, 3},
    {0, 1, 2, 3, 6, 8},
    {0, 1, 2, 3, 4, 6, 8, 11, 19, 24},
    {0, 1, 2, 3, 4, 5, 6, 8, 11, 19, 20, 24, 46, 73, 89},
    {0, 1, 2, 3, 4, 5, 6, 8, 11, 19, 20, 24, 37, 46, 73, 89, 117, 236, 350, 415},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 11, 19, 20, 24, 37, 46, 70, 73, 89, 117, 236, 312,
     350, 415, 807, 1459, 2046, 2372},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 11, 19, 20, 24, 37, 46, 70, 73, 89, 117, 135, 236,
     312, 350, 415, 807, 863, 1459, 2046, 2372, 2878, 6352, 10527, 14115, 16072},
};

std::string list_str(const std::vector<long>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "]";
    return os.str();
}

class ConjectureChecker {
public:
    explicit ConjectureChecker(int n_max) : n_max_(n_max) {
        complexes_.reserve(n_max + 1);
        complexes_.push_back(Complex::primordial());
        for (int n = 1; n <= n_max; ++n) complexes_.push_back(grow(complexes_.back()));
        censuses_.resize(n_max + 1);
        for (int n = 0; n <= n_max; ++n) {
            censuses_[n].resize(n + 1);
            for (int d = 0; d <= n; ++d) censuses_[n][d] = census(complexes_[n], d);
        }
    }

    ConjectureReport run() {
        for (int n = 2; n <= n_max_; ++n) check_generation(n);
        check_stationarity();
        return std::move(report_);
    }

private:
    const DegreeCensus& cen(int n, int d) const { return censuses_[n][d]; }

    void add(const std::string& identity, int n, int d, bool pass, const std::string& lhs = "",
             const std::string& rhs = "") {
        CheckResult r;
        r.identity = identity;
        r.n = n;
        r.d = d;
        r.pass = pass;
        if (!pass) r.detail = lhs + " != " + rhs;
        report_.rows.push_back(std::move(r));
    }

    void check_eq(const std::string& identity, int n, int d, const Int& lhs, const Int& rhs) {
        add(identity, n, d, lhs == rhs, lhs.get_str(), rhs.get_str());
    }

    void check_generation(int n) {
        const FVector& row_n = dsc_counts().row(n);
        const FVector& row_prev = dsc_counts().row(n - 1);

        for (int d = 0; d <= n; ++d) {
            const DegreeCensus& c = cen(n, d);
            check_eq("sum-rule/mass", n, d, c.mass(), row_n.counts[d]);
            Int rhs = d + 1 <= n ? Int(d + 2) * row_n.counts[d + 1] : Int(0);
            check_eq("sum-rule/handshake", n, d, c.weighted_sum(), rhs);
        }
        {
            const DegreeCensus& c0 = cen(n, 0);
            Int excess = 0;
            for (const auto& [k, m] : c0.entries)
                if (k >= 2) excess += Int(k - 1) * m;
            check_eq("sum-rule/excess", n, 0, excess, 2 * row_n.counts[1] - row_n.counts[0]);
        }

        // distinct-degree shift: K(d)(n) = 0 union K(0)(n-d)
        for (int d = 1; d <= n - 1; ++d) {
            std::vector<long> expect = cen(n - d, 0).distinct_degrees();
            expect.insert(expect.begin(), 0);
            std::vector<long> got = cen(n, d).distinct_degrees();
            add("distinct-shift", n, d, got == expect, list_str(got), list_str(expect));
        }

        // largest and second-largest degree shifts
        for (int d = 1; d <= n - 1; ++d) {
            check_eq("max-degree-shift", n, d, Int(cen(n, d).max_degree()),
                     Int(cen(n - d, 0).max_degree()));
            if (n - d >= 2) {
                check_eq("second-max-shift", n, d, Int(cen(n, d).second_max_degree()),
                         Int(cen(n - d, 0).second_max_degree()));
            }
        }

        check_eq("max-degree-log-number", n, 0, Int(cen(n, 0).max_degree()), log_numbers(n));
        check_eq("max-degree-gap", n, 0,
                 Int(cen(n, 0).max_degree() - cen(n, 0).second_max_degree()), max_degree_gap(n));

        check_eq("vertex-degree-1-bin", n, 0, cen(n, 0).multiplicity_of(1), row_prev.counts[0]);
        check_eq("vertex-degree-2-bin", n, 0, cen(n, 0).multiplicity_of(2), row_prev.counts[1]);
        for (int d = 1; d <= n - 1; ++d) {
            check_eq("degree-0-bin", n, d, cen(n, d).multiplicity_of(0), row_prev.counts[d - 1]);
        }

        {
            Int ln = static_cast<long>(n);
            check_eq("codim1-degree-0", n, n - 1, cen(n, n - 1).multiplicity_of(0),
                     exact_div((ln - 1) * (ln + 2), Int(2)));
            check_eq("codim1-degree-1", n, n - 1, cen(n, n - 1).multiplicity_of(1), ln + 1);
            if (n >= 3) {
                check_eq("codim2-degree-0", n, n - 2, cen(n, n - 2).multiplicity_of(0),
                         exact_div((ln - 2) * (ln - 1) * ln * (3 * ln + 11), Int(24)));
                check_eq("codim2-degree-1", n, n - 2, cen(n, n - 2).multiplicity_of(1),
                         exact_div(ln * (ln * ln + ln - 4), Int(2)));
                check_eq("codim2-degree-2", n, n - 2, cen(n, n - 2).multiplicity_of(2),
                         exact_div((ln - 1) * ln, Int(2)));
                check_eq("codim2-degree-3", n, n - 2, cen(n, n - 2).multiplicity_of(3), ln);
            }
        }

        for (int d = 0; d <= n - 1; ++d) {
            const DegreeCensus& c = cen(n, d);
            check_eq("top-degree-multiplicity", n, d, c.entries.back().second, Int(d + 2));
            if (n - d >= 2) {
                check_eq("second-top-multiplicity", n, d, c.entries[c.entries.size() - 2].second,
                         exact_div(Int(d + 1) * Int(d + 2), Int(2)));
            }
        }
    }

    void check_stationarity() {
        for (int p = 1; p <= std::min(8, n_max_); ++p) {
            for (int n = p + 1; n <= n_max_; ++n) {
                std::vector<long> got = cen(n, n - p).distinct_degrees();
                add("stationary-list", n, n - p, got == kStationaryLists[p], list_str(got),
                    list_str(kStationaryLists[p]));
            }
        }
    }

    int n_max_;
    std::vector<Complex> complexes_;
    std::vector<std::vector<DegreeCensus>> censuses_;
    ConjectureReport report_;
};

} // namespace

ConjectureReport verify_degree_conjectures(int n_max) {
    if (n_max < 2 || n_max > 8) {
        throw domain_error("verify_degree_conjectures: n_max must lie in [2, 8]");
    }
    return ConjectureChecker(n_max).run();
}

} // namespace dscx
