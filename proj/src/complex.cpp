#include "dscx/complex.hpp"

#include "dscx/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace dscx {

namespace {

constexpr std::uint32_t kEmptySlot = 0xFFFFFFFFu;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t hash_span(std::span<const VertexId> vs) {
    std::uint64_t h = 0x243F6A8885A308D3ull ^ (vs.size() * 0x9E3779B97F4A7C15ull);
    for (VertexId v : vs) h = splitmix64(h ^ v);
    return h;
}

bool span_equal(std::span<const VertexId> a, std::span<const VertexId> b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

} // namespace

Simplex::Simplex(std::initializer_list<VertexId> vs) : vertices(vs) {
    if (!std::is_sorted(vertices.begin(), vertices.end()) ||
        std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
        throw domain_error("Simplex: vertex list must be strictly ascending");
    }
    if (vertices.empty()) throw domain_error("Simplex: empty vertex list");
}

Simplex::Simplex(std::vector<VertexId> vs) : vertices(std::move(vs)) {
    if (!std::is_sorted(vertices.begin(), vertices.end()) ||
        std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
        throw domain_error("Simplex: vertex list must be strictly ascending");
    }
    if (vertices.empty()) throw domain_error("Simplex: empty vertex list");
}

std::string Simplex::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (i) os << ",";
        os << "v" << vertices[i];
    }
    os << "}";
    return os.str();
}

Complex Complex::primordial() {
    Complex c;
    VertexId v0 = 0;
    c.insert(std::span<const VertexId>(&v0, 1));
    c.next_vertex_id_ = 1;
    return c;
}

std::size_t Complex::count(int d) const {
    if (d < 0 || d > max_dim()) return 0;
    return dims_[d].count;
}

std::size_t Complex::total_count() const {
    std::size_t t = 0;
    for (const auto& r : dims_) t += r.count;
    return t;
}

std::span<const VertexId> Complex::vertices_of(int d, std::size_t ordinal) const {
    if (d < 0 || d > max_dim() || ordinal >= dims_[d].count) {
        throw domain_error("vertices_of: simplex index out of range");
    }
    return dims_[d].at(d, ordinal);
}

Simplex Complex::simplex_at(int d, std::size_t ordinal) const {
    auto sp = vertices_of(d, ordinal);
    return Simplex(std::vector<VertexId>(sp.begin(), sp.end()));
}

std::optional<std::size_t> Complex::find(std::span<const VertexId> vertices) const {
    int d = static_cast<int>(vertices.size()) - 1;
    if (d < 0 || d > max_dim() || dims_[d].table.empty()) return std::nullopt;
    const DimRegistry& reg = dims_[d];
    std::size_t mask = reg.table.size() - 1;
    std::size_t slot = hash_span(vertices) & mask;
    while (true) {
        std::uint32_t ord = reg.table[slot];
        if (ord == kEmptySlot) return std::nullopt;
        if (span_equal(reg.at(d, ord), vertices)) return ord;
        slot = (slot + 1) & mask;
    }
}

void Complex::rehash(int d, std::size_t capacity_hint) {
    DimRegistry& reg = dims_[d];
    std::size_t cap = 16;
    while (cap < capacity_hint * 2) cap <<= 1;
    reg.table.assign(cap, kEmptySlot);
    std::size_t mask = cap - 1;
    for (std::size_t ord = 0; ord < reg.count; ++ord) {
        std::size_t slot = hash_span(reg.at(d, ord)) & mask;
        while (reg.table[slot] != kEmptySlot) slot = (slot + 1) & mask;
        reg.table[slot] = static_cast<std::uint32_t>(ord);
    }
}

void Complex::insert(std::span<const VertexId> vertices) {
    int d = static_cast<int>(vertices.size()) - 1;
    if (d > max_dim()) dims_.resize(d + 1);
    DimRegistry& reg = dims_[d];
    reg.flat.insert(reg.flat.end(), vertices.begin(), vertices.end());
    std::size_t ord = reg.count++;
    if (reg.table.size() < reg.count * 2) {
        rehash(d, reg.count);
        return;
    }
    std::size_t mask = reg.table.size() - 1;
    std::size_t slot = hash_span(vertices) & mask;
    while (reg.table[slot] != kEmptySlot) slot = (slot + 1) & mask;
    reg.table[slot] = static_cast<std::uint32_t>(ord);
}

bool Complex::operator==(const Complex& other) const {
    if (generation_ != other.generation_ || model_ != other.model_ ||
        constraint_m_ != other.constraint_m_ || next_vertex_id_ != other.next_vertex_id_ ||
        dims_.size() != other.dims_.size()) {
        return false;
    }
    for (size_t d = 0; d < dims_.size(); ++d) {
        if (dims_[d].count != other.dims_[d].count || dims_[d].flat != other.dims_[d].flat) {
            return false;
        }
    }
    return true;
}

FVector Complex::fvector() const {
    FVector f;
    f.counts.reserve(dims_.size());
    for (const auto& r : dims_) f.counts.emplace_back(static_cast<unsigned long>(r.count));
    return f;
}

FVector fvector_of(const Complex& c) { return c.fvector(); }

/// Shared growth step. Simplices of dimension < spawn_below spawn a fresh
/// vertex each, in descending order of dimension and ascending registry
/// ordinal within a dimension; that ordering reproduces the vertex labels
/// of the reference construction.
Complex Complex::grow_step(const Complex& c, int spawn_below, Model new_model, int new_m,
                           const GrowthGuard& guard) {
    unsigned long predicted = static_cast<unsigned long>(c.total_count());
    for (int d = 0; d < spawn_below && d <= c.max_dim(); ++d) {
        predicted += static_cast<unsigned long>(c.count(d)) << (d + 1);
    }
    if (predicted > guard.max_total_simplices) {
        throw resource_error(
            "growth step would enumerate " + std::to_string(predicted) +
                " simplices, above the max_total_simplices guard (" +
                std::to_string(guard.max_total_simplices) + ")",
            "max_total_simplices", "--ack-resources");
    }

    Complex out = c;
    out.model_ = new_model;
    out.constraint_m_ = new_m;
    out.generation_ = c.generation() + 1;

    std::vector<VertexId> buf;
    for (int d = std::min(c.max_dim(), spawn_below - 1); d >= 0; --d) {
        std::size_t n = c.count(d);
        for (std::size_t ord = 0; ord < n; ++ord) {
            auto sigma = c.vertices_of(d, ord);
            VertexId v = out.next_vertex_id_++;
            unsigned full = 1u << (d + 1);
            for (unsigned mask = 0; mask < full; ++mask) {
                buf.clear();
                for (int p = 0; p <= d; ++p) {
                    if (mask & (1u << p)) buf.push_back(sigma[p]);
                }
                buf.push_back(v); // v exceeds every existing id, order stays ascending
                out.insert(buf);
            }
        }
    }
    return out;
}

Complex grow(const Complex& c, const GrowthGuard& guard) {
    if (c.model() == Model::constrained) {
        throw constraint_violation("grow: complex is bound to the constrained model DSC(" +
                                   std::to_string(c.constraint()) + ")");
    }
    if (c.generation() + 1 > guard.max_generation_unconstrained) {
        throw resource_error(
            "unconstrained growth to generation " + std::to_string(c.generation() + 1) +
                " exceeds the max_generation_unconstrained guard (" +
                std::to_string(guard.max_generation_unconstrained) + ")",
            "max_generation_unconstrained", "--ack-resources");
    }
    return Complex::grow_step(c, c.max_dim() + 1, Model::unconstrained, 0, guard);
}

Complex grow_constrained(const Complex& c, int m, const GrowthGuard& guard) {
    if (m < 1) throw domain_error("grow_constrained: m must be >= 1");
    if (c.model() == Model::unconstrained ||
        (c.model() == Model::constrained && c.constraint() != m)) {
        throw constraint_violation("grow_constrained: complex is bound to a different model");
    }
    return Complex::grow_step(c, m, Model::constrained, m, guard);
}

Complex generate_dsc(int n, const GrowthGuard& guard) {
    if (n < 0) throw domain_error("generate_dsc: n must be >= 0");
    Complex c = Complex::primordial();
    for (int i = 0; i < n; ++i) c = grow(c, guard);
    return c;
}

Complex generate_dsc_m(int n, int m, const GrowthGuard& guard) {
    if (n < 0) throw domain_error("generate_dsc_m: n must be >= 0");
    Complex c = Complex::primordial();
    for (int i = 0; i < n; ++i) c = grow_constrained(c, m, guard);
    return c;
}

Complex skeleton(const Complex& c, int k) {
    if (k < 0 || k > c.max_dim()) {
        throw domain_error("skeleton: k out of range [0, " + std::to_string(c.max_dim()) + "]");
    }
    Complex out = c;
    out.dims_.resize(k + 1);
    return out;
}

std::vector<std::vector<VertexId>> adjacency_lists(const Complex& c) {
    std::vector<std::vector<VertexId>> adj(c.count(0));
    for (std::size_t e = 0; e < c.count(1); ++e) {
        auto vs = c.vertices_of(1, e);
        adj[vs[0]].push_back(vs[1]);
        adj[vs[1]].push_back(vs[0]);
    }
    return adj;
}

int diameter(const Complex& c) {
    std::size_t n = c.count(0);
    if (n == 0) throw domain_error("diameter: empty complex");
    if (n == 1) return 0;
    auto adj = adjacency_lists(c);
    int diam = 0;
    std::vector<int> dist(n);
    std::deque<VertexId> queue;
    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        std::size_t seen = 1;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (VertexId w : adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    diam = std::max(diam, dist[w]);
                    queue.push_back(w);
                    ++seen;
                }
            }
        }
        if (seen != n) throw domain_error("diameter: 1-skeleton is disconnected");
    }
    return diam;
}

} // namespace dscx
