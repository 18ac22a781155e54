#ifndef DSCX_COMPLEX_HPP
#define DSCX_COMPLEX_HPP

#include "dscx/numeric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dscx {

using VertexId = std::uint32_t;

/// Canonical simplex: strictly ascending vertex ids. Equality and hashing
/// are determined by the vertex list alone.
struct Simplex {
    std::vector<VertexId> vertices;

    Simplex() = default;
    Simplex(std::initializer_list<VertexId> vs);
    explicit Simplex(std::vector<VertexId> vs);

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Simplex&) const = default;
    std::string str() const;
};

enum class Model { unset, unconstrained, constrained };

/// Desk-scale limits for growth by explicit enumeration. Exact counting of
/// larger generations is the counting module's job.
struct GrowthGuard {
    int max_generation_unconstrained = 8;
    unsigned long max_total_simplices = 10'000'000;
};

/// A generation-stamped simplicial complex stored per dimension in creation
/// order, with one hash index per dimension for reverse lookup. Instances are
/// immutable after construction; growth returns a new value.
class Complex {
public:
    /// The primordial complex: a single vertex, generation 0, model not yet fixed.
    static Complex primordial();

    int generation() const { return generation_; }
    Model model() const { return model_; }
    /// Constraint dimension m; only meaningful for Model::constrained.
    int constraint() const { return constraint_m_; }
    VertexId next_vertex_id() const { return next_vertex_id_; }

    int max_dim() const { return static_cast<int>(dims_.size()) - 1; }
    std::size_t count(int d) const;
    std::size_t total_count() const;

    /// Vertex ids of the d-simplex with the given registry ordinal.
    std::span<const VertexId> vertices_of(int d, std::size_t ordinal) const;
    Simplex simplex_at(int d, std::size_t ordinal) const;

    /// Registry ordinal of a simplex given as an ascending vertex span, or
    /// nullopt if absent.
    std::optional<std::size_t> find(std::span<const VertexId> vertices) const;
    bool contains(const Simplex& s) const { return find(s.vertices).has_value(); }

    FVector fvector() const;

    bool operator==(const Complex& other) const;

private:
    friend Complex grow(const Complex&, const GrowthGuard&);
    friend Complex grow_constrained(const Complex&, int, const GrowthGuard&);
    friend Complex skeleton(const Complex&, int);

    struct DimRegistry {
        std::vector<VertexId> flat;   // count * (d+1) ids, insertion order
        std::vector<std::uint32_t> table; // open addressing, power-of-two size
        std::size_t count = 0;

        std::span<const VertexId> at(int d, std::size_t ordinal) const {
            return {flat.data() + ordinal * (d + 1), static_cast<std::size_t>(d + 1)};
        }
    };

    static Complex grow_step(const Complex& c, int spawn_below, Model new_model, int new_m,
                             const GrowthGuard& guard);

    void insert(std::span<const VertexId> vertices);
    void rehash(int d, std::size_t capacity_hint);

    std::vector<DimRegistry> dims_;
    int generation_ = 0;
    Model model_ = Model::unset;
    int constraint_m_ = 0;
    VertexId next_vertex_id_ = 0;
};

/// One unconstrained growth step: every simplex of the input joins a fresh
/// vertex together with all induced faces. Pure; the input is unchanged.
Complex grow(const Complex& c, const GrowthGuard& guard = {});

/// One constrained growth step: only simplices of dimension < m spawn.
Complex grow_constrained(const Complex& c, int m, const GrowthGuard& guard = {});

/// Convenience: n unconstrained steps from the primordial complex.
Complex generate_dsc(int n, const GrowthGuard& guard = {});
/// Convenience: n constrained steps from the primordial complex.
Complex generate_dsc_m(int n, int m, const GrowthGuard& guard = {});

/// Counting oracle: the f-vector by direct enumeration.
FVector fvector_of(const Complex& c);

/// Subcomplex of all simplices of dimension <= k, vertex ids preserved.
Complex skeleton(const Complex& c, int k);

/// 1-skeleton adjacency lists indexed by vertex id.
std::vector<std::vector<VertexId>> adjacency_lists(const Complex& c);

/// Graph-theoretic diameter of the 1-skeleton (breadth-first search from
/// every vertex). Throws if the graph is disconnected.
int diameter(const Complex& c);

} // namespace dscx

#endif
