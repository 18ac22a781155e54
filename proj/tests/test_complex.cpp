#include "dscx/complex.hpp"
#include "dscx/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

using namespace dscx;

namespace {

std::vector<Int> iv(std::initializer_list<long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

bool same_registries(const Complex& a, const Complex& b) {
    if (a.max_dim() != b.max_dim()) return false;
    for (int d = 0; d <= a.max_dim(); ++d) {
        if (a.count(d) != b.count(d)) return false;
        for (std::size_t i = 0; i < a.count(d); ++i) {
            auto va = a.vertices_of(d, i);
            auto vb = b.vertices_of(d, i);
            if (!std::equal(va.begin(), va.end(), vb.begin(), vb.end())) return false;
        }
    }
    return true;
}

// independent all-pairs oracle for small graphs
int floyd_warshall_diameter(const Complex& c) {
    int n = static_cast<int>(c.count(0));
    const int INF = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, INF));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (std::size_t e = 0; e < c.count(1); ++e) {
        auto vs = c.vertices_of(1, e);
        d[vs[0]][vs[1]] = d[vs[1]][vs[0]] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    int diam = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) diam = std::max(diam, d[i][j]);
    return diam;
}

} // namespace

TEST_CASE("primordial complex") {
    Complex c = Complex::primordial();
    CHECK(c.generation() == 0);
    CHECK(c.model() == Model::unset);
    CHECK(fvector_of(c).counts == iv({1}));
    CHECK(diameter(c) == 0);
    CHECK(c.next_vertex_id() == 1);
}

TEST_CASE("first growth step") {
    Complex k1 = grow(Complex::primordial());
    CHECK(k1.generation() == 1);
    CHECK(k1.count(0) == 2);
    CHECK(k1.count(1) == 1);
    CHECK(k1.contains(Simplex{0}));
    CHECK(k1.contains(Simplex{1}));
    CHECK(k1.contains(Simplex{0, 1}));
}

TEST_CASE("second growth step reproduces the reference labels") {
    Complex k2 = generate_dsc(2);
    CHECK(fvector_of(k2).counts == iv({5, 5, 1}));
    // edges in registry order: {v0,v1},{v0,v2},{v1,v2},{v0,v3},{v1,v4}
    std::vector<std::vector<VertexId>> edges = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}};
    REQUIRE(k2.count(1) == edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto vs = k2.vertices_of(1, i);
        CHECK(std::vector<VertexId>(vs.begin(), vs.end()) == edges[i]);
    }
    CHECK(k2.count(2) == 1);
    auto tri = k2.vertices_of(2, 0);
    CHECK(std::vector<VertexId>(tri.begin(), tri.end()) == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("f-vector goldens by enumeration") {
    CHECK(fvector_of(generate_dsc(3)).counts == iv({16, 23, 9, 1}));
    CHECK(fvector_of(generate_dsc(4)).counts == iv({65, 116, 65, 14, 1}));
    CHECK(fvector_of(generate_dsc(6)).counts ==
          iv({1957, 4429, 3634, 1415, 280, 27, 1}));
}

TEST_CASE("growth is pure and deterministic") {
    Complex k2 = generate_dsc(2);
    Complex snapshot = k2;
    Complex k3 = grow(k2);
    CHECK(k2 == snapshot);
    CHECK(k3.generation() == 3);
    Complex k3_again = grow(generate_dsc(2));
    CHECK(k3 == k3_again);
}

TEST_CASE("growth bookkeeping: one fresh vertex per input simplex") {
    Complex c = Complex::primordial();
    for (int n = 0; n < 5; ++n) {
        Complex next = grow(c);
        CHECK(next.count(0) == c.count(0) + c.total_count());
        CHECK(next.next_vertex_id() == next.count(0));
        c = next;
    }
}

TEST_CASE("face closure is exhaustive") {
    Complex c = generate_dsc(6);
    std::vector<VertexId> buf;
    for (int d = 1; d <= c.max_dim(); ++d) {
        for (std::size_t ord = 0; ord < c.count(d); ++ord) {
            auto vs = c.vertices_of(d, ord);
            unsigned full = 1u << (d + 1);
            for (unsigned mask = 1; mask < full; ++mask) {
                buf.clear();
                for (int p = 0; p <= d; ++p)
                    if (mask & (1u << p)) buf.push_back(vs[p]);
                REQUIRE(c.find(buf).has_value());
            }
        }
    }
}

TEST_CASE("pairwise intersections are common faces") {
    Complex c = generate_dsc(3);
    std::vector<std::vector<VertexId>> all;
    for (int d = 0; d <= c.max_dim(); ++d)
        for (std::size_t ord = 0; ord < c.count(d); ++ord) {
            auto vs = c.vertices_of(d, ord);
            all.emplace_back(vs.begin(), vs.end());
        }
    std::vector<VertexId> inter;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            inter.clear();
            std::set_intersection(all[i].begin(), all[i].end(), all[j].begin(), all[j].end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) REQUIRE(c.find(inter).has_value());
        }
    }
}

TEST_CASE("diameter law 2n-1") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(diameter(generate_dsc(n)) == 2 * n - 1);
    }
}

TEST_CASE("diameter matches all-pairs oracle on the generation-3 tree") {
    Complex t3 = generate_dsc_m(3, 1);
    CHECK(t3.count(0) == 8);
    CHECK(diameter(t3) == floyd_warshall_diameter(t3));
}

TEST_CASE("skeleton") {
    Complex k3 = generate_dsc(3);
    Complex g = skeleton(k3, 1);
    CHECK(g.count(0) == 16);
    CHECK(g.count(1) == 23);
    CHECK(g.max_dim() == 1);
    CHECK(same_registries(skeleton(k3, k3.max_dim()), k3));
    Complex z = skeleton(generate_dsc(2), 0);
    CHECK(z.count(0) == 5);
    CHECK(z.max_dim() == 0);
    CHECK_THROWS_AS(skeleton(k3, 4), domain_error);
    CHECK_THROWS_AS(skeleton(k3, -1), domain_error);
}

TEST_CASE("constrained growth: trees") {
    for (int n : {1, 5, 10}) {
        Complex t = generate_dsc_m(n, 1);
        auto f = fvector_of(t);
        CHECK(f.counts.size() == 2);
        CHECK(f.counts[0] == pow2(n));
        CHECK(f.counts[1] == pow2(n) - 1);
    }
    // generation 2 is the path v2-v0-v1-v3
    Complex t2 = generate_dsc_m(2, 1);
    CHECK(t2.contains(Simplex{0, 2}));
    CHECK(t2.contains(Simplex{1, 3}));
    CHECK(t2.contains(Simplex{0, 1}));
    CHECK(t2.count(1) == 3);
}

TEST_CASE("constrained growth: m=2 and m=3 f-vectors") {
    CHECK(fvector_of(generate_dsc_m(3, 2)).counts == iv({15, 20, 6}));
    CHECK(fvector_of(generate_dsc_m(4, 2)).counts == iv({50, 75, 26}));
    CHECK(fvector_of(generate_dsc_m(4, 3)).counts == iv({64, 112, 59, 10}));
}

TEST_CASE("constraint never binds when m exceeds the reached dimension") {
    Complex a = Complex::primordial();
    for (int i = 0; i < 4; ++i) a = grow_constrained(a, 9);
    Complex b = generate_dsc(4);
    CHECK(same_registries(a, b));
    CHECK(a.next_vertex_id() == b.next_vertex_id());
}

TEST_CASE("model mismatch and argument errors") {
    Complex t = generate_dsc_m(2, 1);
    CHECK_THROWS_AS(grow(t), constraint_violation);
    CHECK_THROWS_AS(grow_constrained(t, 2), constraint_violation);
    Complex k = generate_dsc(1);
    CHECK_THROWS_AS(grow_constrained(k, 1), constraint_violation);
    CHECK_THROWS_AS(grow_constrained(Complex::primordial(), 0), domain_error);
}

TEST_CASE("resource guards") {
    GrowthGuard tight;
    tight.max_generation_unconstrained = 2;
    Complex k2 = generate_dsc(2, tight);
    CHECK_THROWS_AS(grow(k2, tight), resource_error);

    GrowthGuard tiny;
    tiny.max_total_simplices = 10;
    CHECK_THROWS_AS(generate_dsc(2, tiny), resource_error);
    try {
        generate_dsc(9);
        FAIL("expected resource_error");
    } catch (const resource_error& e) {
        CHECK(e.guard == "max_generation_unconstrained");
        CHECK(e.override_hint == "--ack-resources");
    }
}

TEST_CASE("simplex validation") {
    CHECK_THROWS_AS(Simplex({3, 1}), domain_error);
    CHECK_THROWS_AS(Simplex({2, 2}), domain_error);
    CHECK(Simplex({0, 4, 7}).dim() == 2);
}
