#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arclat/forcing.hpp"
#include "arclat/shards.hpp"

using namespace arclat;

namespace {

bool satisfies(const std::vector<long long>& x, const Constraint& c) {
    auto y = [&](int i) -> long long { return i == 0 ? 0 : i > 0 ? x[i - 1] : -x[-i - 1]; };
    long long d = y(c.a) - y(c.b);
    switch (c.kind) {
        case Constraint::Kind::Ge: return d >= 0;
        case Constraint::Kind::Gt: return d > 0;
        case Constraint::Kind::Eq: return d == 0;
    }
    return false;
}

}  // namespace

TEST_CASE("difference constraints") {
    using K = Constraint::Kind;
    std::vector<Constraint> chain{{1, 2, K::Gt}, {2, 3, K::Gt}};
    auto w = solve_constraints(Family::A, 3, chain);
    REQUIRE(w.has_value());
    for (const auto& c : chain) CHECK(satisfies(*w, c));
    CHECK_FALSE(solve_constraints(Family::A, 2, {{1, 2, K::Gt}, {2, 1, K::Ge}}).has_value());
    CHECK(solve_constraints(Family::A, 2, {{1, 2, K::Ge}, {2, 1, K::Ge}}).has_value());
    // x1 > 0, x2 > x1 and x2 < 0.
    CHECK_FALSE(solve_constraints(Family::B, 2, {{1, 0, K::Gt}, {2, 1, K::Gt}, {0, 2, K::Gt}}).has_value());
    CHECK(solve_constraints(Family::B, 2, {{1, 0, K::Gt}, {-2, 1, K::Gt}, {0, 2, K::Gt}}).has_value());
    std::vector<Constraint> b{{1, -2, K::Gt}, {2, 1, K::Gt}, {0, 1, K::Ge}};
    auto wb = solve_constraints(Family::B, 2, b);
    REQUIRE(wb.has_value());
    for (const auto& c : b) CHECK(satisfies(*wb, c));
}

TEST_CASE("regions form the weak order") {
    for (auto type : {CoxeterType{Family::A, 3}, CoxeterType{Family::A, 4}, CoxeterType{Family::B, 2},
                      CoxeterType{Family::B, 3}}) {
        ShardModel M(type);
        auto W = weak_order_lattice(type);
        REQUIRE(M.regions().size() == W.elements.size());
        std::vector<int> r;
        for (const auto& w : W.elements) r.push_back(M.region_of(w));
        for (std::size_t x = 0; x < r.size(); ++x)
            for (std::size_t y = 0; y < r.size(); ++y)
                CHECK(W.lattice.leq(static_cast<int>(x), static_cast<int>(y)) == M.poset().leq(r[x], r[y]));
        CHECK(M.shards().size() == join_irreducibles(W.lattice).size());
    }
    CHECK_THROWS_AS(ShardModel({Family::B, 4}), ScopeExceeded);
}

TEST_CASE("type B shards are the descriptor cones of their arcs") {
    for (int n : {2, 3}) {
        ShardModel M({Family::B, n});
        const auto& arcs = all_arcs_B(n);
        std::vector<int> sh;
        for (const auto& a : arcs) {
            int s = M.lower_shards(M.region_of(arc_to_ji_B(a, n).one_line)).at(0);
            sh.push_back(s);
            CHECK(same_cone(Family::B, n, descriptor_constraints(shard_descriptor_B(a)), M.shard_constraints(s, false)));
        }
        for (std::size_t i = 0; i < arcs.size(); ++i)
            for (std::size_t k = 0; k < arcs.size(); ++k) {
                CHECK(M.shards_compatible(sh[i], sh[k]) == compatible_B(arcs[i], arcs[k]));
                bool geo = M.shard_arrow_geometric(sh[i], sh[k]);
                CHECK(geo == M.emily_check(sh[i], sh[k]));
                CHECK(geo == arrow_B(arcs[i], arcs[k]));
            }
    }
}

TEST_CASE("type A shards are the descriptor cones of their arcs") {
    for (int n : {3, 4}) {
        ShardModel M({Family::A, n});
        auto arcs = enumerate_arcs_A(n);
        std::vector<int> sh;
        for (const auto& a : arcs) {
            int s = M.lower_shards(M.region_of(arc_to_ji_A(a, n).one_line)).at(0);
            sh.push_back(s);
            CHECK(same_cone(Family::A, n, descriptor_constraints(shard_descriptor_A(a)), M.shard_constraints(s, false)));
        }
        for (std::size_t i = 0; i < arcs.size(); ++i)
            for (std::size_t k = 0; k < arcs.size(); ++k) {
                bool geo = M.shard_arrow_geometric(sh[i], sh[k]);
                CHECK(geo == M.emily_check(sh[i], sh[k]));
                CHECK(geo == arrow_A(arcs[i], arcs[k]));
                CHECK(M.shards_compatible(sh[i], sh[k]) == compatible_A(arcs[i], arcs[k]));
            }
    }
}

TEST_CASE("rank-two subarrangements") {
    auto arr = coxeter_arrangement({Family::B, 2});
    CHECK(arr.hyperplanes.size() == 4);
    int h1 = arr.index_of({1, 0}), h2 = arr.index_of({2, 1});
    auto r = rank_two(arr, h1, h2);
    CHECK(r.members.size() == 4);
    for (long long v : arr.base_point) CHECK(v > 0);
    for (const auto& h : arr.hyperplanes) CHECK(h.eval(arr.base_point) > 0);
}
