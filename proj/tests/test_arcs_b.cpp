#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <functional>
#include <set>

#include "arclat/arcs_b.hpp"

using namespace arclat;

namespace {

// Cliques of the compatibility graph, counted by extending in index order.
long count_cliques(const std::vector<TypeBArc>& arcs) {
    const std::size_t m = arcs.size();
    std::vector<std::vector<std::uint64_t>> adj(m, std::vector<std::uint64_t>((m + 63) / 64, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && compatible_B(arcs[i], arcs[j])) adj[i][j / 64] |= std::uint64_t{1} << (j % 64);
    long count = 0;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        ++count;
        for (std::size_t k = from; k < m; ++k) {
            bool ok = true;
            for (std::size_t c : chosen) ok = ok && (adj[c][k / 64] >> (k % 64) & 1);
            if (!ok) continue;
            chosen.push_back(k);
            rec(k + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return count;
}

}  // namespace

TEST_CASE("orbifold map roundtrips and agrees with the segment construction") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : all_signed_permutations(n)) {
            auto D = delta_B_orb(p);
            CHECK(delta_B_orb_inv(D) == p);
            CHECK(delta_B_orb_direct(p) == D);
            CHECK(is_diagram_B(D.arcs));
        }
}

TEST_CASE("worked examples") {
    auto s0 = delta_B_orb(SignedPermutation{{-1, 2}});
    REQUIRE(s0.arcs.size() == 1);
    CHECK(s0.arcs[0] == TypeBArc::orbifold(1, {}));

    auto D = delta_B_orb(SignedPermutation{{-4, 3, 5, 2, -1}});
    std::vector<TypeBArc> want{TypeBArc::ordinary(2, 5, {}), TypeBArc::orbifold(4, {2, 3}),
                               TypeBArc::long_arc(1, 2, {}, {})};
    std::sort(want.begin(), want.end());
    CHECK(D.arcs == want);
    CHECK(delta_B_orb(identity_signed(3)).arcs.empty());
}

TEST_CASE("arcs biject with join-irreducibles") {
    CHECK(enumerate_arcs_B(2).size() == 6);
    CHECK(enumerate_arcs_B(3).size() == 23);
    for (int n = 1; n <= 4; ++n) {
        std::size_t ji = 0;
        for (const auto& p : all_signed_permutations(n)) ji += is_join_irreducible_B(p);
        auto arcs = enumerate_arcs_B(n);
        CHECK(arcs.size() == ji);
        for (const auto& a : arcs) {
            auto j = arc_to_ji_B(a, n);
            CHECK(is_join_irreducible_B(j));
            CHECK(ji_to_arc_B(j) == a);
            CHECK(delta_B_orb(j).arcs == std::vector<TypeBArc>{a});
        }
    }
}

TEST_CASE("compatibility means appearing together in some diagram") {
    const int n = 3;
    std::set<std::pair<TypeBArc, TypeBArc>> together;
    for (const auto& p : all_signed_permutations(n)) {
        auto D = delta_B_orb(p);
        for (const auto& a : D.arcs)
            for (const auto& b : D.arcs)
                if (!(a == b)) together.insert({a, b});
    }
    for (const auto& a : enumerate_arcs_B(n))
        for (const auto& b : enumerate_arcs_B(n)) CHECK(compatible_B(a, b) == (together.count({a, b}) > 0));
}

TEST_CASE("noncrossing diagrams are counted by the group order") {
    CHECK(count_cliques(enumerate_arcs_B(2)) == 8);
    CHECK(count_cliques(enumerate_arcs_B(3)) == 48);
    CHECK(enumerate_diagrams_B(3).size() == 48);
}

TEST_CASE("the unfolded arcs are the type-A diagram of the unfolded permutation") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& a : enumerate_arcs_B(n)) {
            auto sigma = unfold(arc_to_ji_B(a, n));
            auto D = delta_A(sigma);
            auto u = unfold_arcs(a);
            CHECK(std::set<ArcA>(D.arcs.begin(), D.arcs.end()) == std::set<ArcA>(u.begin(), u.end()));
            CHECK(fold_phi(unfold_phi_inv(a)) == a);
        }
}

TEST_CASE("long arc validation") {
    CHECK_THROWS_AS(TypeBArc::long_arc(1, 2, {}, {1}), InvalidArc);
    CHECK_NOTHROW(TypeBArc::long_arc(1, 2, {}, {}));
    CHECK_NOTHROW(TypeBArc::long_arc(2, 1, {}, {}));
    CHECK_THROWS_AS(TypeBArc::ordinary(2, 2, {}), InvalidArc);
    CHECK_THROWS_AS(TypeBArc::orbifold(2, {3}), InvalidArc);
}

TEST_CASE("mirroring is an involution preserving compatibility") {
    auto arcs = enumerate_arcs_B(3);
    std::set<TypeBArc> all(arcs.begin(), arcs.end());
    for (const auto& a : arcs) {
        CHECK(mirror_arc(mirror_arc(a)) == a);
        CHECK(all.count(mirror_arc(a)) == 1);
        for (const auto& b : arcs) CHECK(compatible_B(a, b) == compatible_B(mirror_arc(a), mirror_arc(b)));
    }
}
