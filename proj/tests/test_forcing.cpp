#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "arclat/forcing.hpp"
#include "oracles.hpp"

using namespace arclat;

namespace {

struct BModel {
    int n;
    WeakOrder W;
    oracle::Poset P;
    std::vector<TypeBArc> arcs;
    std::vector<int> ji;  // element id of each arc's join-irreducible

    explicit BModel(int n_)
        : n(n_), W(weak_order_lattice({Family::B, n_})),
          P(static_cast<int>(W.elements.size()), W.lattice.covers()), arcs(all_arcs_B(n_)) {
        for (const auto& a : arcs) ji.push_back(W.id(arc_to_ji_B(a, n).one_line));
    }

    int lower_cover(int j) const { return W.lattice.lower_covers(j).at(0); }

    std::set<TypeBArc> contracted_by(const std::vector<int>& cls) const {
        std::set<TypeBArc> out;
        for (std::size_t i = 0; i < arcs.size(); ++i)
            if (cls[ji[i]] == cls[lower_cover(ji[i])]) out.insert(arcs[i]);
        return out;
    }
};

}  // namespace

TEST_CASE("subarcs are exactly the forced join-irreducibles in B3") {
    BModel M(3);
    for (std::size_t i = 0; i < M.arcs.size(); ++i)
        for (std::size_t k = 0; k < M.arcs.size(); ++k)
            CHECK(is_subarc_B(M.arcs[i], M.arcs[k]) == forcing_oracle(M.W.lattice, M.ji[i], M.ji[k]));
}

TEST_CASE("generated congruences match principal congruences of the lattice") {
    BModel M(3);
    for (std::size_t i = 0; i < M.arcs.size(); ++i) {
        auto theta = congruence_from_generators(3, {M.arcs[i]});
        auto cls = principal_congruence(M.W.lattice, {M.ji[i], M.lower_cover(M.ji[i])});
        CHECK(theta.contracted == M.contracted_by(cls));
        CHECK(is_up_closed(theta));
        CHECK(oracle::is_congruence(M.P, element_partition(theta, M.W)));
        CHECK(quotient_elements(theta).size() == quotient_lattice(theta).size());
    }
}

TEST_CASE("every congruence of B2 is an up-closed arc set") {
    BModel M(2);
    int count = 0;
    std::set<std::set<TypeBArc>> seen;
    oracle::for_each_set_partition(8, [&](const std::vector<int>& cls) {
        if (!oracle::is_congruence(M.P, cls)) return;
        ++count;
        auto contracted = M.contracted_by(cls);
        seen.insert(contracted);
        ArcCongruence theta{2, contracted};
        CHECK(is_up_closed(theta));
        CHECK(oracle::normalized(element_partition(theta, M.W)) == oracle::normalized(cls));
    });
    CHECK(static_cast<int>(seen.size()) == count);
}

TEST_CASE("arrow closure is the subarc order") {
    for (int n = 2; n <= 4; ++n) {
        const auto& arcs = all_arcs_B(n);
        const std::size_t m = arcs.size();
        std::vector<std::vector<char>> R(m, std::vector<char>(m, 0));
        for (std::size_t i = 0; i < m; ++i) {
            R[i][i] = 1;
            for (std::size_t j = 0; j < m; ++j) R[i][j] |= arrow_B(arcs[i], arcs[j]);
        }
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    if (R[i][k] && R[k][j]) R[i][j] = 1;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) CHECK(static_cast<bool>(R[i][j]) == is_subarc_B(arcs[i], arcs[j]));
    }
}

TEST_CASE("meet and join of congruences") {
    BModel M(3);
    auto a = congruence_from_generators(3, {M.arcs[0]});
    auto b = congruence_from_generators(3, {M.arcs[5]});
    auto pa = element_partition(a, M.W), pb = element_partition(b, M.W);
    CHECK(oracle::normalized(element_partition(congruence_join(a, b), M.W)) ==
          oracle::normalized(arclat::congruence_join(M.W.lattice, pa, pb)));
    CHECK(oracle::normalized(element_partition(congruence_meet(a, b), M.W)) ==
          oracle::normalized(arclat::congruence_meet(pa, pb)));
    CHECK(quotient_elements(identity_congruence(3)).size() == 48);
    CHECK(quotient_elements(full_congruence(3)).size() == 1);
}

TEST_CASE("meet-irreducible congruences leave only the subarcs uncontracted") {
    const int n = 3;
    const auto& arcs = all_arcs_B(n);
    for (const auto& alpha : arcs) {
        auto m = meet_irreducible_congruence(n, alpha);
        CHECK_FALSE(m.contracts(alpha));
        for (const auto& b : arcs) CHECK(m.contracts(b) == !is_subarc_B(b, alpha));
        // Coarsest: every single-generator congruence avoiding alpha lies inside it.
        for (const auto& g : arcs) {
            auto t = congruence_from_generators(n, {g});
            if (t.contracts(alpha)) continue;
            for (const auto& c : t.contracted) CHECK(m.contracts(c));
        }
    }
}

TEST_CASE("restrictions of symmetric congruences on the symmetric group of rank 4") {
    BModel M(2);
    auto ground = symmetric_ground(2);
    auto S = weak_order_lattice_on(ground);
    std::vector<int> embed;  // B2 element -> element of the permutations of +-1, +-2
    for (const auto& w : M.W.elements) embed.push_back(S.id(unfold(SignedPermutation{w}).one_line));

    std::set<std::vector<int>> restrictions;
    auto arcsA = enumerate_arcs_A(ground);
    const std::size_t m = arcsA.size();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<std::pair<int, int>> pairs;
        std::set<ArcA> gens;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) gens.insert(arcsA[i]);
        bool symmetric = true;
        for (const auto& a : gens) symmetric = symmetric && gens.count(antipode(a));
        if (!symmetric) continue;
        for (const auto& a : gens) {
            int j = S.id(arc_to_ji_A(a, ground).one_line);
            pairs.push_back({j, S.lattice.lower_covers(j).at(0)});
        }
        auto cls = congruence_generated(S.lattice, pairs);
        std::vector<int> r;
        for (int e : embed) r.push_back(cls[e]);
        restrictions.insert(oracle::normalized(r));
    }

    int in_conA = 0;
    oracle::for_each_set_partition(8, [&](const std::vector<int>& cls) {
        if (!oracle::is_congruence(M.P, cls)) return;
        ArcCongruence theta{2, M.contracted_by(cls)};
        bool expected = restrictions.count(oracle::normalized(cls)) > 0;
        CHECK(is_in_conA(theta) == expected);
        if (expected) {
            ++in_conA;
            auto lift = lift_to_symmetric(theta);
            CHECK(is_symmetric(lift));
            CHECK(restrict_to_B(lift, 2) == theta);
        } else {
            CHECK_THROWS_AS(lift_to_symmetric(theta), NotInConA);
        }
    });
    CHECK(in_conA == static_cast<int>(restrictions.size()));
}

TEST_CASE("loose subarcs contain subarcs") {
    for (const auto& a : all_arcs_B(3))
        for (const auto& b : all_arcs_B(3))
            if (is_subarc_B(a, b)) CHECK(is_loose_subarc(a, b));
}
