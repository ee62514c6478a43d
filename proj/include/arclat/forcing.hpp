#pragma once

#include <set>
#include <vector>

#include "arclat/arcs_b.hpp"

namespace arclat {

bool is_subarc_B(const TypeBArc& sub, const TypeBArc& alpha);
bool is_subarc_sym(const SymArcOrPair& sub, const SymArcOrPair& A);
bool is_loose_subarc(const TypeBArc& sub, const TypeBArc& alpha);

// Shard-digraph arrows between arcs. When neither arc is an orbifold arc and they share one
// endpoint, the arc completing a1 to a2 must also be compatible with a1.
bool arrow_B(const TypeBArc& a1, const TypeBArc& a2);

inline bool forcing_B(const TypeBArc& a1, const TypeBArc& a2) { return is_subarc_B(a1, a2); }

struct ArrowEdge {
    TypeBArc source;
    TypeBArc target;
    auto operator<=>(const ArrowEdge&) const = default;
};

std::vector<ArrowEdge> arrows_B(int n);

// A congruence of the weak order on B_n, given by the arcs it contracts.
struct ArcCongruence {
    int n = 0;
    std::set<TypeBArc> contracted;
    bool operator==(const ArcCongruence&) const = default;
    bool contracts(const TypeBArc& a) const { return contracted.count(a) > 0; }
};

// Same thing for the weak order on permutations of a ground set.
struct ArcCongruenceA {
    std::vector<int> ground;
    std::set<ArcA> contracted;
    bool operator==(const ArcCongruenceA&) const = default;
};

const std::vector<TypeBArc>& all_arcs_B(int n);

bool is_up_closed(const ArcCongruence& theta);
ArcCongruence congruence_from_generators(int n, const std::vector<TypeBArc>& gens);
ArcCongruenceA congruence_from_generators_A(const std::vector<int>& ground, const std::vector<ArcA>& gens);

std::vector<TypeBArc> uncontracted_arcs(const ArcCongruence& theta);
// Noncrossing diagrams all of whose arcs come from the given list.
std::vector<DiagramB> diagrams_over(int n, const std::vector<TypeBArc>& arcs);
std::vector<SignedPermutation> quotient_elements(const ArcCongruence& theta);

// Element partition of the weak order induced by theta: each element goes to the class
// of the largest quotient element below it.
Partition element_partition(const ArcCongruence& theta, const WeakOrder& W);
FiniteLattice quotient_lattice(const ArcCongruence& theta);

ArcCongruence congruence_meet(const ArcCongruence& a, const ArcCongruence& b);
ArcCongruence congruence_join(const ArcCongruence& a, const ArcCongruence& b);
ArcCongruence identity_congruence(int n);
ArcCongruence full_congruence(int n);
// Coarsest congruence leaving alpha uncontracted.
ArcCongruence meet_irreducible_congruence(int n, const TypeBArc& alpha);

bool is_in_conA(const ArcCongruence& theta);
ArcCongruenceA lift_to_symmetric(const ArcCongruence& theta);
// A type-B arc is contracted when its unfolded arcs are.
ArcCongruence restrict_to_B(const ArcCongruenceA& theta, int n);
bool is_symmetric(const ArcCongruenceA& theta);

}  // namespace arclat
