#pragma once

#include <compare>
#include <string>
#include <vector>

#include "arclat/weak_order.hpp"

namespace arclat {

// An arc between ground points p < q. It passes to the right of the points in L
// and to the left of the points in R; together L and R are the ground points strictly
// between p and q. Sets are kept sorted.
struct ArcA {
    int p = 0;
    int q = 0;
    std::vector<int> L;
    std::vector<int> R;
    auto operator<=>(const ArcA&) const = default;

    bool interior(int x) const;
    // +1 if the arc passes right of x, -1 if left, 0 if x is not interior.
    int side(int x) const;
    std::string str() const;
};

// Builds an arc on the ground set, putting every interior point not listed in R into L.
ArcA make_arc_a(int p, int q, std::vector<int> R, const std::vector<int>& ground);
ArcA make_arc_a(int p, int q, std::vector<int> R, int n);

std::vector<int> range_ground(int n);       // 1..n
std::vector<int> symmetric_ground(int n);   // -n..-1, 1..n

struct DiagramA {
    std::vector<int> ground;
    std::vector<ArcA> arcs;  // sorted
    bool operator==(const DiagramA&) const = default;
    void canonicalize();
};

DiagramA delta_A(const Permutation& pi);
Permutation delta_A_inv(const DiagramA& D);

// Relative position forced on two arcs by the points they pass.
enum class Relation { None, Right, Left, Conflict };
// Right means alpha lies to the right of beta wherever both are present.
Relation relation_A(const ArcA& alpha, const ArcA& beta);
bool compatible_A(const ArcA& alpha, const ArcA& beta);
bool is_diagram_A(const std::vector<ArcA>& arcs);

Permutation arc_to_ji_A(const ArcA& alpha, const std::vector<int>& ground);
Permutation arc_to_ji_A(const ArcA& alpha, int n);

bool is_subarc_A(const ArcA& sub, const ArcA& alpha);
// Combinatorial shard arrow: a subarc sharing exactly one endpoint.
bool arrow_A(const ArcA& a1, const ArcA& a2);

struct ShardDescriptorA {
    int p = 0, q = 0;          // x_p = x_q
    std::vector<int> lower;    // x_p <= x_i
    std::vector<int> upper;    // x_p >= x_i
    auto operator<=>(const ShardDescriptorA&) const = default;
};

ShardDescriptorA shard_descriptor_A(const ArcA& alpha);

ArcA rotate_arc(const ArcA& alpha, const std::vector<int>& ground);
DiagramA rotate_half_turn(const DiagramA& D);

std::vector<ArcA> enumerate_arcs_A(const std::vector<int>& ground);
std::vector<ArcA> enumerate_arcs_A(int n);

// All sets of pairwise compatible arcs from the given list.
std::vector<std::vector<ArcA>> enumerate_compatible_sets(const std::vector<ArcA>& arcs);

}  // namespace arclat
