#pragma once

#include <compare>
#include <string>
#include <vector>

#include "arclat/arcs_a.hpp"

namespace arclat {

enum class ArcKind { Ordinary, Orbifold, Long };

// A type-B arc in the orbifold model.
//   Ordinary: bottom p < top q, L and R partition the points strictly between.
//   Orbifold: p = 0 (the orbifold point), top q, L and R partition 1..q-1.
//   Long:     p = left endpoint, q = right endpoint. R holds the points right of the
//             right piece, L the points left of the left piece.
struct TypeBArc {
    ArcKind kind = ArcKind::Ordinary;
    int p = 0;
    int q = 0;
    std::vector<int> L;
    std::vector<int> R;
    auto operator<=>(const TypeBArc&) const = default;

    static TypeBArc ordinary(int p, int q, std::vector<int> R);
    static TypeBArc orbifold(int q, std::vector<int> R);
    // Throws InvalidArc unless validate_long_arc accepts the data.
    static TypeBArc long_arc(int left, int right, std::vector<int> L, std::vector<int> R);

    bool is_ordinary() const { return kind == ArcKind::Ordinary; }
    bool is_orbifold() const { return kind == ArcKind::Orbifold; }
    bool is_long() const { return kind == ArcKind::Long; }
    int left() const { return p; }
    int right() const { return q; }
    // Points strictly below both endpoints lying between the two pieces of a long arc.
    std::vector<int> between() const;
    std::string str() const;
};

struct SymArcOrPair {
    enum class Kind { Symmetric, NonOverlapping, Overlapping };
    Kind kind;
    // Symmetric: the arc itself. NonOverlapping: the arc on positive points.
    // Overlapping: the arc lying right of its antipode.
    ArcA rep;
    auto operator<=>(const SymArcOrPair&) const = default;
    std::vector<ArcA> arcs() const;
};

ArcA antipode(const ArcA& a);
// Groups an arc on ±1..±n with its antipode. Throws NotSymmetric or InvalidArc.
SymArcOrPair make_sym(const ArcA& a);

TypeBArc fold_phi(const SymArcOrPair& s);
SymArcOrPair unfold_phi_inv(const TypeBArc& a);
std::vector<ArcA> unfold_arcs(const TypeBArc& a);

bool validate_long_arc(int left, int right, const std::vector<int>& L, const std::vector<int>& R);

struct DiagramB {
    int n = 0;
    std::vector<TypeBArc> arcs;  // sorted
    bool operator==(const DiagramB&) const = default;
    void canonicalize();
};

DiagramB delta_B_orb(const SignedPermutation& pi);
// Segment-drawing construction on the short one-line word, used as a cross-check.
DiagramB delta_B_orb_direct(const SignedPermutation& pi);
SignedPermutation delta_B_orb_inv(const DiagramB& D);

SignedPermutation arc_to_ji_B(const TypeBArc& a, int n);
bool is_join_irreducible_B(const SignedPermutation& pi);
TypeBArc ji_to_arc_B(const SignedPermutation& pi);

bool compatible_B(const TypeBArc& a, const TypeBArc& b);
bool is_diagram_B(const std::vector<TypeBArc>& arcs);

std::vector<TypeBArc> enumerate_arcs_B(int n);
constexpr int kMaxDiagramRankB = 5;
std::vector<DiagramB> enumerate_diagrams_B(int n);

struct ShardDescriptorB {
    enum class Equality { Zero, Equal, Negated };
    Equality eq;
    int p = 0, q = 0;          // Zero: x_q = 0. Equal: x_p = x_q. Negated: x_q = -x_p.
    std::vector<int> lower;    // signed indices i with x_q <= x_i (x_{-i} = -x_i)
    std::vector<int> upper;    // signed indices i with x_q >= x_i
    auto operator<=>(const ShardDescriptorB&) const = default;
};

ShardDescriptorB shard_descriptor_B(const TypeBArc& a);

// Left-right reflection of the orbifold disk.
TypeBArc mirror_arc(const TypeBArc& a);

}  // namespace arclat
