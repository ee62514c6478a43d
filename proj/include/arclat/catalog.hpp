#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arclat/forcing.hpp"

namespace arclat {

enum class Side { Left, Right };

// Designates each point 1..n-1 as a left point or a right point.
struct Designation {
    int n = 0;
    std::vector<Side> side;  // side[i-1] for point i
    bool operator==(const Designation&) const = default;

    Side at(int i) const { return side.at(i - 1); }
    bool is_right(int i) const { return i >= 1 && i < n && at(i) == Side::Right; }
    bool is_left(int i) const { return i >= 1 && i < n && at(i) == Side::Left; }
    std::string str() const;

    static Designation all(int n, Side s);
    // Odd points get `odd`, even points the other side.
    static Designation alternating(int n, Side odd);
};

std::vector<Designation> all_designations(int n);

// Whether some part of the arc passes right (resp. left) of point x.
bool passes_right(const TypeBArc& a, int x);
bool passes_left(const TypeBArc& a, int x);

// Join-irreducible signed permutation given by a word in s0..s_{n-1}; throws NotJoinIrreducible.
TypeBArc arc_of_word(int n, const std::vector<int>& word);

ArcCongruence parabolic_congruence(int n, const std::vector<int>& J);
bool parabolic_predicate(int n, const std::vector<int>& J, const TypeBArc& a);

enum class HomVariant { Simion, Nonhom, Delta, DeltaMirror };
std::string to_string(HomVariant v);
HomVariant hom_variant_from_string(const std::string& s);
std::vector<std::vector<int>> hom_generator_words(HomVariant v);
ArcCongruence hom_congruence(int n, HomVariant v);
bool hom_predicate(HomVariant v, const TypeBArc& a);

ArcCongruence cambrian_congruence(const Designation& d);
bool cambrian_contracts(const Designation& d, const TypeBArc& a);
std::vector<std::vector<int>> cambrian_generator_words(const Designation& d);
// No subsequence b c a of the long one-line word with a < b < c, b a right point or -b a left point.
bool cambrian_pattern_test(const SignedPermutation& pi, const Designation& d);
// No subsequence c a b with a < b < c, b a left point or -b a right point.
bool cambrian_pattern_test_312(const SignedPermutation& pi, const Designation& d);
std::vector<TypeBArc> cambrian_meet_rep(const Designation& d);

struct NCBlock {
    enum class Tag { Plain, Orbifold, WrapsBelow };
    std::vector<int> points;  // sorted
    Tag tag = Tag::Plain;
    // WrapsBelow only: the piece holding the left endpoint of the long arc, then the other.
    std::vector<int> left_piece, right_piece;
    auto operator<=>(const NCBlock&) const = default;
};

struct NCPartitionB {
    int n = 0;
    std::vector<NCBlock> blocks;  // sorted by smallest point
    auto operator<=>(const NCPartitionB&) const = default;
    void canonicalize();
};

NCPartitionB ncp_from_diagram(const DiagramB& D, const Designation& d);
DiagramB diagram_from_ncp(const NCPartitionB& P, const Designation& d);

std::vector<std::vector<int>> bicambrian_bipartite_words(int n);
// The partial list leaves out the four minimal long arcs with endpoints 2 and 3 that pass both
// sides of 1. It generates a strictly finer congruence than the meet of the linear Cambrians.
std::vector<std::vector<int>> bicambrian_linear_words_partial(int n);
std::vector<std::vector<int>> bicambrian_linear_words(int n);
ArcCongruence bicambrian_bipartite(int n);
ArcCongruence bicambrian_linear(int n);
bool is_alternating_arc(const TypeBArc& a);
bool passes_both_sides(const TypeBArc& a);

}  // namespace arclat
