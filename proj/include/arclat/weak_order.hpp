#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arclat/lattice.hpp"

namespace arclat {

// A permutation of an arbitrary finite set of distinct integers (its ground set),
// usually {1..n} or {±1..±n}. one_line[k] is the image of the k-th smallest ground element.
struct Permutation {
    std::vector<int> one_line;
    auto operator<=>(const Permutation&) const = default;
    std::vector<int> ground() const;
    std::size_t size() const { return one_line.size(); }
};

struct SignedPermutation {
    std::vector<int> one_line;  // short one-line notation
    auto operator<=>(const SignedPermutation&) const = default;
    int n() const { return static_cast<int>(one_line.size()); }
    // pi(i) for i in ±1..±n
    int operator()(int i) const { return i > 0 ? one_line[i - 1] : -one_line[-i - 1]; }
};

enum class Family { A, B };

struct CoxeterType {
    Family family;
    int n;
    auto operator<=>(const CoxeterType&) const = default;
};

struct Reflection {
    enum class Kind { Transposition, SignChange, SignedPair };
    Kind kind;
    int a;
    int b;
    auto operator<=>(const Reflection&) const = default;

    static Reflection transposition(int a, int b);
    static Reflection sign_change(int i);
    // (a b)(-a -b)
    static Reflection signed_pair(int a, int b);
    std::string str() const;
};

bool is_valid(const Permutation& p);
bool is_valid(const SignedPermutation& p);

Permutation identity_permutation(int n);
SignedPermutation identity_signed(int n);
std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> all_permutations_of(std::vector<int> ground);
std::vector<SignedPermutation> all_signed_permutations(int n);

std::set<Reflection> inversions(const Permutation& w);
std::set<Reflection> inversions(const SignedPermutation& w);

bool weak_order_leq(const Permutation& u, const Permutation& w);
bool weak_order_leq(const SignedPermutation& u, const SignedPermutation& w);

std::vector<std::pair<Permutation, Reflection>> covers_down(const Permutation& w);
std::vector<std::pair<SignedPermutation, Reflection>> covers_down(const SignedPermutation& w);

// Left multiplication by a reflection (acts on values).
Permutation apply_reflection(const Reflection& t, const Permutation& w);
SignedPermutation apply_reflection(const Reflection& t, const SignedPermutation& w);

// Product s_{i1} s_{i2} ... of simple generators. Type A: s_i swaps positions i, i+1.
// Type B: s_0 negates position 1.
Permutation from_word_A(int n, const std::vector<int>& word);
SignedPermutation from_word_B(int n, const std::vector<int>& word);

std::size_t length(const Permutation& w);
std::size_t length(const SignedPermutation& w);

struct WeakOrder {
    CoxeterType type;
    std::vector<std::vector<int>> elements;  // one-line words, indexed by element id
    std::map<std::vector<int>, int> index;
    FiniteLattice lattice;

    int id(const std::vector<int>& one_line) const;
    Permutation perm(int x) const { return {elements[x]}; }
    SignedPermutation signed_perm(int x) const { return {elements[x]}; }
};

constexpr int kMaxRankA = 6;
constexpr int kMaxRankB = 4;

WeakOrder weak_order_lattice(CoxeterType type);
// Weak order of all permutations of the given ground set (for instance ±1..±n).
WeakOrder weak_order_lattice_on(const std::vector<int>& ground);

std::vector<Permutation> cjr_weak(const Permutation& w);
std::vector<SignedPermutation> cjr_weak(const SignedPermutation& w);

Permutation w0_conjugate(const Permutation& p);

std::vector<int> long_one_line(const SignedPermutation& p);
Permutation unfold(const SignedPermutation& p);
SignedPermutation fold(const Permutation& sigma);
bool is_centrally_symmetric(const Permutation& sigma);

std::string to_string(const std::vector<int>& one_line);

}  // namespace arclat
