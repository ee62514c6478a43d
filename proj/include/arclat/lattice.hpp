#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arclat/errors.hpp"

namespace arclat {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    std::size_t count() const;
    long first() const;
    long last() const;
    long next(std::size_t after) const;
    bool subset_of(const Bitset& o) const;

    Bitset& operator|=(const Bitset& o);
    Bitset& operator&=(const Bitset& o);
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    bool operator==(const Bitset& o) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

using Cover = std::pair<int, int>;

// Element ids are 0..size()-1. Immutable after build.
class FiniteLattice {
public:
    static FiniteLattice build(std::size_t n, const std::vector<Cover>& covers,
                               std::vector<std::string> labels = {});
    // Infers the number of elements from the largest id appearing in covers.
    static FiniteLattice build(const std::vector<Cover>& covers);

    std::size_t size() const { return n_; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    bool leq(int a, int b) const { return down_[pos_[b]].test(pos_[a]); }
    int meet(int a, int b) const { return meet_[a * n_ + b]; }
    int join(int a, int b) const { return join_[a * n_ + b]; }
    int meet_all(const std::vector<int>& xs) const;
    int join_all(const std::vector<int>& xs) const;

    const std::vector<int>& lower_covers(int x) const { return lower_[x]; }
    const std::vector<int>& upper_covers(int x) const { return upper_[x]; }
    const std::vector<Cover>& covers() const { return covers_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int x) const;
    // Topological order: every element appears after all elements below it.
    const std::vector<int>& linear_extension() const { return topo_; }
    // Length of a longest chain from the bottom.
    int rank(int x) const { return rank_[x]; }

private:
    std::size_t n_ = 0;
    int bottom_ = 0, top_ = 0;
    std::vector<Cover> covers_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> lower_, upper_;
    std::vector<int> topo_, pos_, rank_;
    std::vector<Bitset> down_;
    std::vector<int> meet_, join_;
};

struct JoinIrreducible {
    int j;
    int j_star;
    auto operator<=>(const JoinIrreducible&) const = default;
};

// element -> class id. Class ids are normalized to first-occurrence order.
using Partition = std::vector<int>;

Partition normalize(const Partition& p);
Partition identity_partition(const FiniteLattice& L);
Partition full_partition(const FiniteLattice& L);

std::vector<JoinIrreducible> join_irreducibles(const FiniteLattice& L);
bool is_join_irreducible(const FiniteLattice& L, int x);

constexpr std::size_t kOracleScope = 400;

// All JIs are returned as element ids. nullopt when no irredundant
// representation is ideal-minimal.
std::optional<std::vector<int>> cjr_oracle(const FiniteLattice& L, int x);

bool is_congruence(const FiniteLattice& L, const Partition& p);

Partition principal_congruence(const FiniteLattice& L, const JoinIrreducible& j);
// Smallest congruence identifying every given pair.
Partition congruence_generated(const FiniteLattice& L,
                               const std::vector<std::pair<int, int>>& pairs);
Partition congruence_join(const FiniteLattice& L, const Partition& a, const Partition& b);
Partition congruence_meet(const Partition& a, const Partition& b);

std::vector<JoinIrreducible> contracted_jis(const FiniteLattice& L, const Partition& theta);

// Bottom element of each class, indexed by class id.
std::vector<int> class_bottoms(const FiniteLattice& L, const Partition& theta);
std::vector<int> class_tops(const FiniteLattice& L, const Partition& theta);

// Quotient element k corresponds to class k; labels are those of the bottoms.
FiniteLattice quotient(const FiniteLattice& L, const Partition& theta);

bool forcing_oracle(const FiniteLattice& L, int j1, int j2);

bool cjr_quotient_check(const FiniteLattice& L, const Partition& theta);

std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b);
bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace arclat
