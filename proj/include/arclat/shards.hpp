#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "arclat/arcs_b.hpp"
#include "arclat/lattice.hpp"
#include "arclat/weak_order.hpp"

namespace arclat {

// Every reflecting hyperplane of the type A and B arrangements has the form y_a = y_b,
// where y_i = x_i, y_{-i} = -x_i and y_0 = 0. The functional is y_a - y_b.
struct Hyperplane {
    int a;
    int b;
    auto operator<=>(const Hyperplane&) const = default;
    std::vector<int> normal(int n) const;
    long long eval(const std::vector<long long>& x) const;
    std::string str() const;
};

// y_a - y_b  >= 0, > 0 or = 0.
struct Constraint {
    enum class Kind { Ge, Gt, Eq };
    int a;
    int b;
    Kind kind;
};

// Exact feasibility of a system of difference constraints over signed coordinates.
// Returns an integer witness x_1..x_n when feasible.
std::optional<std::vector<long long>> solve_constraints(Family family, int n, const std::vector<Constraint>& cs);

struct Arrangement {
    CoxeterType type;
    std::vector<Hyperplane> hyperplanes;
    std::vector<long long> base_point;
    int index_of(const Hyperplane& h) const;
};

constexpr int kGeomMaxA = 4;
constexpr int kGeomMaxB = 3;

Arrangement coxeter_arrangement(CoxeterType type);

struct Region {
    std::vector<int> sign;  // +1 or -1 per hyperplane, +1 on the base side
    std::vector<long long> witness;
    bool operator==(const Region& o) const { return sign == o.sign; }
};

std::vector<Region> regions(const Arrangement& arr);
// Regions ordered by inclusion of separating sets; element ids follow the region list.
FiniteLattice poset_of_regions(const Arrangement& arr, const std::vector<Region>& regs);

struct RankTwo {
    std::vector<int> members;
    std::pair<int, int> basic;
};

RankTwo rank_two(const Arrangement& arr, int h1, int h2);
bool cuts(const Arrangement& arr, int h1, int h2);

struct ShardCone {
    int carrier;
    std::vector<std::pair<int, int>> sides;  // (cutting hyperplane, sign of its functional on the shard)
    std::vector<long long> witness;
    auto operator<=>(const ShardCone& o) const {
        if (auto c = carrier <=> o.carrier; c != 0) return c;
        return sides <=> o.sides;
    }
    bool operator==(const ShardCone& o) const { return carrier == o.carrier && sides == o.sides; }
};

struct Facet {
    int region;
    int hyperplane;
    std::vector<long long> point;
};

// Everything about one arrangement, computed once.
class ShardModel {
public:
    explicit ShardModel(CoxeterType type);

    const Arrangement& arrangement() const { return arr_; }
    const std::vector<Region>& regions() const { return regions_; }
    const FiniteLattice& poset() const { return poset_; }
    const std::vector<ShardCone>& shards() const { return shards_; }
    const std::vector<Facet>& facets() const { return facets_; }
    bool cuts(int h1, int h2) const { return cuts_[h1][h2]; }
    const std::vector<int>& cutting(int h) const { return cutting_[h]; }

    int base_region() const { return 0; }
    // Region containing the point w(base).
    int region_of(const std::vector<int>& one_line) const;
    int hyperplane_of(const Reflection& t) const;
    int shard_containing(int h, const std::vector<long long>& point) const;

    int min_upper_region(int shard) const;
    std::vector<int> lower_shards(int region) const;
    bool shards_compatible(int s1, int s2) const;
    bool shard_arrow_geometric(int s1, int s2) const;
    bool emily_check(int s1, int s2) const;

    std::vector<Constraint> shard_constraints(int shard, bool strict) const;

private:
    Arrangement arr_;
    std::vector<Region> regions_;
    std::map<std::vector<int>, int> region_index_;
    FiniteLattice poset_;
    std::vector<std::vector<char>> cuts_;
    std::vector<std::vector<int>> cutting_;
    std::vector<Facet> facets_;
    std::vector<ShardCone> shards_;
    std::vector<RankTwo> rank_two_cache_;
    std::vector<int> rank_two_slot_;

    const RankTwo& rank_two_of(int h1, int h2) const;
    bool feasible(const std::vector<Constraint>& cs) const;
};

Constraint functional_sign(const Hyperplane& h, int sign, bool strict);
Constraint on_hyperplane(const Hyperplane& h);

std::vector<Constraint> descriptor_constraints(const ShardDescriptorA& d);
std::vector<Constraint> descriptor_constraints(const ShardDescriptorB& d);

// Cone {x : cs} is contained in cone {x : outer}; both are given by weak constraints.
bool cone_contains(Family family, int n, const std::vector<Constraint>& outer, const std::vector<Constraint>& inner);
bool same_cone(Family family, int n, const std::vector<Constraint>& c1, const std::vector<Constraint>& c2);

}  // namespace arclat
