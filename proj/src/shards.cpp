#include "arclat/shards.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "arclat/errors.hpp"

namespace arclat {

namespace {

long long coord(const std::vector<long long>& x, int s) {
    if (s == 0) return 0;
    return s > 0 ? x[s - 1] : -x[-s - 1];
}

int var_count(Family f, int n) { return f == Family::A ? n : 2 * n + 1; }

int var_index(Family f, int n, int s) {
    if (f == Family::A) {
        if (s < 1 || s > n) throw Error("type A constraint on signed coordinate " + std::to_string(s));
        return s - 1;
    }
    return s + n;
}

bool holds(const Constraint& c, const std::vector<long long>& x) {
    long long d = coord(x, c.a) - coord(x, c.b);
    switch (c.kind) {
        case Constraint::Kind::Ge: return d >= 0;
        case Constraint::Kind::Gt: return d > 0;
        case Constraint::Kind::Eq: return d == 0;
    }
    return false;
}

}  // namespace

std::vector<int> Hyperplane::normal(int n) const {
    std::vector<int> v(n, 0);
    if (a != 0) v[std::abs(a) - 1] += a > 0 ? 1 : -1;
    if (b != 0) v[std::abs(b) - 1] -= b > 0 ? 1 : -1;
    return v;
}

long long Hyperplane::eval(const std::vector<long long>& x) const { return coord(x, a) - coord(x, b); }

std::string Hyperplane::str() const {
    auto y = [](int s) {
        if (s == 0) return std::string("0");
        return (s < 0 ? std::string("-x") : std::string("x")) + std::to_string(std::abs(s));
    };
    return y(a) + "=" + y(b);
}

std::optional<std::vector<long long>> solve_constraints(Family family, int n, const std::vector<Constraint>& cs) {
    struct Edge {
        int from, to, w;
    };
    std::vector<Edge> edges;
    auto add = [&](int a, int b, Constraint::Kind k) {
        int ia = var_index(family, n, a), ib = var_index(family, n, b);
        int w = k == Constraint::Kind::Gt ? 1 : 0;
        edges.push_back({ib, ia, w});
        if (k == Constraint::Kind::Eq) edges.push_back({ia, ib, 0});
    };
    for (const auto& c : cs) {
        add(c.a, c.b, c.kind);
        if (family == Family::B) add(-c.b, -c.a, c.kind);
    }
    int V = var_count(family, n);
    std::vector<long long> f(V, 0);
    bool changed = true;
    for (int round = 0; round <= V && changed; ++round) {
        changed = false;
        for (const auto& e : edges)
            if (f[e.from] + e.w > f[e.to]) {
                f[e.to] = f[e.from] + e.w;
                changed = true;
            }
    }
    if (changed) return std::nullopt;

    std::vector<long long> x(n);
    for (int i = 1; i <= n; ++i)
        x[i - 1] = family == Family::A ? f[i - 1] : f[i + n] - f[-i + n];
    for (const auto& c : cs)
        if (!holds(c, x)) throw Error("difference-constraint witness check failed");
    return x;
}

Constraint functional_sign(const Hyperplane& h, int sign, bool strict) {
    auto k = strict ? Constraint::Kind::Gt : Constraint::Kind::Ge;
    return sign > 0 ? Constraint{h.a, h.b, k} : Constraint{h.b, h.a, k};
}

Constraint on_hyperplane(const Hyperplane& h) { return {h.a, h.b, Constraint::Kind::Eq}; }

int Arrangement::index_of(const Hyperplane& h) const {
    auto it = std::find(hyperplanes.begin(), hyperplanes.end(), h);
    if (it == hyperplanes.end()) throw Error("not a hyperplane of the arrangement: " + h.str());
    return static_cast<int>(it - hyperplanes.begin());
}

Arrangement coxeter_arrangement(CoxeterType type) {
    int n = type.n;
    int cap = type.family == Family::A ? kGeomMaxA : kGeomMaxB;
    if (n < 1 || n > cap) throw ScopeExceeded("shard geometry is supported up to rank " + std::to_string(cap));
    Arrangement arr{type, {}, {}};
    for (int j = 1; j <= n; ++j) {
        if (type.family == Family::B) arr.hyperplanes.push_back({j, 0});
        for (int i = 1; i < j; ++i) {
            arr.hyperplanes.push_back({j, i});
            if (type.family == Family::B) arr.hyperplanes.push_back({j, -i});
        }
    }
    for (int i = 1; i <= n; ++i) arr.base_point.push_back(i);
    for (const auto& h : arr.hyperplanes)
        if (h.eval(arr.base_point) <= 0) throw Error("base point is not on the positive side of " + h.str());
    return arr;
}

namespace {

std::vector<Constraint> sign_system(const Arrangement& arr, const std::vector<int>& sign) {
    std::vector<Constraint> cs;
    for (std::size_t h = 0; h < arr.hyperplanes.size(); ++h)
        cs.push_back(functional_sign(arr.hyperplanes[h], sign[h], true));
    return cs;
}

}  // namespace

std::vector<Region> regions(const Arrangement& arr) {
    std::size_t H = arr.hyperplanes.size();
    std::vector<Region> out;
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    std::vector<int> base(H, 1);
    seen.insert(base);
    queue.push_back(base);
    while (!queue.empty()) {
        auto s = queue.front();
        queue.pop_front();
        auto x = solve_constraints(arr.type.family, arr.type.n, sign_system(arr, s));
        if (!x) throw Error("region sign vector lost feasibility");
        out.push_back({s, *x});
        for (std::size_t h = 0; h < H; ++h) {
            auto t = s;
            t[h] = -t[h];
            if (seen.count(t)) continue;
            if (solve_constraints(arr.type.family, arr.type.n, sign_system(arr, t))) {
                seen.insert(t);
                queue.push_back(t);
            }
        }
    }
    return out;
}

FiniteLattice poset_of_regions(const Arrangement& arr, const std::vector<Region>& regs) {
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < regs.size(); ++i) index[regs[i].sign] = static_cast<int>(i);
    std::vector<Cover> covers;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < regs.size(); ++i) {
        std::string lab;
        for (std::size_t h = 0; h < arr.hyperplanes.size(); ++h) {
            lab += regs[i].sign[h] > 0 ? '+' : '-';
            if (regs[i].sign[h] < 0) continue;
            auto t = regs[i].sign;
            t[h] = -1;
            if (auto it = index.find(t); it != index.end()) covers.push_back({static_cast<int>(i), it->second});
        }
        labels.push_back(lab);
    }
    return FiniteLattice::build(regs.size(), covers, labels);
}

RankTwo rank_two(const Arrangement& arr, int h1, int h2) {
    if (h1 == h2) throw Error("rank-two subarrangement needs two distinct hyperplanes");
    auto fam = arr.type.family;
    int n = arr.type.n;
    const auto& hs = arr.hyperplanes;
    RankTwo r;
    for (std::size_t h = 0; h < hs.size(); ++h) {
        std::vector<Constraint> cs{on_hyperplane(hs[h1]), on_hyperplane(hs[h2]), functional_sign(hs[h], 1, true)};
        if (!solve_constraints(fam, n, cs)) r.members.push_back(static_cast<int>(h));
    }
    std::vector<int> basic;
    for (int m : r.members) {
        std::vector<Constraint> cs;
        for (int k : r.members) cs.push_back(functional_sign(hs[k], k == m ? -1 : 1, true));
        if (solve_constraints(fam, n, cs)) basic.push_back(m);
    }
    if (basic.size() != 2) throw Error("rank-two subarrangement without exactly two basic hyperplanes");
    r.basic = {basic[0], basic[1]};
    return r;
}

bool cuts(const Arrangement& arr, int h1, int h2) {
    if (h1 == h2) return false;
    auto r = rank_two(arr, h1, h2);
    bool b1 = r.basic.first == h1 || r.basic.second == h1;
    bool b2 = r.basic.first == h2 || r.basic.second == h2;
    return b1 && !b2;
}

ShardModel::ShardModel(CoxeterType type)
    : arr_(coxeter_arrangement(type)), regions_(arclat::regions(arr_)), poset_(poset_of_regions(arr_, regions_)) {
    int H = static_cast<int>(arr_.hyperplanes.size());
    for (std::size_t i = 0; i < regions_.size(); ++i) region_index_[regions_[i].sign] = static_cast<int>(i);

    rank_two_slot_.assign(H * H, -1);
    for (int a = 0; a < H; ++a)
        for (int b = a + 1; b < H; ++b) {
            rank_two_slot_[a * H + b] = rank_two_slot_[b * H + a] = static_cast<int>(rank_two_cache_.size());
            rank_two_cache_.push_back(rank_two(arr_, a, b));
        }

    cuts_.assign(H, std::vector<char>(H, 0));
    cutting_.assign(H, {});
    for (int a = 0; a < H; ++a)
        for (int b = 0; b < H; ++b) {
            if (a == b) continue;
            const auto& r = rank_two_of(a, b);
            bool ba = r.basic.first == a || r.basic.second == a;
            bool bb = r.basic.first == b || r.basic.second == b;
            cuts_[a][b] = ba && !bb;
            if (cuts_[a][b]) cutting_[b].push_back(a);
        }

    for (std::size_t r = 0; r < regions_.size(); ++r)
        for (int h = 0; h < H; ++h) {
            std::vector<Constraint> cs;
            for (int k = 0; k < H; ++k)
                cs.push_back(k == h ? on_hyperplane(arr_.hyperplanes[k])
                                    : functional_sign(arr_.hyperplanes[k], regions_[r].sign[k], true));
            if (auto x = solve_constraints(type.family, type.n, cs))
                facets_.push_back({static_cast<int>(r), h, *x});
        }

    std::set<ShardCone> found;
    for (const auto& f : facets_) {
        ShardCone s{f.hyperplane, {}, f.point};
        for (int c : cutting_[f.hyperplane]) {
            long long v = arr_.hyperplanes[c].eval(f.point);
            if (v == 0) throw Error("facet point lies on a cutting hyperplane");
            s.sides.push_back({c, v > 0 ? 1 : -1});
        }
        found.insert(s);
    }
    shards_.assign(found.begin(), found.end());
}

const RankTwo& ShardModel::rank_two_of(int h1, int h2) const {
    int H = static_cast<int>(arr_.hyperplanes.size());
    return rank_two_cache_[rank_two_slot_[h1 * H + h2]];
}

bool ShardModel::feasible(const std::vector<Constraint>& cs) const {
    return solve_constraints(arr_.type.family, arr_.type.n, cs).has_value();
}

int ShardModel::region_of(const std::vector<int>& one_line) const {
    int n = arr_.type.n;
    if (static_cast<int>(one_line.size()) != n) throw Error("element has the wrong rank");
    std::vector<long long> x(n, 0);
    for (int i = 1; i <= n; ++i) {
        int v = one_line[i - 1];
        x[std::abs(v) - 1] = v > 0 ? i : -i;
    }
    std::vector<int> sign;
    for (const auto& h : arr_.hyperplanes) {
        long long e = h.eval(x);
        if (e == 0) throw Error("point of an element lies on a hyperplane");
        sign.push_back(e > 0 ? 1 : -1);
    }
    return region_index_.at(sign);
}

int ShardModel::hyperplane_of(const Reflection& t) const {
    switch (t.kind) {
        case Reflection::Kind::Transposition: return arr_.index_of({t.b, t.a});
        case Reflection::Kind::SignChange: return arr_.index_of({t.a, 0});
        case Reflection::Kind::SignedPair:
            return t.b > 0 ? arr_.index_of({t.b, t.a}) : arr_.index_of({-t.b, -t.a});
    }
    throw Error("unreachable");
}

int ShardModel::shard_containing(int h, const std::vector<long long>& point) const {
    for (std::size_t s = 0; s < shards_.size(); ++s) {
        if (shards_[s].carrier != h) continue;
        bool ok = true;
        for (auto [c, sg] : shards_[s].sides)
            if (arr_.hyperplanes[c].eval(point) * sg <= 0) ok = false;
        if (ok) return static_cast<int>(s);
    }
    throw Error("point is not in the relative interior of any shard");
}

std::vector<Constraint> ShardModel::shard_constraints(int shard, bool strict) const {
    const auto& s = shards_.at(shard);
    std::vector<Constraint> cs{on_hyperplane(arr_.hyperplanes[s.carrier])};
    for (auto [c, sg] : s.sides) cs.push_back(functional_sign(arr_.hyperplanes[c], sg, strict));
    return cs;
}

int ShardModel::min_upper_region(int shard) const {
    const auto& s = shards_.at(shard);
    std::vector<int> upper;
    for (const auto& f : facets_) {
        if (f.hyperplane != s.carrier || regions_[f.region].sign[s.carrier] > 0) continue;
        if (shard_containing(f.hyperplane, f.point) == shard) upper.push_back(f.region);
    }
    std::vector<int> minimal;
    for (int r : upper)
        if (std::none_of(upper.begin(), upper.end(), [&](int o) { return o != r && poset_.leq(o, r); }))
            minimal.push_back(r);
    if (minimal.size() != 1) throw Error("shard has no unique minimal upper region");
    return minimal.front();
}

std::vector<int> ShardModel::lower_shards(int region) const {
    std::vector<int> out;
    for (const auto& f : facets_)
        if (f.region == region && regions_[region].sign[f.hyperplane] < 0)
            out.push_back(shard_containing(f.hyperplane, f.point));
    std::sort(out.begin(), out.end());
    return out;
}

bool ShardModel::shards_compatible(int s1, int s2) const {
    if (shards_.at(s1).carrier == shards_.at(s2).carrier) return false;
    auto cs = shard_constraints(s1, true);
    auto more = shard_constraints(s2, true);
    cs.insert(cs.end(), more.begin(), more.end());
    return feasible(cs);
}

bool ShardModel::shard_arrow_geometric(int s1, int s2) const {
    int h1 = shards_.at(s1).carrier, h2 = shards_.at(s2).carrier;
    if (h1 == h2 || !cuts_[h1][h2]) return false;
    const auto& members = rank_two_of(h1, h2).members;
    std::vector<Constraint> cs{on_hyperplane(arr_.hyperplanes[h1]), on_hyperplane(arr_.hyperplanes[h2])};
    for (int s : {s1, s2})
        for (auto [c, sg] : shards_[s].sides) {
            if (std::find(members.begin(), members.end(), c) != members.end()) continue;
            cs.push_back(functional_sign(arr_.hyperplanes[c], sg, true));
        }
    return feasible(cs);
}

bool ShardModel::emily_check(int s1, int s2) const {
    int h1 = shards_.at(s1).carrier, h2 = shards_.at(s2).carrier;
    if (h1 == h2) return false;
    for (std::size_t t = 0; t < shards_.size(); ++t) {
        int h = shards_[t].carrier;
        if (h == h1 || !shards_compatible(s1, static_cast<int>(t))) continue;
        const auto& r = rank_two_of(h1, h);
        if (std::find(r.members.begin(), r.members.end(), h2) == r.members.end()) continue;
        if (r.basic.first == h2 || r.basic.second == h2) continue;
        auto base = shard_constraints(s1, false);
        auto more = shard_constraints(static_cast<int>(t), false);
        base.insert(base.end(), more.begin(), more.end());
        bool inside = true;
        for (auto [c, sg] : shards_[s2].sides) {
            auto cs = base;
            cs.push_back(functional_sign(arr_.hyperplanes[c], -sg, true));
            if (feasible(cs)) {
                inside = false;
                break;
            }
        }
        if (inside) return true;
    }
    return false;
}

std::vector<Constraint> descriptor_constraints(const ShardDescriptorA& d) {
    std::vector<Constraint> cs{{d.p, d.q, Constraint::Kind::Eq}};
    for (int i : d.lower) cs.push_back({i, d.p, Constraint::Kind::Ge});
    for (int i : d.upper) cs.push_back({d.p, i, Constraint::Kind::Ge});
    return cs;
}

std::vector<Constraint> descriptor_constraints(const ShardDescriptorB& d) {
    std::vector<Constraint> cs;
    switch (d.eq) {
        case ShardDescriptorB::Equality::Zero: cs.push_back({d.q, 0, Constraint::Kind::Eq}); break;
        case ShardDescriptorB::Equality::Equal: cs.push_back({d.q, d.p, Constraint::Kind::Eq}); break;
        case ShardDescriptorB::Equality::Negated: cs.push_back({d.q, -d.p, Constraint::Kind::Eq}); break;
    }
    for (int i : d.lower) cs.push_back({i, d.q, Constraint::Kind::Ge});
    for (int i : d.upper) cs.push_back({d.q, i, Constraint::Kind::Ge});
    return cs;
}

bool cone_contains(Family family, int n, const std::vector<Constraint>& outer, const std::vector<Constraint>& inner) {
    for (const auto& c : outer) {
        std::vector<Constraint> negs;
        if (c.kind == Constraint::Kind::Eq)
            negs = {{c.a, c.b, Constraint::Kind::Gt}, {c.b, c.a, Constraint::Kind::Gt}};
        else
            negs = {{c.b, c.a, Constraint::Kind::Gt}};
        for (const auto& ng : negs) {
            auto cs = inner;
            cs.push_back(ng);
            if (solve_constraints(family, n, cs)) return false;
        }
    }
    return true;
}

bool same_cone(Family family, int n, const std::vector<Constraint>& c1, const std::vector<Constraint>& c2) {
    return cone_contains(family, n, c1, c2) && cone_contains(family, n, c2, c1);
}

}  // namespace arclat
