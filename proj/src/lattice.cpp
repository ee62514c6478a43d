#include "arclat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace arclat {

std::size_t Bitset::count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

long Bitset::first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return static_cast<long>(k * 64 + std::countr_zero(w_[k]));
    return -1;
}

long Bitset::last() const {
    for (std::size_t k = w_.size(); k-- > 0;)
        if (w_[k]) return static_cast<long>(k * 64 + 63 - std::countl_zero(w_[k]));
    return -1;
}

long Bitset::next(std::size_t after) const {
    std::size_t i = after + 1;
    if (i >= n_) return -1;
    std::size_t k = i >> 6;
    std::uint64_t w = w_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
        if (w) return static_cast<long>(k * 64 + std::countr_zero(w));
        if (++k >= w_.size()) return -1;
        w = w_[k];
    }
}

bool Bitset::subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k] & ~o.w_[k]) return false;
    return true;
}

Bitset& Bitset::operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
}

FiniteLattice FiniteLattice::build(const std::vector<Cover>& covers) {
    int mx = -1;
    for (auto [a, b] : covers) mx = std::max({mx, a, b});
    return build(static_cast<std::size_t>(mx + 1), covers);
}

FiniteLattice FiniteLattice::build(std::size_t n, const std::vector<Cover>& covers,
                                   std::vector<std::string> labels) {
    if (n == 0) throw Error("empty lattice");
    FiniteLattice L;
    L.n_ = n;
    L.covers_ = covers;
    L.labels_ = std::move(labels);
    L.lower_.assign(n, {});
    L.upper_.assign(n, {});
    for (auto [a, b] : covers) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
            throw Error("cover refers to unknown element");
        L.lower_[b].push_back(a);
        L.upper_[a].push_back(b);
    }
    for (auto& v : L.lower_) std::sort(v.begin(), v.end());
    for (auto& v : L.upper_) std::sort(v.begin(), v.end());

    std::vector<int> indeg(n);
    for (std::size_t x = 0; x < n; ++x) indeg[x] = static_cast<int>(L.lower_[x].size());
    std::queue<int> q;
    for (std::size_t x = 0; x < n; ++x)
        if (indeg[x] == 0) q.push(static_cast<int>(x));
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        L.topo_.push_back(x);
        for (int y : L.upper_[x])
            if (--indeg[y] == 0) q.push(y);
    }
    if (L.topo_.size() != n) throw Error("cover digraph has a cycle");

    L.pos_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) L.pos_[L.topo_[i]] = static_cast<int>(i);
    L.rank_.assign(n, 0);
    L.down_.assign(n, Bitset(n));
    std::vector<Bitset> up(n, Bitset(n));
    for (int x : L.topo_) {
        auto& d = L.down_[L.pos_[x]];
        d.set(L.pos_[x]);
        for (int y : L.lower_[x]) {
            d |= L.down_[L.pos_[y]];
            L.rank_[x] = std::max(L.rank_[x], L.rank_[y] + 1);
        }
    }
    for (auto it = L.topo_.rbegin(); it != L.topo_.rend(); ++it) {
        int x = *it;
        auto& u = up[L.pos_[x]];
        u.set(L.pos_[x]);
        for (int y : L.upper_[x]) u |= up[L.pos_[y]];
    }

    L.meet_.assign(n * n, -1);
    L.join_.assign(n * n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            Bitset lo = L.down_[L.pos_[a]] & L.down_[L.pos_[b]];
            long m = lo.last();
            if (m < 0 || !(L.down_[m] == lo))
                throw NotALattice(static_cast<int>(a), static_cast<int>(b),
                                  "no unique meet for " + L.label(a) + ", " + L.label(b));
            Bitset hi = up[L.pos_[a]] & up[L.pos_[b]];
            long j = hi.first();
            if (j < 0 || !(up[j] == hi))
                throw NotALattice(static_cast<int>(a), static_cast<int>(b),
                                  "no unique join for " + L.label(a) + ", " + L.label(b));
            L.meet_[a * n + b] = L.meet_[b * n + a] = L.topo_[m];
            L.join_[a * n + b] = L.join_[b * n + a] = L.topo_[j];
        }
    }
    L.bottom_ = L.topo_.front();
    L.top_ = L.topo_.back();
    return L;
}

int FiniteLattice::meet_all(const std::vector<int>& xs) const {
    int m = top_;
    for (int x : xs) m = meet(m, x);
    return m;
}

int FiniteLattice::join_all(const std::vector<int>& xs) const {
    int j = bottom_;
    for (int x : xs) j = join(j, x);
    return j;
}

std::string FiniteLattice::label(int x) const {
    if (static_cast<std::size_t>(x) < labels_.size()) return labels_[x];
    return std::to_string(x);
}

Partition normalize(const Partition& p) {
    std::map<int, int> ren;
    Partition out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto [it, fresh] = ren.emplace(p[i], static_cast<int>(ren.size()));
        out[i] = it->second;
    }
    return out;
}

Partition identity_partition(const FiniteLattice& L) {
    Partition p(L.size());
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Partition full_partition(const FiniteLattice& L) { return Partition(L.size(), 0); }

std::vector<JoinIrreducible> join_irreducibles(const FiniteLattice& L) {
    std::vector<JoinIrreducible> out;
    for (std::size_t x = 0; x < L.size(); ++x)
        if (L.lower_covers(x).size() == 1)
            out.push_back({static_cast<int>(x), L.lower_covers(x)[0]});
    return out;
}

bool is_join_irreducible(const FiniteLattice& L, int x) {
    return L.lower_covers(x).size() == 1;
}

namespace {

// Ideal generated by xs is contained in the ideal generated by ys.
bool ideal_within(const FiniteLattice& L, const std::vector<int>& xs, const std::vector<int>& ys) {
    for (int x : xs) {
        bool ok = false;
        for (int y : ys)
            if (L.leq(x, y)) { ok = true; break; }
        if (!ok) return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<int>> cjr_oracle(const FiniteLattice& L, int x) {
    if (L.size() > kOracleScope)
        throw ScopeExceeded("cjr_oracle is limited to " + std::to_string(kOracleScope) + " elements");
    std::vector<int> js;
    for (auto ji : join_irreducibles(L))
        if (L.leq(ji.j, x)) js.push_back(ji.j);
    // Larger elements first so that pruning by the remaining join bites early.
    std::sort(js.begin(), js.end(), [&](int a, int b) {
        if (L.rank(a) != L.rank(b)) return L.rank(a) > L.rank(b);
        return a < b;
    });
    const std::size_t k = js.size();
    std::vector<int> suffix_join(k + 1, L.bottom());
    for (std::size_t i = k; i-- > 0;) suffix_join[i] = L.join(js[i], suffix_join[i + 1]);

    std::vector<std::vector<int>> reps;
    std::vector<int> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int acc) {
        if (L.join(acc, suffix_join[i]) != x) return;
        if (i == k) {
            if (acc != x) return;
            for (std::size_t t = 0; t < cur.size(); ++t) {
                int rest = L.bottom();
                for (std::size_t s = 0; s < cur.size(); ++s)
                    if (s != t) rest = L.join(rest, cur[s]);
                if (rest == x) return;
            }
            reps.push_back(cur);
            return;
        }
        int j = js[i];
        bool comparable = false;
        for (int c : cur)
            if (L.leq(j, c) || L.leq(c, j)) { comparable = true; break; }
        if (!comparable) {
            cur.push_back(j);
            rec(i + 1, L.join(acc, j));
            cur.pop_back();
        }
        rec(i + 1, acc);
    };
    rec(0, L.bottom());

    for (const auto& c : reps) {
        bool minimal = true;
        for (const auto& r : reps)
            if (!ideal_within(L, c, r)) { minimal = false; break; }
        if (minimal) {
            auto out = c;
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    return std::nullopt;
}

std::vector<int> class_bottoms(const FiniteLattice& L, const Partition& theta) {
    int m = theta.empty() ? 0 : *std::max_element(theta.begin(), theta.end()) + 1;
    std::vector<int> bot(m, -1);
    for (std::size_t x = 0; x < L.size(); ++x) {
        int c = theta[x];
        bot[c] = bot[c] < 0 ? static_cast<int>(x) : L.meet(bot[c], static_cast<int>(x));
    }
    return bot;
}

std::vector<int> class_tops(const FiniteLattice& L, const Partition& theta) {
    int m = theta.empty() ? 0 : *std::max_element(theta.begin(), theta.end()) + 1;
    std::vector<int> top(m, -1);
    for (std::size_t x = 0; x < L.size(); ++x) {
        int c = theta[x];
        top[c] = top[c] < 0 ? static_cast<int>(x) : L.join(top[c], static_cast<int>(x));
    }
    return top;
}

bool is_congruence(const FiniteLattice& L, const Partition& p) {
    if (p.size() != L.size()) return false;
    auto bot = class_bottoms(L, p);
    auto top = class_tops(L, p);
    for (std::size_t c = 0; c < bot.size(); ++c) {
        if (bot[c] < 0) continue;
        if (p[bot[c]] != static_cast<int>(c) || p[top[c]] != static_cast<int>(c)) return false;
    }
    for (std::size_t z = 0; z < L.size(); ++z) {
        for (std::size_t c = 0; c < bot.size(); ++c) {
            if (bot[c] < 0) continue;
            if (L.leq(bot[c], z) && L.leq(z, top[c]) && p[z] != static_cast<int>(c)) return false;
        }
    }
    for (auto [a, b] : L.covers()) {
        if (!L.leq(bot[p[a]], bot[p[b]])) return false;
        if (!L.leq(top[p[a]], top[p[b]])) return false;
    }
    return true;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

Partition closure(const FiniteLattice& L, UnionFind& uf) {
    const int n = static_cast<int>(L.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x) {
            int r = uf.find(x);
            if (r == x) continue;
            for (int z = 0; z < n; ++z) {
                changed |= uf.unite(L.join(x, z), L.join(r, z));
                changed |= uf.unite(L.meet(x, z), L.meet(r, z));
            }
        }
    }
    Partition p(n);
    for (int x = 0; x < n; ++x) p[x] = uf.find(x);
    return normalize(p);
}

}  // namespace

Partition congruence_generated(const FiniteLattice& L, const std::vector<std::pair<int, int>>& pairs) {
    UnionFind uf(L.size());
    for (auto [a, b] : pairs) uf.unite(a, b);
    return closure(L, uf);
}

Partition principal_congruence(const FiniteLattice& L, const JoinIrreducible& j) {
    return congruence_generated(L, {{j.j, j.j_star}});
}

Partition congruence_join(const FiniteLattice& L, const Partition& a, const Partition& b) {
    UnionFind uf(L.size());
    for (std::size_t x = 0; x < L.size(); ++x)
        for (std::size_t y = x + 1; y < L.size(); ++y)
            if (a[x] == a[y] || b[x] == b[y]) uf.unite(static_cast<int>(x), static_cast<int>(y));
    Partition p(L.size());
    for (std::size_t x = 0; x < L.size(); ++x) p[x] = uf.find(static_cast<int>(x));
    return normalize(p);
}

Partition congruence_meet(const Partition& a, const Partition& b) {
    std::map<std::pair<int, int>, int> ids;
    Partition p(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
        auto [it, fresh] = ids.emplace(std::pair{a[x], b[x]}, static_cast<int>(ids.size()));
        p[x] = it->second;
    }
    return p;
}

std::vector<JoinIrreducible> contracted_jis(const FiniteLattice& L, const Partition& theta) {
    std::vector<JoinIrreducible> out;
    for (auto ji : join_irreducibles(L))
        if (theta[ji.j] == theta[ji.j_star]) out.push_back(ji);
    return out;
}

FiniteLattice quotient(const FiniteLattice& L, const Partition& theta) {
    auto bot = class_bottoms(L, theta);
    const std::size_t m = bot.size();
    std::vector<Cover> covers;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b || !L.leq(bot[a], bot[b])) continue;
            bool cover = true;
            for (std::size_t c = 0; c < m && cover; ++c)
                if (c != a && c != b && L.leq(bot[a], bot[c]) && L.leq(bot[c], bot[b])) cover = false;
            if (cover) covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    std::vector<std::string> labels;
    for (int x : bot) labels.push_back(L.label(x));
    auto Q = FiniteLattice::build(m, covers, std::move(labels));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (Q.join(static_cast<int>(a), static_cast<int>(b)) != theta[L.join(bot[a], bot[b])] ||
                Q.meet(static_cast<int>(a), static_cast<int>(b)) != theta[L.meet(bot[a], bot[b])])
                throw Error("quotient order disagrees with class operations");
    return Q;
}

bool forcing_oracle(const FiniteLattice& L, int j1, int j2) {
    if (!is_join_irreducible(L, j1) || !is_join_irreducible(L, j2))
        throw NotJoinIrreducible("forcing_oracle expects join-irreducible elements");
    auto theta = principal_congruence(L, {j1, L.lower_covers(j1)[0]});
    return theta[j2] == theta[L.lower_covers(j2)[0]];
}

bool cjr_quotient_check(const FiniteLattice& L, const Partition& theta) {
    auto bot = class_bottoms(L, theta);
    auto Q = quotient(L, theta);
    for (std::size_t x = 0; x < L.size(); ++x) {
        auto cjr = cjr_oracle(L, static_cast<int>(x));
        if (!cjr) return false;
        bool contracted = bot[theta[x]] != static_cast<int>(x);
        bool joinand_contracted = false;
        for (int j : *cjr)
            if (theta[j] == theta[L.lower_covers(j)[0]]) joinand_contracted = true;
        if (contracted != joinand_contracted) return false;
        if (contracted) continue;
        auto qc = cjr_oracle(Q, theta[x]);
        if (!qc) return false;
        std::vector<int> mapped;
        for (int j : *cjr) mapped.push_back(theta[j]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != *qc) return false;
    }
    return true;
}

namespace {

struct Invariant {
    int rank, down, up, lower, upper;
    auto operator<=>(const Invariant&) const = default;
};

std::vector<Invariant> invariants(const FiniteLattice& L) {
    std::vector<Invariant> inv(L.size());
    for (std::size_t x = 0; x < L.size(); ++x) {
        int d = 0, u = 0;
        for (std::size_t y = 0; y < L.size(); ++y) {
            d += L.leq(y, x);
            u += L.leq(x, y);
        }
        inv[x] = {L.rank(x), d, u, static_cast<int>(L.lower_covers(x).size()),
                  static_cast<int>(L.upper_covers(x).size())};
    }
    return inv;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
    if (a.size() != b.size() || a.covers().size() != b.covers().size()) return std::nullopt;
    auto ia = invariants(a), ib = invariants(b);
    {
        auto sa = ia, sb = ib;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    const std::size_t n = a.size();
    std::vector<int> order;
    {
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        q.push(a.bottom());
        seen[a.bottom()] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            order.push_back(x);
            for (int y : a.upper_covers(x))
                if (!seen[y]) { seen[y] = 1; q.push(y); }
        }
    }
    std::vector<int> f(n, -1), used(n, 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t k) {
        if (k == n) return true;
        int x = order[k];
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || !(ia[x] == ib[y])) continue;
            bool ok = true;
            for (std::size_t t = 0; t < k && ok; ++t) {
                int z = order[t];
                if (a.leq(z, x) != b.leq(f[z], static_cast<int>(y)) ||
                    a.leq(x, z) != b.leq(static_cast<int>(y), f[z]))
                    ok = false;
            }
            if (!ok) continue;
            f[x] = static_cast<int>(y);
            used[y] = 1;
            if (rec(k + 1)) return true;
            used[y] = 0;
            f[x] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return f;
}

bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
    return find_isomorphism(a, b).has_value();
}

}  // namespace arclat
