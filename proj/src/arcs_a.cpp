#include "arclat/arcs_a.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace arclat {

namespace {

bool contains(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

std::string set_str(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

}  // namespace

bool ArcA::interior(int x) const { return contains(L, x) || contains(R, x); }

int ArcA::side(int x) const {
    if (contains(L, x)) return 1;
    if (contains(R, x)) return -1;
    return 0;
}

std::string ArcA::str() const {
    std::string s = "(" + std::to_string(p) + "," + std::to_string(q);
    if (!L.empty()) s += ",L=" + set_str(L);
    if (!R.empty()) s += ",R=" + set_str(R);
    return s + ")";
}

std::vector<int> range_ground(int n) {
    std::vector<int> g(n);
    std::iota(g.begin(), g.end(), 1);
    return g;
}

std::vector<int> symmetric_ground(int n) {
    std::vector<int> g;
    for (int i = n; i >= 1; --i) g.push_back(-i);
    for (int i = 1; i <= n; ++i) g.push_back(i);
    return g;
}

ArcA make_arc_a(int p, int q, std::vector<int> R, const std::vector<int>& ground) {
    if (p >= q) throw InvalidArc("arc needs bottom < top");
    if (!contains(ground, p) || !contains(ground, q)) throw InvalidArc("arc endpoint outside ground set");
    std::sort(R.begin(), R.end());
    ArcA a{p, q, {}, {}};
    for (int x : ground) {
        if (x <= p || x >= q) continue;
        (contains(R, x) ? a.R : a.L).push_back(x);
    }
    if (a.R.size() != R.size()) throw InvalidArc("right set must lie strictly between the endpoints");
    return a;
}

ArcA make_arc_a(int p, int q, std::vector<int> R, int n) {
    return make_arc_a(p, q, std::move(R), range_ground(n));
}

void DiagramA::canonicalize() {
    std::sort(ground.begin(), ground.end());
    std::sort(arcs.begin(), arcs.end());
}

DiagramA delta_A(const Permutation& pi) {
    DiagramA D;
    D.ground = pi.ground();
    const auto& v = pi.one_line;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] < v[i + 1]) continue;
        ArcA a{v[i + 1], v[i], {}, {}};
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] <= a.p || v[j] >= a.q) continue;
            (j < i ? a.L : a.R).push_back(v[j]);
        }
        std::sort(a.L.begin(), a.L.end());
        std::sort(a.R.begin(), a.R.end());
        D.arcs.push_back(std::move(a));
    }
    D.canonicalize();
    return D;
}

Permutation delta_A_inv(const DiagramA& D) {
    const auto& g = D.ground;
    const std::size_t m = g.size();
    auto idx = [&](int x) {
        auto it = std::lower_bound(g.begin(), g.end(), x);
        if (it == g.end() || *it != x) throw NotADiagram("arc endpoint outside ground set");
        return static_cast<std::size_t>(it - g.begin());
    };
    std::vector<std::size_t> comp(m);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    for (const auto& a : D.arcs) comp[find(idx(a.p))] = find(idx(a.q));

    std::vector<std::size_t> block_of(m);
    std::vector<std::vector<int>> blocks;
    {
        std::vector<long> id(m, -1);
        for (std::size_t k = 0; k < m; ++k) {
            auto r = find(k);
            if (id[r] < 0) {
                id[r] = static_cast<long>(blocks.size());
                blocks.emplace_back();
            }
            block_of[k] = static_cast<std::size_t>(id[r]);
            blocks[id[r]].push_back(g[k]);
        }
    }
    const std::size_t nb = blocks.size();
    std::vector<std::set<std::size_t>> before(nb);  // before[b]: blocks that must precede b
    for (const auto& a : D.arcs) {
        auto b = block_of[idx(a.p)];
        for (int v : a.L) {
            auto c = block_of[idx(v)];
            if (c == b) throw NotADiagram("arc passes a point of its own block");
            before[b].insert(c);
        }
        for (int v : a.R) {
            auto c = block_of[idx(v)];
            if (c == b) throw NotADiagram("arc passes a point of its own block");
            before[c].insert(b);
        }
    }
    Permutation out;
    std::vector<char> done(nb, 0);
    for (std::size_t step = 0; step < nb; ++step) {
        long pick = -1;
        for (std::size_t b = 0; b < nb; ++b) {
            if (done[b]) continue;
            bool ready = std::all_of(before[b].begin(), before[b].end(), [&](std::size_t c) { return done[c]; });
            if (ready && (pick < 0 || blocks[b].front() < blocks[pick].front())) pick = static_cast<long>(b);
        }
        if (pick < 0) throw NotADiagram("arcs impose cyclic block order");
        done[pick] = 1;
        for (auto it = blocks[pick].rbegin(); it != blocks[pick].rend(); ++it) out.one_line.push_back(*it);
    }
    DiagramA check = D;
    check.canonicalize();
    if (delta_A(out) != check) throw NotADiagram("arc set is not a noncrossing arc diagram");
    return out;
}

Relation relation_A(const ArcA& a, const ArcA& b) {
    int lo = std::max(a.p, b.p), hi = std::min(a.q, b.q);
    if (lo >= hi) return Relation::None;
    std::set<int> levels;
    for (const ArcA* arc : {&a, &b}) {
        for (int x : {arc->p, arc->q})
            if (x >= lo && x <= hi) levels.insert(x);
        for (const auto* s : {&arc->L, &arc->R})
            for (int x : *s)
                if (x >= lo && x <= hi) levels.insert(x);
    }
    int forced = 0;
    for (int x : levels) {
        int sa = a.side(x), sb = b.side(x);
        int r = 0;
        if (sa != 0 && sb != 0) {
            if (sa != sb) r = sa;
        } else if (sa == 0 && sb != 0) {
            r = -sb;
        } else if (sb == 0 && sa != 0) {
            r = sa;
        }
        if (r == 0) continue;
        if (forced != 0 && forced != r) return Relation::Conflict;
        forced = r;
    }
    if (forced > 0) return Relation::Right;
    if (forced < 0) return Relation::Left;
    return Relation::None;
}

bool compatible_A(const ArcA& a, const ArcA& b) {
    if (a.p == b.p || a.q == b.q) return false;
    return relation_A(a, b) != Relation::Conflict;
}

bool is_diagram_A(const std::vector<ArcA>& arcs) {
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j)
            if (!compatible_A(arcs[i], arcs[j])) return false;
    return true;
}

Permutation arc_to_ji_A(const ArcA& a, const std::vector<int>& ground) {
    Permutation out;
    for (int x : ground)
        if (x < a.p) out.one_line.push_back(x);
    for (int x : a.L) out.one_line.push_back(x);
    out.one_line.push_back(a.q);
    out.one_line.push_back(a.p);
    for (int x : a.R) out.one_line.push_back(x);
    for (int x : ground)
        if (x > a.q) out.one_line.push_back(x);
    return out;
}

Permutation arc_to_ji_A(const ArcA& a, int n) { return arc_to_ji_A(a, range_ground(n)); }

bool is_subarc_A(const ArcA& s, const ArcA& a) {
    if (!(a.q >= s.q && s.q > s.p && s.p >= a.p)) return false;
    std::vector<int> r;
    for (int x : a.R)
        if (x > s.p && x < s.q) r.push_back(x);
    return r == s.R;
}

bool arrow_A(const ArcA& a1, const ArcA& a2) {
    if (!is_subarc_A(a1, a2)) return false;
    return (a1.p == a2.p) != (a1.q == a2.q);
}

ShardDescriptorA shard_descriptor_A(const ArcA& a) { return {a.p, a.q, a.R, a.L}; }

ArcA rotate_arc(const ArcA& a, const std::vector<int>& ground) {
    const std::size_t m = ground.size();
    auto img = [&](int x) {
        auto k = static_cast<std::size_t>(std::lower_bound(ground.begin(), ground.end(), x) - ground.begin());
        return ground[m - 1 - k];
    };
    ArcA out{img(a.q), img(a.p), {}, {}};
    for (int x : a.R) out.L.push_back(img(x));
    for (int x : a.L) out.R.push_back(img(x));
    std::sort(out.L.begin(), out.L.end());
    std::sort(out.R.begin(), out.R.end());
    return out;
}

DiagramA rotate_half_turn(const DiagramA& D) {
    DiagramA out;
    out.ground = D.ground;
    for (const auto& a : D.arcs) out.arcs.push_back(rotate_arc(a, D.ground));
    out.canonicalize();
    return out;
}

std::vector<ArcA> enumerate_arcs_A(const std::vector<int>& ground) {
    std::vector<ArcA> out;
    for (std::size_t i = 0; i < ground.size(); ++i) {
        for (std::size_t j = i + 1; j < ground.size(); ++j) {
            std::vector<int> mid(ground.begin() + i + 1, ground.begin() + j);
            for (std::size_t mask = 0; mask < (std::size_t{1} << mid.size()); ++mask) {
                ArcA a{ground[i], ground[j], {}, {}};
                for (std::size_t k = 0; k < mid.size(); ++k) ((mask >> k) & 1 ? a.R : a.L).push_back(mid[k]);
                out.push_back(std::move(a));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ArcA> enumerate_arcs_A(int n) { return enumerate_arcs_A(range_ground(n)); }

std::vector<std::vector<ArcA>> enumerate_compatible_sets(const std::vector<ArcA>& arcs) {
    const std::size_t k = arcs.size();
    std::vector<std::vector<char>> ok(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) ok[i][j] = ok[j][i] = compatible_A(arcs[i], arcs[j]);
    std::vector<std::vector<ArcA>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k) {
            std::vector<ArcA> s;
            for (auto c : cur) s.push_back(arcs[c]);
            out.push_back(std::move(s));
            return;
        }
        rec(i + 1);
        if (std::all_of(cur.begin(), cur.end(), [&](std::size_t c) { return ok[c][i]; })) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace arclat
