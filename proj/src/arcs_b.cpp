#include "arclat/arcs_b.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

namespace arclat {

namespace {

bool contains(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> negated(const std::vector<int>& v) {
    std::vector<int> out;
    for (int x : v) out.push_back(-x);
    return sorted(out);
}

std::vector<int> open_range(int lo, int hi) {
    std::vector<int> out;
    for (int x = lo + 1; x < hi; ++x)
        if (x != 0) out.push_back(x);
    return out;
}

std::string set_str(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

// Arc on the symmetric ground with given endpoints and right set; the rest goes left.
ArcA sym_arc(int p, int q, const std::vector<int>& R) {
    ArcA a{p, q, {}, {}};
    for (int x : open_range(p, q)) (contains(R, x) ? a.R : a.L).push_back(x);
    return a;
}

}  // namespace

TypeBArc TypeBArc::ordinary(int p, int q, std::vector<int> R) {
    if (p < 1 || p >= q) throw InvalidArc("ordinary arc needs 0 < p < q");
    R = sorted(R);
    TypeBArc a{ArcKind::Ordinary, p, q, {}, {}};
    for (int x = p + 1; x < q; ++x) (contains(R, x) ? a.R : a.L).push_back(x);
    if (a.R.size() != R.size()) throw InvalidArc("right set outside (p,q)");
    return a;
}

TypeBArc TypeBArc::orbifold(int q, std::vector<int> R) {
    if (q < 1) throw InvalidArc("orbifold arc needs a positive top");
    R = sorted(R);
    TypeBArc a{ArcKind::Orbifold, 0, q, {}, {}};
    for (int x = 1; x < q; ++x) (contains(R, x) ? a.R : a.L).push_back(x);
    if (a.R.size() != R.size()) throw InvalidArc("right set outside (0,q)");
    return a;
}

TypeBArc TypeBArc::long_arc(int left, int right, std::vector<int> L, std::vector<int> R) {
    L = sorted(L);
    R = sorted(R);
    if (!validate_long_arc(left, right, L, R))
        throw InvalidArc("long arc data " + std::to_string(left) + "," + std::to_string(right) + " L=" +
                         set_str(L) + " R=" + set_str(R) + " is not drawable");
    return {ArcKind::Long, left, right, L, R};
}

std::vector<int> TypeBArc::between() const {
    std::vector<int> out;
    if (kind != ArcKind::Long) return out;
    for (int x = 1; x < std::min(p, q); ++x)
        if (!contains(L, x) && !contains(R, x)) out.push_back(x);
    return out;
}

std::string TypeBArc::str() const {
    switch (kind) {
        case ArcKind::Ordinary:
            return "ord(" + std::to_string(p) + "," + std::to_string(q) + ",R=" + set_str(R) + ")";
        case ArcKind::Orbifold:
            return "orb(" + std::to_string(q) + ",R=" + set_str(R) + ")";
        case ArcKind::Long:
            return "long(" + std::to_string(p) + "," + std::to_string(q) + ",L=" + set_str(L) + ",R=" +
                   set_str(R) + ")";
    }
    return {};
}

ArcA antipode(const ArcA& a) { return {-a.q, -a.p, negated(a.R), negated(a.L)}; }

std::vector<ArcA> SymArcOrPair::arcs() const {
    if (kind == Kind::Symmetric) return {rep};
    return {rep, antipode(rep)};
}

SymArcOrPair make_sym(const ArcA& a) {
    if (a.p == -a.q) {
        if (antipode(a) != a) throw NotSymmetric("arc " + a.str() + " spans ±p but is not symmetric");
        return {SymArcOrPair::Kind::Symmetric, a};
    }
    ArcA b = antipode(a);
    if (a.p > 0 || a.q < 0) return {SymArcOrPair::Kind::NonOverlapping, a.p > 0 ? a : b};
    if (!compatible_A(a, b)) throw InvalidArc("arc " + a.str() + " crosses its antipode");
    auto rel = relation_A(a, b);
    if (rel == Relation::Right) return {SymArcOrPair::Kind::Overlapping, a};
    if (rel == Relation::Left) return {SymArcOrPair::Kind::Overlapping, b};
    throw InvalidArc("overlapping pair without a forced left/right relation");
}

TypeBArc fold_phi(const SymArcOrPair& s) {
    const ArcA& a = s.rep;
    switch (s.kind) {
        case SymArcOrPair::Kind::Symmetric: {
            TypeBArc out{ArcKind::Orbifold, 0, a.q, {}, {}};
            for (int x : a.L)
                if (x > 0) out.L.push_back(x);
            for (int x : a.R)
                if (x > 0) out.R.push_back(x);
            return out;
        }
        case SymArcOrPair::Kind::NonOverlapping:
            return {ArcKind::Ordinary, a.p, a.q, a.L, a.R};
        case SymArcOrPair::Kind::Overlapping: {
            TypeBArc out{ArcKind::Long, -a.p, a.q, {}, {}};
            for (int x : a.R) (x < 0 ? out.L : out.R).push_back(std::abs(x));
            out.L = sorted(out.L);
            out.R = sorted(out.R);
            return out;
        }
    }
    throw Error("unreachable");
}

SymArcOrPair unfold_phi_inv(const TypeBArc& a) {
    switch (a.kind) {
        case ArcKind::Orbifold: {
            auto R = a.R;
            for (int x : a.L) R.push_back(-x);
            return {SymArcOrPair::Kind::Symmetric, sym_arc(-a.q, a.q, sorted(R))};
        }
        case ArcKind::Ordinary:
            return {SymArcOrPair::Kind::NonOverlapping, ArcA{a.p, a.q, a.L, a.R}};
        case ArcKind::Long: {
            auto R = a.R;
            for (int x : a.L) R.push_back(-x);
            return {SymArcOrPair::Kind::Overlapping, sym_arc(-a.p, a.q, sorted(R))};
        }
    }
    throw Error("unreachable");
}

std::vector<ArcA> unfold_arcs(const TypeBArc& a) { return unfold_phi_inv(a).arcs(); }

bool validate_long_arc(int left, int right, const std::vector<int>& L, const std::vector<int>& R) {
    if (left < 1 || right < 1 || left == right) return false;
    for (int x : L)
        if (x < 1 || x >= left || contains(R, x)) return false;
    for (int x : R)
        if (x < 1 || x >= right) return false;
    auto R_sym = sorted(R);
    for (int x : L) R_sym.push_back(-x);
    ArcA a = sym_arc(-left, right, sorted(R_sym));
    ArcA b = antipode(a);
    return compatible_A(a, b) && relation_A(a, b) == Relation::Right;
}

void DiagramB::canonicalize() { std::sort(arcs.begin(), arcs.end()); }

DiagramB delta_B_orb(const SignedPermutation& pi) {
    auto D = delta_A(unfold(pi));
    DiagramB out;
    out.n = pi.n();
    std::set<ArcA> seen;
    for (const auto& a : D.arcs) {
        if (seen.count(a)) continue;
        auto s = make_sym(a);
        for (const auto& b : s.arcs()) seen.insert(b);
        out.arcs.push_back(fold_phi(s));
    }
    out.canonicalize();
    return out;
}

DiagramB delta_B_orb_direct(const SignedPermutation& pi) {
    Permutation word;
    word.one_line.push_back(0);
    for (int v : pi.one_line) word.one_line.push_back(v);
    auto D = delta_A(word);
    DiagramB out;
    out.n = pi.n();
    // Rotated material ends up just left of the fixed positive half-line.
    auto values_in = [&](int lo, int hi, int sign) {
        std::vector<int> v;
        for (int x : pi.one_line)
            if (x * sign > 0 && std::abs(x) > lo && std::abs(x) < hi) v.push_back(std::abs(x));
        return v;
    };
    for (const auto& a : D.arcs) {
        if (a.p > 0) {
            auto L = a.L;
            for (int x : values_in(a.p, a.q, -1)) L.push_back(x);
            out.arcs.push_back({ArcKind::Ordinary, a.p, a.q, sorted(L), a.R});
        } else if (a.q <= 0) {
            auto R = negated(a.L);
            for (int x : values_in(-a.q, -a.p, 1)) R.push_back(x);
            auto kind = a.q == 0 ? ArcKind::Orbifold : ArcKind::Ordinary;
            out.arcs.push_back({kind, -a.q, -a.p, negated(a.R), sorted(R)});
        } else {
            TypeBArc b{ArcKind::Long, -a.p, a.q, {}, {}};
            for (int x : a.R) {
                if (x < 0) b.L.push_back(-x);
                if (x > 0) b.R.push_back(x);
            }
            b.L = sorted(b.L);
            out.arcs.push_back(b);
        }
    }
    out.canonicalize();
    return out;
}

SignedPermutation delta_B_orb_inv(const DiagramB& D) {
    DiagramA A;
    A.ground = symmetric_ground(D.n);
    for (const auto& a : D.arcs) {
        if (a.q > D.n) throw NotADiagram("arc endpoint beyond n");
        for (const auto& b : unfold_arcs(a)) A.arcs.push_back(b);
    }
    A.canonicalize();
    if (std::adjacent_find(A.arcs.begin(), A.arcs.end()) != A.arcs.end())
        throw NotADiagram("repeated arc");
    return fold(delta_A_inv(A));
}

SignedPermutation arc_to_ji_B(const TypeBArc& a, int n) {
    SignedPermutation out;
    auto& w = out.one_line;
    auto push_all = [&](const std::vector<int>& v) { w.insert(w.end(), v.begin(), v.end()); };
    auto tail = [&](int from) {
        for (int x = from; x <= n; ++x) w.push_back(x);
    };
    switch (a.kind) {
        case ArcKind::Orbifold:
            w.push_back(-a.q);
            push_all(negated(a.L));
            push_all(a.R);
            tail(a.q + 1);
            break;
        case ArcKind::Ordinary:
            for (int x = 1; x < a.p; ++x) w.push_back(x);
            push_all(a.L);
            w.push_back(a.q);
            w.push_back(a.p);
            push_all(a.R);
            tail(a.q + 1);
            break;
        case ArcKind::Long:
            push_all(a.between());
            if (a.p < a.q) {
                for (int x = a.p + 1; x < a.q; ++x)
                    if (!contains(a.R, x)) w.push_back(x);
                w.push_back(a.q);
                w.push_back(-a.p);
                push_all(negated(a.L));
                push_all(a.R);
                tail(a.q + 1);
            } else {
                w.push_back(a.q);
                w.push_back(-a.p);
                push_all(negated(a.L));
                push_all(a.R);
                for (int x = a.q + 1; x < a.p; ++x)
                    if (!contains(a.L, x)) w.push_back(x);
                tail(a.p + 1);
            }
            break;
    }
    if (static_cast<int>(w.size()) != n || !is_valid(out))
        throw InvalidArc("arc " + a.str() + " does not fit on " + std::to_string(n) + " points");
    return out;
}

bool is_join_irreducible_B(const SignedPermutation& pi) {
    const auto& w = pi.one_line;
    if (w.empty()) return false;
    int descents = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) descents += w[i] > w[i + 1];
    if (w[0] < 0) return descents == 0;
    return descents == 1;
}

TypeBArc ji_to_arc_B(const SignedPermutation& pi) {
    if (!is_join_irreducible_B(pi))
        throw NotJoinIrreducible(to_string(pi.one_line) + " is not join-irreducible");
    return delta_B_orb(pi).arcs.at(0);
}

bool compatible_B(const TypeBArc& a, const TypeBArc& b) {
    if (a == b) return false;
    for (const auto& x : unfold_arcs(a))
        for (const auto& y : unfold_arcs(b))
            if (!compatible_A(x, y)) return false;
    return true;
}

bool is_diagram_B(const std::vector<TypeBArc>& arcs) {
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j)
            if (!compatible_B(arcs[i], arcs[j])) return false;
    return true;
}

std::vector<TypeBArc> enumerate_arcs_B(int n) {
    std::vector<TypeBArc> out;
    for (const auto& a : enumerate_arcs_A(n)) out.push_back({ArcKind::Ordinary, a.p, a.q, a.L, a.R});
    for (int q = 1; q <= n; ++q)
        for (int mask = 0; mask < (1 << (q - 1)); ++mask) {
            std::vector<int> R;
            for (int x = 1; x < q; ++x)
                if (mask & (1 << (x - 1))) R.push_back(x);
            out.push_back(TypeBArc::orbifold(q, R));
        }
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) {
            if (p == q) continue;
            const int m = std::max(p, q) - 1;
            // each point below max(p,q) is in L, R, or neither (subject to range)
            std::vector<int> choice(m, 0);
            std::function<void(int)> rec = [&](int x) {
                if (x > m) {
                    std::vector<int> L, R;
                    for (int y = 1; y <= m; ++y) {
                        if (choice[y - 1] == 1) L.push_back(y);
                        if (choice[y - 1] == 2) R.push_back(y);
                    }
                    if (validate_long_arc(p, q, L, R)) out.push_back({ArcKind::Long, p, q, L, R});
                    return;
                }
                for (int c = 0; c < 3; ++c) {
                    if (c == 1 && x >= p) continue;
                    if (c == 2 && x >= q) continue;
                    choice[x - 1] = c;
                    rec(x + 1);
                }
            };
            rec(1);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DiagramB> enumerate_diagrams_B(int n) {
    if (n > kMaxDiagramRankB) throw ScopeExceeded("diagram enumeration limited to n <= 5");
    auto arcs = enumerate_arcs_B(n);
    const std::size_t k = arcs.size();
    std::vector<Bitset> adj(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (compatible_B(arcs[i], arcs[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }
    std::vector<DiagramB> out;
    std::vector<std::size_t> cur;
    // Each clique is emitted once: extend only by candidates after the last chosen arc.
    std::function<void(const Bitset&)> rec = [&](const Bitset& cand) {
        DiagramB d{n, {}};
        for (auto c : cur) d.arcs.push_back(arcs[c]);
        out.push_back(std::move(d));
        for (long i = cand.first(); i >= 0; i = cand.next(static_cast<std::size_t>(i))) {
            Bitset next = cand & adj[i];
            Bitset later(k);
            for (long j = next.next(static_cast<std::size_t>(i)); j >= 0; j = next.next(static_cast<std::size_t>(j)))
                later.set(static_cast<std::size_t>(j));
            cur.push_back(static_cast<std::size_t>(i));
            rec(later);
            cur.pop_back();
        }
    };
    Bitset all(k);
    for (std::size_t i = 0; i < k; ++i) all.set(i);
    rec(all);
    for (auto& d : out) d.canonicalize();
    std::sort(out.begin(), out.end(), [](const DiagramB& a, const DiagramB& b) { return a.arcs < b.arcs; });
    return out;
}

ShardDescriptorB shard_descriptor_B(const TypeBArc& a) {
    switch (a.kind) {
        case ArcKind::Ordinary:
            return {ShardDescriptorB::Equality::Equal, a.p, a.q, a.R, a.L};
        case ArcKind::Orbifold:
            return {ShardDescriptorB::Equality::Zero, 0, a.q, a.R, a.L};
        case ArcKind::Long: {
            auto lower = a.R;
            for (int x : a.L) lower.push_back(-x);
            lower = sorted(lower);
            std::vector<int> upper;
            for (int x : open_range(-a.p, a.q))
                if (!contains(lower, x)) upper.push_back(x);
            return {ShardDescriptorB::Equality::Negated, a.p, a.q, lower, upper};
        }
    }
    throw Error("unreachable");
}

TypeBArc mirror_arc(const TypeBArc& a) {
    if (a.kind == ArcKind::Long) return {ArcKind::Long, a.q, a.p, a.R, a.L};
    return {a.kind, a.p, a.q, a.R, a.L};
}

}  // namespace arclat
