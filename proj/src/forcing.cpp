#include "arclat/forcing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace arclat {

namespace {

bool contains(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

std::vector<int> restrict_to(const std::vector<int>& v, int lo, int hi) {
    std::vector<int> out;
    for (int x : v)
        if (x > lo && x < hi) out.push_back(x);
    return out;
}

std::vector<int> complement_in(int lo, int hi, const std::vector<int>& v) {
    std::vector<int> out;
    for (int x = lo + 1; x < hi; ++x)
        if (x != 0 && !contains(v, x)) out.push_back(x);
    return out;
}

// Subarc of the single type-A arc a, cut between p' and q'.
bool cut_from(const ArcA& sub, const ArcA& a) {
    return a.p <= sub.p && sub.q <= a.q && restrict_to(a.R, sub.p, sub.q) == sub.R;
}

}  // namespace

bool is_subarc_B(const TypeBArc& s, const TypeBArc& a) {
    if (a.kind != ArcKind::Long) {
        if (s.kind == ArcKind::Long) return false;
        if (s.kind == ArcKind::Orbifold && a.kind != ArcKind::Orbifold) return false;
        return a.p <= s.p && s.q <= a.q && restrict_to(a.R, s.p, s.q) == s.R;
    }
    switch (s.kind) {
        case ArcKind::Ordinary:
            return (s.q <= a.p && restrict_to(a.L, s.p, s.q) == s.L) ||
                   (s.q <= a.q && restrict_to(a.R, s.p, s.q) == s.R);
        case ArcKind::Orbifold:
            return s.q <= std::min(a.p, a.q) && restrict_to(a.L, 0, s.q) == s.L &&
                   restrict_to(a.R, 0, s.q) == s.R;
        case ArcKind::Long:
            return s.p <= a.p && s.q <= a.q && restrict_to(a.L, 0, s.p) == s.L &&
                   restrict_to(a.R, 0, s.q) == s.R;
    }
    return false;
}

bool is_subarc_sym(const SymArcOrPair& S, const SymArcOrPair& A) {
    using K = SymArcOrPair::Kind;
    const ArcA& a = A.rep;
    if (A.kind == K::Symmetric) {
        if (S.kind == K::Symmetric) return S.rep.q <= a.q && restrict_to(a.R, S.rep.p, S.rep.q) == S.rep.R;
        if (S.kind == K::NonOverlapping) return S.rep.p > 0 && cut_from(S.rep, a);
        return false;
    }
    if (S.kind == K::Symmetric) {
        const ArcA& s = S.rep;
        if (!(a.p <= s.p && s.q <= a.q)) return false;
        auto r = restrict_to(a.R, s.p, s.q);
        return r == s.R && restrict_to(antipode(a).R, s.p, s.q) == s.R;
    }
    if (S.kind == K::Overlapping) return cut_from(S.rep, a);
    for (const auto& s : S.arcs())
        if (cut_from(s, a)) return true;
    return false;
}

bool is_loose_subarc(const TypeBArc& s, const TypeBArc& a) {
    if (is_subarc_B(s, a)) return true;
    if (s.kind != ArcKind::Long) return false;
    if (a.kind == ArcKind::Orbifold)
        return s.p <= a.q && s.q <= a.q && restrict_to(a.L, 0, s.p) == s.L && restrict_to(a.R, 0, s.q) == s.R;
    if (a.kind == ArcKind::Long)
        return s.p <= a.q && s.q <= a.p && complement_in(0, s.p, a.R) == s.L &&
               complement_in(0, s.q, a.L) == s.R && s.between().empty();
    return false;
}

namespace {

// Completion of a1 inside a2 after the shared endpoint: the arc joining the two free endpoints.
ArcA completion(const ArcA& a1, const ArcA& a2, int n) {
    int p = a1.p == a2.p ? a1.q : a2.p;
    int q = a1.p == a2.p ? a2.q : a1.p;
    std::vector<int> R;
    for (int x : a2.R)
        if (x > p && x < q) R.push_back(x);
    return make_arc_a(p, q, R, symmetric_ground(n));
}

int rank_of(const TypeBArc& a) {
    int m = std::max(a.p, a.q);
    for (int x : a.L) m = std::max(m, x);
    for (int x : a.R) m = std::max(m, x);
    return m;
}

}  // namespace

bool arrow_B(const TypeBArc& a1, const TypeBArc& a2) {
    if (a1 == a2 || !is_subarc_B(a1, a2)) return false;
    const bool orb1 = a1.is_orbifold(), orb2 = a2.is_orbifold();
    if (!orb1 && !orb2) {
        int shared = (a1.p == a2.p || a1.p == a2.q) + (a1.q == a2.p || a1.q == a2.q);
        if (shared == 1) {
            int n = std::max(rank_of(a1), rank_of(a2));
            for (const auto& u1 : unfold_arcs(a1))
                for (const auto& u2 : unfold_arcs(a2)) {
                    if (!arrow_A(u1, u2)) continue;
                    ArcA c = completion(u1, u2, n);
                    try {
                        if (compatible_B(fold_phi(make_sym(c)), a1)) return true;
                    } catch (const Error&) {
                    }
                }
        }
    }
    if (orb1 && orb2 && a1.q != a2.q) return true;
    if (orb2 && a1.is_ordinary() && a1.q == a2.q) return true;
    if (a2.is_long() && a2.between().empty()) {
        int lo = std::min(a2.p, a2.q), hi = std::max(a2.p, a2.q);
        if (orb1 && a1.q == lo) return true;
        if (a1.is_ordinary() && a1.p == lo && a1.q == hi) return true;
    }
    return false;
}

const std::vector<TypeBArc>& all_arcs_B(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<TypeBArc>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<std::vector<TypeBArc>>(enumerate_arcs_B(n));
    return *slot;
}

std::vector<ArrowEdge> arrows_B(int n) {
    std::vector<ArrowEdge> out;
    const auto& arcs = all_arcs_B(n);
    for (const auto& a : arcs)
        for (const auto& b : arcs)
            if (arrow_B(a, b)) out.push_back({a, b});
    return out;
}

bool is_up_closed(const ArcCongruence& theta) {
    for (const auto& a : theta.contracted)
        for (const auto& b : all_arcs_B(theta.n))
            if (is_subarc_B(a, b) && !theta.contracts(b)) return false;
    return true;
}

ArcCongruence congruence_from_generators(int n, const std::vector<TypeBArc>& gens) {
    ArcCongruence out{n, {}};
    for (const auto& b : all_arcs_B(n))
        for (const auto& g : gens)
            if (is_subarc_B(g, b)) {
                out.contracted.insert(b);
                break;
            }
    return out;
}

ArcCongruenceA congruence_from_generators_A(const std::vector<int>& ground, const std::vector<ArcA>& gens) {
    ArcCongruenceA out{ground, {}};
    for (const auto& b : enumerate_arcs_A(ground))
        for (const auto& g : gens)
            if (is_subarc_A(g, b)) {
                out.contracted.insert(b);
                break;
            }
    return out;
}

std::vector<TypeBArc> uncontracted_arcs(const ArcCongruence& theta) {
    std::vector<TypeBArc> out;
    for (const auto& a : all_arcs_B(theta.n))
        if (!theta.contracts(a)) out.push_back(a);
    return out;
}

std::vector<DiagramB> diagrams_over(int n, const std::vector<TypeBArc>& arcs) {
    const std::size_t k = arcs.size();
    std::vector<std::vector<char>> ok(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) ok[i][j] = ok[j][i] = compatible_B(arcs[i], arcs[j]);
    std::vector<DiagramB> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k) {
            DiagramB d{n, {}};
            for (auto c : cur) d.arcs.push_back(arcs[c]);
            d.canonicalize();
            out.push_back(std::move(d));
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

std::vector<SignedPermutation> quotient_elements(const ArcCongruence& theta) {
    std::vector<SignedPermutation> out;
    for (const auto& d : diagrams_over(theta.n, uncontracted_arcs(theta))) out.push_back(delta_B_orb_inv(d));
    std::sort(out.begin(), out.end());
    return out;
}

Partition element_partition(const ArcCongruence& theta, const WeakOrder& W) {
    const auto& L = W.lattice;
    std::vector<int> bottoms;
    for (const auto& p : quotient_elements(theta)) bottoms.push_back(W.id(p.one_line));
    std::map<int, int> cls;
    for (int b : bottoms) cls.emplace(b, static_cast<int>(cls.size()));
    Partition part(L.size());
    for (std::size_t x = 0; x < L.size(); ++x) {
        std::vector<int> below;
        for (int b : bottoms)
            if (L.leq(b, static_cast<int>(x))) below.push_back(b);
        int m = L.join_all(below);
        if (!cls.count(m) || !L.leq(m, static_cast<int>(x)))
            throw Error("quotient elements below an element have no largest member");
        part[x] = cls[m];
    }
    return normalize(part);
}

FiniteLattice quotient_lattice(const ArcCongruence& theta) {
    auto W = weak_order_lattice({Family::B, theta.n});
    const auto& L = W.lattice;
    std::vector<int> ids;
    std::vector<std::string> labels;
    for (const auto& p : quotient_elements(theta)) {
        ids.push_back(W.id(p.one_line));
        labels.push_back(to_string(p.one_line));
    }
    const std::size_t m = ids.size();
    std::vector<Cover> covers;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b || !L.leq(ids[a], ids[b])) continue;
            bool cover = true;
            for (std::size_t c = 0; c < m && cover; ++c)
                if (c != a && c != b && L.leq(ids[a], ids[c]) && L.leq(ids[c], ids[b])) cover = false;
            if (cover) covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return FiniteLattice::build(m, covers, std::move(labels));
}

ArcCongruence congruence_meet(const ArcCongruence& a, const ArcCongruence& b) {
    ArcCongruence out{a.n, {}};
    std::set_intersection(a.contracted.begin(), a.contracted.end(), b.contracted.begin(), b.contracted.end(),
                          std::inserter(out.contracted, out.contracted.end()));
    return out;
}

ArcCongruence congruence_join(const ArcCongruence& a, const ArcCongruence& b) {
    ArcCongruence out{a.n, a.contracted};
    out.contracted.insert(b.contracted.begin(), b.contracted.end());
    return out;
}

ArcCongruence identity_congruence(int n) { return {n, {}}; }

ArcCongruence full_congruence(int n) {
    const auto& arcs = all_arcs_B(n);
    return {n, std::set<TypeBArc>(arcs.begin(), arcs.end())};
}

ArcCongruence meet_irreducible_congruence(int n, const TypeBArc& alpha) {
    ArcCongruence out{n, {}};
    for (const auto& b : all_arcs_B(n))
        if (!is_subarc_B(b, alpha)) out.contracted.insert(b);
    return out;
}

bool is_in_conA(const ArcCongruence& theta) {
    const auto& arcs = all_arcs_B(theta.n);
    for (const auto& u : arcs) {
        if (theta.contracts(u)) continue;
        for (const auto& s : arcs)
            if (theta.contracts(s) && is_loose_subarc(s, u)) return false;
    }
    return true;
}

ArcCongruenceA lift_to_symmetric(const ArcCongruence& theta) {
    if (!is_in_conA(theta)) throw NotInConA("congruence is not a restriction of a symmetric congruence");
    std::vector<ArcA> gens;
    for (const auto& a : theta.contracted)
        for (const auto& u : unfold_arcs(a)) gens.push_back(u);
    auto lift = congruence_from_generators_A(symmetric_ground(theta.n), gens);
    if (restrict_to_B(lift, theta.n) != theta)
        throw Error("lifted congruence does not restrict to the original");
    return lift;
}

ArcCongruence restrict_to_B(const ArcCongruenceA& theta, int n) {
    ArcCongruence out{n, {}};
    for (const auto& b : all_arcs_B(n))
        for (const auto& u : unfold_arcs(b))
            if (theta.contracted.count(u)) {
                out.contracted.insert(b);
                break;
            }
    return out;
}

bool is_symmetric(const ArcCongruenceA& theta) {
    for (const auto& a : theta.contracted)
        if (!theta.contracted.count(rotate_arc(a, theta.ground))) return false;
    return true;
}

}  // namespace arclat
