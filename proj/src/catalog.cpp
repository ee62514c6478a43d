#include "arclat/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "arclat/errors.hpp"

namespace arclat {

namespace {

bool has(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::vector<std::vector<int>> below_rank(int n, std::vector<std::vector<int>> words) {
    std::erase_if(words, [n](const std::vector<int>& w) {
        return std::any_of(w.begin(), w.end(), [n](int s) { return s >= n; });
    });
    return words;
}

ArcCongruence from_words(int n, const std::vector<std::vector<int>>& words) {
    std::vector<TypeBArc> gens;
    for (const auto& w : words) gens.push_back(arc_of_word(n, w));
    return congruence_from_generators(n, gens);
}

ArcCongruence from_predicate(int n, const std::function<bool(const TypeBArc&)>& pred) {
    ArcCongruence out{n, {}};
    for (const auto& a : all_arcs_B(n))
        if (pred(a)) out.contracted.insert(a);
    return out;
}

std::string word_str(const std::vector<int>& w) {
    std::string s;
    for (int x : w) s += "s" + std::to_string(x);
    return s.empty() ? "e" : s;
}

void require_equal(const ArcCongruence& generated, const ArcCongruence& closed, const std::string& what) {
    if (generated == closed) return;
    for (const auto& a : all_arcs_B(generated.n))
        if (generated.contracts(a) != closed.contracts(a))
            throw Error(what + ": generated congruence and closed form disagree on " + a.str());
    throw Error(what + ": generated congruence and closed form disagree");
}

std::vector<int> points_where(const Designation& d, Side s, int below) {
    std::vector<int> out;
    for (int i = 1; i < std::min(d.n, below); ++i)
        if (d.at(i) == s) out.push_back(i);
    return out;
}

}  // namespace

std::string Designation::str() const {
    std::string s;
    for (Side x : side) s += x == Side::Left ? 'L' : 'R';
    return s;
}

Designation Designation::all(int n, Side s) { return {n, std::vector<Side>(std::max(n - 1, 0), s)}; }

Designation Designation::alternating(int n, Side odd) {
    Side even = odd == Side::Left ? Side::Right : Side::Left;
    Designation d{n, {}};
    for (int i = 1; i < n; ++i) d.side.push_back(i % 2 ? odd : even);
    return d;
}

std::vector<Designation> all_designations(int n) {
    std::vector<Designation> out;
    int k = std::max(n - 1, 0);
    for (int mask = 0; mask < (1 << k); ++mask) {
        Designation d{n, {}};
        for (int i = 0; i < k; ++i) d.side.push_back((mask >> i) & 1 ? Side::Right : Side::Left);
        out.push_back(d);
    }
    return out;
}

bool passes_right(const TypeBArc& a, int x) {
    switch (a.kind) {
        case ArcKind::Ordinary: return x > a.p && x < a.q && has(a.L, x);
        case ArcKind::Orbifold: return x >= 1 && x < a.q && has(a.L, x);
        case ArcKind::Long: return x >= 1 && (has(a.L, x) || (x < a.q && !has(a.R, x)));
    }
    return false;
}

bool passes_left(const TypeBArc& a, int x) {
    switch (a.kind) {
        case ArcKind::Ordinary: return x > a.p && x < a.q && has(a.R, x);
        case ArcKind::Orbifold: return x >= 1 && x < a.q && has(a.R, x);
        case ArcKind::Long: return x >= 1 && (has(a.R, x) || (x < a.p && !has(a.L, x)));
    }
    return false;
}

TypeBArc arc_of_word(int n, const std::vector<int>& word) {
    auto pi = from_word_B(n, word);
    if (!is_join_irreducible_B(pi)) throw NotJoinIrreducible(word_str(word) + " is not join-irreducible");
    return ji_to_arc_B(pi);
}

bool parabolic_predicate(int n, const std::vector<int>& J, const TypeBArc& a) {
    for (int i : J) {
        if (i < 0 || i >= n) throw Error("simple reflection s" + std::to_string(i) + " out of range");
        if (i == 0) {
            if (!a.is_ordinary()) return true;
            continue;
        }
        switch (a.kind) {
            case ArcKind::Ordinary:
                if (a.p <= i && a.q > i) return true;
                break;
            case ArcKind::Orbifold:
                if (a.q > i) return true;
                break;
            case ArcKind::Long:
                if (std::max(a.p, a.q) > i) return true;
                break;
        }
    }
    return false;
}

ArcCongruence parabolic_congruence(int n, const std::vector<int>& J) {
    std::vector<std::vector<int>> words;
    for (int i : J) {
        if (i < 0 || i >= n) throw Error("simple reflection s" + std::to_string(i) + " out of range");
        words.push_back({i});
    }
    auto generated = from_words(n, words);
    require_equal(generated, from_predicate(n, [&](const TypeBArc& a) { return parabolic_predicate(n, J, a); }),
                  "parabolic");
    return generated;
}

std::string to_string(HomVariant v) {
    switch (v) {
        case HomVariant::Simion: return "simion";
        case HomVariant::Nonhom: return "nonhom";
        case HomVariant::Delta: return "delta";
        case HomVariant::DeltaMirror: return "delta_mirror";
    }
    return "";
}

HomVariant hom_variant_from_string(const std::string& s) {
    for (auto v : {HomVariant::Simion, HomVariant::Nonhom, HomVariant::Delta, HomVariant::DeltaMirror})
        if (to_string(v) == s) return v;
    throw ParseError("unknown homomorphism variant '" + s + "'");
}

std::vector<std::vector<int>> hom_generator_words(HomVariant v) {
    switch (v) {
        case HomVariant::Simion: return {{0, 1}, {1, 0, 1}};
        case HomVariant::Nonhom: return {{0, 1, 0}, {1, 0}, {1, 0, 1, 2}, {2, 1, 0, 1, 2}};
        case HomVariant::Delta: return {{0, 1, 0}, {1, 0, 1}};
        case HomVariant::DeltaMirror: return {{0, 1}, {1, 0}};
    }
    return {};
}

bool hom_predicate(HomVariant v, const TypeBArc& a) {
    switch (v) {
        case HomVariant::Simion: return a.is_long();
        case HomVariant::Nonhom:
            if (a.is_orbifold()) return a.q >= 2;
            return a.is_long() && a.p >= 2 && a.q >= 2;
        case HomVariant::Delta:
            return (a.is_orbifold() && passes_right(a, 1)) || (a.is_long() && a.p != 1);
        case HomVariant::DeltaMirror:
            return (a.is_orbifold() && passes_left(a, 1)) || (a.is_long() && a.q != 1);
    }
    return false;
}

ArcCongruence hom_congruence(int n, HomVariant v) {
    if (n < 2) throw ScopeExceeded("homomorphism congruences need n >= 2");
    auto generated = from_words(n, below_rank(n, hom_generator_words(v)));
    require_equal(generated, from_predicate(n, [v](const TypeBArc& a) { return hom_predicate(v, a); }),
                  to_string(v));
    return generated;
}

std::vector<std::vector<int>> cambrian_generator_words(const Designation& d) {
    std::vector<std::vector<int>> words;
    if (d.n >= 2) {
        if (d.at(1) == Side::Right)
            words = {{0, 1}, {0, 1, 0}};
        else
            words = {{1, 0}, {1, 0, 1}};
    }
    for (int i = 2; i < d.n; ++i) words.push_back(d.at(i) == Side::Right ? std::vector<int>{i - 1, i} : std::vector<int>{i, i - 1});
    return words;
}

bool cambrian_contracts(const Designation& d, const TypeBArc& a) {
    for (int x = 1; x < d.n; ++x) {
        if (d.at(x) == Side::Right && passes_right(a, x)) return true;
        if (d.at(x) == Side::Left && passes_left(a, x)) return true;
    }
    return false;
}

ArcCongruence cambrian_congruence(const Designation& d) {
    if (static_cast<int>(d.side.size()) != std::max(d.n - 1, 0)) throw Error("designation must cover points 1..n-1");
    auto generated = from_words(d.n, cambrian_generator_words(d));
    require_equal(generated, from_predicate(d.n, [&](const TypeBArc& a) { return cambrian_contracts(d, a); }),
                  "cambrian " + d.str());
    return generated;
}

bool cambrian_pattern_test(const SignedPermutation& pi, const Designation& d) {
    auto w = long_one_line(pi);
    const std::size_t m = w.size();
    for (std::size_t i = 0; i < m; ++i) {
        int b = w[i];
        if (!d.is_right(b) && !d.is_left(-b)) continue;
        for (std::size_t j = i + 1; j < m; ++j) {
            if (w[j] <= b) continue;
            for (std::size_t k = j + 1; k < m; ++k)
                if (w[k] < b) return false;
        }
    }
    return true;
}

bool cambrian_pattern_test_312(const SignedPermutation& pi, const Designation& d) {
    auto w = long_one_line(pi);
    const std::size_t m = w.size();
    for (std::size_t k = 0; k < m; ++k) {
        int b = w[k];
        if (!d.is_left(b) && !d.is_right(-b)) continue;
        for (std::size_t j = 0; j < k; ++j) {
            if (w[j] >= b) continue;
            for (std::size_t i = 0; i < j; ++i)
                if (w[i] > b) return false;
        }
    }
    return true;
}

std::vector<TypeBArc> cambrian_meet_rep(const Designation& d) {
    const int n = d.n;
    auto rights = points_where(d, Side::Right, n);
    auto lefts = points_where(d, Side::Left, n);
    std::vector<TypeBArc> out{TypeBArc::orbifold(n, rights)};
    if (!rights.empty()) {
        int r = rights.back();
        out.push_back(TypeBArc::long_arc(n, r, lefts, points_where(d, Side::Right, r)));
    }
    if (!lefts.empty()) {
        int l = lefts.back();
        out.push_back(TypeBArc::long_arc(l, n, points_where(d, Side::Left, l), rights));
    }
    ArcCongruence meet = full_congruence(n);
    for (const auto& b : out) meet = congruence_meet(meet, meet_irreducible_congruence(n, b));
    require_equal(cambrian_congruence(d), meet, "cambrian meet representation " + d.str());
    return out;
}

void NCPartitionB::canonicalize() {
    for (auto& b : blocks) {
        std::sort(b.points.begin(), b.points.end());
        std::sort(b.left_piece.begin(), b.left_piece.end());
        std::sort(b.right_piece.begin(), b.right_piece.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const NCBlock& x, const NCBlock& y) { return x.points.front() < y.points.front(); });
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

NCPartitionB ncp_from_diagram(const DiagramB& D, const Designation& d) {
    const int n = D.n;
    if (d.n != n) throw Error("designation and diagram have different ranks");
    UnionFind uf(n);
    for (const auto& a : D.arcs) {
        if (cambrian_contracts(d, a)) throw Error("arc " + a.str() + " is contracted by the Cambrian congruence");
        if (!a.is_orbifold()) uf.unite(a.p, a.q);
    }
    std::map<int, NCBlock> comps;
    for (int x = 1; x <= n; ++x) comps[uf.find(x)].points.push_back(x);
    for (const auto& a : D.arcs) {
        auto& block = comps[uf.find(a.q)];
        if (a.is_orbifold()) {
            if (block.tag != NCBlock::Tag::Plain) throw NotADiagram("component with two arcs around the orbifold point");
            block.tag = NCBlock::Tag::Orbifold;
        } else if (a.is_long()) {
            if (block.tag != NCBlock::Tag::Plain) throw NotADiagram("component with two arcs around the orbifold point");
            block.tag = NCBlock::Tag::WrapsBelow;
            UnionFind pieces(n);
            for (const auto& b : D.arcs)
                if (b.is_ordinary()) pieces.unite(b.p, b.q);
            for (int x : block.points)
                (pieces.find(x) == pieces.find(a.p) ? block.left_piece : block.right_piece).push_back(x);
        }
    }
    NCPartitionB P{n, {}};
    for (auto& [root, block] : comps) P.blocks.push_back(block);
    P.canonicalize();
    return P;
}

DiagramB diagram_from_ncp(const NCPartitionB& P, const Designation& d) {
    const int n = P.n;
    if (d.n != n) throw MalformedPartition("designation and partition have different ranks");
    std::vector<int> seen(n + 1, 0);
    int orbifold_blocks = 0;
    for (const auto& b : P.blocks) {
        if (b.points.empty()) throw MalformedPartition("empty block");
        for (int x : b.points) {
            if (x < 1 || x > n) throw MalformedPartition("point " + std::to_string(x) + " out of range");
            if (seen[x]++) throw MalformedPartition("point " + std::to_string(x) + " appears twice");
        }
        if (b.tag == NCBlock::Tag::Orbifold) ++orbifold_blocks;
        if (b.tag == NCBlock::Tag::WrapsBelow) {
            auto joined = b.left_piece;
            joined.insert(joined.end(), b.right_piece.begin(), b.right_piece.end());
            std::sort(joined.begin(), joined.end());
            auto pts = b.points;
            std::sort(pts.begin(), pts.end());
            if (b.left_piece.empty() || b.right_piece.empty() || joined != pts)
                throw MalformedPartition("pieces of a wrapping block must split the block into two nonempty parts");
        } else if (!b.left_piece.empty() || !b.right_piece.empty()) {
            throw MalformedPartition("only wrapping blocks have pieces");
        }
    }
    for (int x = 1; x <= n; ++x)
        if (!seen[x]) throw MalformedPartition("point " + std::to_string(x) + " is in no block");
    if (orbifold_blocks > 1) throw MalformedPartition("more than one block contains the orbifold point");

    auto rights_between = [&](int lo, int hi) {
        std::vector<int> out;
        for (int x = lo + 1; x < hi; ++x)
            if (d.at(x) == Side::Right) out.push_back(x);
        return out;
    };
    auto chain = [&](std::vector<int> pts, DiagramB& D) {
        std::sort(pts.begin(), pts.end());
        for (std::size_t i = 1; i < pts.size(); ++i)
            D.arcs.push_back(TypeBArc::ordinary(pts[i - 1], pts[i], rights_between(pts[i - 1], pts[i])));
    };

    DiagramB D{n, {}};
    for (const auto& b : P.blocks) {
        switch (b.tag) {
            case NCBlock::Tag::Plain: chain(b.points, D); break;
            case NCBlock::Tag::Orbifold: {
                int low = *std::min_element(b.points.begin(), b.points.end());
                D.arcs.push_back(TypeBArc::orbifold(low, rights_between(0, low)));
                chain(b.points, D);
                break;
            }
            case NCBlock::Tag::WrapsBelow: {
                chain(b.left_piece, D);
                chain(b.right_piece, D);
                int a = *std::min_element(b.left_piece.begin(), b.left_piece.end());
                int c = *std::min_element(b.right_piece.begin(), b.right_piece.end());
                try {
                    D.arcs.push_back(TypeBArc::long_arc(a, c, points_where(d, Side::Left, a), points_where(d, Side::Right, c)));
                } catch (const InvalidArc& e) {
                    throw MalformedPartition(std::string("wrapping block has no drawable long arc: ") + e.what());
                }
                break;
            }
        }
    }
    D.canonicalize();
    if (!is_diagram_B(D.arcs)) throw MalformedPartition("blocks cross each other");
    return D;
}

std::vector<std::vector<int>> bicambrian_bipartite_words(int n) {
    if (n < 3) throw ScopeExceeded("biCambrian generators need n >= 3");
    std::vector<std::vector<int>> words;
    for (int i = 1; i <= n - 3; ++i) {
        words.push_back({i, i + 1, i + 2});
        words.push_back({i + 2, i + 1, i});
    }
    words.push_back({0, 1, 0, 2, 1, 0});
    words.push_back({2, 1, 0});
    words.push_back({0, 1, 2});
    words.push_back({2, 1, 0, 1});
    return words;
}

std::vector<std::vector<int>> bicambrian_linear_words_partial(int n) {
    if (n < 3) throw ScopeExceeded("biCambrian generators need n >= 3");
    std::vector<std::vector<int>> words;
    for (int i = 1; i <= n - 3; ++i) {
        words.push_back({i, i + 2, i + 1});
        words.push_back({i + 1, i, i + 2, i + 1});
    }
    words.push_back({0, 2, 1, 0});
    words.push_back({1, 2, 0, 1, 0});
    words.push_back({0, 2, 1});
    words.push_back({1, 0, 1, 2, 1, 0, 1});
    return words;
}

std::vector<std::vector<int>> bicambrian_linear_words(int n) {
    auto words = bicambrian_linear_words_partial(n);
    words.push_back({1, 0, 1, 2});
    words.push_back({2, 1, 0, 1, 2});
    words.push_back({1, 0, 2, 1});
    words.push_back({0, 1, 2, 1, 0, 1});
    return words;
}

bool is_alternating_arc(const TypeBArc& a) {
    auto alternates = [](int lo, int hi, const std::function<bool(int)>& right_of) {
        for (int x = lo; x + 1 <= hi; ++x)
            if (right_of(x) == right_of(x + 1)) return false;
        return true;
    };
    switch (a.kind) {
        case ArcKind::Ordinary:
            return alternates(a.p + 1, a.q - 1, [&](int x) { return has(a.L, x); });
        case ArcKind::Orbifold:
            return alternates(1, a.q - 1, [&](int x) { return has(a.L, x); });
        case ArcKind::Long:
            if (!a.between().empty()) return false;
            return alternates(1, a.p - 1, [&](int x) { return has(a.L, x); }) &&
                   alternates(1, a.q - 1, [&](int x) { return !has(a.R, x); });
    }
    return false;
}

bool passes_both_sides(const TypeBArc& a) {
    int top = std::max(a.p, a.q);
    bool left = false, right = false;
    for (int x = 1; x < top; ++x) {
        left = left || passes_left(a, x);
        right = right || passes_right(a, x);
    }
    return left && right;
}

ArcCongruence bicambrian_bipartite(int n) {
    auto generated = from_words(n, bicambrian_bipartite_words(n));
    require_equal(generated, from_predicate(n, [](const TypeBArc& a) { return !is_alternating_arc(a); }),
                  "bipartite biCambrian");
    return generated;
}

ArcCongruence bicambrian_linear(int n) {
    auto generated = from_words(n, bicambrian_linear_words(n));
    require_equal(generated, from_predicate(n, passes_both_sides), "linear biCambrian");
    return generated;
}

}  // namespace arclat
