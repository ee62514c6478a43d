#include "arclat/weak_order.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>

namespace arclat {

std::vector<int> Permutation::ground() const {
    auto g = one_line;
    std::sort(g.begin(), g.end());
    return g;
}

Reflection Reflection::transposition(int a, int b) {
    if (a > b) std::swap(a, b);
    return {Kind::Transposition, a, b};
}

Reflection Reflection::sign_change(int i) { return {Kind::SignChange, std::abs(i), -std::abs(i)}; }

Reflection Reflection::signed_pair(int a, int b) {
    if (std::abs(a) == std::abs(b)) throw Error("signed pair needs distinct absolute values");
    if (std::abs(a) > std::abs(b)) std::swap(a, b);
    if (a < 0) {
        a = -a;
        b = -b;
    }
    return {Kind::SignedPair, a, b};
}

std::string Reflection::str() const {
    auto s = "(" + std::to_string(a) + " " + std::to_string(b) + ")";
    if (kind == Kind::SignedPair) s += "(" + std::to_string(-a) + " " + std::to_string(-b) + ")";
    return s;
}

bool is_valid(const Permutation& p) {
    auto g = p.ground();
    return std::adjacent_find(g.begin(), g.end()) == g.end();
}

bool is_valid(const SignedPermutation& p) {
    std::vector<int> a;
    for (int v : p.one_line) a.push_back(std::abs(v));
    std::sort(a.begin(), a.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Permutation identity_permutation(int n) {
    Permutation p;
    p.one_line.resize(n);
    std::iota(p.one_line.begin(), p.one_line.end(), 1);
    return p;
}

SignedPermutation identity_signed(int n) { return {identity_permutation(n).one_line}; }

std::vector<Permutation> all_permutations_of(std::vector<int> ground) {
    std::sort(ground.begin(), ground.end());
    std::vector<Permutation> out;
    do {
        out.push_back({ground});
    } while (std::next_permutation(ground.begin(), ground.end()));
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    return all_permutations_of(identity_permutation(n).one_line);
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
    std::vector<SignedPermutation> out;
    for (const auto& p : all_permutations(n)) {
        for (int mask = 0; mask < (1 << n); ++mask) {
            SignedPermutation s{p.one_line};
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) s.one_line[i] = -s.one_line[i];
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<Reflection> inversions(const Permutation& w) {
    std::set<Reflection> out;
    const auto& v = w.one_line;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) out.insert(Reflection::transposition(v[j], v[i]));
    return out;
}

std::vector<int> long_one_line(const SignedPermutation& p) {
    std::vector<int> out;
    for (auto it = p.one_line.rbegin(); it != p.one_line.rend(); ++it) out.push_back(-*it);
    for (int v : p.one_line) out.push_back(v);
    return out;
}

std::set<Reflection> inversions(const SignedPermutation& w) {
    std::set<Reflection> out;
    auto v = long_one_line(w);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] < v[j]) continue;
            if (v[i] == -v[j])
                out.insert(Reflection::sign_change(v[i]));
            else
                out.insert(Reflection::signed_pair(v[j], v[i]));
        }
    }
    return out;
}

bool weak_order_leq(const Permutation& u, const Permutation& w) {
    auto a = inversions(u), b = inversions(w);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool weak_order_leq(const SignedPermutation& u, const SignedPermutation& w) {
    auto a = inversions(u), b = inversions(w);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::pair<Permutation, Reflection>> covers_down(const Permutation& w) {
    std::vector<std::pair<Permutation, Reflection>> out;
    for (std::size_t i = 0; i + 1 < w.one_line.size(); ++i) {
        if (w.one_line[i] < w.one_line[i + 1]) continue;
        Permutation v = w;
        std::swap(v.one_line[i], v.one_line[i + 1]);
        out.emplace_back(v, Reflection::transposition(w.one_line[i + 1], w.one_line[i]));
    }
    return out;
}

std::vector<std::pair<SignedPermutation, Reflection>> covers_down(const SignedPermutation& w) {
    std::vector<std::pair<SignedPermutation, Reflection>> out;
    if (!w.one_line.empty() && w.one_line[0] < 0) {
        SignedPermutation v = w;
        v.one_line[0] = -v.one_line[0];
        out.emplace_back(v, Reflection::sign_change(w.one_line[0]));
    }
    for (std::size_t i = 0; i + 1 < w.one_line.size(); ++i) {
        if (w.one_line[i] < w.one_line[i + 1]) continue;
        SignedPermutation v = w;
        std::swap(v.one_line[i], v.one_line[i + 1]);
        out.emplace_back(v, Reflection::signed_pair(w.one_line[i + 1], w.one_line[i]));
    }
    return out;
}

namespace {

int reflect_value(const Reflection& t, int x) {
    switch (t.kind) {
        case Reflection::Kind::Transposition:
            return x == t.a ? t.b : x == t.b ? t.a : x;
        case Reflection::Kind::SignChange:
            return std::abs(x) == t.a ? -x : x;
        case Reflection::Kind::SignedPair:
            if (x == t.a) return t.b;
            if (x == t.b) return t.a;
            if (x == -t.a) return -t.b;
            if (x == -t.b) return -t.a;
            return x;
    }
    return x;
}

}  // namespace

Permutation apply_reflection(const Reflection& t, const Permutation& w) {
    Permutation v = w;
    for (int& x : v.one_line) x = reflect_value(t, x);
    return v;
}

SignedPermutation apply_reflection(const Reflection& t, const SignedPermutation& w) {
    SignedPermutation v = w;
    for (int& x : v.one_line) x = reflect_value(t, x);
    return v;
}

Permutation from_word_A(int n, const std::vector<int>& word) {
    auto p = identity_permutation(n);
    for (int i : word) {
        if (i < 1 || i >= n) throw Error("generator s" + std::to_string(i) + " out of range");
        std::swap(p.one_line[i - 1], p.one_line[i]);
    }
    return p;
}

SignedPermutation from_word_B(int n, const std::vector<int>& word) {
    auto p = identity_signed(n);
    for (int i : word) {
        if (i < 0 || i >= n) throw Error("generator s" + std::to_string(i) + " out of range");
        if (i == 0)
            p.one_line[0] = -p.one_line[0];
        else
            std::swap(p.one_line[i - 1], p.one_line[i]);
    }
    return p;
}

std::size_t length(const Permutation& w) { return inversions(w).size(); }
std::size_t length(const SignedPermutation& w) { return inversions(w).size(); }

int WeakOrder::id(const std::vector<int>& one_line) const {
    auto it = index.find(one_line);
    if (it == index.end()) throw Error("element " + to_string(one_line) + " not in weak order");
    return it->second;
}

namespace {

template <class P>
WeakOrder build_weak_order(CoxeterType type, const std::vector<P>& elems) {
    WeakOrder W;
    W.type = type;
    std::vector<std::string> labels;
    for (const auto& p : elems) {
        W.index.emplace(p.one_line, static_cast<int>(W.elements.size()));
        W.elements.push_back(p.one_line);
        labels.push_back(to_string(p.one_line));
    }
    std::vector<Cover> covers;
    for (std::size_t x = 0; x < elems.size(); ++x)
        for (const auto& [v, t] : covers_down(elems[x]))
            covers.emplace_back(W.index.at(v.one_line), static_cast<int>(x));
    W.lattice = FiniteLattice::build(elems.size(), covers, std::move(labels));
    return W;
}

}  // namespace

WeakOrder weak_order_lattice(CoxeterType type) {
    if (type.n < 1) throw Error("rank must be at least 1");
    if (type.family == Family::A) {
        if (type.n > kMaxRankA) throw ScopeExceeded("weak order of type A limited to n <= 6");
        return build_weak_order(type, all_permutations(type.n));
    }
    if (type.n > kMaxRankB) throw ScopeExceeded("weak order of type B limited to n <= 4");
    return build_weak_order(type, all_signed_permutations(type.n));
}

WeakOrder weak_order_lattice_on(const std::vector<int>& ground) {
    if (ground.size() > static_cast<std::size_t>(kMaxRankA))
        throw ScopeExceeded("weak order of type A limited to 6 letters");
    return build_weak_order(CoxeterType{Family::A, static_cast<int>(ground.size())},
                            all_permutations_of(ground));
}

namespace {

template <class P>
std::vector<P> cjr_weak_impl(const P& w) {
    std::vector<P> out;
    for (const auto& [cov, t] : covers_down(w)) {
        (void)cov;
        std::set<P> seen{w};
        std::queue<P> q;
        q.push(w);
        std::vector<P> minimal;
        while (!q.empty()) {
            P v = q.front();
            q.pop();
            bool has_lower = false;
            for (const auto& [u, r] : covers_down(v)) {
                (void)r;
                if (!inversions(u).count(t)) continue;
                has_lower = true;
                if (seen.insert(u).second) q.push(u);
            }
            if (!has_lower) minimal.push_back(v);
        }
        if (minimal.size() != 1) throw Error("cjr_weak: minimal element for a cover reflection is not unique");
        out.push_back(minimal[0]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Permutation> cjr_weak(const Permutation& w) { return cjr_weak_impl(w); }
std::vector<SignedPermutation> cjr_weak(const SignedPermutation& w) { return cjr_weak_impl(w); }

Permutation w0_conjugate(const Permutation& p) {
    auto g = p.ground();
    const std::size_t m = g.size();
    auto w0 = [&](int v) {
        auto k = static_cast<std::size_t>(std::lower_bound(g.begin(), g.end(), v) - g.begin());
        return g[m - 1 - k];
    };
    Permutation out;
    for (std::size_t k = 0; k < m; ++k) out.one_line.push_back(w0(p.one_line[m - 1 - k]));
    return out;
}

Permutation unfold(const SignedPermutation& p) { return {long_one_line(p)}; }

bool is_centrally_symmetric(const Permutation& sigma) {
    const std::size_t m = sigma.one_line.size();
    if (m % 2) return false;
    const int n = static_cast<int>(m / 2);
    auto g = sigma.ground();
    for (int i = 0; i < n; ++i)
        if (g[i] != -(n - i) || g[n + i] != i + 1) return false;
    for (std::size_t k = 0; k < m; ++k)
        if (sigma.one_line[k] != -sigma.one_line[m - 1 - k]) return false;
    return true;
}

SignedPermutation fold(const Permutation& sigma) {
    if (!is_centrally_symmetric(sigma))
        throw NotSymmetric("permutation " + to_string(sigma.one_line) + " is not centrally symmetric");
    const std::size_t n = sigma.one_line.size() / 2;
    return {std::vector<int>(sigma.one_line.begin() + n, sigma.one_line.end())};
}

std::string to_string(const std::vector<int>& one_line) {
    bool small = std::all_of(one_line.begin(), one_line.end(), [](int v) { return std::abs(v) < 10; });
    std::string s;
    for (std::size_t i = 0; i < one_line.size(); ++i) {
        int v = one_line[i];
        if (!small && i) s += ",";
        if (small && v < 0)
            s += "(" + std::to_string(v) + ")";
        else
            s += std::to_string(v);
    }
    return s;
}

}  // namespace arclat
