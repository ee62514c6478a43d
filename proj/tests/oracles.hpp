#pragma once

// Independent reference implementations used by the tests. Nothing here calls the
// library's lattice algorithms.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// Order relation from cover pairs by plain transitive closure.
struct Poset {
    int n;
    std::vector<std::vector<char>> le;

    Poset(int n_, const std::vector<std::pair<int, int>>& covers) : n(n_), le(n_, std::vector<char>(n_, 0)) {
        for (int i = 0; i < n; ++i) le[i][i] = 1;
        for (auto [a, b] : covers) le[a][b] = 1;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (le[i][k])
                    for (int j = 0; j < n; ++j)
                        if (le[k][j]) le[i][j] = 1;
    }

    // -1 when the bound is not unique.
    int join(int a, int b) const {
        std::vector<int> ub;
        for (int z = 0; z < n; ++z)
            if (le[a][z] && le[b][z]) ub.push_back(z);
        for (int z : ub)
            if (std::all_of(ub.begin(), ub.end(), [&](int w) { return le[z][w]; })) return z;
        return -1;
    }
    int meet(int a, int b) const {
        std::vector<int> lb;
        for (int z = 0; z < n; ++z)
            if (le[z][a] && le[z][b]) lb.push_back(z);
        for (int z : lb)
            if (std::all_of(lb.begin(), lb.end(), [&](int w) { return le[w][z]; })) return z;
        return -1;
    }
    bool is_lattice() const {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (join(a, b) < 0 || meet(a, b) < 0) return false;
        return true;
    }
    // Covers x exactly once from below.
    bool join_irreducible(int x) const {
        int lower = 0;
        for (int y = 0; y < n; ++y) {
            if (y == x || !le[y][x]) continue;
            bool cover = true;
            for (int z = 0; z < n; ++z)
                if (z != x && z != y && le[y][z] && le[z][x]) cover = false;
            lower += cover;
        }
        return lower == 1;
    }
};

// Compatibility with meets and joins, checked pair by pair.
inline bool is_congruence(const Poset& P, const std::vector<int>& cls) {
    for (int x = 0; x < P.n; ++x)
        for (int y = 0; y < P.n; ++y) {
            if (cls[x] != cls[y]) continue;
            for (int z = 0; z < P.n; ++z) {
                if (cls[P.join(x, z)] != cls[P.join(y, z)]) return false;
                if (cls[P.meet(x, z)] != cls[P.meet(y, z)]) return false;
            }
        }
    return true;
}

// Restricted growth strings for every set partition of {0..n-1}.
inline void for_each_set_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> a(n, 0);
    std::function<void(int, int)> rec = [&](int i, int m) {
        if (i == n) {
            fn(a);
            return;
        }
        for (int c = 0; c <= m; ++c) {
            a[i] = c;
            rec(i + 1, std::max(m, c + 1));
        }
    };
    if (n == 0) fn(a);
    else rec(0, 0);
}

// Relabels classes in first-occurrence order.
inline std::vector<int> normalized(const std::vector<int>& cls) {
    std::map<int, int> ids;
    std::vector<int> out;
    for (int c : cls) out.push_back(ids.emplace(c, static_cast<int>(ids.size())).first->second);
    return out;
}

// Inversion set of a one-line word on any ground set, as value pairs (larger, smaller).
inline std::set<std::pair<int, int>> value_inversions(const std::vector<int>& w) {
    std::set<std::pair<int, int>> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) out.insert({w[i], w[j]});
    return out;
}

inline std::vector<int> long_word(const std::vector<int>& short_word) {
    std::vector<int> out;
    for (auto it = short_word.rbegin(); it != short_word.rend(); ++it) out.push_back(-*it);
    out.insert(out.end(), short_word.begin(), short_word.end());
    return out;
}

}  // namespace oracle
