#include "arclat/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "arclat/catalog.hpp"
#include "arclat/io.hpp"
#include "arclat/parallel.hpp"
#include "arclat/shards.hpp"

namespace arclat {

void SuiteReport::fail(std::string what) {
    pass = false;
    ++failures;
    if (counterexamples.size() < 20) counterexamples.push_back(std::move(what));
}

namespace {

void require_range(int n, int lo, int hi, const std::string& suite) {
    if (n < lo || n > hi)
        throw ScopeExceeded("suite " + suite + " runs for " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
}

void bijection(SuiteReport& r) {
    require_range(r.n, 1, 6, r.suite);
    for (const auto& p : all_permutations(r.n)) {
        ++r.checked;
        if (delta_A_inv(delta_A(p)) != p) r.fail("delta_A roundtrip " + to_string(p.one_line));
    }
    if (r.n > 5) return;
    for (const auto& p : all_signed_permutations(r.n)) {
        ++r.checked;
        auto D = delta_B_orb(p);
        if (delta_B_orb_inv(D) != p) r.fail("orbifold roundtrip " + to_string(p.one_line));
        if (delta_B_orb_direct(p) != D) r.fail("direct construction differs at " + to_string(p.one_line));
    }
}

void diagram_count(SuiteReport& r) {
    require_range(r.n, 1, kMaxDiagramRankB, r.suite);
    long expected = 1;
    for (int k = 1; k <= r.n; ++k) expected *= 2 * k;
    long got = static_cast<long>(enumerate_diagrams_B(r.n).size());
    ++r.checked;
    if (got != expected) r.fail(std::to_string(got) + " diagrams, expected " + std::to_string(expected));
}

template <class P, class ToArcs>
void cjr_on(SuiteReport& r, const WeakOrder& W, ToArcs arc_image) {
    for (int x = 0; x < static_cast<int>(W.elements.size()); ++x) {
        ++r.checked;
        P w{W.elements[x]};
        std::set<int> weak, oracle, arcs;
        for (const auto& j : cjr_weak(w)) weak.insert(W.id(j.one_line));
        if (auto o = cjr_oracle(W.lattice, x)) oracle.insert(o->begin(), o->end());
        for (const auto& j : arc_image(w)) arcs.insert(W.id(j.one_line));
        if (weak != oracle || weak != arcs) r.fail("canonical join representation of " + to_string(w.one_line));
    }
}

void cjr(SuiteReport& r) {
    require_range(r.n, 1, 3, r.suite);
    cjr_on<Permutation>(r, weak_order_lattice({Family::A, r.n + 1}), [](const Permutation& w) {
        std::vector<Permutation> out;
        for (const auto& a : delta_A(w).arcs) out.push_back(arc_to_ji_A(a, w.ground()));
        return out;
    });
    cjr_on<SignedPermutation>(r, weak_order_lattice({Family::B, r.n}), [](const SignedPermutation& w) {
        std::vector<SignedPermutation> out;
        for (const auto& a : delta_B_orb(w).arcs) out.push_back(arc_to_ji_B(a, w.n()));
        return out;
    });
}

void forcing_oracle_suite(SuiteReport& r) {
    require_range(r.n, 1, kMaxRankB, r.suite);
    const auto W = weak_order_lattice({Family::B, r.n});
    const auto& arcs = all_arcs_B(r.n);
    std::vector<int> ids;
    for (const auto& a : arcs) ids.push_back(W.id(arc_to_ji_B(a, r.n).one_line));
    const std::size_t m = arcs.size();
    std::vector<char> bad(m * m, 0);
    parallel_for(m * m, [&](std::size_t k) {
        std::size_t i = k / m, j = k % m;
        bad[k] = forcing_oracle(W.lattice, ids[i], ids[j]) != is_subarc_B(arcs[i], arcs[j]);
    });
    for (std::size_t k = 0; k < m * m; ++k) {
        ++r.checked;
        if (bad[k]) r.fail(arcs[k / m].str() + " vs " + arcs[k % m].str());
    }
}

void arrow_closure(SuiteReport& r) {
    require_range(r.n, 1, 5, r.suite);
    const auto& arcs = all_arcs_B(r.n);
    const std::size_t m = arcs.size();
    std::vector<std::vector<char>> R(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        R[i][i] = 1;
        for (std::size_t j = 0; j < m; ++j)
            if (arrow_B(arcs[i], arcs[j])) R[i][j] = 1;
    }
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            if (R[i][k])
                for (std::size_t j = 0; j < m; ++j)
                    if (R[k][j]) R[i][j] = 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            ++r.checked;
            if (static_cast<bool>(R[i][j]) != is_subarc_B(arcs[i], arcs[j]))
                r.fail(arcs[i].str() + " vs " + arcs[j].str());
        }
}

void shard_digraph(SuiteReport& r) {
    require_range(r.n, 1, kGeomMaxB, r.suite);
    ShardModel M({Family::B, r.n});
    const auto& arcs = all_arcs_B(r.n);
    std::vector<int> shard;
    for (const auto& a : arcs) shard.push_back(M.lower_shards(M.region_of(arc_to_ji_B(a, r.n).one_line)).at(0));
    ++r.checked;
    if (M.shards().size() != arcs.size())
        r.fail(std::to_string(M.shards().size()) + " shards for " + std::to_string(arcs.size()) + " arcs");
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = 0; j < arcs.size(); ++j) {
            ++r.checked;
            bool geo = M.shard_arrow_geometric(shard[i], shard[j]);
            bool emily = M.emily_check(shard[i], shard[j]);
            bool comb = arrow_B(arcs[i], arcs[j]);
            if (geo != emily || geo != comb)
                r.fail(arcs[i].str() + " -> " + arcs[j].str() + " geometric=" + std::to_string(geo) +
                       " emily=" + std::to_string(emily) + " arcs=" + std::to_string(comb));
        }
}

void cambrian(SuiteReport& r) {
    require_range(r.n, 2, 4, r.suite);
    for (const auto& d : all_designations(r.n)) {
        ++r.checked;
        auto q = quotient_elements(cambrian_congruence(d));
        std::vector<SignedPermutation> pat;
        for (const auto& p : all_signed_permutations(r.n))
            if (cambrian_pattern_test(p, d)) pat.push_back(p);
        std::sort(pat.begin(), pat.end());
        if (q != pat) r.fail("designation " + d.str() + ": quotient and pattern sets differ");
        for (const auto& p : q) {
            auto D = delta_B_orb(p);
            if (diagram_from_ncp(ncp_from_diagram(D, d), d) != D)
                r.fail("noncrossing partition roundtrip at " + d.str() + " " + to_string(p.one_line));
        }
    }
}

void roundtrip(SuiteReport& r) {
    require_range(r.n, 1, 3, r.suite);
    auto again = [](const Json& j) { return parse_json(j.dump()); };
    for (const auto& p : all_signed_permutations(r.n)) {
        ++r.checked;
        if (signed_permutation_from_json(again(to_json(p))) != p) r.fail("signed permutation " + to_string(p.one_line));
        auto D = delta_B_orb(p);
        if (diagram_b_from_json(again(to_json(D))) != D) r.fail("diagram of " + to_string(p.one_line));
    }
    for (const auto& p : all_permutations(r.n)) {
        ++r.checked;
        if (permutation_from_json(again(to_json(p))) != p) r.fail("permutation " + to_string(p.one_line));
        auto D = delta_A(p);
        if (diagram_a_from_json(again(to_json(D))) != D) r.fail("type-A diagram of " + to_string(p.one_line));
    }
    for (const auto& a : all_arcs_B(r.n)) {
        ++r.checked;
        if (arc_b_from_json(again(to_json(a)), r.n) != a) r.fail("arc " + a.str());
        auto theta = congruence_from_generators(r.n, {a});
        if (congruence_from_json(again(to_json(theta))) != theta) r.fail("congruence generated by " + a.str());
    }
    for (const auto& d : all_designations(r.n)) {
        ++r.checked;
        if (designation_from_json(again(to_json(d)), r.n) != d) r.fail("designation " + d.str());
    }
    ++r.checked;
    auto L = weak_order_lattice({Family::B, r.n}).lattice;
    auto L2 = lattice_from_json(again(to_json(L)));
    bool same = L2.size() == L.size() && L2.covers() == L.covers();
    for (int x = 0; same && x < static_cast<int>(L.size()); ++x) same = L2.label(x) == L.label(x);
    if (!same) r.fail("weak order lattice");
}

const std::map<std::string, std::function<void(SuiteReport&)>>& registry() {
    static const std::map<std::string, std::function<void(SuiteReport&)>> m{
        {"bijection", bijection},         {"diagram-count", diagram_count},
        {"cjr", cjr},                     {"forcing-oracle", forcing_oracle_suite},
        {"arrow-closure", arrow_closure}, {"shard-digraph", shard_digraph},
        {"cambrian", cambrian},           {"roundtrip", roundtrip},
    };
    return m;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

SuiteReport run_suite(const std::string& name, int n) {
    auto it = registry().find(name);
    if (it == registry().end()) throw Error("unknown suite \"" + name + "\"");
    SuiteReport r;
    r.suite = name;
    r.n = n;
    it->second(r);
    return r;
}

}  // namespace arclat
