#include "arclat/io.hpp"

#include <algorithm>
#include <numeric>

namespace arclat {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> int_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

std::vector<int> optional_array(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) return {};
    return int_array(*it, key);
}

std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

std::vector<int> one_to(int n) {
    std::vector<int> g(n);
    std::iota(g.begin(), g.end(), 1);
    return g;
}

const char* tag_name(NCBlock::Tag t) {
    switch (t) {
        case NCBlock::Tag::Plain: return "plain";
        case NCBlock::Tag::Orbifold: return "orbifold";
        case NCBlock::Tag::WrapsBelow: return "wraps_below";
    }
    return "plain";
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Json to_json(const Permutation& p) { return p.one_line; }
Json to_json(const SignedPermutation& p) { return p.one_line; }

Permutation permutation_from_json(const Json& j) {
    Permutation p{int_array(j, "permutation")};
    std::vector<int> s = p.one_line;
    std::sort(s.begin(), s.end());
    if (s != one_to(static_cast<int>(s.size())))
        throw ParseError("permutation must list 1..n once each");
    return p;
}

SignedPermutation signed_permutation_from_json(const Json& j) {
    SignedPermutation p{int_array(j, "signed permutation")};
    if (!is_valid(p)) throw ParseError("signed permutation must use each of 1..n once up to sign");
    return p;
}

Json to_json(const ArcA& a) {
    return Json{{"kind", "ordinary"}, {"bottom", a.p}, {"top", a.q}, {"right", a.R}};
}

ArcA arc_a_from_json(const Json& j, const std::vector<int>& ground) {
    if (auto it = j.find("kind"); it != j.end() && as_string(*it, "kind") != "ordinary")
        throw ParseError("type-A arcs have kind \"ordinary\"");
    return make_arc_a(as_int(field(j, "bottom"), "bottom"), as_int(field(j, "top"), "top"),
                      optional_array(j, "right"), ground);
}

Json to_json(const DiagramA& D) {
    Json j{{"n", D.ground.size()}, {"arcs", Json::array()}};
    if (D.ground != one_to(static_cast<int>(D.ground.size()))) j["ground"] = D.ground;
    for (const auto& a : D.arcs) j["arcs"].push_back(to_json(a));
    return j;
}

DiagramA diagram_a_from_json(const Json& j) {
    DiagramA D;
    int n = as_int(field(j, "n"), "n");
    if (n < 0) throw ParseError("n must be nonnegative");
    D.ground = j.contains("ground") ? int_array(j["ground"], "ground") : one_to(n);
    std::sort(D.ground.begin(), D.ground.end());
    if (static_cast<int>(D.ground.size()) != n ||
        std::adjacent_find(D.ground.begin(), D.ground.end()) != D.ground.end())
        throw ParseError("ground must list n distinct points");
    const Json& arcs = field(j, "arcs");
    if (!arcs.is_array()) throw ParseError("arcs must be an array");
    for (const auto& a : arcs) D.arcs.push_back(arc_a_from_json(a, D.ground));
    D.canonicalize();
    if (std::adjacent_find(D.arcs.begin(), D.arcs.end()) != D.arcs.end())
        throw NotADiagram("an arc is listed twice");
    if (!is_diagram_A(D.arcs)) throw NotADiagram("arcs are not pairwise compatible");
    return D;
}

Json to_json(const TypeBArc& a) {
    switch (a.kind) {
        case ArcKind::Ordinary:
            return Json{{"kind", "ordinary"}, {"bottom", a.p}, {"top", a.q}, {"right", a.R}};
        case ArcKind::Orbifold:
            return Json{{"kind", "orbifold"}, {"top", a.q}, {"right", a.R}};
        case ArcKind::Long:
            return Json{{"kind", "long"}, {"left", a.p}, {"right_ep", a.q}, {"L", a.L}, {"R", a.R}};
    }
    return {};
}

TypeBArc arc_b_from_json(const Json& j, int n) {
    std::string kind = as_string(field(j, "kind"), "kind");
    TypeBArc a;
    if (kind == "ordinary")
        a = TypeBArc::ordinary(as_int(field(j, "bottom"), "bottom"), as_int(field(j, "top"), "top"),
                               optional_array(j, "right"));
    else if (kind == "orbifold")
        a = TypeBArc::orbifold(as_int(field(j, "top"), "top"), optional_array(j, "right"));
    else if (kind == "long")
        a = TypeBArc::long_arc(as_int(field(j, "left"), "left"), as_int(field(j, "right_ep"), "right_ep"),
                               optional_array(j, "L"), optional_array(j, "R"));
    else
        throw ParseError("unknown arc kind \"" + kind + "\"");
    if (std::max(a.p, a.q) > n) throw InvalidArc("arc " + a.str() + " uses a point above " + std::to_string(n));
    return a;
}

Json to_json(const DiagramB& D) {
    Json j{{"n", D.n}, {"arcs", Json::array()}};
    for (const auto& a : D.arcs) j["arcs"].push_back(to_json(a));
    return j;
}

DiagramB diagram_b_from_json(const Json& j) {
    DiagramB D;
    D.n = as_int(field(j, "n"), "n");
    if (D.n < 0) throw ParseError("n must be nonnegative");
    const Json& arcs = field(j, "arcs");
    if (!arcs.is_array()) throw ParseError("arcs must be an array");
    for (const auto& a : arcs) D.arcs.push_back(arc_b_from_json(a, D.n));
    D.canonicalize();
    if (std::adjacent_find(D.arcs.begin(), D.arcs.end()) != D.arcs.end())
        throw NotADiagram("an arc is listed twice");
    if (!is_diagram_B(D.arcs)) throw NotADiagram("arcs are not pairwise compatible");
    return D;
}

Json to_json(const ArcCongruence& theta) {
    Json j{{"n", theta.n}, {"contracted", Json::array()}};
    for (const auto& a : theta.contracted) j["contracted"].push_back(to_json(a));
    return j;
}

ArcCongruence congruence_from_json(const Json& j) {
    ArcCongruence theta;
    theta.n = as_int(field(j, "n"), "n");
    if (theta.n < 1) throw ParseError("n must be positive");
    const Json& arcs = field(j, "contracted");
    if (!arcs.is_array()) throw ParseError("contracted must be an array");
    for (const auto& a : arcs) theta.contracted.insert(arc_b_from_json(a, theta.n));
    if (!is_up_closed(theta)) throw Error("contracted arcs are not closed under taking superarcs");
    return theta;
}

Json to_json(const FiniteLattice& L) {
    Json elements = Json::array();
    for (std::size_t x = 0; x < L.size(); ++x) elements.push_back(L.label(static_cast<int>(x)));
    Json covers = Json::array();
    for (const auto& [a, b] : L.covers()) covers.push_back({a, b});
    return Json{{"elements", elements}, {"covers", covers}};
}

FiniteLattice lattice_from_json(const Json& j) {
    const Json& els = field(j, "elements");
    if (!els.is_array()) throw ParseError("elements must be an array");
    std::vector<std::string> labels;
    for (const auto& e : els) labels.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    std::vector<Cover> covers;
    const Json& cs = field(j, "covers");
    if (!cs.is_array()) throw ParseError("covers must be an array");
    for (const auto& c : cs) {
        auto pair = int_array(c, "cover");
        if (pair.size() != 2) throw ParseError("a cover is a pair [i,j]");
        for (int x : pair)
            if (x < 0 || x >= static_cast<int>(labels.size())) throw ParseError("cover refers to a missing element");
        covers.emplace_back(pair[0], pair[1]);
    }
    std::size_t n = labels.size();
    return FiniteLattice::build(n, covers, std::move(labels));
}

Json to_json(const Designation& d) {
    Json j = Json::object();
    for (int i = 1; i < d.n; ++i) j[std::to_string(i)] = d.at(i) == Side::Left ? "L" : "R";
    return j;
}

Designation designation_from_json(const Json& j, std::optional<int> n) {
    if (j.is_string()) {
        Designation d = designation_from_string(j.get<std::string>());
        if (n && *n != d.n) throw ParseError("designation has the wrong length");
        return d;
    }
    if (!j.is_object()) throw ParseError("designation must be an object");
    int m = n ? *n : static_cast<int>(j.size()) + 1;
    if (static_cast<int>(j.size()) != m - 1) throw ParseError("designation must name each of the points 1..n-1");
    Designation d{m, {}};
    for (int i = 1; i < m; ++i) {
        auto it = j.find(std::to_string(i));
        if (it == j.end()) throw ParseError("designation misses point " + std::to_string(i));
        std::string s = as_string(*it, "side");
        if (s != "L" && s != "R") throw ParseError("sides are \"L\" or \"R\"");
        d.side.push_back(s == "L" ? Side::Left : Side::Right);
    }
    return d;
}

Designation designation_from_string(const std::string& s) {
    Designation d{static_cast<int>(s.size()) + 1, {}};
    for (char c : s) {
        if (c != 'L' && c != 'R') throw ParseError("designation string uses only L and R");
        d.side.push_back(c == 'L' ? Side::Left : Side::Right);
    }
    return d;
}

Json to_json(const NCPartitionB& P) {
    Json blocks = Json::array();
    for (const auto& b : P.blocks) {
        Json jb{{"points", b.points}, {"tag", tag_name(b.tag)}};
        if (b.tag == NCBlock::Tag::WrapsBelow) {
            jb["left_piece"] = b.left_piece;
            jb["right_piece"] = b.right_piece;
        }
        blocks.push_back(jb);
    }
    return Json{{"n", P.n}, {"blocks", blocks}};
}

NCPartitionB ncp_from_json(const Json& j) {
    NCPartitionB P;
    P.n = as_int(field(j, "n"), "n");
    const Json& bs = field(j, "blocks");
    if (!bs.is_array()) throw ParseError("blocks must be an array");
    for (const auto& jb : bs) {
        NCBlock b;
        b.points = int_array(field(jb, "points"), "points");
        if (b.points.empty()) throw ParseError("blocks must be nonempty");
        std::string tag = jb.contains("tag") ? as_string(jb["tag"], "tag") : "plain";
        if (tag == "plain") b.tag = NCBlock::Tag::Plain;
        else if (tag == "orbifold") b.tag = NCBlock::Tag::Orbifold;
        else if (tag == "wraps_below") b.tag = NCBlock::Tag::WrapsBelow;
        else throw ParseError("unknown block tag \"" + tag + "\"");
        b.left_piece = optional_array(jb, "left_piece");
        b.right_piece = optional_array(jb, "right_piece");
        P.blocks.push_back(std::move(b));
    }
    P.canonicalize();
    return P;
}

Json to_json(const ArrowEdge& e) { return Json{{"source", to_json(e.source)}, {"target", to_json(e.target)}}; }

ArcCongruence congruence_by_name(const std::string& spec, int n) {
    if (!spec.empty() && spec.front() == '{') {
        Json j = parse_json(spec);
        ArcCongruence theta;
        if (j.contains("generators")) {
            int m = as_int(field(j, "n"), "n");
            std::vector<TypeBArc> gens;
            const Json& gs = j["generators"];
            if (!gs.is_array()) throw ParseError("generators must be an array");
            for (const auto& a : gs) gens.push_back(arc_b_from_json(a, m));
            theta = congruence_from_generators(m, gens);
        } else {
            theta = congruence_from_json(j);
        }
        if (theta.n != n) throw Error("congruence is for n = " + std::to_string(theta.n) + ", not " + std::to_string(n));
        return theta;
    }
    if (n < 1) throw Error("n must be positive");
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "identity" && arg.empty()) return identity_congruence(n);
    if (head == "full" && arg.empty()) return full_congruence(n);
    if (head == "parabolic") {
        std::vector<int> J;
        std::size_t pos = 0;
        while (pos < arg.size()) {
            auto end = arg.find(',', pos);
            std::string tok = arg.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
            if (tok.size() < 2 || tok[0] != 's' || tok.find_first_not_of("0123456789", 1) != std::string::npos)
                throw Error("parabolic generators are written s0,s1,...");
            J.push_back(std::stoi(tok.substr(1)));
            if (end == std::string::npos) break;
            pos = end + 1;
        }
        return parabolic_congruence(n, J);
    }
    if (head == "cambrian") {
        if (arg.find_first_not_of("LR") != std::string::npos) throw Error("cambrian designations use only L and R");
        Designation d = designation_from_string(arg);
        if (d.n != n) throw Error("a designation for n = " + std::to_string(n) + " names " + std::to_string(n - 1) + " points");
        return cambrian_congruence(d);
    }
    if (head == "bicambrian" && arg == "bipartite") return bicambrian_bipartite(n);
    if (head == "bicambrian" && arg == "linear") return bicambrian_linear(n);
    for (auto v : {HomVariant::Simion, HomVariant::Nonhom, HomVariant::Delta, HomVariant::DeltaMirror})
        if ((head == "hom" && arg == to_string(v)) || (arg.empty() && head == to_string(v))) return hom_congruence(n, v);
    throw Error("unknown congruence \"" + spec + "\"");
}

}  // namespace arclat
