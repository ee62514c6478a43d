#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "arclat/catalog.hpp"
#include "arclat/io.hpp"
#include "arclat/render.hpp"
#include "arclat/shards.hpp"
#include "arclat/verify.hpp"

using namespace arclat;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kSemantic = 3 };

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

Family family_of(const std::string& t) {
    if (t == "a") return Family::A;
    if (t == "b") return Family::B;
    throw ParseError("--type is a or b");
}

struct Input {
    std::string type = "b";
    std::string perm;
    std::string diagram;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--type", type, "a or b")->check(CLI::IsMember({"a", "b"}));
        auto* p = cmd->add_option("--perm", perm, "permutation as a JSON array");
        auto* d = cmd->add_option("--diagram", diagram, "diagram as JSON");
        p->excludes(d);
    }
};

DiagramA diagram_a(const Input& in) {
    if (!in.perm.empty()) return delta_A(permutation_from_json(parse_json(in.perm)));
    return diagram_a_from_json(parse_json(in.diagram));
}

DiagramB diagram_b(const Input& in) {
    if (!in.perm.empty()) return delta_B_orb(signed_permutation_from_json(parse_json(in.perm)));
    return diagram_b_from_json(parse_json(in.diagram));
}

void require_input(const Input& in) {
    if (in.perm.empty() && in.diagram.empty()) throw ParseError("give --perm or --diagram");
}

Json shard_json(const ShardModel& M, int s) {
    const auto& arr = M.arrangement();
    const auto& sh = M.shards()[s];
    Json sides = Json::array();
    for (auto [h, sign] : sh.sides) sides.push_back({{"hyperplane", arr.hyperplanes[h].str()}, {"sign", sign}});
    return Json{{"carrier", arr.hyperplanes[sh.carrier].str()}, {"sides", sides}, {"witness", sh.witness}};
}

int run(int argc, char** argv) {
    CLI::App app{"Noncrossing arc diagrams, weak-order congruences and shards"};
    app.require_subcommand(1);

    Input map_in;
    auto* map = app.add_subcommand("map", "Send a permutation to its arc diagram, or a diagram back");
    map_in.add_to(map);

    std::string cong;
    int qn = 0;
    bool q_list = false, q_count = false, q_hasse = false;
    auto* quot = app.add_subcommand("quotient", "Elements, size or cover relations of a quotient of the weak order on B_n");
    quot->add_option("--congruence", cong, "name or JSON")->required();
    quot->add_option("--n", qn)->required();
    auto* fl = quot->add_flag("--list", q_list);
    auto* fc = quot->add_flag("--count", q_count);
    auto* fh = quot->add_flag("--hasse", q_hasse);
    fl->excludes(fc)->excludes(fh);
    fc->excludes(fh);

    std::string suite;
    int vn = 0;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite)->required();
    verify->add_option("--n", vn)->required();

    Input render_in;
    std::string format = "svg";
    std::optional<int> width, height;
    int spacing = 40;
    auto* rend = app.add_subcommand("render", "Draw a diagram");
    render_in.add_to(rend);
    rend->add_option("--format", format)->check(CLI::IsMember({"svg", "ascii", "tikz"}));
    rend->add_option("--width", width);
    rend->add_option("--height", height);
    rend->add_option("--spacing", spacing);

    std::string what = "arcs", etype = "b";
    int en = 0;
    bool e_count = false;
    auto* enumerate = app.add_subcommand("enumerate", "List arcs, diagrams, elements or designations");
    enumerate->add_option("--what", what)->check(CLI::IsMember({"arcs", "diagrams", "elements", "designations"}));
    enumerate->add_option("--type", etype)->check(CLI::IsMember({"a", "b"}));
    enumerate->add_option("--n", en)->required();
    enumerate->add_flag("--count", e_count);

    std::string f_source, f_target;
    int fn = 0;
    auto* forcing = app.add_subcommand("forcing", "Whether one type-B arc forces another, or all arcs it forces");
    forcing->add_option("--n", fn)->required();
    forcing->add_option("--source", f_source, "arc JSON")->required();
    forcing->add_option("--target", f_target, "arc JSON");

    int an = 0;
    std::string a_source;
    auto* arrows = app.add_subcommand("arrows", "Shard-digraph arrows between type-B arcs");
    arrows->add_option("--n", an)->required();
    arrows->add_option("--source", a_source, "only arrows leaving this arc");

    std::string stype = "b";
    int sn = 0;
    auto* shards = app.add_subcommand("shards", "Shards of the reflection arrangement with their arcs");
    shards->add_option("--type", stype)->check(CLI::IsMember({"a", "b"}));
    shards->add_option("--n", sn)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (map->parsed()) {
        require_input(map_in);
        if (family_of(map_in.type) == Family::A) {
            if (!map_in.perm.empty()) emit(to_json(diagram_a(map_in)));
            else emit(to_json(delta_A_inv(diagram_a(map_in))));
        } else {
            if (!map_in.perm.empty()) emit(to_json(diagram_b(map_in)));
            else emit(to_json(delta_B_orb_inv(diagram_b(map_in))));
        }
    } else if (quot->parsed()) {
        ArcCongruence theta = congruence_by_name(cong, qn);
        if (q_list) {
            Json out = Json::array();
            for (const auto& p : quotient_elements(theta)) out.push_back(to_json(p));
            emit(out);
        } else if (q_hasse) {
            emit(to_json(quotient_lattice(theta)));
        } else {
            emit(quotient_elements(theta).size());
        }
    } else if (verify->parsed()) {
        SuiteReport r = run_suite(suite, vn);
        emit(Json{{"suite", r.suite},
                  {"n", r.n},
                  {"pass", r.pass},
                  {"checked", r.checked},
                  {"failures", r.failures},
                  {"counterexamples", r.counterexamples}});
        return r.pass ? kOk : kVerifyFailed;
    } else if (rend->parsed()) {
        require_input(render_in);
        RenderSpec spec;
        spec.format = render_format_from_string(format);
        int fallback = spec.format == RenderSpec::Format::Ascii ? 1 : 240;
        spec.width = width.value_or(fallback);
        spec.height = height.value_or(fallback);
        spec.spacing = spacing;
        if (family_of(render_in.type) == Family::A) std::cout << render(diagram_a(render_in), spec);
        else std::cout << render(diagram_b(render_in), spec);
    } else if (enumerate->parsed()) {
        Json out = Json::array();
        const bool typeA = family_of(etype) == Family::A;
        if (what == "arcs") {
            if (typeA) for (const auto& a : enumerate_arcs_A(en)) out.push_back(to_json(a));
            else for (const auto& a : all_arcs_B(en)) out.push_back(to_json(a));
        } else if (what == "diagrams") {
            if (typeA) for (const auto& p : all_permutations(en)) out.push_back(to_json(delta_A(p)));
            else for (const auto& D : enumerate_diagrams_B(en)) out.push_back(to_json(D));
        } else if (what == "elements") {
            if (typeA) for (const auto& p : all_permutations(en)) out.push_back(to_json(p));
            else for (const auto& p : all_signed_permutations(en)) out.push_back(to_json(p));
        } else {
            for (const auto& d : all_designations(en)) out.push_back(to_json(d));
        }
        if (e_count) emit(out.size());
        else emit(out);
    } else if (forcing->parsed()) {
        TypeBArc src = arc_b_from_json(parse_json(f_source), fn);
        if (!f_target.empty()) {
            emit(Json{{"forces", forcing_B(src, arc_b_from_json(parse_json(f_target), fn))}});
        } else {
            Json out = Json::array();
            for (const auto& a : all_arcs_B(fn))
                if (forcing_B(src, a)) out.push_back(to_json(a));
            emit(out);
        }
    } else if (arrows->parsed()) {
        std::optional<TypeBArc> src;
        if (!a_source.empty()) src = arc_b_from_json(parse_json(a_source), an);
        Json out = Json::array();
        for (const auto& e : arrows_B(an))
            if (!src || e.source == *src) out.push_back(to_json(e));
        emit(out);
    } else if (shards->parsed()) {
        const Family fam = family_of(stype);
        ShardModel M({fam, sn});
        Json out = Json::array();
        if (fam == Family::A) {
            for (const auto& a : enumerate_arcs_A(sn)) {
                int s = M.lower_shards(M.region_of(arc_to_ji_A(a, sn).one_line)).at(0);
                Json j = shard_json(M, s);
                j["arc"] = to_json(a);
                out.push_back(j);
            }
        } else {
            for (const auto& a : all_arcs_B(sn)) {
                int s = M.lower_shards(M.region_of(arc_to_ji_B(a, sn).one_line)).at(0);
                Json j = shard_json(M, s);
                j["arc"] = to_json(a);
                out.push_back(j);
            }
        }
        emit(out);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSemantic;
    }
}
