// veer: command-line front end for the veering triangulation toolkit.
//
// Subcommands take tri-json files and print a JSON report on stdout.
// Exit codes: 0 success, 1 domain error (with a JSON diagnostic), 2 usage.

#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "veering/veering.hpp"

namespace {

using nlohmann::ordered_json;
using namespace veering;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "io", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "io", "cannot open " + path + " for writing");
    out << text;
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        require(!item.empty(), "usage-value", "empty entry in integer list");
        out.push_back(std::stoi(item));
    }
    return out;
}

ordered_json angles_json(const AngleVector& theta) {
    ordered_json arr = ordered_json::array();
    for (const Rational& x : theta.a) arr.push_back(x.str());
    return arr;
}

ordered_json curve_json(const NormalCurve& c) {
    ordered_json segs = ordered_json::array();
    for (const CurveSegment& s : c.segs) segs.push_back({s.tri, s.entry, s.exit});
    return ordered_json{{"segments", segs}, {"embedded", c.embedded}};
}

ordered_json head(const std::string& command, const TriFile& file) {
    return ordered_json{{"schema", "veer-report/1"},
                        {"command", command},
                        {"input", {{"name", file.tri.name}, {"digest", input_digest(file.tri, file.taut)}}}};
}

TautStructure taut_of(const TriFile& file, const std::string& taut_flag) {
    if (!taut_flag.empty()) {
        TautStructure t;
        t.pi_pair = parse_ints(taut_flag);
        require(static_cast<int>(t.pi_pair.size()) == file.tri.n, "usage-value",
                "--taut needs one pair index per tetrahedron");
        return t;
    }
    require(file.taut.has_value(), "no-taut",
            "the file carries no \"taut\" field; pass --taut or run taut-search");
    return *file.taut;
}

ordered_json veering_json(const Analysis& a) {
    ordered_json colors = ordered_json::array();
    for (Color c : a.veering.coloring.edge) colors.push_back(to_string(c));
    ordered_json hinges = ordered_json::array();
    for (bool h : a.veering.hinge) hinges.push_back(h);
    return ordered_json{{"colors", colors},
                        {"hinges", hinges},
                        {"transverse", a.veering.transverse.has_value()}};
}

ordered_json bound_json(const BoundReport& r) {
    return ordered_json{{"d", r.d},           {"d_max", r.d_max},
                        {"e_max", r.e_max},   {"kappa", r.kappa.str()},
                        {"min_angle", r.min_angle.str()}, {"certified_bound", r.certified_bound.str()}};
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

int cmd_validate(const std::string& path) {
    TriFile file = parse_triangulation(read_file(path));
    EdgeTable edges = edge_classes(file.tri);
    CuspComplex cusp = build_cusp_complex(file.tri, edges);
    ordered_json j = head("validate", file);
    j["tetrahedra"] = file.tri.n;
    ordered_json degs = ordered_json::array();
    for (const EdgeClass& e : edges.classes) degs.push_back(e.degree());
    j["edge_degrees"] = degs;
    ordered_json tori = ordered_json::array();
    for (const CuspTorus& t : cusp.components)
        tori.push_back({{"triangles", t.triangles.size()},
                        {"vertices", t.verts.size()},
                        {"sides", t.sides.size()}});
    j["cusps"] = tori;
    if (file.taut) {
        AngleCheck chk = check_angle_vector(file.tri, edges, file.taut->angles());
        j["taut"] = ordered_json{{"pi_pair", file.taut->pi_pair}, {"classification", to_string(chk.cls)}};
    }
    emit(j);
    return 0;
}

int cmd_taut_search(const std::string& path) {
    TriFile file = parse_triangulation(read_file(path));
    EdgeTable edges = edge_classes(file.tri);
    std::vector<TautStructure> tauts = enumerate_taut_structures(file.tri, edges);
    ordered_json j = head("taut-search", file);
    j["count"] = tauts.size();
    ordered_json list = ordered_json::array();
    for (const TautStructure& t : tauts) list.push_back(t.pi_pair);
    j["taut_structures"] = list;
    emit(j);
    return 0;
}

int cmd_veering_check(const std::string& path, const std::string& taut_flag) {
    TriFile file = parse_triangulation(read_file(path));
    Analysis a = analyze(file.tri, taut_of(file, taut_flag));
    ordered_json j = head("veering-check", file);
    j["veering"] = veering_json(a);
    emit(j);
    return 0;
}

int cmd_ladders(const std::string& path, const std::string& taut_flag) {
    TriFile file = parse_triangulation(read_file(path));
    Analysis a = analyze(file.tri, taut_of(file, taut_flag));
    ordered_json j = head("ladders", file);
    ordered_json tori = ordered_json::array();
    for (const CuspTorus& torus : a.cusp.components) {
        ordered_json ladders = ordered_json::array();
        for (int lid : a.ladders.ladder_order[static_cast<std::size_t>(torus.id)]) {
            const Ladder& ld = a.ladders.ladders[static_cast<std::size_t>(lid)];
            ordered_json lj{{"id", ld.id},
                            {"triangles", ld.size()},
                            {"poles", {ld.pole_a, ld.pole_b}}};
            if (ld.has_orientation) lj["orientation"] = ld.ascending ? "ascending" : "descending";
            ladders.push_back(lj);
        }
        tori.push_back({{"torus", torus.id}, {"ladders", ladders}});
    }
    j["tori"] = tori;
    j["d_max"] = max_fan_length(a.cusp, a.veering.taut);
    j["e_max"] = a.edges.max_degree();
    ordered_json heights = ordered_json::array();
    for (int h : a.ladders.height) heights.push_back(h);
    j["heights"] = heights;
    emit(j);
    return 0;
}

int cmd_rescue(const std::string& path, const std::string& taut_flag) {
    TriFile file = parse_triangulation(read_file(path));
    Analysis a = analyze(file.tri, taut_of(file, taut_flag));
    RescueResult res = rescue_all(a);
    ordered_json j = head("rescue", file);
    j["angles"] = angles_json(res.theta);
    j["classification"] = to_string(check_angle_vector(a.tri, a.edges, res.theta).cls);
    j["min_angle"] = res.theta.min_entry().str();
    ordered_json log = ordered_json::array();
    for (const RescueStep& st : res.log)
        log.push_back({{"slot", st.slot}, {"coefficient", st.coeff.str()}, {"curve", curve_json(st.curve)}});
    j["log"] = log;
    emit(j);
    return 0;
}

int cmd_bound(const std::string& path, const std::string& taut_flag) {
    TriFile file = parse_triangulation(read_file(path));
    TautStructure taut = taut_of(file, taut_flag);
    ordered_json j = head("bound", file);
    if (transverse_orientation(file.tri, taut)) {
        Analysis a = analyze(file.tri, taut);
        BoundedRescueResult res = bounded_rescue(a);
        j["method"] = "direct";
        j["report"] = bound_json(res.report);
        j["angles"] = angles_json(res.theta);
    } else {
        BoundedRescueResult res = cover_and_average(file.tri, taut);
        j["method"] = "double-cover";
        j["report"] = bound_json(res.report);
        j["angles"] = angles_json(res.theta);
    }
    emit(j);
    return 0;
}

ordered_json cusp_holonomy_json(const CuspHolonomy& ch, const Rational& target) {
    return ordered_json{{"torus", ch.torus},
                        {"k", ch.k},
                        {"achieved", ch.achieved.str()},
                        {"target", target.str()},
                        {"match", ch.achieved == target},
                        {"paired_curve", curve_json(ch.delta)}};
}

int cmd_holonomy(const std::string& path, const std::string& taut_flag, const std::string& construction,
                 const std::string& signs_flag, const std::string& cusps_flag, int eps,
                 const std::string& orients_flag) {
    TriFile file = parse_triangulation(read_file(path));
    Analysis a = analyze(file.tri, taut_of(file, taut_flag));
    int c = static_cast<int>(a.cusp.components.size());
    std::vector<int> signs(static_cast<std::size_t>(c), 1);
    if (!signs_flag.empty()) signs = parse_ints(signs_flag);
    std::vector<int> orients(static_cast<std::size_t>(c), 1);
    if (!orients_flag.empty()) orients = parse_ints(orients_flag);
    std::vector<int> cusps;
    for (int i = 0; i < c; ++i) cusps.push_back(i);
    if (!cusps_flag.empty()) cusps = parse_ints(cusps_flag);

    ordered_json j = head("holonomy", file);
    j["construction"] = construction;
    ordered_json basis = ordered_json::array();
    for (const TorusBasis& tb : a.basis.tori)
        basis.push_back({{"torus", tb.torus},
                         {"b1", curve_json(tb.rep1)},
                         {"b2", curve_json(tb.rep2)}});
    j["basis"] = basis;

    if (construction == "rung") {
        HolonomyResult res = rung_holonomy(a, signs);
        j["angles"] = angles_json(res.theta);
        ordered_json per = ordered_json::array();
        for (const CuspHolonomy& ch : res.cusps)
            per.push_back(cusp_holonomy_json(
                ch, Rational(signs[static_cast<std::size_t>(ch.torus)] * ch.k, 2)));
        j["cusps"] = per;
    } else if (construction == "rung-transverse") {
        HolonomyResult res = rung_holonomy_transverse(a, cusps, eps);
        j["angles"] = angles_json(res.theta);
        std::set<int> in_J(cusps.begin(), cusps.end());
        ordered_json per = ordered_json::array();
        for (const CuspHolonomy& ch : res.cusps)
            per.push_back(cusp_holonomy_json(
                ch, in_J.count(ch.torus) ? Rational(eps * ch.k) : Rational(0)));
        j["cusps"] = per;
    } else if (construction == "ladderpole") {
        LadderpoleResult res = ladderpole_holonomy(a, orients);
        j["angles"] = angles_json(res.theta);
        ordered_json per = ordered_json::array();
        for (std::size_t i = 0; i < res.cusps.size(); ++i) {
            ordered_json cj = cusp_holonomy_json(res.cusps[i], res.cusps[i].achieved);
            cj["m"] = res.cusps[i].m;
            cj["target"] = "(m/4)";
            cj["ell"] = curve_json(res.ells[i]);
            per.push_back(cj);
        }
        j["cusps"] = per;
    } else if (construction == "ladderpole-transverse") {
        LadderpoleResult res = ladderpole_holonomy_transverse(a, cusps, orients);
        j["angles"] = angles_json(res.theta);
        std::set<int> in_J(cusps.begin(), cusps.end());
        ordered_json per = ordered_json::array();
        for (std::size_t i = 0; i < res.cusps.size(); ++i) {
            ordered_json cj = cusp_holonomy_json(res.cusps[i], res.cusps[i].achieved);
            cj["m"] = res.cusps[i].m;
            cj["target"] = in_J.count(res.cusps[i].torus) ? "(m/2)" : "0/1";
            cj["ell"] = curve_json(res.ells[i]);
            per.push_back(cj);
        }
        j["cusps"] = per;
    } else if (construction == "exotic") {
        std::array<ExoticResult, 2> ex = exotic_taut(a);
        j["exotic"] = ordered_json::array();
        for (const ExoticResult& e : ex)
            j["exotic"].push_back(
                {{"pi_pair", e.taut.pi_pair}, {"angles", angles_json(e.theta)}});
    } else {
        fail("usage-value", "unknown construction \"" + construction + "\"");
    }
    emit(j);
    return 0;
}

int cmd_bundle_gen(const std::string& word, const std::string& out_path) {
    Bundle b = bundle(word);
    std::string text = serialize_triangulation(b.tri, b.taut);
    write_file(out_path, text);
    TriFile file{b.tri, b.taut};
    ordered_json j = head("bundle-gen", file);
    j["word"] = word;
    j["tetrahedra"] = b.tri.n;
    j["out"] = out_path;
    emit(j);
    return 0;
}

int cmd_cusp_svg(const std::string& path, const std::string& taut_flag, const std::string& svg_path) {
    TriFile file = parse_triangulation(read_file(path));
    Analysis a = analyze(file.tri, taut_of(file, taut_flag));
    write_file(svg_path, cusp_svg(a));
    ordered_json j = head("cusp-svg", file);
    j["svg"] = svg_path;
    j["tori"] = a.cusp.components.size();
    emit(j);
    return 0;
}

/// Runs the full pipeline on one bundle word; throws on any violated
/// invariant. Returns a short summary string.
std::string check_word(const MonodromyWord& w) {
    Bundle b = bundle(w);
    Analysis a = analyze(b.tri, b.taut);
    check_internal(check_square_model(a.tri, a.edges, a.veering.taut, a.veering.coloring),
                   "square model disagrees");
    BoundedRescueResult bounded = bounded_rescue(a);
    RescueResult rescued = rescue_all(a);
    check_internal(check_angle_vector(a.tri, a.edges, rescued.theta).cls == AngleClass::positive,
                   "rescue not positive");
    check_height_relation(a);
    std::vector<int> signs(a.cusp.components.size(), 1);
    rung_holonomy(a, signs);
    std::vector<int> all;
    for (const CuspTorus& t : a.cusp.components) all.push_back(t.id);
    rung_holonomy_transverse(a, all, 1);
    exotic_taut(a);
    ladderpole_holonomy(a, signs);
    ladderpole_holonomy_transverse(a, all, signs);
    std::ostringstream ss;
    ss << "n=" << b.tri.n << " d_max=" << bounded.report.d_max << " min="
       << bounded.report.min_angle.str() << " bound=" << bounded.report.certified_bound.str()
       << " steps=" << rescued.log.size();
    return ss.str();
}

int cmd_corpus_check(int max_len, std::uint64_t seed) {
    std::vector<MonodromyWord> words = corpus(max_len, seed);
    int failures = 0;
    for (const MonodromyWord& w : words) {
        try {
            std::string summary = check_word(w);
            std::cout << "pass  " << w.letters << "  " << summary << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL  " << w.letters << "  " << e.what() << "\n";
        }
    }
    std::cout << (failures == 0 ? "all passed" : "failures: " + std::to_string(failures)) << " ("
              << words.size() << " words)\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"veering triangulation toolkit: taut and veering structures, positive angle "
                 "structures with certified bounds, cusp combinatorics, angular holonomy"};
    app.require_subcommand(1);

    std::string path, taut_flag, construction = "rung", signs_flag, cusps_flag, orients_flag;
    std::string word, out_path, svg_path;
    int eps = 1, max_len = 6;
    std::uint64_t seed = 7;

    CLI::App* validate = app.add_subcommand("validate", "check a tri-json file");
    validate->add_option("file", path)->required();

    CLI::App* taut_search = app.add_subcommand("taut-search", "enumerate taut structures");
    taut_search->add_option("file", path)->required();

    CLI::App* veering_check = app.add_subcommand("veering-check", "colors, hinges, transversality");
    veering_check->add_option("file", path)->required();
    veering_check->add_option("--taut", taut_flag, "pi-pair per tetrahedron, comma separated");

    CLI::App* ladders = app.add_subcommand("ladders", "ladder decomposition of the cusp tori");
    ladders->add_option("file", path)->required();
    ladders->add_option("--taut", taut_flag);

    CLI::App* rescue = app.add_subcommand("rescue", "deform to a positive angle structure");
    rescue->add_option("file", path)->required();
    rescue->add_option("--taut", taut_flag);

    CLI::App* bound = app.add_subcommand("bound", "positive structure with certified lower bound");
    bound->add_option("file", path)->required();
    bound->add_option("--taut", taut_flag);

    CLI::App* holonomy = app.add_subcommand("holonomy", "boundary holonomy constructions");
    holonomy->add_option("file", path)->required();
    holonomy->add_option("--taut", taut_flag);
    holonomy->add_option("--construction", construction,
                         "rung | rung-transverse | ladderpole | ladderpole-transverse | exotic");
    holonomy->add_option("--signs", signs_flag, "per-cusp signs for rung holonomy");
    holonomy->add_option("--cusps", cusps_flag, "cusp subset J for transverse variants");
    holonomy->add_option("--eps", eps, "global sign for rung-transverse");
    holonomy->add_option("--orients", orients_flag, "per-cusp ladderpole orientations");

    CLI::App* exotic = app.add_subcommand("exotic", "the two exotic taut structures");
    exotic->add_option("file", path)->required();
    exotic->add_option("--taut", taut_flag);

    CLI::App* bundle_gen = app.add_subcommand("bundle-gen", "layered once-punctured-torus bundle");
    bundle_gen->add_option("word", word, "monodromy word over R, L")->required();
    bundle_gen->add_option("--out", out_path, "output tri-json path")->required();

    CLI::App* cusp_svg_cmd = app.add_subcommand("cusp-svg", "schematic cusp view");
    cusp_svg_cmd->add_option("file", path)->required();
    cusp_svg_cmd->add_option("--taut", taut_flag);
    cusp_svg_cmd->add_option("--svg", svg_path, "output SVG path")->required();

    CLI::App* corpus_check = app.add_subcommand("corpus-check", "run the pipeline over a word corpus");
    corpus_check->add_option("--max-len", max_len);
    corpus_check->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(path);
        if (taut_search->parsed()) return cmd_taut_search(path);
        if (veering_check->parsed()) return cmd_veering_check(path, taut_flag);
        if (ladders->parsed()) return cmd_ladders(path, taut_flag);
        if (rescue->parsed()) return cmd_rescue(path, taut_flag);
        if (bound->parsed()) return cmd_bound(path, taut_flag);
        if (holonomy->parsed())
            return cmd_holonomy(path, taut_flag, construction, signs_flag, cusps_flag, eps, orients_flag);
        if (exotic->parsed())
            return cmd_holonomy(path, taut_flag, "exotic", signs_flag, cusps_flag, eps, orients_flag);
        if (bundle_gen->parsed()) return cmd_bundle_gen(word, out_path);
        if (cusp_svg_cmd->parsed()) return cmd_cusp_svg(path, taut_flag, svg_path);
        if (corpus_check->parsed()) return cmd_corpus_check(max_len, seed);
    } catch (const Error& e) {
        ordered_json j{{"schema", "veer-report/1"},
                       {"error", {{"kind", e.kind()}, {"message", e.what()}}}};
        std::cout << j.dump() << "\n";
        return 1;
    } catch (const InternalError& e) {
        ordered_json j{{"schema", "veer-report/1"},
                       {"error", {{"kind", "internal"}, {"message", e.what()}}}};
        std::cout << j.dump() << "\n";
        return 1;
    }
    return 2;
}
