#include "bpl/error.hpp"
#include "bpl/lattice.hpp"
#include "bpl/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;
using namespace bpl;

namespace {

struct Globals {
    std::string format = "json";
    std::string out;
    std::string corpus;
    bool a3 = false;
    bool seed_free = false;
};

void emit(const Globals& g, const std::string& text, const std::string& path = "") {
    const std::string target = path.empty() ? g.out : path;
    if (target.empty() || target == "-")
        std::cout << text;
    else
        write_file(target, text);
}

std::string format_json(const Globals& g, const Json& j) {
    if (g.format == "text") return render_text(j);
    if (g.format == "svg") throw Error(ErrorKind::Schema, "field 'format': svg output is only produced by render");
    return dump(j);
}

// Accepts a construction file or a bare spec.
Construction load(const std::string& path, bool a3) {
    const Json j = parse_json_text(read_file(path), path);
    if (j.is_object() && j.value("format", "") == "bpl-construction") return construction_from_json(j);
    return build_from_spec(j, a3);
}

std::vector<std::string> corpus_files(const std::string& dir) {
    if (!fs::is_directory(dir)) throw Error(ErrorKind::Schema, "corpus " + dir + " is not a directory");
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    return files;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int cmd_build(const Globals& g, const std::string& input) {
    if (!g.corpus.empty()) {
        if (g.out.empty()) throw Error(ErrorKind::Schema, "build --corpus needs --out <directory>");
        fs::create_directories(g.out);
        for (const auto& f : corpus_files(g.corpus)) {
            const Construction c = load(f, g.a3);
            write_file((fs::path(g.out) / fs::path(f).filename()).string(), dump(to_json(c)));
        }
        return 0;
    }
    if (input.empty()) throw Error(ErrorKind::Schema, "build needs a spec file");
    emit(g, dump(to_json(load(input, g.a3))));
    return 0;
}

int report_exit(const Json& report) {
    for (const auto& r : report["not_certified"])
        if (r["error"] == "not-certified") return 4;
    return 0;
}

int cmd_invariants(const Globals& g, const std::string& input, const std::string& spheres, const std::string& systems) {
    ReportOptions opts;
    opts.spheres = split(spheres);
    if (!systems.empty()) {
        opts.local_systems.clear();
        for (const auto& s : split(systems)) opts.local_systems.push_back(parse_rat(s));
    }
    if (!g.corpus.empty()) {
        Json all = Json::object();
        int code = 0;
        for (const auto& f : corpus_files(g.corpus)) {
            const Json r = invariant_report(load(f, g.a3), opts);
            code = std::max(code, report_exit(r));
            all[fs::path(f).filename().string()] = r;
        }
        emit(g, format_json(g, all));
        return code;
    }
    if (input.empty()) throw Error(ErrorKind::Schema, "invariants needs a construction file");
    const Json r = invariant_report(load(input, g.a3), opts);
    emit(g, format_json(g, r));
    return report_exit(r);
}

int cmd_family(const Globals& g, const std::string& input) {
    if (input.empty()) throw Error(ErrorKind::Schema, "family needs a family spec file");
    const Json cat = family_catalog(parse_json_text(read_file(input), input));
    emit(g, format_json(g, cat));
    return discrepancy_count(cat) ? 5 : 0;
}

int cmd_render(const Globals& g, const std::string& input) {
    if (!g.corpus.empty()) {
        if (g.out.empty()) throw Error(ErrorKind::Schema, "render --corpus needs --out <directory>");
        fs::create_directories(g.out);
        for (const auto& f : corpus_files(g.corpus)) {
            const fs::path target = fs::path(g.out) / fs::path(f).filename().replace_extension(".svg");
            write_file(target.string(), render_svg(load(f, g.a3)));
        }
        return 0;
    }
    if (input.empty()) throw Error(ErrorKind::Schema, "render needs a construction file");
    emit(g, render_svg(load(input, g.a3)));
    return 0;
}

Json poly_json(const PolyZ& p) {
    Json a = Json::array();
    for (const auto& c : p) a.push_back(to_string(c));
    return a;
}

int cmd_lattice(const Globals& g, const std::vector<int>& exps, const std::string& query, int phi_k) {
    if (exps.empty()) throw Error(ErrorKind::Schema, "lattice needs exponents, e.g. 'lattice 3 3 3'");
    const MilnorLattice lat = build_lattice(exps);
    Json j{{"exponents", exps}, {"rank", lat.rank}, {"fiber_dim", lat.fiber_dim},
           {"convention_ambiguous", lat.convention_ambiguous}, {"seifert_sign", lat.seifert_sign},
           {"twist_constant", lat.twist_constant}};
    if (query == "spectrum" || query == "charpoly") {
        const PolyZ cp = charpoly(total_monodromy(lat));
        const PolyZ sp = spectrum_polynomial(exps);
        j["charpoly"] = poly_to_string(cp);
        j["charpoly_coefficients"] = poly_json(cp);
        j["spectrum_polynomial"] = poly_to_string(sp);
        j["match"] = cp == sp;
        if (cp != sp) {
            emit(g, format_json(g, j));
            return 5;
        }
    } else if (query == "gram") {
        j["gram"] = export_matrix(lat.gram);
    } else if (query == "seifert") {
        j["seifert"] = export_matrix(lat.seifert);
    } else if (query == "monodromy") {
        j["monodromy"] = export_matrix(total_monodromy(lat));
    } else if (query == "phi") {
        Exponents e;
        e.a.assign(exps.begin(), exps.end() - 1);
        e.b = exps.back();
        const auto word = phi_factorization(e, phi_k);
        const MatZ lhs = power(twist_product(lat, word), phi_k);
        const MatZ rhs = power(total_monodromy(lat), e.b);
        j["phi_word_length"] = word.size();
        j["k"] = phi_k;
        j["phi_k_equals_nu_b"] = equal(lhs, rhs);
        if (!equal(lhs, rhs)) {
            emit(g, format_json(g, j));
            return 5;
        }
    } else {
        throw Error(ErrorKind::Schema, "field 'query': unknown lattice query '" + query + "'");
    }
    emit(g, format_json(g, j));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lefschetz-fibred Lagrangian constructions: build, invariants, family catalogs, diagrams, lattices"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text", "svg"}));
    app.add_option("--out", g.out, "Output file or directory");
    app.add_option("--corpus", g.corpus, "Process every .json file in this directory");
    app.add_flag("--a3", g.a3, "Forbid fiber label d (A3 reduction)");
    app.add_flag("--seed-free", g.seed_free, "Assert that no randomness is used (always true)");

    std::string input, spheres, systems, query = "spectrum";
    std::vector<int> exps;
    int phi_k = 1;
    auto* build = app.add_subcommand("build", "Build a construction from a spec");
    build->add_option("spec", input, "Spec file");
    auto* inv = app.add_subcommand("invariants", "Invariant report of a construction");
    inv->add_option("construction", input, "Construction or spec file");
    inv->add_option("--spheres", spheres, "Comma-separated sphere names (default: all)");
    inv->add_option("--local-systems", systems, "Comma-separated ratios beta'/beta (default: 1,-1,2)");
    auto* fam = app.add_subcommand("family", "Family catalog with distinctness certificates");
    fam->add_option("spec", input, "Family spec file");
    auto* ren = app.add_subcommand("render", "SVG base diagram");
    ren->add_option("construction", input, "Construction or spec file");
    auto* lat = app.add_subcommand("lattice", "Milnor lattice queries");
    lat->add_option("exponents", exps, "Exponents a_0 ... a_m")->required();
    lat->add_option("--query", query, "spectrum | charpoly | gram | seifert | monodromy | phi");
    lat->add_option("--phi-k", phi_k, "k with b = k * lcm(a_0..a_{m-1}) for --query phi");

    for (auto* sub : {build, inv, fam, ren, lat}) {
        sub->add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text", "svg"}));
        sub->add_option("--out", g.out, "Output file or directory");
        sub->add_option("--corpus", g.corpus, "Process every .json file in this directory");
        sub->add_flag("--a3", g.a3, "Forbid fiber label d (A3 reduction)");
        sub->add_flag("--seed-free", g.seed_free, "Assert that no randomness is used (always true)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*build) return cmd_build(g, input);
        if (*inv) return cmd_invariants(g, input, spheres, systems);
        if (*fam) return cmd_family(g, input);
        if (*ren) return cmd_render(g, input);
        if (*lat) return cmd_lattice(g, exps, query, phi_k);
    } catch (const Error& e) {
        std::cerr << "error[" << kind_name(e.kind()) << "]: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
