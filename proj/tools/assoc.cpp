// Command-line front end: build, analyze, compare, verify, export.
//
// Exit codes:
//   0  success (compare: non-equivalence established)
//   1  compare: affine witness found; verify: a check failed
//   2  invalid input (bad parameters, malformed file, unknown format, mismatched n)
//   3  n outside the supported range, or no default cluster support values at this n
//   4  facet certification failed
//   5  compare: inconclusive

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "assoc/analysis.hpp"
#include "assoc/io.hpp"
#include "assoc/verify.hpp"

namespace {

using nlohmann::json;
using namespace assoc;

constexpr int kDefaultMaxN = 7;

struct ExitError {
    int code;
    std::string message;
};

int max_n() {
    if (const char* env = std::getenv("ASSOC_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw ExitError{2, std::string("ASSOC_MAX_N is not an integer: ") + env};
        }
    }
    return kDefaultMaxN;
}

json parse_json_file(const std::string& path) {
    std::string text;
    try {
        text = io::read_file(path);
    } catch (const std::runtime_error& e) {
        throw ExitError{2, e.what()};
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ExitError{2, path + ": " + e.what()};
    }
}

io::PolytopeFile load_polytope(const std::string& path) {
    const json j = parse_json_file(path);
    try {
        return io::polytope_file_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw ExitError{2, path + ": " + e.what()};
    } catch (const json::exception& e) {
        throw ExitError{2, path + ": " + e.what()};
    }
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        io::write_file(out_path, text);
    }
}

int cmd_build(const std::string& construction_name, std::optional<int> n_flag, const std::string& params_path,
              const std::string& out_path) {
    Construction construction;
    try {
        construction = parse_construction(construction_name);
    } catch (const std::invalid_argument& e) {
        throw ExitError{2, e.what()};
    }
    std::optional<json> params_in;
    if (!params_path.empty()) params_in = parse_json_file(params_path);

    try {
        std::optional<int> n = n_flag;
        if (params_in) {
            const int file_n = construction == Construction::cluster ? io::support_values_n(*params_in)
                                                                     : params_in->at("n").get<int>();
            if (n && *n != file_n) {
                throw ExitError{2, "--n " + std::to_string(*n) + " disagrees with n = " + std::to_string(file_n) +
                                       " in " + params_path};
            }
            n = file_n;
        }
        if (!n) throw ExitError{2, "--n is required without --params"};
        if (*n < 1 || *n > max_n()) {
            throw ExitError{3, "n = " + std::to_string(*n) + " outside 1.." + std::to_string(max_n()) +
                                   " (set ASSOC_MAX_N to go further, unsupported)"};
        }

        std::optional<LabeledPolytope> p;
        json params;
        switch (construction) {
            case Construction::secondary: {
                const auto g = params_in ? io::geometry_from_json(*params_in) : parabola_geometry(*n);
                p = build_secondary(g);
                params = io::to_json(g);
                break;
            }
            case Construction::cluster: {
                SupportValues h;
                if (params_in) {
                    h = io::support_values_from_json(*params_in);
                } else {
                    try {
                        h = default_support_values(*n);
                    } catch (const std::runtime_error& e) {
                        throw ExitError{3, std::string(e.what()) + "; pass support values with --params"};
                    }
                }
                p = build_cluster_polytope(h, *n);
                params = io::to_json(h, *n);
                break;
            }
            case Construction::minkowski: {
                const auto a = params_in ? io::weights_from_json(*params_in) : uniform_weights(*n);
                p = build_minkowski(a);
                params = io::to_json(a);
                break;
            }
        }
        emit(out_path, io::to_json(io::PolytopeFile{*p, params}).dump(2) + "\n");
    } catch (const std::invalid_argument& e) {
        throw ExitError{2, e.what()};
    } catch (const json::exception& e) {
        throw ExitError{2, std::string("malformed parameters: ") + e.what()};
    }
    return 0;
}

int cmd_analyze(const std::string& path) {
    const auto file = load_polytope(path);
    try {
        std::cout << io::analysis_report(file.polytope).dump(2) << "\n";
    } catch (const CertificationError& e) {
        throw ExitError{4, std::string("certification failed: ") + e.what()};
    }
    return 0;
}

int cmd_compare(const std::string& path_a, const std::string& path_b) {
    const auto a = load_polytope(path_a);
    const auto b = load_polytope(path_b);
    if (a.polytope.n() != b.polytope.n()) {
        throw ExitError{2, "polytopes have different n (" + std::to_string(a.polytope.n()) + " and " +
                               std::to_string(b.polytope.n()) + ")"};
    }
    EquivalenceReport report;
    try {
        report = equivalence_search(a.polytope, b.polytope);
    } catch (const CertificationError& e) {
        throw ExitError{4, std::string("certification failed: ") + e.what()};
    }
    std::cout << io::to_json(report).dump(2) << "\n";
    switch (report.verdict) {
        case Verdict::non_equivalent: return 0;
        case Verdict::equivalent: return 1;
        case Verdict::inconclusive: return 5;
    }
    return 5;
}

int cmd_verify(int n_max, std::uint64_t seed, const std::string& manifest_path) {
    if (n_max < 1 || n_max > 6) throw ExitError{3, "--n-max must be in 1..6"};
    std::vector<CheckSpec> manifest = default_manifest();
    if (!manifest_path.empty()) {
        try {
            manifest = manifest_from_json(parse_json_file(manifest_path));
        } catch (const std::exception& e) {
            if (auto* exit = dynamic_cast<const ExitError*>(&e)) throw *exit;
            throw ExitError{2, manifest_path + ": " + e.what()};
        }
    }
    const auto outcomes = run_manifest(manifest, n_max, seed);
    const CheckOutcome* first_failure = nullptr;
    for (const auto& o : outcomes) {
        std::cout << format_outcome(o) << "\n";
        if (!o.passed && !first_failure) first_failure = &o;
    }
    if (first_failure) {
        std::cout << "first counterexample (" << first_failure->id << "):\n"
                  << first_failure->counterexample.dump(2) << "\n";
        return 1;
    }
    std::cout << "all " << outcomes.size() << " checks passed (seed " << seed << ")\n";
    return 0;
}

int cmd_export(const std::string& path, const std::string& format, const std::string& out_path) {
    if (format != "json" && format != "csv" && format != "off") {
        throw ExitError{2, "unknown format '" + format + "' (expected json, csv or off)"};
    }
    const auto file = load_polytope(path);
    try {
        if (format == "json") {
            emit(out_path, io::to_json(file).dump(2) + "\n");
        } else if (format == "csv") {
            emit(out_path, io::export_csv(file.polytope));
        } else {
            emit(out_path, io::export_off(file.polytope));
        }
    } catch (const CertificationError& e) {
        throw ExitError{4, std::string("certification failed: ") + e.what()};
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact realizations of the associahedron and their affine comparison"};
    app.require_subcommand(1);

    std::string construction, params, out, format, manifest;
    std::optional<int> n;
    std::string poly, other;
    int n_max = 3;
    std::uint64_t seed = 42;

    auto* build = app.add_subcommand("build", "Build a realization and write it as JSON");
    build->add_option("--construction", construction, "secondary, cluster or minkowski")->required();
    build->add_option("--n", n, "polygon has n+3 vertices");
    build->add_option("--params", params, "JSON parameter file (geometry, support values or weights)");
    build->add_option("--out", out, "output path (default: stdout)");

    auto* analyze = app.add_subcommand("analyze", "Facets, parallel pairs and special profile of a polytope file");
    analyze->add_option("polytope", poly)->required();

    auto* compare = app.add_subcommand("compare", "Search for an affine equivalence between two polytope files");
    compare->add_option("first", poly)->required();
    compare->add_option("second", other)->required();

    auto* verify = app.add_subcommand("verify", "Run the structural checks up to --n-max");
    verify->add_option("--n-max", n_max, "largest n checked (1..6)");
    verify->add_option("--seed", seed, "seed for the random parameter draws");
    verify->add_option("--manifest", manifest, "JSON manifest replacing the built-in check list");

    auto* exporter = app.add_subcommand("export", "Convert a polytope file to json, csv or off");
    exporter->add_option("polytope", poly)->required();
    exporter->add_option("--format", format, "json, csv or off")->required();
    exporter->add_option("--out", out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*build) return cmd_build(construction, n, params, out);
        if (*analyze) return cmd_analyze(poly);
        if (*compare) return cmd_compare(poly, other);
        if (*verify) return cmd_verify(n_max, seed, manifest);
        if (*exporter) return cmd_export(poly, format, out);
    } catch (const ExitError& e) {
        std::cerr << "assoc: " << e.message << "\n";
        return e.code;
    } catch (const CertificationError& e) {
        std::cerr << "assoc: certification failed: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "assoc: internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
