// Command-line front end: decision procedures, nerve/extraction bridges,
// and corpus generators over the JSON interchange formats.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "segalkit/segalkit.hpp"

namespace {

using segalkit::CheckReport;
using segalkit::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) throw segalkit::StructuralError("cannot open " + path);
    return json::parse(in);  // parse_error carries the byte position
}

void write_output(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out.is_open()) throw segalkit::StructuralError("cannot open " + out_path);
    out << j.dump(2) << "\n";
}

segalkit::SemiSimplicialSet load_sst(const std::string& path) {
    return segalkit::sst_from_json(load_file(path));
}

segalkit::CategoryFile load_category(const std::string& path) {
    return segalkit::category_from_json(load_file(path));
}

void print_report(const CheckReport& r, bool json_mode) {
    if (json_mode) {
        std::cout << segalkit::report_to_json(r).dump(2) << "\n";
        return;
    }
    std::cout << (r.verdict ? "[ OK ] " : "[FAIL] ") << r.check;
    for (const auto& [key, value] : r.counts) std::cout << "  " << key << "=" << value;
    std::cout << "\n";
    if (r.witness) {
        std::cout << "  witness: " << r.witness->kind;
        for (const auto& [key, value] : r.witness->data)
            std::cout << " " << key << "=" << value;
        if (!r.witness->faces.empty()) {
            std::cout << " faces=[";
            for (std::size_t i = 0; i < r.witness->faces.size(); ++i)
                std::cout << (i ? "," : "") << r.witness->faces[i];
            std::cout << "]";
        }
        if (!r.witness->note.empty()) std::cout << "  (" << r.witness->note << ")";
        std::cout << "\n";
    }
}

int report_exit(const CheckReport& r) {
    if (r.verdict) return kExitTrue;
    return r.structural ? kExitError : kExitFalse;
}

/// Two-sided units per object, when they exist; the basis for reading a
/// plain Segal set as a precategory.
std::optional<std::vector<int>> find_identity_table(const segalkit::TransitiveGraph& tg) {
    std::vector<int> ids(static_cast<std::size_t>(tg.objects()), -1);
    for (int x = 0; x < tg.objects(); ++x) {
        for (int e = 0; e < tg.hom_size(x, x); ++e) {
            bool unit = true;
            for (int a = 0; a < tg.objects() && unit; ++a)
                for (int f = 0; f < tg.hom_size(a, x) && unit; ++f)
                    unit = tg.compose(a, x, x, e, f) == f;
            for (int b = 0; b < tg.objects() && unit; ++b)
                for (int g = 0; g < tg.hom_size(x, b) && unit; ++g)
                    unit = tg.compose(x, x, b, g, e) == g;
            if (unit) {
                ids[static_cast<std::size_t>(x)] = e;
                break;
            }
        }
        if (ids[static_cast<std::size_t>(x)] < 0) return std::nullopt;
    }
    return ids;
}

segalkit::GeneratedCategory run_generator(const std::string& kind,
                                          const std::vector<std::string>& params,
                                          std::uint64_t seed, double density) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw segalkit::PreconditionError("kind '" + kind + "' expects " +
                                              std::to_string(n) + " parameter(s)");
    };
    if (kind == "chain-poset") {
        need(1);
        return segalkit::gen_chain_poset(std::stoi(params[0]));
    }
    if (kind == "random-poset") {
        if (params.size() == 2) return segalkit::gen_random_poset(std::stoi(params[0]),
                                                                  std::stod(params[1]), seed);
        need(1);
        return segalkit::gen_random_poset(std::stoi(params[0]), density, seed);
    }
    if (kind == "group-delooping") {
        need(1);
        return segalkit::gen_group_delooping(params[0]);
    }
    if (kind == "walking-iso") {
        need(0);
        return segalkit::gen_walking_iso();
    }
    if (kind == "random-category") {
        need(2);
        return segalkit::gen_random_category(std::stoi(params[0]), std::stoi(params[1]), seed,
                                             density);
    }
    if (kind == "terminal") {
        need(0);
        return segalkit::gen_terminal();
    }
    throw segalkit::PreconditionError(
        "unknown kind '" + kind +
        "' (chain-poset, random-poset, group-delooping, walking-iso, random-category, terminal)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite semi-Segal sets: decision procedures and categorical bridges"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit reports as JSON");

    std::string in_path, out_path;
    int level = 4, missing = -1, target = -1;
    bool exhaustive = false;

    auto* validate_cmd = app.add_subcommand("validate", "check well-formedness of a .sst.json");
    validate_cmd->add_option("file", in_path)->required();

    auto* segal_cmd = app.add_subcommand("segal-check", "unique inner horn filling");
    segal_cmd->add_option("file", in_path)->required();
    segal_cmd->add_flag("--exhaustive", exhaustive, "scan all horns and report totals");

    auto* horn_cmd = app.add_subcommand("horn-count", "count compatible horns per (level, missing)");
    horn_cmd->add_option("file", in_path)->required();
    horn_cmd->add_option("--level", level, "restrict to one level")->default_val(-1);
    horn_cmd->add_option("--missing", missing, "restrict to one missing index")->default_val(-1);

    auto* nerve_cmd = app.add_subcommand("nerve", "build the nerve of a .cat.json");
    nerve_cmd->add_option("file", in_path)->required();
    nerve_cmd->add_option("--level", level, "target level (1..4)")->default_val(4);
    nerve_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* extract_cmd = app.add_subcommand("extract", "read a Segal .sst.json as a category");
    extract_cmd->add_option("file", in_path)->required();
    extract_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* roundtrip_cmd = app.add_subcommand(
        "roundtrip", "extract(nerve(x)) == x for categories, nerve(extract(s)) ~ s for sets");
    roundtrip_cmd->add_option("file", in_path)->required();
    roundtrip_cmd->add_option("--level", level, "nerve level for category input")->default_val(4);

    auto* complete_cmd = app.add_subcommand("complete-check", "unique neutral edge per vertex");
    complete_cmd->add_option("file", in_path)->required();

    auto* univalence_cmd =
        app.add_subcommand("univalence-check", "identities are the only isomorphisms");
    univalence_cmd->add_option("file", in_path)->required();

    auto* synth_cmd =
        app.add_subcommand("synthesize-degeneracies", "build degeneracies from completeness");
    synth_cmd->add_option("file", in_path)->required();
    synth_cmd->add_option("--target", target, "structure level to build (default: top - 1)")
        ->default_val(-1);
    synth_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    std::string kind;
    std::vector<std::string> params;
    std::uint64_t seed = 0;
    double density = 0.5;
    auto* generate_cmd = app.add_subcommand("generate", "emit a corpus category as JSON");
    generate_cmd->add_option("kind", kind)->required();
    generate_cmd->add_option("params", params, "kind parameters");
    generate_cmd->add_option("--seed", seed)->default_val(0);
    generate_cmd->add_option("--density", density)->default_val(0.5);
    generate_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) {
            auto r = segalkit::validate(load_sst(in_path));
            print_report(r, json_mode);
            return report_exit(r);
        }
        if (segal_cmd->parsed()) {
            auto r = segalkit::check_segal(load_sst(in_path), exhaustive);
            print_report(r, json_mode);
            return report_exit(r);
        }
        if (horn_cmd->parsed()) {
            auto sst = load_sst(in_path);
            json rows = json::array();
            for (int n = 2; n <= sst.top_level(); ++n) {
                if (level >= 0 && n != level) continue;
                for (int m = 0; m <= n; ++m) {
                    if (missing >= 0 && m != missing) continue;
                    std::int64_t count = 0;
                    segalkit::for_each_horn(sst, n, m, [&](const segalkit::Horn&) {
                        ++count;
                        return true;
                    });
                    rows.push_back({{"level", n}, {"missing", m}, {"count", count}});
                }
            }
            if (json_mode) {
                std::cout << json{{"horn_counts", rows}}.dump(2) << "\n";
            } else {
                for (const auto& row : rows)
                    std::cout << "horn(" << row["level"] << "," << row["missing"]
                              << "): " << row["count"] << "\n";
            }
            return kExitTrue;
        }
        if (nerve_cmd->parsed()) {
            auto cat = load_category(in_path);
            write_output(segalkit::sst_to_json(segalkit::nerve(cat.tg, level)), out_path);
            return kExitTrue;
        }
        if (extract_cmd->parsed()) {
            auto sst = load_sst(in_path);
            auto tg = segalkit::extract_transitive_graph(sst);
            write_output(segalkit::category_to_json(tg, find_identity_table(tg)), out_path);
            return kExitTrue;
        }
        if (roundtrip_cmd->parsed()) {
            auto j = load_file(in_path);
            CheckReport r;
            r.check = "roundtrip";
            if (j.contains("objects")) {
                auto cat = segalkit::category_from_json(j);
                auto back = segalkit::extract_transitive_graph(segalkit::nerve(cat.tg, level));
                r.verdict = back == cat.tg;
                if (!r.verdict)
                    r.witness = segalkit::Witness("table_mismatch", {{"level", level}});
                r.count("level", level);
            } else {
                auto sst = segalkit::sst_from_json(j);
                auto back =
                    segalkit::nerve(segalkit::extract_transitive_graph(sst), sst.top_level());
                r.verdict = segalkit::sst_isomorphic(sst, back);
                if (!r.verdict) r.witness = segalkit::Witness("not_isomorphic", {});
                r.count("top_level", sst.top_level());
            }
            print_report(r, json_mode);
            return report_exit(r);
        }
        if (complete_cmd->parsed()) {
            auto r = segalkit::check_completeness(load_sst(in_path));
            print_report(r, json_mode);
            return report_exit(r);
        }
        if (univalence_cmd->parsed()) {
            auto sst = load_sst(in_path);
            auto tg = segalkit::extract_transitive_graph(sst);
            auto ids = find_identity_table(tg);
            if (!ids)
                throw segalkit::PreconditionError(
                    "instance carries no identity structure; univalence is not formulable");
            auto pc = segalkit::make_precategory({tg, *ids});
            auto d = segalkit::degeneracies_from_identities(pc, sst);
            auto r = segalkit::check_univalence(sst, d);
            print_report(r, json_mode);
            return report_exit(r);
        }
        if (synth_cmd->parsed()) {
            auto sst = load_sst(in_path);
            int t = target > 0 ? target : std::max(1, std::min(3, sst.top_level() - 1));
            auto d = segalkit::synthesize_degeneracies(sst, t);
            write_output(segalkit::degeneracies_to_json(d), out_path);
            return kExitTrue;
        }
        if (generate_cmd->parsed()) {
            auto gen = run_generator(kind, params, seed, density);
            auto laws = segalkit::check_associativity(gen.tg);
            if (!laws.verdict)
                throw segalkit::StructuralError("generated table fails its own law check");
            if (gen.ids) {
                auto units = segalkit::check_units({gen.tg, *gen.ids});
                if (!units.verdict)
                    throw segalkit::StructuralError("generated table fails its own law check");
            }
            write_output(segalkit::category_to_json(gen.tg, gen.ids), out_path);
            return kExitTrue;
        }
    } catch (const json::parse_error& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kExitError;
    } catch (const segalkit::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const segalkit::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const segalkit::InconsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
