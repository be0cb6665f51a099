#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace segalkit;
namespace fs = std::filesystem;

namespace {

const char* cli_path() { return SEGALKIT_CLI_PATH; }

fs::path scratch_dir() {
    auto dir = fs::temp_directory_path() / "segalkit_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
    auto p = scratch_dir() / name;
    std::ofstream out(p);
    out << text;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(const std::string& args) {
    std::string cmd = std::string(cli_path()) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

int run_capture(const std::string& args, std::string& output) {
    auto out_file = scratch_dir() / "stdout.txt";
    std::string cmd =
        std::string(cli_path()) + " " + args + " > " + out_file.string() + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    output = slurp(out_file);
    return WEXITSTATUS(rc);
}

fs::path sst_file(const std::string& name, const SemiSimplicialSet& sst) {
    return write_file(name, sst_to_json(sst).dump(2));
}

}  // namespace

TEST_CASE("segal-check exits 0 on a chain nerve") {
    auto pc = corpus::as_precategory(gen_chain_poset(3));
    auto file = sst_file("chain3.sst.json", nerve(pc, 4));
    CHECK(run("segal-check " + file.string()) == 0);
    CHECK(run("segal-check --exhaustive " + file.string()) == 0);
}

TEST_CASE("complete-check exits 1 on the walking isomorphism with a witness") {
    auto file = sst_file("walking-iso.sst.json", nerve(gen_walking_iso().tg, 4));
    std::string out;
    int rc = run_capture("--json complete-check " + file.string(), out);
    CHECK(rc == 1);
    auto j = json::parse(out);
    CHECK(j.at("check") == "completeness");
    CHECK(j.at("verdict") == false);
    CHECK(j.at("witness").at("neutral_incoming") == 2);
}

TEST_CASE("roundtrip exits 0 on the flip group at level 4") {
    auto g = gen_group_delooping("z2");
    auto file = write_file("z2.cat.json", category_to_json(g.tg, g.ids).dump(2));
    CHECK(run("roundtrip " + file.string() + " --level 4") == 0);
}

TEST_CASE("roundtrip handles semisimplicial input") {
    auto file = sst_file("chain2.sst.json",
                         nerve(corpus::as_precategory(gen_chain_poset(2)), 3));
    CHECK(run("roundtrip " + file.string()) == 0);
}

TEST_CASE("malformed JSON exits 2") {
    auto file = write_file("broken.sst.json", "{ not json");
    CHECK(run("validate " + file.string()) == 2);
    CHECK(run("segal-check " + file.string()) == 2);
}

TEST_CASE("validate distinguishes law failures from structural damage") {
    // identity violation: exit 1
    std::vector<Simplex> edges = {Simplex{{1, 0}}, Simplex{{2, 0}}, Simplex{{2, 2}}};
    std::vector<Simplex> tris = {Simplex{{2, 1, 0}}};
    auto bad = SemiSimplicialSet::from_counts(3, {edges, tris});
    CHECK(run("validate " + sst_file("bad.sst.json", bad).string()) == 1);
    // dangling reference: exit 2
    auto dangling = write_file(
        "dangling.sst.json",
        R"({"top_level":1,"levels":[{"count":1},{"simplices":[{"faces":[4,0]}]}]})");
    CHECK(run("validate " + dangling.string()) == 2);
    // well-formed nerve: exit 0
    auto good = sst_file("good.sst.json", nerve(gen_walking_iso().tg, 2));
    CHECK(run("validate " + good.string()) == 0);
}

TEST_CASE("univalence-check agrees with the library verdicts") {
    auto chain = sst_file("uni-chain.sst.json",
                          nerve(corpus::as_precategory(gen_chain_poset(3)), 3));
    CHECK(run("univalence-check " + chain.string()) == 0);
    auto z2 = sst_file("uni-z2.sst.json",
                       nerve(corpus::as_precategory(gen_group_delooping("z2")), 3));
    CHECK(run("univalence-check " + z2.string()) == 1);
}

TEST_CASE("generate is deterministic for a fixed seed") {
    std::string a, b;
    CHECK(run_capture("generate random-category 4 2 --seed 7", a) == 0);
    CHECK(run_capture("generate random-category 4 2 --seed 7", b) == 0);
    CHECK(a == b);
    REQUIRE_FALSE(a.empty());
    auto parsed = category_from_json(json::parse(a));
    CHECK(parsed.tg.objects() == 4);
}

TEST_CASE("generate produces the advertised corpus kinds") {
    for (const std::string& spec : {std::string("chain-poset 3"), std::string("walking-iso"),
                                    std::string("terminal"), std::string("group-delooping z2"),
                                    std::string("random-poset 5 0.4 --seed 3"),
                                    std::string("random-category 3 2 --seed 1")}) {
        std::string out;
        INFO(spec);
        CHECK(run_capture("generate " + spec, out) == 0);
        auto parsed = category_from_json(json::parse(out));
        CHECK(check_associativity(parsed.tg).verdict);
    }
    CHECK(run("generate no-such-kind") == 2);
    CHECK(run("generate chain-poset") == 2);  // missing parameter
}

TEST_CASE("nerve then extract through files recovers the table") {
    auto g = gen_group_delooping("z3");
    auto cat_file = write_file("z3.cat.json", category_to_json(g.tg, g.ids).dump(2));
    auto nerve_file = scratch_dir() / "z3.sst.json";
    CHECK(run("nerve " + cat_file.string() + " --level 3 -o " + nerve_file.string()) == 0);
    std::string extracted;
    CHECK(run_capture("extract " + nerve_file.string(), extracted) == 0);
    auto parsed = category_from_json(json::parse(extracted));
    CHECK(parsed.tg == g.tg);
    REQUIRE(parsed.ids.has_value());
    CHECK(*parsed.ids == *g.ids);
}

TEST_CASE("synthesize-degeneracies emits a validating structure") {
    auto pc = corpus::as_precategory(gen_chain_poset(3));
    auto sst = nerve(pc, 4);
    auto file = sst_file("synth.sst.json", sst);
    std::string out;
    CHECK(run_capture("synthesize-degeneracies " + file.string(), out) == 0);
    auto d = degeneracies_from_json(json::parse(out));
    CHECK(validate_degeneracies(sst, d).verdict);
    // incomplete input: precondition error
    auto z2 = sst_file("synth-z2.sst.json",
                       nerve(corpus::as_precategory(gen_group_delooping("z2")), 4));
    CHECK(run("synthesize-degeneracies " + z2.string()) == 2);
}

TEST_CASE("horn-count reports per level and missing index") {
    auto file = sst_file("counts.sst.json",
                         nerve(corpus::as_precategory(gen_chain_poset(3)), 3));
    std::string out;
    CHECK(run_capture("--json horn-count " + file.string() + " --level 3 --missing 1", out) == 0);
    auto j = json::parse(out);
    REQUIRE(j.at("horn_counts").size() == 1);
    CHECK(j.at("horn_counts")[0].at("count") == 15);
}

TEST_CASE("JSON round-trips through parse and serialize") {
    for (const auto& g : corpus::lawful()) {
        INFO(g.name);
        auto j = category_to_json(g.tg, g.ids);
        auto parsed = category_from_json(j);
        CHECK(parsed.tg == g.tg);
        CHECK(category_to_json(parsed.tg, parsed.ids) == j);
        auto sst = nerve(g.tg, 3);
        auto js = sst_to_json(sst);
        CHECK(sst_from_json(js) == sst);
        CHECK(sst_to_json(sst_from_json(js)) == js);
    }
}

TEST_CASE("degeneracy structures round-trip through JSON") {
    auto pc = corpus::as_precategory(gen_chain_poset(2));
    auto sst = nerve(pc, 4);
    auto d = degeneracies_from_identities(pc, sst);
    CHECK(degeneracies_from_json(degeneracies_to_json(d)) == d);
}

TEST_CASE("reports serialize with witness and counts") {
    auto r = check_completeness(nerve(gen_walking_iso().tg, 2));
    auto j = report_to_json(r);
    CHECK(j.at("verdict") == false);
    CHECK(j.contains("witness"));
    CHECK(j.contains("counts"));
}
