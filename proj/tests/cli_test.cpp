#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "stringyk/cli.hpp"

using Json = nlohmann::json;

namespace {

int run(std::vector<std::string> args) {
    std::vector<std::string> full = {"stringyk"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& s : full) argv.push_back(s.data());
    return stringyk::run_cli((int)argv.size(), argv.data());
}

std::filesystem::path tmp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("stringyk_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

Json run_json(std::vector<std::string> args, const std::string& name,
              int expect_code = 0) {
    auto out = tmp_file(name);
    args.push_back("--out");
    args.push_back(out.string());
    REQUIRE(run(args) == expect_code);
    return Json::parse(slurp(out));
}

} // namespace

TEST_CASE("chartable command") {
    Json d = run_json({"chartable", "--group", "S3"}, "chartable.json");
    CHECK(d["command"] == "chartable");
    CHECK(d["table"]["degrees"] == Json({1, 1, 2}));
    CHECK(d["table"]["rows"].size() == 3);
    CHECK(d["table"]["group"]["order"] == 6);
}

TEST_CASE("group command") {
    Json d = run_json({"group", "--group", "D4"}, "group.json");
    CHECK(d["group"]["order"] == 8);
    CHECK(d["group"]["num_classes"] == 5);
    CHECK(d["group"]["exponent"] == 4);
}

TEST_CASE("gg compare-products") {
    Json d = run_json({"gg", "--group", "Z2", "--compare-products"}, "gg.json");
    CHECK(d["pairwise_distinct"] == true);
    CHECK(d["basis"].size() == 4);
    CHECK(d["tables"]["tensor"] != d["tables"]["stringy"]);
}

TEST_CASE("ptg products") {
    Json stringy = run_json({"ptg", "--group", "Z3", "--product", "stringy"},
                            "ptg_s.json");
    Json conv = run_json({"ptg", "--group", "Z3", "--product", "convolution"},
                         "ptg_c.json");
    Json tensor = run_json({"ptg", "--group", "Z3", "--product", "tensor"},
                           "ptg_t.json");
    // stringy on [pt/G] is the convolution product, and not the tensor one
    CHECK(stringy["table"] == conv["table"]);
    CHECK(stringy["table"] != tensor["table"]);
}

TEST_CASE("linear command") {
    Json d = run_json({"linear", "--group", "Z4", "--rep", "weights:1,3"},
                      "linear.json");
    auto ages = d["report"]["sectors"];
    CHECK(ages.size() == 4);
    CHECK(ages[0]["age"] == "0/1");
    CHECK(ages[1]["age"] == "1/1");
    for (const auto& p : d["report"]["pairs"]) CHECK(p["genuine"] == true);

    Json s = run_json({"linear", "--group", "D4", "--rep", "standard"},
                      "linear_d4.json");
    CHECK(s["report"]["dim"] == 2);
    CHECK(s["report"]["sectors"].size() == 5);
}

TEST_CASE("orbisphere command") {
    Json d = run_json({"orbisphere", "2", "3", "--verify"}, "orb.json");
    CHECK(d["model"]["ages_x"] == Json({"1/2"}));
    CHECK(d["model"]["ages_y"] == Json({"2/3", "1/3"}));
    CHECK(d["k_ring"]["alpha_relation"] == true);
    CHECK(d["k_ring"]["beta_relation"] == true);
    CHECK(d["k_ring"]["u_relation"] == true);
    CHECK(d["cr_ring_axioms"] == true);
}

TEST_CASE("group from file") {
    auto path = tmp_file("z3_group.json");
    {
        std::ofstream f(path);
        f << R"({"mul": [[0,1,2],[1,2,0],[2,0,1]]})";
    }
    Json d = run_json({"group", "--group", "file:" + path.string()},
                      "group_file.json");
    CHECK(d["group"]["order"] == 3);

    auto bad = tmp_file("bad_group.json");
    {
        std::ofstream f(bad);
        f << R"({"mul": [[0,1],[0,1]]})"; // not a group table
    }
    CHECK(run({"group", "--group", "file:" + bad.string()}) == 1);
}

TEST_CASE("invalid input exits 1") {
    CHECK(run({"group", "--group", "Zx"}) == 1);
    CHECK(run({"group", "--group", "Z100"}) == 1); // over the default cap
    CHECK(run({"orbisphere", "2", "4"}) == 1);
    CHECK(run({"linear", "--group", "S3", "--rep", "weights:1"}) == 1);
    CHECK(run({"ptg", "--group", "Z2", "--product", "nope"}) == 1);
    CHECK(run({"group"}) == 1);           // missing required option
    CHECK(run({"group", "--zzz", "1"}) == 1);
    CHECK(run({"nosuchcommand"}) == 1);
}

TEST_CASE("byte determinism") {
    auto a = tmp_file("det_a.json"), b = tmp_file("det_b.json");
    REQUIRE(run({"chartable", "--group", "Q8", "--out", a.string()}) == 0);
    REQUIRE(run({"chartable", "--group", "Q8", "--out", b.string()}) == 0);
    CHECK(slurp(a) == slurp(b));
    REQUIRE(run({"gg", "--group", "S3", "--compare-products", "--out",
                 a.string()}) == 0);
    REQUIRE(run({"gg", "--group", "S3", "--compare-products", "--out",
                 b.string()}) == 0);
    CHECK(slurp(a) == slurp(b));
}
