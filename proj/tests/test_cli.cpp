#include "fixtures.hpp"
#include "rootstab/cli.hpp"
#include "rootstab/error.hpp"

#include <doctest.h>
#include <sstream>

using namespace rootstab;

namespace {

std::string config_path(const std::string& name) {
    return std::string(ROOTSTAB_CONFIG_DIR) + "/" + name + ".json";
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("parse_config: fixtures and failure modes") {
    RootStackConfig conic = testing::p2_conic_n2();
    CHECK(conic.name == "p2_conic_n2");
    CHECK(conic.n == 2);

    CHECK_THROWS_AS(parse_config_text("{rho: 1, gram: [[1, 2]], H: [1], C: [1], n: 1}"), Error);
    try {
        parse_config_text("{rho: 1, gram: [[-1]], H: [1], C: [1], n: 1}");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::WrongSignature);
    }
    try {
        parse_config_text("{rho: 1, gram [[1]]}");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
    }
}

TEST_CASE("parse_class: grammar, normalization, rejects") {
    RootStackConfig cfg = testing::p2_conic_n2();

    ParsedClass a = parse_class(cfg, R"({ch0:"1", ch1:["4"], cg:"-1", ch2:"9/2"})");
    CHECK(a.cls.ch0 == 1);
    CHECK(a.cls.ch1.coords[0] == 4);
    CHECK(a.cls.ch1.cg == -1);
    CHECK(a.cls.ch2 == Rat(9, 2));
    CHECK_FALSE(a.is_cr());

    ParsedClass b = parse_class(cfg, R"({ch0:"0", ch1:["0"], cg:"0", ch2:"1/2",
                                         sectors:[["0","1"]]})");
    REQUIRE(b.is_cr());
    CHECK(b.sectors->size() == 1);
    CHECK((*b.sectors)[0].d == 1);

    // negative denominators normalize silently
    ParsedClass c = parse_class(cfg, R"({ch0:"1", ch1:["3/-2"], cg:"0", ch2:"0"})");
    CHECK(c.cls.ch1.coords[0] == Rat(-3, 2));

    CHECK_THROWS_AS(parse_class(cfg, R"({ch0:"1", ch1:["1/0"], cg:"0", ch2:"0"})"), Error);
    CHECK_THROWS_AS(parse_class(cfg, R"({ch0:"1", ch1:["1","2"], cg:"0", ch2:"0"})"), Error);
    CHECK_THROWS_AS(parse_class(cfg, R"({ch1:["1"], cg:"0", ch2:"0"})"), Error);
    CHECK_THROWS_AS(parse_class(cfg, R"({ch0:"1", ch1:["1"], sectors:[["1","0"],["0","0"]],
                                         ch2:"0"})"), Error);
}

TEST_CASE("round-trip: emit then parse is the identity on normal forms") {
    RootStackConfig cfg = testing::quadric_n3();
    NumClass v{Rat(2, 4), {{Rat(3), Rat(-6, 4)}, Rat(5, 10)}, Rat(-7, 3)};
    std::string text = emit_class(cfg, v);
    ParsedClass back = parse_class(cfg, text);
    CHECK(num_eq(cfg, back.cls, v));
    CHECK(back.cls.ch1.cg == v.ch1.cg);
    CHECK(emit_class(cfg, back.cls) == text);

    std::string cfg_text = emit_config(cfg);
    CHECK(emit_config(parse_config_text(cfg_text)) == cfg_text);
}

TEST_CASE("cli: charge command") {
    auto res = run({"-c", config_path("p2_conic_n2"), "--format", "machine", "charge",
                    "--class", "{ch0:\"0\", ch1:[\"0\"], cg:\"0\", ch2:\"1\"}", "-t", "3"});
    CHECK(res.code == 0);
    CHECK(res.out.find("\"re\":\"-1\"") != std::string::npos);
    CHECK(res.out.find("\"im\":\"0\"") != std::string::npos);
}

TEST_CASE("cli: exampleP matches the worked family") {
    auto res = run({"-c", config_path("p2_conic_n2"), "--format", "machine", "exampleP",
                    "-d", "4", "-m", "16", "-t", "1"});
    CHECK(res.code == 0);
    CHECK(res.out.find("\"mu_E\":\"-1/4\"") != std::string::npos);
    CHECK(res.out.find("\"mu_W\":\"7/6\"") != std::string::npos);
    CHECK(res.out.find("\"destabilizes\":\"true\"") != std::string::npos);

    auto table = run({"-c", config_path("p2_conic_n2"), "exampleP", "-d", "4", "-m", "16",
                      "-t", "1"});
    CHECK(table.code == 0);
    CHECK(table.out.find("-1/4") != std::string::npos);
}

TEST_CASE("cli: constants command") {
    auto res = run({"-c", config_path("p2_conic_n2"), "--format", "csv", "constants", "-t", "1",
                    "-a", "1"});
    CHECK(res.code == 0);
    CHECK(res.out.find("alpha,1") != std::string::npos);
    CHECK(res.out.find("a2,2") != std::string::npos);
    CHECK(res.out.find("a1,4") != std::string::npos);
    CHECK(res.out.find("M2,3") != std::string::npos);
}

TEST_CASE("cli: machine output is byte-deterministic") {
    std::vector<std::string> args{"-c", config_path("p2_conic_n2"), "--format", "machine",
                                  "destab", "--class",
                                  "{ch0:\"1\", ch1:[\"4\"], cg:\"0\", ch2:\"0\"}", "-t", "1",
                                  "--bounds", "cg=1,den=2,num=3"};
    auto first = run(args);
    auto second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());
}

TEST_CASE("cli: structured errors and exit codes") {
    auto bad_class = run({"-c", config_path("p2_conic_n2"), "--format", "machine", "charge",
                          "--class", "{ch0:\"1\", ch1:[\"1/0\"], cg:\"0\", ch2:\"0\"}"});
    CHECK(bad_class.code == 1);
    CHECK(bad_class.err.find("ParseError") != std::string::npos);
    CHECK(bad_class.out.empty());

    auto no_bounds = run({"-c", config_path("p2_conic_n2"), "--format", "machine", "destab",
                          "--class", "{ch0:\"1\", ch1:[\"4\"], cg:\"0\", ch2:\"0\"}"});
    CHECK(no_bounds.code == 1);
    CHECK(no_bounds.err.find("UnboundedRequest") != std::string::npos);

    auto missing = run({"-c", "/nonexistent.json", "charge", "--class", "{}"});
    CHECK(missing.code == 1);

    auto usage = run({"-c", config_path("p2_conic_n2")});
    CHECK(usage.code != 0);
}

TEST_CASE("cli: wall command emits the locus") {
    auto res = run({"-c", config_path("p2_n1"), "--format", "machine", "wall", "--class",
                    "{ch0:\"1\", ch1:[\"0\"], cg:\"0\", ch2:\"-1\"}", "--class",
                    "{ch0:\"1\", ch1:[\"-1\"], cg:\"0\", ch2:\"1/2\"}"});
    CHECK(res.code == 0);
    CHECK(res.out.find("\"kind\":\"Curve\"") != std::string::npos);
    CHECK(res.out.find("\"apex_s\":\"-3/2\"") != std::string::npos);
    CHECK(res.out.find("\"apex_t\":\"1/8\"") != std::string::npos);
}

TEST_CASE("cli: verify passes on the bundled fixtures") {
    for (const std::string name : {"p2_conic_n2", "p2_n1", "quadric_n3"}) {
        auto res = run({"-c", config_path(name), "--format", "machine", "verify"});
        CHECK(res.code == 0);
        CHECK(res.out.find("FAIL") == std::string::npos);
    }
}
