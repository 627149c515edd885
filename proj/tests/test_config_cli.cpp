#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "inertia/config.hpp"
#include "inertia/errors.hpp"

using namespace inertia;

namespace {

// Run the real CLI binary and report its exit status.
int run_cli(const std::string& args) {
  std::string cmd = std::string(CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  return WEXITSTATUS(rc);
}

std::string config_path(const std::string& name) {
  return std::string(CONFIG_DIR) + "/" + name;
}

// Write `text` to a fresh temp file and return its path.
std::string temp_config(const std::string& tag, const std::string& text) {
  std::string path = "/tmp/inertia_test_" + tag + ".json";
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
  out.close();
  return path;
}

Errc thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error to be thrown");
  return Errc::ValidationError;
}

}  // namespace

TEST_CASE("a well-formed description parses into the expected action") {
  StackConfig cfg = parse_config_text(R"({
    "group": {"finite_orders": [2], "torus_rank": 1},
    "space": "affine_minus_origin",
    "weights": [[1, 1], [0, 1], [1, 2]],
    "bundles": {"V": [[2, [1, 0]], [1, [0, -1]]]}
  })");
  CHECK(cfg.action.group.finite_orders == std::vector<long>{2});
  CHECK(cfg.action.group.torus_rank == 1);
  CHECK(cfg.action.space == SpaceKind::AffineMinusOrigin);
  REQUIRE(cfg.action.weights.size() == 3);
  CHECK(cfg.action.weights[0] == Character{{1}, 1});
  CHECK(cfg.action.weights[1] == Character{{0}, 1});
  CHECK(cfg.action.weights[2] == Character{{1}, 2});
  REQUIRE(cfg.bundles.count("V") == 1);
  CHECK(cfg.bundles.at("V").rank() == Rat(3));

  Stack s(cfg.action);
  CHECK(s.sectors().size() > 0);
}

TEST_CASE("finite exponents are reduced modulo the group order") {
  StackConfig cfg = parse_config_text(R"({
    "group": {"finite_orders": [3], "torus_rank": 0},
    "space": "point",
    "bundles": {"W": [[1, [5]], [1, [-1]]]}
  })");
  // 5 mod 3 == 2 and -1 mod 3 == 2, so both terms land on the same character.
  REQUIRE(cfg.bundles.at("W").terms.size() == 1);
  CHECK(cfg.bundles.at("W").rank() == Rat(2));
}

TEST_CASE("point descriptions may omit weights entirely") {
  StackConfig cfg = parse_config_text(R"({
    "group": {"finite_orders": [4], "torus_rank": 0},
    "space": "point"
  })");
  CHECK(cfg.action.weights.empty());
  Stack s(cfg.action);
  CHECK(s.sectors().size() == 4);
}

TEST_CASE("malformed input is reported as a parse failure") {
  CHECK(thrown_code([] { parse_config_text("{"); }) == Errc::ParseError);
  CHECK(thrown_code([] { parse_config_text("[1, 2]"); }) == Errc::ParseError);
  CHECK(thrown_code([] { parse_config_text(R"({"space": "point"})"); }) == Errc::ParseError);
  CHECK(thrown_code([] { parse_config_text(R"({"group": 7})"); }) == Errc::ParseError);
  CHECK(thrown_code([] { load_config("/nonexistent/inertia.json"); }) == Errc::ParseError);
}

TEST_CASE("every structural problem is collected into one validation report") {
  try {
    parse_config_text(R"({
      "group": {"finite_orders": [0], "torus_rank": 3},
      "space": "projective",
      "weights": [[1], "x"],
      "bundles": {"T": [[1, [1]]], "B": [1]},
      "flavour": true
    })");
    FAIL("expected ValidationError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ValidationError);
    std::string msg = e.what();
    CHECK(msg.find("unknown key 'flavour'") != std::string::npos);
    CHECK(msg.find("finite_orders") != std::string::npos);
    CHECK(msg.find("torus_rank") != std::string::npos);
    CHECK(msg.find("space") != std::string::npos);
    CHECK(msg.find("reserved") != std::string::npos);  // bundle name 'T'
    CHECK(msg.find("bundle 'B'") != std::string::npos);
  }
}

TEST_CASE("weight arity must match the number of group factors") {
  Errc c = thrown_code([] {
    parse_config_text(R"({
      "group": {"finite_orders": [2], "torus_rank": 1},
      "space": "affine_minus_origin",
      "weights": [[1, 1], [1]]
    })");
  });
  CHECK(c == Errc::ValidationError);
}

TEST_CASE("built-in and named bundles resolve; unknown names are rejected") {
  StackConfig cfg = parse_config_text(R"({
    "group": {"finite_orders": [], "torus_rank": 1},
    "space": "affine_minus_origin",
    "weights": [[1], [3], [3]],
    "bundles": {"chi": [[1, [1]]]}
  })");
  Stack s(cfg.action);
  CHECK(resolve_bundle(s, cfg, "T") == s.tangent());
  CHECK(resolve_bundle(s, cfg, "T*") == s.cotangent());
  CHECK(resolve_bundle(s, cfg, "chi").rank() == Rat(1));
  CHECK(thrown_code([&] { resolve_bundle(s, cfg, "nope"); }) == Errc::UnknownBundleName);
}

TEST_CASE("product names map onto the intended pair constructions") {
  StackConfig cfg = parse_config_text(R"({
    "group": {"finite_orders": [], "torus_rank": 1},
    "space": "affine_minus_origin",
    "weights": [[1], [2]],
    "bundles": {"chi": [[1, [1]]]}
  })");
  Stack s(cfg.action);

  ProductSpec orb = resolve_product(s, cfg, "orbifold");
  CHECK_FALSE(orb.localized);
  CHECK(orb.pair.kind == PairKind::Orbifold);

  ProductSpec virt = resolve_product(s, cfg, "virtual");
  CHECK(virt.pair.kind == PairKind::Virtual);

  ProductSpec vp = resolve_product(s, cfg, "vplus:chi");
  CHECK(vp.pair.kind == PairKind::VPlus);
  CHECK(vp.pair.bundle == resolve_bundle(s, cfg, "chi"));

  ProductSpec vm = resolve_product(s, cfg, "vminus:T*");
  CHECK(vm.pair.kind == PairKind::VMinus);
  CHECK(vm.pair.bundle == s.cotangent());

  ProductSpec loc = resolve_product(s, cfg, "localized");
  CHECK(loc.localized);

  CHECK(thrown_code([&] { resolve_product(s, cfg, "fancy"); }) == Errc::ValidationError);
  CHECK(thrown_code([&] { resolve_product(s, cfg, "vplus:nope"); }) == Errc::UnknownBundleName);
}

TEST_CASE("sector listing carries labels, ages and ranks") {
  StackConfig cfg = load_config(config_path("p133.json"));
  Stack s(cfg.action);
  CommandOutput out = cmd_sectors(s);
  REQUIRE(out.data.contains("sectors"));
  const auto& secs = out.data["sectors"];
  REQUIRE(secs.size() == 3);
  CHECK(secs[0]["label"] == "[0]");
  CHECK(secs[1]["label"] == "[1/3]");
  CHECK(secs[2]["label"] == "[2/3]");
  CHECK(secs[0]["age"] == "0");
  CHECK(secs[1]["age"] == "1/3");
  CHECK(secs[2]["age"] == "2/3");
  CHECK(out.text.find("[1/3]") != std::string::npos);
}

TEST_CASE("multiplication tables expose every sector pair exactly once") {
  StackConfig cfg = load_config(config_path("p133.json"));
  Stack s(cfg.action);
  CommandOutput out = cmd_table(s, cfg, "orbifold", "k");
  CHECK(out.data["product"] == "orbifold");
  CHECK(out.data["theory"] == "k");
  REQUIRE(out.data.contains("entries"));
  CHECK(out.data["entries"].size() == 9);  // 3 sectors, all ordered pairs
  for (const auto& e : out.data["entries"]) {
    CHECK(e.contains("left"));
    CHECK(e.contains("right"));
    CHECK(e.contains("target"));
    CHECK(e.contains("value"));
  }
}

TEST_CASE("table rejects unknown theories and the localized/chow combination") {
  StackConfig cfg = load_config(config_path("p12.json"));
  Stack s(cfg.action);
  CHECK(thrown_code([&] { cmd_table(s, cfg, "orbifold", "cohomology"); }) ==
        Errc::ValidationError);
  CHECK(thrown_code([&] { cmd_table(s, cfg, "localized", "chow"); }) ==
        Errc::UnsupportedCombination);
}

TEST_CASE("axiom checking and Chern listings refuse the localized product") {
  StackConfig cfg = load_config(config_path("p12.json"));
  Stack s(cfg.action);
  CHECK(thrown_code([&] { cmd_check(s, cfg, "localized"); }) == Errc::UnsupportedCombination);
  CHECK(thrown_code([&] { cmd_chern(s, cfg, "localized"); }) == Errc::UnsupportedCombination);
}

TEST_CASE("axiom checking reports a full passing run on the shipped examples") {
  for (const char* name : {"p12.json", "p133.json", "bmu3.json", "mu3_aff2.json"}) {
    StackConfig cfg = load_config(config_path(name));
    Stack s(cfg.action);
    for (const char* product : {"orbifold", "virtual"}) {
      CAPTURE(name);
      CAPTURE(product);
      CommandOutput out = cmd_check(s, cfg, product);
      CHECK(out.data["pass"] == true);
      CHECK(out.data["obstructions_ok"] == true);
      CHECK(out.data["identity_ok"] == true);
      CHECK(out.data["symmetry_ok"] == true);
      CHECK(out.data["cocycle_ok"] == true);
      CHECK(out.data["grading_ok"] == true);
      CHECK(out.data["failures"].empty());
    }
  }
}

TEST_CASE("Chern output lists one record per sector") {
  StackConfig cfg = load_config(config_path("p133.json"));
  Stack s(cfg.action);
  CommandOutput out = cmd_chern(s, cfg, "virtual");
  REQUIRE(out.data["sectors"].size() == 3);
  for (const auto& rec : out.data["sectors"]) {
    CHECK(rec.contains("sector"));
    CHECK(rec.contains("chern"));
    CHECK(rec.contains("s_age"));
    CHECK(rec.contains("rank"));
  }
}

TEST_CASE("localization output decomposes each sector ring over its supports") {
  StackConfig cfg = load_config(config_path("p12.json"));
  Stack s(cfg.action);
  CommandOutput out = cmd_localize(s, cfg);
  REQUIRE(out.data.contains("supports"));
  REQUIRE(out.data.contains("entries"));
  REQUIRE(out.data.contains("nf_report"));
  // Untwisted sector of weight (1,2) splits over two supports.
  const auto& sup = out.data["supports"];
  REQUIRE(sup.size() == 2);
  CHECK(sup[0]["components"].size() == 2);
  for (const auto& rec : out.data["nf_report"]) {
    CHECK(rec["integral"] == true);
    CHECK(rec["matches"] == true);
  }
}

TEST_CASE("all shipped example descriptions load and build") {
  for (const char* name : {"bmu2.json", "bmu3.json", "bmu4.json", "mixed_mu2_t.json",
                           "mu3_aff2.json", "p12.json", "p123.json", "p133.json"}) {
    CAPTURE(name);
    StackConfig cfg = load_config(config_path(name));
    Stack s(cfg.action);
    CHECK(s.sectors().size() > 0);
    CommandOutput out = cmd_sectors(s);
    CHECK_FALSE(out.text.empty());
  }
}

TEST_CASE("the command line keeps the documented exit code contract") {
  std::string p133 = config_path("p133.json");
  std::string p12 = config_path("p12.json");

  SUBCASE("success paths exit 0") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("sectors --help") == 0);
    CHECK(run_cli("sectors --config " + p133) == 0);
    CHECK(run_cli("table --config " + p133 + " --product virtual --theory chow") == 0);
    CHECK(run_cli("table --config " + p12 + " --product localized --format json") == 0);
    CHECK(run_cli("check --config " + p12 + " --product vplus:T*") == 0);
    CHECK(run_cli("chern --config " + p133 + " --product virtual") == 0);
    CHECK(run_cli("localize --config " + p12) == 0);
  }

  SUBCASE("user mistakes exit 1") {
    CHECK(run_cli("sectors --config /nonexistent/x.json") == 1);
    CHECK(run_cli("sectors") == 1);                      // missing required option
    CHECK(run_cli("frobnicate --config " + p133) == 1);  // unknown command
    CHECK(run_cli("sectors --config " + p133 + " --frob") == 1);
    CHECK(run_cli("table --config " + p133 + " --theory nope") == 1);
    CHECK(run_cli("table --config " + p12 + " --product localized --theory chow") == 1);
    CHECK(run_cli("table --config " + p12 + " --product vplus:nope") == 1);
    CHECK(run_cli("check --config " + p12 + " --product localized") == 1);

    std::string bad = temp_config("badjson", "{ not json");
    CHECK(run_cli("sectors --config " + bad) == 1);
    std::remove(bad.c_str());

    std::string invalid = temp_config("badspace", R"({
      "group": {"finite_orders": [2], "torus_rank": 0},
      "space": "mystery"
    })");
    CHECK(run_cli("sectors --config " + invalid) == 1);
    std::remove(invalid.c_str());
  }

  SUBCASE("broken internal invariants exit 2") {
    // A bundle with a negative multiplicity poisons the obstruction class.
    std::string neg = temp_config("negbundle", R"({
      "group": {"finite_orders": [3], "torus_rank": 0},
      "space": "point",
      "bundles": {"B": [[-1, [1]]]}
    })");
    CHECK(run_cli("table --config " + neg + " --product vplus:B") == 2);
    std::remove(neg.c_str());
  }
}
