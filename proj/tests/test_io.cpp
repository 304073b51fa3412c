#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "xnerve/cli.hpp"
#include "xnerve/fixtures.hpp"
#include "xnerve/io.hpp"

using namespace xnerve;

namespace {

  std::string slurp(std::string const& name) {
    std::ifstream      in(std::string(XNERVE_DATA_DIR) + "/" + name,
                          std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    REQUIRE(in);
    return s.str();
  }

  ParseError::Kind kind_of(std::string const& text) {
    try {
      parse_input(text);
    } catch (ParseError const& e) {
      return e.kind();
    }
    FAIL("document parsed");
    return ParseError::Kind::syntax;
  }

  std::string f4_with(void (*edit)(nlohmann::ordered_json&)) {
    auto j = nlohmann::ordered_json::parse(slurp("f4.json"));
    edit(j);
    return j.dump();
  }

  nlohmann::json report(CommandResult const& r) {
    return nlohmann::json::parse(r.json);
  }

}  // namespace

TEST_CASE("bundled documents are the fixtures, byte for byte") {
  std::pair<char const*, CrossedMonoid> const files[] = {
      {"f1.json", fixtures::f1()}, {"f2.json", fixtures::f2()},
      {"f3.json", fixtures::f3()}, {"f4.json", fixtures::f4()},
      {"f5.json", fixtures::f5()}, {"f6.json", fixtures::f6()},
      {"f7.json", fixtures::f7()}};
  for (auto const& [file, xm] : files) {
    CAPTURE(file);
    auto text = slurp(file);
    auto doc  = parse_input(text);
    CHECK(serialize(doc) == text);
    CHECK(doc.expected.has_value());
    CrossedMonoid back(doc.data);
    CHECK(serialize(back) == serialize(xm));
  }
}

TEST_CASE("round trip of multi-object and non-abelian fixtures") {
  for (auto const& xm : {fixtures::pair_groupoid(), fixtures::conjugation_s3(),
                         fixtures::disjoint_union(fixtures::f4(),
                                                  fixtures::f6())}) {
    auto text = serialize(xm);
    auto doc  = parse_input(text);
    CHECK(serialize(doc) == text);
    CHECK(serialize(CrossedMonoid(doc.data)) == text);
  }
}

TEST_CASE("key order and whitespace do not matter to the parser") {
  auto j = nlohmann::json::parse(slurp("f6.json"));  // keys re-sorted
  auto doc = parse_input(j.dump());
  CHECK(serialize(doc) == slurp("f6.json"));
}

TEST_CASE("syntax errors carry a byte position") {
  try {
    parse_input("{\"objects\": [0,, 1]}");
    FAIL("parsed");
  } catch (ParseError const& e) {
    CHECK(e.kind() == ParseError::Kind::syntax);
    REQUIRE(e.byte());
    CHECK(*e.byte() == 15);
  }
  CHECK(kind_of("") == ParseError::Kind::syntax);
}

TEST_CASE("schema errors name the offending key") {
  auto text = f4_with([](auto& j) { j.erase("boundary"); });
  try {
    parse_input(text);
    FAIL("parsed");
  } catch (ParseError const& e) {
    CHECK(e.kind() == ParseError::Kind::schema);
    CHECK(std::string(e.what()).find("'boundary'") != std::string::npos);
  }
  CHECK(kind_of("[]") == ParseError::Kind::schema);
  CHECK(kind_of(f4_with([](auto& j) { j["extra"] = 1; }))
        == ParseError::Kind::schema);
  CHECK(kind_of(f4_with([](auto& j) { j["objects"] = {-1}; }))
        == ParseError::Kind::schema);
  CHECK(kind_of(f4_with([](auto& j) { j["compose"][0] = {0, 0}; }))
        == ParseError::Kind::schema);
  CHECK(kind_of(f4_with([](auto& j) { j["identity"] = {{"x", 0}}; }))
        == ParseError::Kind::schema);
  CHECK(kind_of(f4_with([](auto& j) { j["monoids"]["0"].erase("unit"); }))
        == ParseError::Kind::schema);
}

TEST_CASE("dangling and duplicate ids") {
  CHECK(kind_of(f4_with([](auto& j) { j["morphisms"][1]["id"] = 0; }))
        == ParseError::Kind::dangling_id);
  CHECK(kind_of(f4_with([](auto& j) { j["morphisms"][1]["id"] = 5; }))
        == ParseError::Kind::dangling_id);
  CHECK(kind_of(f4_with([](auto& j) { j["morphisms"][1]["tgt"] = 3; }))
        == ParseError::Kind::dangling_id);
  CHECK(kind_of(f4_with([](auto& j) { j["compose"][0][2] = 7; }))
        == ParseError::Kind::dangling_id);
  CHECK(kind_of(f4_with([](auto& j) { j["action"]["1"]["1"] = 9; }))
        == ParseError::Kind::dangling_id);
  CHECK(kind_of(f4_with([](auto& j) { j["boundary"]["0"]["2"] = 4; }))
        == ParseError::Kind::dangling_id);
  CHECK(kind_of(f4_with([](auto& j) {
          j["monoids"]["0"]["elements"] = {0, 1, 1};
        }))
        == ParseError::Kind::dangling_id);
}

TEST_CASE("parsed but mathematically broken tables are left to later stages") {
  // a missing composite is a structural error, not a parse error
  auto text = f4_with([](auto& j) { j["compose"].erase(3); });
  auto doc  = parse_input(text);
  auto res  = run_command(doc, "validate", {});
  CHECK(res.status == kStructural);
  CHECK(report(res)["error"]["kind"] == "structural");
}

TEST_CASE("validate f4 passes, f7 reports cr3") {
  auto r4 = run_command(parse_input(slurp("f4.json")), "validate", {});
  CHECK(r4.status == kPass);
  CHECK(report(r4)["violations"].empty());

  auto r7 = run_command(parse_input(slurp("f7.json")), "validate", {});
  CHECK(r7.status == kProperty);
  auto v = report(r7)["violations"];
  REQUIRE(v.size() == 1);
  CHECK(v[0]["axiom"] == "cr3");
  CHECK(v[0]["witness"] == nlohmann::json({1, 1}));
}

TEST_CASE("kan on f5 fails in dimension 3 with a witness horn") {
  CommandOptions o;
  o.dims   = {2, 3};
  auto res = run_command(parse_input(slurp("f5.json")), "kan", o);
  CHECK(res.status == kProperty);
  auto j = report(res);
  CHECK(j["kan"] == false);
  CHECK(j["witness"]["dim"] == 3);
  // corners of the witness: three of e = 0, a = 1, one omitted
  auto corners = j["witness"]["corners"];
  int  nulls = 0, as = 0;
  for (auto const& c : corners) {
    nulls += c.is_null();
    as += c == 1;
  }
  CHECK(nulls == 1);
  CHECK(as == 1);
}

TEST_CASE("homotopy on f4") {
  CommandOptions o;
  o.pi     = parse_pi("1,2");
  auto res = run_command(parse_input(slurp("f4.json")), "homotopy", o);
  CHECK(res.status == kPass);
  auto g = report(res)["groups"];
  REQUIRE(g.size() == 2);
  CHECK(g[0]["algebraic"]["order"] == 2);
  CHECK(g[0]["simplicial"]["order"] == 2);
  CHECK(g[1]["algebraic"]["order"] == 3);
  CHECK(g[1]["isomorphic"] == true);
}

TEST_CASE("refusals and capacity get their own statuses") {
  auto f5 = parse_input(slurp("f5.json"));
  CHECK(run_command(f5, "fill", {}).status == kRefused);
  CHECK(run_command(f5, "homotopy", {}).status == kRefused);
  CHECK(report(run_command(f5, "fill", {}))["error"]["kind"] == "refusal");

  CommandOptions o;
  o.max_cells = 10;
  o.dims      = {3, 3};
  CHECK(run_command(parse_input(slurp("f4.json")), "enumerate", o).status
        == kCapacity);
}

TEST_CASE("other commands on the bundled files") {
  auto           f4 = parse_input(slurp("f4.json"));
  CommandOptions o;
  CHECK(run_command(f4, "classify", o).status == kPass);
  CHECK(run_command(f4, "audit", o).status == kPass);
  CHECK(run_command(f4, "fill", o).status == kPass);
  o.dims = {4, 4};
  CHECK(run_command(f4, "coskeletal", o).status == kPass);
  o.dims = {2, 2};
  auto e = report(run_command(f4, "enumerate", o));
  CHECK(e["levels"][0]["count"] == 2 * 2 * 3);
  // b_2 on F4 is not injective
  o.dims = {2, 2};
  CHECK(run_command(f4, "coskeletal", o).status == kProperty);
  CHECK(run_command(f4, "nonsense", o).status == kStructural);
}

TEST_CASE("seeded fill samples and is deterministic") {
  auto           f6 = parse_input(slurp("f6.json"));
  CommandOptions o;
  o.dims = {4, 5};
  o.seed = 7;
  auto a = run_command(f6, "fill", o);
  auto b = run_command(f6, "fill", o);
  CHECK(a.status == kPass);
  CHECK(a.json == b.json);
  CHECK(a.text == b.text);
  CHECK(report(a)["levels"][0]["horns"] == 1000);
}

TEST_CASE("flag parsing") {
  CHECK(parse_dims("2..3") == std::pair{2, 3});
  CHECK(parse_dims("4") == std::pair{4, 4});
  CHECK_THROWS_AS(parse_dims("3..2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dims("a..2"), std::invalid_argument);
  CHECK(parse_pi("1,2,3") == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(parse_pi("1,,2"), std::invalid_argument);
}
