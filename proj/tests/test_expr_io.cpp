#include <doctest.h>

#include <functional>
#include <random>

#include "sumgraph/codes.hpp"
#include "sumgraph/constructors.hpp"
#include "sumgraph/expr.hpp"
#include "sumgraph/io.hpp"
#include "sumgraph/scan.hpp"

using namespace sumgraph;

namespace {

using K = GroupExpr::Kind;

GroupExpr atom(K k, std::uint32_t v) { return {k, v, {}}; }
GroupExpr product(std::vector<GroupExpr> fs) { return {K::Product, 0, std::move(fs)}; }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InternalInconsistency;
}

ParseFailure parse_failure(const std::string& text) {
  try {
    parse_group_expr(text);
  } catch (const ParseFailure& e) {
    return e;
  }
  FAIL("no parse error for '" << text << "'");
  return ParseFailure(0, {}, "");
}

GroupExpr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 4);
  switch (pick(rng)) {
    case 0: return atom(K::Cyclic, std::uniform_int_distribution<std::uint32_t>(1, 99)(rng));
    case 1: return atom(K::Dihedral, 2 * std::uniform_int_distribution<std::uint32_t>(3, 40)(rng));
    case 2: return atom(K::Dicyclic, std::uniform_int_distribution<std::uint32_t>(2, 30)(rng));
    case 3: return atom(K::Quaternion, 8);
    case 4: return atom(K::Elementary2, std::uniform_int_distribution<std::uint32_t>(1, 6)(rng));
    default: {
      std::vector<GroupExpr> fs;
      const int n = std::uniform_int_distribution<int>(2, 3)(rng);
      for (int i = 0; i < n; ++i) fs.push_back(random_expr(rng, depth - 1));
      return product(std::move(fs));
    }
  }
}

}  // namespace

TEST_CASE("parser: examples") {
  CHECK(parse_group_expr("Z4 x Z3") == product({atom(K::Cyclic, 4), atom(K::Cyclic, 3)}));
  CHECK(parse_group_expr("D12") == atom(K::Dihedral, 12));
  CHECK(evaluate(parse_group_expr("D12")).tag().to_string() == "Dihedral(6)");
  const Group dic2 = evaluate(parse_group_expr("Dic2"));
  CHECK(dic2.order() == 8);
  CHECK(involutions(dic2).size() == 1);
  CHECK(parse_group_expr("q8") == atom(K::Quaternion, 8));
  CHECK(parse_group_expr("e2^3") == atom(K::Elementary2, 3));
  CHECK(parse_group_expr(" z2X(D6 x dic3) ") ==
        product({atom(K::Cyclic, 2), product({atom(K::Dihedral, 6), atom(K::Dicyclic, 3)})}));
  CHECK(parse_group_expr("((Z5))") == atom(K::Cyclic, 5));
  CHECK(evaluate(parse_group_expr("E2^2 x Z3")).order() == 12);
}

TEST_CASE("parser: errors carry offset and expected tokens") {
  auto e = parse_failure("Z4 x");
  CHECK(e.kind() == ErrorKind::ParseError);
  CHECK(e.offset() == 4);
  CHECK(std::find(e.expected().begin(), e.expected().end(), "Dic") != e.expected().end());

  CHECK(parse_failure("D7").offset() == 1);
  CHECK(parse_failure("D4").offset() == 1);
  CHECK(parse_failure("Dic1").offset() == 3);
  CHECK(parse_failure("Z0").offset() == 1);
  CHECK(parse_failure("Z").offset() == 1);
  CHECK(parse_failure("Q9").offset() == 1);
  CHECK(parse_failure("(Z2").offset() == 3);
  CHECK(parse_failure("Z2 Z3").offset() == 3);
  CHECK(parse_failure("").offset() == 0);
  CHECK(parse_failure("Z99999999999").offset() == 1);
  CHECK(parse_failure("S4").offset() == 0);
}

TEST_CASE("parser: round trip on random expressions") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const GroupExpr e = random_expr(rng, 3);
    const std::string text = to_string(e);
    CAPTURE(text);
    CHECK(parse_group_expr(text) == e);
    CHECK(to_string(parse_group_expr(text)) == text);
  }
}

TEST_CASE("evaluate respects the order cap") {
  CHECK(kind_of([] { evaluate(parse_group_expr("Z40 x Z40")); }) == ErrorKind::OrderLimit);
  CHECK(evaluate(parse_group_expr("Z40 x Z40"), 1600).order() == 1600);
}

TEST_CASE("group json round trip") {
  for (const char* text : {"Z6", "D10", "Dic3", "Q8", "Z2 x Z4", "Q8 x Z3", "E2^3"}) {
    const Group g = evaluate(parse_group_expr(text));
    const Json j = group_to_json(g);
    CHECK(j["order"] == g.order());
    const Group back = group_from_json(Json::parse(j.dump()));
    CHECK(back.table() == g.table());
    CHECK(back.labels() == g.labels());
    CHECK(back.tag() == g.tag());
  }
  // tag is optional
  const Group plain = group_from_json(Json::parse(R"({"order":2,"table":[[0,1],[1,0]]})"));
  CHECK(plain.tag().kind == GroupTag::Kind::Generic);
}

TEST_CASE("group json: malformed documents") {
  CHECK(kind_of([] { group_from_json(Json::parse(R"({"order":3,"table":[[0,1],[1,0]]})")); }) ==
        ErrorKind::BadParameter);
  CHECK(kind_of([] { group_from_json(Json::parse(R"({"table":[[0]]})")); }) == ErrorKind::BadParameter);
  CHECK(kind_of([] { group_from_json(Json::parse(R"({"order":1,"table":"x"})")); }) == ErrorKind::BadParameter);
  CHECK(kind_of([] { group_from_json(Json::parse(R"({"order":2,"table":[[0,1],[0,1]]})")); }) ==
        ErrorKind::NotLatinSquare);
  CHECK(kind_of([] { group_from_json(Json::parse(R"({"order":1,"table":[[0]],"tag":{"kind":"Weird"}})")); }) ==
        ErrorKind::BadParameter);
}

TEST_CASE("verdict json matches the schema") {
  const Group z60 = cyclic_group(60);
  const Element two = 2;
  const Subgroup h = Subgroup::generated_by(z60, std::span<const Element>(&two, 1));
  const Json neg = verdict_to_json(z60, h, decide_perfect_code(z60, h), true);
  for (const char* key : {"group", "subgroup", "flavor", "kind", "exists", "rule", "witness", "certificate"})
    CHECK(neg.contains(key));
  CHECK(neg["group"]["order"] == 60);
  CHECK(neg["group"]["tag"] == "Cyclic(60)");
  CHECK(neg["flavor"] == "plain");
  CHECK(neg["kind"] == "perfect");
  CHECK(neg["exists"] == false);
  CHECK(neg["witness"].is_null());
  CHECK(neg["certificate"]["representative"] == 1);

  const Element five = 5;
  const Subgroup h5 = Subgroup::generated_by(z60, std::span<const Element>(&five, 1));
  const Verdict pos = decide_perfect_code_extended(z60, Subgroup::trivial(z60));
  const Json pj = verdict_to_json(z60, Subgroup::trivial(z60), pos, true);
  CHECK(pj["flavor"] == "extended");
  CHECK(pj["certificate"].is_null());
  CHECK(pj["witness"].is_array());
  CHECK(verdict_to_json(z60, h5, decide_perfect_code(z60, h5), false)["witness"].is_null());
}

TEST_CASE("graph exports") {
  const Group z6 = cyclic_group(6);
  const Element three = 3;
  const Subgroup h = Subgroup::generated_by(z6, std::span<const Element>(&three, 1));
  const SumGraph g = build_graph(z6, h, Flavor::Extended);

  const std::string dot = graph_to_dot(z6, g, false);
  CHECK(dot.rfind("graph extended_subgroup_sum {", 0) == 0);
  for (const char* edge : {"0 -- 3;", "1 -- 2;", "1 -- 5;", "2 -- 4;", "4 -- 5;"}) CHECK(dot.find(edge) != std::string::npos);
  CHECK(dot.find("fillcolor") == std::string::npos);
  const std::string coloured = graph_to_dot(z6, g, true);
  CHECK(coloured.find("fillcolor") != std::string::npos);

  const Json j = graph_to_json(z6, g);
  CHECK(j["edge_count"] == 5);
  CHECK(j["adjacency"][1] == Json::array({2, 5}));
  CHECK(j["subgroup"] == Json::array({0, 3}));
}

TEST_CASE("subgroup selectors") {
  const Group d8 = dihedral_group(4);
  CHECK(resolve_subgroup(d8, "gen:a^2,b").members() == std::vector<Element>{0, 2, 4, 6});
  CHECK(resolve_subgroup(d8, "gen:a^2,ab").members() == std::vector<Element>{0, 2, 5, 7});
  CHECK(resolve_subgroup(d8, "gen:a").order() == 4);
  CHECK(resolve_subgroup(d8, "gen:e").is_trivial());
  CHECK(resolve_subgroup(d8, "index:0").is_trivial());
  CHECK(resolve_subgroup(d8, "index:5").is_whole());

  const Group q = dicyclic_group(3);
  CHECK(resolve_subgroup(q, "gen:b").members() == std::vector<Element>{0, 3, 8, 11});
  const Group z60 = cyclic_group(60);
  CHECK(resolve_subgroup(z60, "gen:2").order() == 30);
  const Group q8 = quaternion_group();
  CHECK(resolve_subgroup(q8, "gen:i").order() == 4);

  CHECK(kind_of([&] { resolve_subgroup(d8, "gen:zz"); }) == ErrorKind::BadParameter);
  CHECK(kind_of([&] { resolve_subgroup(d8, "index:99"); }) == ErrorKind::BadParameter);
  CHECK(kind_of([&] { resolve_subgroup(d8, "index:x"); }) == ErrorKind::BadParameter);
  CHECK(kind_of([&] { resolve_subgroup(d8, "gen:"); }) == ErrorKind::BadParameter);
  CHECK(kind_of([&] { resolve_subgroup(d8, "a^2"); }) == ErrorKind::BadParameter);
}

TEST_CASE("built-in families") {
  const auto all = all_families();
  const auto groups = builtin_groups(48, all);
  std::size_t abelian = 0, products = 0;
  for (const auto& g : groups) {
    CHECK(g.group.order() <= 48);
    if (g.family == Family::Abelian) {
      ++abelian;
      CHECK(g.group.is_abelian());
      CHECK(evaluate(parse_group_expr(g.name)).table() == g.group.table());
    }
    if (g.family == Family::Products) ++products;
  }
  // non-cyclic abelian groups of order <= 48: total abelian count minus one cyclic group per order
  CHECK(abelian == 34);
  CHECK(products > 10);

  const Family cyc = Family::Cyclic;
  CHECK(builtin_groups(10, std::span<const Family>(&cyc, 1)).size() == 10);
  CHECK(parse_family("dicyclic") == Family::Dicyclic);
  CHECK(kind_of([] { parse_family("sporadic"); }) == ErrorKind::BadParameter);
}

TEST_CASE("scan records are ordered and deterministic") {
  const Family fam[] = {Family::Cyclic, Family::Dihedral};
  const auto groups = builtin_groups(12, fam);
  const auto a = run_scan(groups);
  const auto b = run_scan(groups);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(to_json(a[i]) == to_json(b[i]));
    CHECK(a[i].agree);
  }
  CHECK(a.front().group == "Z1");
  CHECK(a.front().decider == "perfect");
  const Json j = to_json(a.back());
  for (const char* key : {"group", "subgroup", "decider", "verdict", "oracle", "agree"}) CHECK(j.contains(key));

  ScanOptions generic;
  generic.family_deciders = false;
  for (const auto& r : run_scan(groups, generic)) CHECK(r.decider.find("family") == std::string::npos);
}
