#include <doctest.h>

#include <algorithm>
#include <functional>

#include "sumgraph/codes.hpp"
#include "sumgraph/constructors.hpp"
#include "support/oracle.hpp"

using namespace sumgraph;

namespace {

Subgroup sub(const Group& g, std::vector<Element> ms) { return Subgroup::from_members(g, ms); }

Subgroup gen(const Group& g, std::vector<Element> gens) { return Subgroup::generated_by(g, gens); }

// Small hand-built graphs wrapped as SumGraph.
SumGraph make_graph(std::size_t n, const std::vector<std::pair<Element, Element>>& edges) {
  std::vector<BitSet> rows(n, BitSet(n));
  for (auto [u, v] : edges) {
    rows[u].set(v);
    rows[v].set(u);
  }
  return SumGraph(std::move(rows), Flavor::Plain, {});
}

std::vector<Element> v(std::initializer_list<Element> xs) { return xs; }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_CASE("validators on small graphs") {
  const SumGraph empty = make_graph(4, {});
  CHECK(is_perfect_code(empty, v({0, 1, 2, 3})));
  CHECK(!is_perfect_code(empty, v({0, 1, 2})));

  const SumGraph edge = make_graph(2, {{0, 1}});
  CHECK(is_perfect_code(edge, v({0})));
  CHECK(!is_total_perfect_code(edge, v({0})));
  CHECK(is_total_perfect_code(edge, v({0, 1})));
  CHECK(!is_perfect_code(edge, v({0, 1})));

  const SumGraph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_perfect_code(k3, v({1})));
  CHECK(!is_perfect_code(k3, v({})));

  // out-of-range and duplicate members are rejected rather than ignored
  CHECK(!is_perfect_code(k3, v({5})));
  CHECK(!is_perfect_code(empty, v({0, 0, 1, 2, 3})));

  CHECK(is_valid_code(edge, Code{{0, 1}, CodeKind::TotalPerfect}));
  CHECK(!is_valid_code(edge, Code{{0, 1}, CodeKind::Perfect}));
}

TEST_CASE("bruteforce: examples") {
  const Group z8 = cyclic_group(8);
  CHECK(!find_perfect_code_bruteforce(build_graph(z8, sub(z8, {0, 2, 4, 6}), Flavor::Plain)));

  const Group z12 = cyclic_group(12);
  const auto c = find_perfect_code_bruteforce(build_graph(z12, sub(z12, {0, 4, 8}), Flavor::Plain));
  REQUIRE(c);
  CHECK(c->vertices == v({0, 1, 6, 11}));

  const Group z4 = cyclic_group(4);
  const auto t = find_total_perfect_code_bruteforce(build_graph(z4, sub(z4, {0, 2}), Flavor::Extended));
  REQUIRE(t);
  CHECK(t->vertices == v({0, 1, 2, 3}));
}

TEST_CASE("bruteforce returns the least code found by subset enumeration") {
  std::vector<Group> groups{cyclic_group(8), cyclic_group(12), dihedral_group(4), dihedral_group(6),
                            dicyclic_group(2), dicyclic_group(3), abelian_group({2, 4}), abelian_group({2, 6}),
                            cyclic_group(16), abelian_group({2, 2, 2})};
  for (const auto& g : groups) {
    for (const auto& h : normal_subgroups(g)) {
      for (bool ext : {false, true}) {
        const auto adj = oracle::adjacency(g, h.members(), ext);
        const SumGraph graph = build_graph(g, h, ext ? Flavor::Extended : Flavor::Plain);
        for (bool total : {false, true}) {
          CAPTURE(g.tag().to_string());
          CAPTURE(h.members());
          CAPTURE(ext);
          CAPTURE(total);
          const auto expected = oracle::least_code(adj, total);
          const auto got = total ? find_total_perfect_code_bruteforce(graph) : find_perfect_code_bruteforce(graph);
          REQUIRE(expected.has_value() == got.has_value());
          if (got) CHECK(got->vertices == *expected);
        }
      }
    }
  }
}

TEST_CASE("oracle verdict certificates name a failing component") {
  const Group z8 = cyclic_group(8);
  const auto h = sub(z8, {0, 2, 4, 6});
  const Verdict ov = oracle_verdict(z8, h, Flavor::Plain, CodeKind::Perfect);
  CHECK(!ov.exists);
  CHECK(ov.rule == rules::kExhaustiveSearch);
  REQUIRE(ov.certificate);
  CHECK(ov.certificate->elements == v({1, 3, 5, 7}));
}

TEST_CASE("decide_perfect_code: examples") {
  const Group z60 = cyclic_group(60);
  const Verdict v60 = decide_perfect_code(z60, gen(z60, {2}));
  CHECK(!v60.exists);
  CHECK(v60.rule == rules::kSquareCosetWithoutInvolution);
  REQUIRE(v60.certificate);
  CHECK(v60.certificate->representative == Element{1});

  const Group q8 = dicyclic_group(2);
  const Verdict vq = decide_perfect_code(q8, gen(q8, {1}));
  CHECK(!vq.exists);
  CHECK(oracle_verdict(q8, gen(q8, {1}), Flavor::Plain, CodeKind::Perfect).exists == false);

  for (const auto& g : {dihedral_group(9), dicyclic_group(3), abelian_group({3, 3, 3}), cyclic_group(42)}) {
    for (const auto& h : normal_subgroups(g)) {
      if (h.order() % 2 == 0) continue;
      CHECK(decide_perfect_code(g, h).exists);
    }
  }
  CHECK(decide_perfect_code(z60, Subgroup::trivial(z60)).rule == rules::kTrivialSubgroup);
  CHECK(decide_perfect_code(z60, gen(z60, {30})).rule == rules::kOrderTwo);
  CHECK(decide_perfect_code(z60, gen(z60, {5})).rule == rules::kSquareCosetsHaveInvolutions);

  const Group d6 = dihedral_group(3);
  CHECK(kind_of([&] { decide_perfect_code(d6, sub(d6, {0, 3})); }) == ErrorKind::NotNormal);
}

TEST_CASE("construct_perfect_code: examples") {
  const Group z12 = cyclic_group(12);
  CHECK(construct_perfect_code(z12, gen(z12, {4})).vertices == v({0, 1, 6, 11}));
  const Group z6 = cyclic_group(6);
  CHECK(construct_perfect_code(z6, gen(z6, {2})).vertices == v({0, 3}));
  const Group d10 = dihedral_group(5);
  CHECK(construct_perfect_code(d10, Subgroup::trivial(d10)).vertices.size() == 10);

  const Group z60 = cyclic_group(60);
  CHECK(kind_of([&] { construct_perfect_code(z60, gen(z60, {2})); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("construct_perfect_code witnesses validate everywhere") {
  for (const auto& g : {dihedral_group(8), dicyclic_group(6), abelian_group({2, 2, 6}), cyclic_group(36),
                        direct_product({quaternion_group(), cyclic_group(3)})}) {
    for (const auto& h : normal_subgroups(g)) {
      const Verdict d = decide_perfect_code(g, h);
      if (!d.exists) {
        CHECK(d.certificate.has_value());
        continue;
      }
      REQUIRE(d.witness);
      CHECK(is_perfect_code(build_graph(g, h, Flavor::Plain), d.witness->vertices));
    }
  }
}

TEST_CASE("decide_total_perfect_code: examples") {
  const Group v4 = abelian_group({2, 2});
  for (Element x : {1, 2, 3}) CHECK(decide_total_perfect_code(v4, gen(v4, {x})).exists);

  const Group z4 = cyclic_group(4);
  const Verdict t4 = decide_total_perfect_code(z4, gen(z4, {2}));
  CHECK(!t4.exists);
  REQUIRE(t4.certificate);
  CHECK(t4.certificate->representative == Element{1});
  CHECK(!oracle_verdict(z4, gen(z4, {2}), Flavor::Plain, CodeKind::TotalPerfect).exists);

  const Group e2z3 = abelian_group({2, 2, 3});
  const Subgroup h3 = gen(e2z3, {1});  // (0,0,1)
  REQUIRE(h3.order() == 3);
  const Verdict t = decide_total_perfect_code(e2z3, h3);
  CHECK(t.exists);
  CHECK(t.rule == rules::kOrderThreeElementaryTimesZ3);
  REQUIRE(t.witness);
  CHECK(is_total_perfect_code(build_graph(e2z3, h3, Flavor::Plain), t.witness->vertices));

  // Z6 = Z2 x Z3 with its order-3 subgroup; Z12 does not qualify
  const Group z6 = cyclic_group(6);
  CHECK(decide_total_perfect_code(z6, gen(z6, {2})).exists);
  const Group z12 = cyclic_group(12);
  CHECK(!decide_total_perfect_code(z12, gen(z12, {4})).exists);
  // Z3 itself: n = 0
  const Group z3 = cyclic_group(3);
  CHECK(decide_total_perfect_code(z3, Subgroup::whole(z3)).exists);
}

TEST_CASE("extended deciders: examples") {
  for (std::uint32_t n = 2; n <= 20; n += 2) {
    const Group z = cyclic_group(n);
    CHECK(decide_perfect_code_extended(z, gen(z, {2 % n})).exists);
  }
  const Group z15 = cyclic_group(15);
  for (const auto& h : normal_subgroups(z15)) {
    const bool expect = h.is_trivial() || h.is_whole();
    CHECK(decide_perfect_code_extended(z15, h).exists == expect);
  }
  const Group e3 = elementary_abelian_2_group(3);
  for (const auto& h : normal_subgroups(e3)) CHECK(decide_perfect_code_extended(e3, h).exists);

  const Group z4 = cyclic_group(4);
  const Verdict t = decide_total_perfect_code_extended(z4, gen(z4, {2}));
  CHECK(t.exists);
  REQUIRE(t.witness);
  CHECK(t.witness->vertices == v({0, 1, 2, 3}));

  const Group z6 = cyclic_group(6);
  CHECK(!decide_total_perfect_code_extended(z6, gen(z6, {2})).exists);
  CHECK(decide_total_perfect_code_extended(z6, gen(z6, {2})).rule == rules::kSubgroupOrderNotTwo);
  const Group z5 = cyclic_group(5);
  for (const auto& h : normal_subgroups(z5)) {
    CHECK(!decide_total_perfect_code_extended(z5, h).exists);
    CHECK(decide_total_perfect_code_extended(z5, h).rule == rules::kOddGroupOrder);
  }
}

TEST_CASE("verdict invariants: positive has a witness, negative a certificate") {
  for (const auto& g : {dihedral_group(6), dicyclic_group(4), abelian_group({2, 4}), cyclic_group(24)}) {
    for (const auto& h : normal_subgroups(g)) {
      for (Flavor f : {Flavor::Plain, Flavor::Extended})
        for (CodeKind k : {CodeKind::Perfect, CodeKind::TotalPerfect}) {
          const Verdict d = decide(g, h, f, k);
          CHECK(d.flavor == f);
          CHECK(d.kind == k);
          CHECK(!d.rule.empty());
          if (d.exists) {
            REQUIRE(d.witness);
            CHECK(is_valid_code(build_graph(g, h, f), *d.witness));
          } else {
            CHECK(d.certificate);
          }
        }
    }
  }
}

TEST_CASE("elementary-2 x Z3 recognition") {
  CHECK(is_elementary_2_times_z3_pair(cyclic_group(3), Subgroup::whole(cyclic_group(3))));
  const Group z6 = cyclic_group(6);
  CHECK(is_elementary_2_times_z3_pair(z6, gen(z6, {2})));
  const Group z12 = cyclic_group(12);
  CHECK(!is_elementary_2_times_z3_pair(z12, gen(z12, {4})));
  const Group z3z3 = abelian_group({3, 3});
  CHECK(!is_elementary_2_times_z3_pair(z3z3, gen(z3z3, {1})));
  const Group d6 = dihedral_group(3);
  CHECK(!is_elementary_2_times_z3_pair(d6, sub(d6, {0, 1, 2})));
}

TEST_CASE("cross_check: Z60, Dic2, trivial group") {
  const auto r60 = cross_check(cyclic_group(60));
  CHECK(r60.subgroups == 12);
  CHECK(r60.disagreements() == 0);
  CHECK(r60.invalid_witnesses() == 0);
  std::vector<std::vector<Element>> failing;
  for (const auto& e : r60.entries)
    if (e.flavor == Flavor::Plain && e.kind == CodeKind::Perfect && !e.theorem.exists) failing.push_back(e.subgroup);
  REQUIRE(failing.size() == 3);
  const Group z60 = cyclic_group(60);
  CHECK(failing[0] == gen(z60, {10}).members());
  CHECK(failing[1] == gen(z60, {6}).members());
  CHECK(failing[2] == gen(z60, {2}).members());

  const auto rq = cross_check(dicyclic_group(2));
  CHECK(rq.disagreements() == 0);
  CHECK(rq.entries.size() == rq.subgroups * 4);

  const auto r1 = cross_check(cyclic_group(1));
  CHECK(r1.subgroups == 1);
  CHECK(r1.disagreements() == 0);
}

TEST_CASE("Z4 x Z3 x Z3: the Sylow-2 reduction needs |H_2| != 2") {
  const Group a = abelian_group({4, 3, 3});
  // H = {(0,x,0), (2,x,0)}: coordinates (i,j,k) -> 9i + 3j + k
  const Subgroup h = sub(a, {0, 3, 6, 18, 21, 24});
  CHECK(!decide_perfect_code(a, h).exists);
  CHECK(!oracle_verdict(a, h, Flavor::Plain, CodeKind::Perfect).exists);
  const Group z4 = cyclic_group(4);
  CHECK(decide_perfect_code(z4, gen(z4, {2})).exists);
  CHECK(oracle_verdict(z4, gen(z4, {2}), Flavor::Plain, CodeKind::Perfect).exists);
}
