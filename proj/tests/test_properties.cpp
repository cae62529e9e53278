#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "sumgraph/classifiers.hpp"
#include "sumgraph/codes.hpp"
#include "sumgraph/constructors.hpp"
#include "sumgraph/scan.hpp"
#include "support/oracle.hpp"

using namespace sumgraph;

namespace {

std::vector<Group> mixed_groups() {
  return {cyclic_group(12), cyclic_group(16), dihedral_group(6), dihedral_group(9), dicyclic_group(4),
          dicyclic_group(5), quaternion_group(), abelian_group({2, 4}), abelian_group({2, 2, 6}),
          direct_product({dihedral_group(3), cyclic_group(4)}), direct_product({quaternion_group(), cyclic_group(2)})};
}

std::vector<Group> odd_abelian_groups(std::uint32_t max_order) {
  std::vector<Group> out;
  for (std::uint32_t n = 1; n <= max_order; n += 2) out.push_back(cyclic_group(n));
  for (auto fs : std::vector<std::vector<std::uint32_t>>{{3, 3}, {3, 9}, {5, 5}, {3, 3, 3}, {3, 15}})
    out.push_back(abelian_group(fs));
  return out;
}

}  // namespace

TEST_CASE("cosets with square inside are inverse-closed with constant square membership") {
  for (const auto& g : mixed_groups()) {
    for (const auto& h : normal_subgroups(g)) {
      for (const auto& c : right_cosets(g, h)) {
        const Element x = c.representative;
        const bool inside = h.contains(g.mul(x, x));
        CHECK(coset_square_membership(g, h, x) == inside);
        for (Element y : c.members) CHECK(h.contains(g.mul(y, y)) == inside);
        if (inside) {
          for (Element y : c.members) CHECK(std::binary_search(c.members.begin(), c.members.end(), g.inverse(y)));
        } else {
          // no involution in Hx or in Hx^-1
          for (Element y : c.members) {
            CHECK(g.mul(y, y) != g.identity());
            CHECK(g.mul(g.inverse(y), g.inverse(y)) != g.identity());
          }
          CHECK(!coset_has_involution(g, h, x));
        }
      }
    }
  }
}

TEST_CASE("odd abelian groups: g^2 in H implies g in H") {
  for (const auto& g : odd_abelian_groups(45)) {
    for (const auto& m : oracle::all_subgroups(g)) {
      const auto ms = oracle::members(m);
      const Subgroup h = Subgroup::from_members(g, ms);
      for (Element x = 0; x < g.order(); ++x)
        if (h.contains(g.mul(x, x))) CHECK(h.contains(x));
    }
  }
}

TEST_CASE("abelian_type reconstructs the group up to element orders") {
  const std::vector<Group> groups{cyclic_group(36), abelian_group({2, 6}), abelian_group({2, 2, 4}),
                                  abelian_group({6, 10}), abelian_group({4, 12}), abelian_group({3, 3, 3}),
                                  direct_product({cyclic_group(4), cyclic_group(6), cyclic_group(9)})};
  for (const auto& g : groups) {
    const AbelianType t = abelian_type(g);
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < t.invariant_factors.size(); ++i) {
      product *= t.invariant_factors[i];
      if (i) CHECK(t.invariant_factors[i] % t.invariant_factors[i - 1] == 0);
    }
    CHECK(product == g.order());

    std::vector<std::uint32_t> fs(t.invariant_factors.begin(), t.invariant_factors.end());
    const Group rebuilt = fs.empty() ? cyclic_group(1) : abelian_group(fs);
    auto a = element_orders(g), b = element_orders(rebuilt);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);

    std::size_t two_part = 1;
    while (g.order() % (two_part * 2) == 0) two_part *= 2;
    CHECK(t.sylow2.order() == two_part);
    CHECK(t.odd_part.order() == g.order() / two_part);
  }
}

TEST_CASE("elementary Sylow 2-subgroup: every subgroup admits a perfect code") {
  for (const auto& fs : std::vector<std::vector<std::uint32_t>>{{2, 2}, {2, 6}, {2, 2, 2}, {2, 10}, {6, 6}, {2, 2, 6}}) {
    const Group g = abelian_group(fs);
    REQUIRE(abelian_type(g).sylow2_elementary());
    for (const auto& h : normal_subgroups(g)) CHECK(decide_perfect_code(g, h).exists);
  }
  // a non-elementary Sylow 2-subgroup always has a failing subgroup
  for (const auto& fs : std::vector<std::vector<std::uint32_t>>{{8}, {2, 4}, {4, 4}, {2, 12}}) {
    const Group g = abelian_group(fs);
    REQUIRE(!abelian_type(g).sylow2_elementary());
    bool some_negative = false;
    for (const auto& h : normal_subgroups(g)) some_negative |= !decide_perfect_code(g, h).exists;
    CHECK(some_negative);
  }
}

TEST_CASE("odd-order groups: perfect codes always exist in the plain graph") {
  std::vector<Group> groups = odd_abelian_groups(35);
  groups.push_back(direct_product({cyclic_group(3), cyclic_group(5), cyclic_group(3)}));
  for (const auto& g : groups) {
    for (const auto& h : normal_subgroups(g)) {
      const Verdict p = decide_perfect_code(g, h);
      const Verdict x = decide_perfect_code_extended(g, h);
      CHECK(p.exists);
      CHECK(x.exists == oracle_verdict(g, h, Flavor::Extended, CodeKind::Perfect).exists);
      if (p.witness) CHECK(is_valid_code(build_graph(g, h, Flavor::Plain), *p.witness));
      if (x.witness) CHECK(is_valid_code(build_graph(g, h, Flavor::Extended), *x.witness));
    }
  }
}

TEST_CASE("abelian total decider agrees with the generic total decider, order <= 48") {
  const Family fams[] = {Family::Cyclic, Family::Abelian};
  std::size_t pairs = 0;
  for (const auto& sg : builtin_groups(48, fams)) {
    for (const auto& h : normal_subgroups(sg.group)) {
      CAPTURE(sg.name);
      CAPTURE(h.members());
      CHECK(abelian_total_perfect_code(sg.group, h) == decide_total_perfect_code(sg.group, h).exists);
      ++pairs;
    }
  }
  CHECK(pairs > 500);
}

TEST_CASE("code-perfect: odd abelian and elementary abelian 2-groups") {
  for (const auto& g : odd_abelian_groups(27)) {
    CHECK(is_code_perfect(g, CodePerfectMethod::Dedekind));
    CHECK(is_code_perfect(g, CodePerfectMethod::Bruteforce));
  }
  for (std::uint32_t t = 1; t <= 5; ++t) {
    const Group g = elementary_abelian_2_group(t);
    CHECK(is_code_perfect(g, CodePerfectMethod::Dedekind));
    CHECK(is_code_perfect(g, CodePerfectMethod::Bruteforce));
  }
}
