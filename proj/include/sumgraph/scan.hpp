#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumgraph/group.hpp"
#include "sumgraph/io.hpp"

namespace sumgraph {

/// Built-in sweep families. Products holds Q8 and a few non-abelian direct products.
enum class Family { Cyclic, Dihedral, Dicyclic, Abelian, Products };

std::string_view to_string(Family f);
/// Throws BadParameter on an unknown name.
Family parse_family(std::string_view name);
std::vector<Family> all_families();

struct ScanGroup {
  std::string name;  // canonical group expression, e.g. "Z2 x Z4", "D12"
  Family family = Family::Cyclic;
  std::uint32_t param = 0;                    // n for Z_n, D_2n, Dic_n
  std::vector<std::uint32_t> factor_orders;   // invariant factors for the Abelian family
  Group group;
};

/// Cyclic Z1..ZN; D_2n with n >= 3; Dic_n with n >= 2; non-cyclic abelian groups in
/// invariant-factor form; the product list. Ordered by family, then order.
std::vector<ScanGroup> builtin_groups(std::size_t max_order, std::span<const Family> families);

struct ScanRecord {
  std::string group;
  std::size_t order = 0;
  std::vector<Element> subgroup;
  std::string decider;
  bool verdict = false;
  bool oracle = false;
  bool agree = false;  // verdicts match and any positive witness validates
};

struct ScanOptions {
  bool generic_deciders = true;
  bool family_deciders = true;
};

/// Every (group, normal subgroup) pair, run in parallel. Records come back
/// ordered by group, then subgroup, then decider.
std::vector<ScanRecord> run_scan(const std::vector<ScanGroup>& groups, const ScanOptions& opts = {});

Json to_json(const ScanRecord& r);

}  // namespace sumgraph
