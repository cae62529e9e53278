#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumgraph/graph.hpp"
#include "sumgraph/group.hpp"

namespace sumgraph {

enum class CodeKind { Perfect, TotalPerfect };

std::string_view to_string(CodeKind k);

struct Code {
  std::vector<Element> vertices;  // sorted
  CodeKind kind = CodeKind::Perfect;
};

/// Refutation datum for a negative verdict.
struct Certificate {
  std::string reason;
  std::optional<Element> representative;  // offending element / coset representative
  std::vector<Element> elements;          // offending coset or component
};

struct Verdict {
  bool exists = false;
  std::string rule;
  Flavor flavor = Flavor::Plain;
  CodeKind kind = CodeKind::Perfect;
  std::optional<Code> witness;
  std::optional<Certificate> certificate;
};

// Rule identifiers recorded in verdicts.
namespace rules {
inline constexpr const char* kTrivialSubgroup = "trivial-subgroup";
inline constexpr const char* kWholeGroup = "whole-group";
inline constexpr const char* kOrderTwo = "subgroup-order-two";
inline constexpr const char* kSquareCosetsHaveInvolutions = "square-cosets-have-involutions";
inline constexpr const char* kSquareCosetWithoutInvolution = "square-coset-without-involution";
inline constexpr const char* kOrderTwoSquaresAreInvolutions = "order-two-square-elements-are-involutions";
inline constexpr const char* kOrderThreeElementaryTimesZ3 = "order-three-in-elementary-2-times-z3";
inline constexpr const char* kNoTotalShape = "no-total-code-shape";
inline constexpr const char* kSquaresInsideSubgroup = "squares-inside-subgroup";
inline constexpr const char* kSquareOutsideSubgroup = "square-outside-subgroup";
inline constexpr const char* kEvenGroupOrderTwoSubgroup = "even-group-order-two-subgroup";
inline constexpr const char* kSubgroupOrderNotTwo = "subgroup-order-not-two";
inline constexpr const char* kOddGroupOrder = "odd-group-order";
inline constexpr const char* kExhaustiveSearch = "exhaustive-search";
}  // namespace rules

// --- definition-level validators -------------------------------------------

/// Independent, and each vertex outside C has exactly one neighbour in C.
bool is_perfect_code(const SumGraph& graph, std::span<const Element> code);
/// Every vertex has exactly one neighbour in C.
bool is_total_perfect_code(const SumGraph& graph, std::span<const Element> code);
bool is_valid_code(const SumGraph& graph, const Code& code);

// --- exhaustive search oracle ----------------------------------------------

/// Exact-cover backtracking run per connected component; returns the
/// lexicographically least code, or nullopt when some component has none.
std::optional<Code> find_perfect_code_bruteforce(const SumGraph& graph);
std::optional<Code> find_total_perfect_code_bruteforce(const SumGraph& graph);

/// Oracle verdict wrapper: builds the graph and searches it.
Verdict oracle_verdict(const Group& g, const Subgroup& h, Flavor flavor, CodeKind kind);

// --- characterisation deciders ---------------------------------------------

Verdict decide_perfect_code(const Group& g, const Subgroup& h);
Code construct_perfect_code(const Group& g, const Subgroup& h);
Verdict decide_total_perfect_code(const Group& g, const Subgroup& h);
Verdict decide_perfect_code_extended(const Group& g, const Subgroup& h);
Verdict decide_total_perfect_code_extended(const Group& g, const Subgroup& h);

/// Dispatches to the decider for (flavor, kind).
Verdict decide(const Group& g, const Subgroup& h, Flavor flavor, CodeKind kind);

/// G ≅ Z2^n × Z3 with H its subgroup of order 3 (n >= 0).
bool is_elementary_2_times_z3_pair(const Group& g, const Subgroup& h);

// --- decider vs oracle harness ---------------------------------------------

struct CrossCheckEntry {
  std::size_t subgroup_index = 0;   // position in normal_subgroups(G)
  std::vector<Element> subgroup;
  Flavor flavor = Flavor::Plain;
  CodeKind kind = CodeKind::Perfect;
  Verdict theorem;
  Verdict oracle;
  bool agree = false;
  bool witness_valid = true;        // decider witness passes the validator
  double micros = 0;
};

struct CrossCheckReport {
  std::string group;
  std::size_t order = 0;
  std::size_t subgroups = 0;
  std::vector<CrossCheckEntry> entries;  // ordered by subgroup, then decider

  std::size_t agreements() const;
  std::size_t disagreements() const;
  std::size_t invalid_witnesses() const;
};

/// Every normal subgroup against all four deciders; subgroups run in parallel.
CrossCheckReport cross_check(const Group& g);

}  // namespace sumgraph
