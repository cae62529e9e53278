#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumgraph/bitset.hpp"
#include "sumgraph/group.hpp"

namespace sumgraph {

/// Plain: x ~ y iff xy ∈ H \ {e}.  Extended: x ~ y iff xy ∈ H.  Always x != y.
enum class Flavor { Plain, Extended };

std::string_view to_string(Flavor f);

class SumGraph {
 public:
  SumGraph(std::vector<BitSet> rows, Flavor flavor, std::vector<Element> subgroup)
      : rows_(std::move(rows)), flavor_(flavor), subgroup_(std::move(subgroup)) {}

  std::size_t vertex_count() const { return rows_.size(); }
  Flavor flavor() const { return flavor_; }
  const std::vector<Element>& subgroup() const { return subgroup_; }

  const BitSet& neighbors(Element v) const { return rows_[v]; }
  bool adjacent(Element u, Element v) const { return rows_[u].test(v); }
  std::size_t degree(Element v) const { return rows_[v].count(); }
  std::size_t edge_count() const;
  /// Edges {u, v} with u < v, in lexicographic order.
  std::vector<std::pair<Element, Element>> edges() const;

 private:
  std::vector<BitSet> rows_;
  Flavor flavor_;
  std::vector<Element> subgroup_;
};

/// Throws NotNormal when H is not normal in G.
SumGraph build_graph(const Group& g, const Subgroup& h, Flavor flavor);

/// Connected components, each sorted, ordered by least vertex.
std::vector<std::vector<Element>> components(const SumGraph& graph);

enum class BlockShape {
  Complete,                       // K_t
  CompleteBipartite,              // K_{t,t}
  CompleteMinusMatching,          // K_t minus the inverse-pair matching
  BipartiteMinusPerfectMatching,  // K_{t,t} minus {y, y^-1}
  Other,
};

std::string_view to_string(BlockShape s);

/// One coset block: Hx when x² ∈ H, otherwise Hx ∪ Hx⁻¹.
struct BlockRecord {
  std::vector<Element> vertices;
  BlockShape shape = BlockShape::Other;
  std::size_t part_size = 0;               // t in K_t / K_{t,t}
  std::vector<Element> cosets;             // representatives of the matched coset(s)
  bool square_inside = false;              // x² ∈ H for the block's cosets
  bool is_component = false;               // block is exactly one connected component
  std::optional<std::pair<Element, Element>> witness;
  std::string note;                        // why a block was classified Other
};

/// A vertex in a square-inside block where "y ∈ G²" and "y adjacent to every
/// other vertex of its block in Γ" disagree.
struct SquareAdjacencyDivergence {
  Element vertex;
  Element coset;
  bool in_squares;
  bool adjacent_to_all;
};

struct StructureReport {
  std::size_t subgroup_order = 0;
  std::vector<BlockRecord> extended;  // one record per connected component of Γ⁺
  std::vector<BlockRecord> plain;     // one record per coset block of Γ
  std::vector<SquareAdjacencyDivergence> divergences;

  bool extended_ok() const;  // every Γ⁺ component is K_t or K_{t,t} with t = |H| on its coset(s)
  bool plain_ok() const;     // every Γ block has the expected deleted-matching shape
};

/// Classifies both graphs from their definitional edge sets. Mismatches are
/// report content (shape Other with a witness pair), never errors.
StructureReport verify_structure(const Group& g, const Subgroup& h);

}  // namespace sumgraph
