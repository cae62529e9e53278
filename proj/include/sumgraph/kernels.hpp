#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial twin with the same
// contract; tests hold them equal and bench/ times them against each other.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sumgraph/bitset.hpp"
#include "sumgraph/group.hpp"

namespace sumgraph::kernels {

struct Triple {
  Element a, b, c;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Lexicographically least (a,b,c) with (ab)c != a(bc) in a row-major n×n table.
std::optional<Triple> find_nonassociative_triple_serial(std::span<const Element> table, std::size_t n);
std::optional<Triple> find_nonassociative_triple(std::span<const Element> table, std::size_t n);

/// Rows of the graph x ~ y iff x·y ∈ targets and x != y.
std::vector<BitSet> product_adjacency_serial(const Group& g, const BitSet& targets);
std::vector<BitSet> product_adjacency(const Group& g, const BitSet& targets);

/// Whether every conjugate x⁻¹hx of a member stays inside `members`.
bool is_conjugation_closed_serial(const Group& g, const BitSet& members);
bool is_conjugation_closed(const Group& g, const BitSet& members);

}  // namespace sumgraph::kernels
