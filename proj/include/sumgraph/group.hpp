#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumgraph/bitset.hpp"
#include "sumgraph/error.hpp"

namespace sumgraph {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 512;

/// Order cap honouring SUMGRAPH_MAX_ORDER when it is set to a positive integer.
std::size_t max_order_from_env();

/// Structural descriptor remembered by the constructors. Family-specific code
/// relies on the element labeling each constructor fixes.
struct GroupTag {
  enum class Kind { Generic, Cyclic, Dihedral, Dicyclic, Quaternion, Product };

  Kind kind = Kind::Generic;
  // Cyclic: order. Dihedral: n for D_2n. Dicyclic: n for Dic_n (order 4n).
  std::uint32_t n = 0;
  std::vector<GroupTag> factors;  // Product only

  std::string to_string() const;
  friend bool operator==(const GroupTag&, const GroupTag&) = default;
};

/// A finite group held as a validated Cayley table over indices 0..n-1.
class Group {
 public:
  /// Validates the table (Latin square, identity, inverses, associativity).
  static Group from_table(const std::vector<std::vector<Element>>& table,
                          std::vector<std::string> labels = {}, GroupTag tag = {},
                          std::size_t max_order = kDefaultMaxOrder);

  std::size_t order() const { return n_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[std::size_t{a} * n_ + b]; }
  Element inverse(Element a) const { return inverses_[a]; }
  Element conjugate(Element g, Element x) const { return mul(mul(inverse(x), g), x); }

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find_label(std::string_view text) const;

  const GroupTag& tag() const { return tag_; }
  bool is_abelian() const { return abelian_; }

  std::span<const Element> row(Element a) const {
    return {table_.data() + std::size_t{a} * n_, n_};
  }
  std::vector<std::vector<Element>> table() const;

 private:
  Group() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverses_;
  std::vector<std::string> labels_;
  GroupTag tag_;
  bool abelian_ = false;
};

/// A subgroup given by its member set. Normality is computed once at construction.
class Subgroup {
 public:
  /// Throws NotASubgroup unless `members` is a subgroup of `g`.
  static Subgroup from_members(const Group& g, std::span<const Element> members);
  static Subgroup generated_by(const Group& g, std::span<const Element> generators);
  static Subgroup trivial(const Group& g);
  static Subgroup whole(const Group& g);

  std::size_t parent_order() const { return mask_.size(); }
  std::size_t order() const { return members_.size(); }
  const std::vector<Element>& members() const { return members_; }
  const BitSet& mask() const { return mask_; }
  bool contains(Element a) const { return mask_.test(a); }
  bool is_normal() const { return normal_; }
  bool is_trivial() const { return order() == 1; }
  bool is_whole() const { return order() == parent_order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.mask_ == b.mask_; }

 private:
  Subgroup(const Group& g, BitSet mask);

  BitSet mask_;
  std::vector<Element> members_;
  bool normal_ = false;
};

/// Right coset H·representative; the representative is its least member.
struct Coset {
  Element representative;
  std::vector<Element> members;
};

struct AbelianType {
  std::vector<std::uint64_t> invariant_factors;
  /// prime -> exponents of the cyclic p-power factors, ascending
  std::map<std::uint64_t, std::vector<unsigned>> primary;
  Subgroup sylow2;
  Subgroup odd_part;

  bool sylow2_elementary() const;
};

Element power(const Group& g, Element a, std::uint64_t k);
std::uint64_t element_order(const Group& g, Element a);
std::vector<std::uint64_t> element_orders(const Group& g);

std::vector<Element> involutions(const Group& g);
std::vector<std::vector<Element>> conjugacy_classes(const Group& g);

/// All normal subgroups, sorted by (order, least non-identity member).
std::vector<Subgroup> normal_subgroups(const Group& g);

/// Greedy generating set: smallest indices first, each outside the span of the previous ones.
std::vector<Element> generators(const Group& g, const Subgroup& h);

/// Cosets Hx; the coset containing the identity comes first, the rest by least member.
std::vector<Coset> right_cosets(const Group& g, const Subgroup& h);
std::vector<Element> right_transversal(const Group& g, const Subgroup& h);

/// {g·g : g ∈ G} as a sorted list and as a mask.
std::vector<Element> squares(const Group& g);
BitSet square_mask(const Group& g);

bool coset_has_involution(const Group& g, const Subgroup& h, Element x);
bool coset_square_membership(const Group& g, const Subgroup& h, Element x);

/// Throws NotAbelian for non-abelian input.
AbelianType abelian_type(const Group& g);

bool is_dedekind(const Group& g);

}  // namespace sumgraph
