#pragma once

#include <cstdint>
#include <vector>

#include "sumgraph/group.hpp"

namespace sumgraph {

/// Recipe for one of the built-in groups.
///
/// Labeling conventions (indices follow the listed order):
///   cyclic(n)      0, 1, ..., n-1
///   dihedral(n)    a^0 .. a^{n-1}, then a^0b .. a^{n-1}b         (order 2n, n >= 3)
///   dicyclic(n)    a^0 .. a^{2n-1}, then a^1b .. a^{2n}b          (order 4n, n >= 2)
///   quaternion     1, -1, i, -i, j, -j, k, -k
///   products       tuples "(x,y,...)" in lexicographic order of factor indices
struct GroupDescriptor {
  enum class Kind { Cyclic, Dihedral, Dicyclic, ElementaryAbelian2, Abelian, Quaternion, DirectProduct };

  Kind kind = Kind::Cyclic;
  std::uint32_t n = 1;
  std::vector<std::uint32_t> invariants;   // Abelian
  std::vector<GroupDescriptor> factors;    // DirectProduct

  static GroupDescriptor cyclic(std::uint32_t n) { return {Kind::Cyclic, n, {}, {}}; }
  static GroupDescriptor dihedral(std::uint32_t n) { return {Kind::Dihedral, n, {}, {}}; }
  static GroupDescriptor dicyclic(std::uint32_t n) { return {Kind::Dicyclic, n, {}, {}}; }
  static GroupDescriptor elementary_abelian_2(std::uint32_t t) { return {Kind::ElementaryAbelian2, t, {}, {}}; }
  static GroupDescriptor abelian(std::vector<std::uint32_t> inv) { return {Kind::Abelian, 0, std::move(inv), {}}; }
  static GroupDescriptor quaternion() { return {Kind::Quaternion, 8, {}, {}}; }
  static GroupDescriptor direct_product(std::vector<GroupDescriptor> fs) {
    return {Kind::DirectProduct, 0, {}, std::move(fs)};
  }
};

Group make_group(const GroupDescriptor& d, std::size_t max_order = kDefaultMaxOrder);

Group cyclic_group(std::uint32_t n, std::size_t max_order = kDefaultMaxOrder);
Group dihedral_group(std::uint32_t n, std::size_t max_order = kDefaultMaxOrder);
Group dicyclic_group(std::uint32_t n, std::size_t max_order = kDefaultMaxOrder);
Group quaternion_group();
Group elementary_abelian_2_group(std::uint32_t t, std::size_t max_order = kDefaultMaxOrder);
Group abelian_group(const std::vector<std::uint32_t>& cyclic_orders, std::size_t max_order = kDefaultMaxOrder);
Group direct_product(const std::vector<Group>& factors, std::size_t max_order = kDefaultMaxOrder);

/// Mixed-radix coordinates of a product element (first factor most significant).
std::vector<Element> product_coordinates(Element x, const std::vector<std::size_t>& factor_orders);
Element product_index(const std::vector<Element>& coords, const std::vector<std::size_t>& factor_orders);

}  // namespace sumgraph
