#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sumgraph/constructors.hpp"

namespace sumgraph {

/// Parsed group expression.
///
///   expr := atom { "x" atom }
///   atom := "Z" int | "D" int | "Dic" int | "Q8" | "E2^" int | "(" expr ")"
///
/// "D" takes the group order (even, >= 6), "Dic" takes n (order 4n, n >= 2).
/// Keywords are case-insensitive and whitespace is ignored.
struct GroupExpr {
  enum class Kind { Cyclic, Dihedral, Dicyclic, Quaternion, Elementary2, Product };

  Kind kind = Kind::Cyclic;
  std::uint32_t value = 1;  // Z: order, D: order, Dic: n, E2^: rank
  std::vector<GroupExpr> factors;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

/// Error detail for a rejected expression; thrown inside Error(ParseError).
class ParseFailure : public Error {
 public:
  ParseFailure(std::size_t offset, std::vector<std::string> expected, const std::string& msg);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

GroupExpr parse_group_expr(std::string_view text);

/// Canonical text: "Z4 x Z3", nested products parenthesised.
std::string to_string(const GroupExpr& e);

GroupDescriptor to_descriptor(const GroupExpr& e);
Group evaluate(const GroupExpr& e, std::size_t max_order = kDefaultMaxOrder);

}  // namespace sumgraph
