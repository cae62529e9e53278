#pragma once

#include <cstdint>
#include <span>

#include "sumgraph/group.hpp"

namespace sumgraph {

/// H = <a> in Z_n with a | n the least positive member (a = n gives H = {0}).
/// Throws BadParameter unless 1 <= a <= n and a divides n.
bool cyclic_perfect_code(std::uint64_t n, std::uint64_t a);

/// Ambient group Z_{2^{n_1}} x ... x Z_{2^{n_k}} (k >= 2) built with abelian_group(factor_orders);
/// K a subgroup with |K| >= 3. True iff K is a coordinate-wise product of {0} and full factors.
bool abelian_2group_perfect_code(std::span<const std::uint32_t> factor_orders, const Subgroup& k);

/// H a normal subgroup of dihedral_group(n). Throws NotNormal otherwise.
bool dihedral_perfect_code(std::uint32_t n, const Subgroup& h);

/// H a normal subgroup of dicyclic_group(n). Throws NotNormal otherwise.
bool dicyclic_perfect_code(std::uint32_t n, const Subgroup& h);

/// Structural test for total perfect codes of Γ_{A,H}, A abelian. Throws NotAbelian.
bool abelian_total_perfect_code(const Group& a, const Subgroup& h);

enum class CodePerfectMethod { Bruteforce, Dedekind };

/// Bruteforce runs the perfect-code decider over every normal subgroup. Dedekind
/// applies the closed form and throws NotDedekind for non-Dedekind groups.
bool is_code_perfect(const Group& g, CodePerfectMethod method);

/// |H| = 3 normal: every x outside H has x² in H and Hx holds an element of order >= 3.
/// Throws BadParameter when |H| != 3.
bool order_three_coset_scan(const Group& g, const Subgroup& h);

}  // namespace sumgraph
