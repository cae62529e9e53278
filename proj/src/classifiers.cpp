#include "sumgraph/classifiers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "sumgraph/codes.hpp"
#include "sumgraph/constructors.hpp"

namespace sumgraph {

bool cyclic_perfect_code(std::uint64_t n, std::uint64_t a) {
  if (n < 1 || a < 1 || a > n || n % a != 0)
    throw Error(ErrorKind::BadParameter, "a = " + std::to_string(a) + " must be a divisor of n = " + std::to_string(n));
  const std::uint64_t o = n / a;  // order of a in Z_n
  if (n % 2 == 1) return true;
  if (o % 2 == 1) return true;
  if (o == 2) return true;
  return a % 2 == 1;  // o >= 4 even
}

bool abelian_2group_perfect_code(std::span<const std::uint32_t> factor_orders, const Subgroup& k) {
  if (factor_orders.size() < 2) throw Error(ErrorKind::BadParameter, "ambient 2-group must be non-cyclic");
  std::vector<std::size_t> orders;
  std::size_t total = 1;
  for (auto m : factor_orders) {
    if (m < 2 || !std::has_single_bit(m))
      throw Error(ErrorKind::BadParameter, "factor order " + std::to_string(m) + " is not a power of two >= 2");
    orders.push_back(m);
    total *= m;
  }
  if (k.parent_order() != total) throw Error(ErrorKind::NotASubgroup, "K does not live in the ambient group");
  if (k.order() < 3) throw Error(ErrorKind::BadParameter, "|K| must be at least 3");

  // K contains the full factor i iff it contains the unit vector e_i.
  std::size_t full = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<Element> unit(orders.size(), 0);
    unit[i] = 1;
    if (k.contains(product_index(unit, orders))) full *= orders[i];
  }
  return full == k.order();
}

bool dihedral_perfect_code(std::uint32_t n, const Subgroup& h) {
  if (n < 3) throw Error(ErrorKind::BadParameter, "dihedral parameter n must be >= 3");
  if (h.parent_order() != 2ull * n) throw Error(ErrorKind::NotASubgroup, "H does not live in D_2n");
  if (!h.is_normal()) throw Error(ErrorKind::NotNormal, "H is not normal in D_2n");
  if (h.is_whole()) return true;

  const auto& ms = h.members();
  if (ms.back() < n) {
    // H = <a^t> with |H| = n / t.
    if (n % 2 == 1) return true;
    const std::uint32_t m = static_cast<std::uint32_t>(h.order());
    const std::uint32_t t = n / m;
    return m % 2 == 1 || m == 2 || t % 2 == 1;
  }
  if (n % 2 == 0 && h.order() == n) {
    // <a^2, b> holds a^{2i} b (index n + 2i); <a^2, ab> holds a^{2i+1} b.
    const bool even_refl = h.contains(n);
    const bool odd_refl = h.contains(n + 1);
    if (even_refl != odd_refl) return true;
  }
  throw Error(ErrorKind::InternalInconsistency, "normal subgroup of D_2n outside the known catalogue");
}

bool dicyclic_perfect_code(std::uint32_t n, const Subgroup& h) {
  if (n < 2) throw Error(ErrorKind::BadParameter, "dicyclic parameter n must be >= 2");
  if (h.parent_order() != 4ull * n) throw Error(ErrorKind::NotASubgroup, "H does not live in Dic_n");
  if (!h.is_normal()) throw Error(ErrorKind::NotNormal, "H is not normal in Dic_n");
  if (h.is_whole()) return true;
  if (h.members().back() < 2 * n) {
    // H = <a^t> with (2n)/t = |H|.
    return h.order() % 2 == 1 || h.order() == 2;
  }
  return false;
}

bool abelian_total_perfect_code(const Group& a, const Subgroup& h) {
  if (!a.is_abelian()) throw Error(ErrorKind::NotAbelian, "A must be abelian");
  if (h.parent_order() != a.order()) throw Error(ErrorKind::NotASubgroup, "H does not live in A");
  if (h.order() == 3) return is_elementary_2_times_z3_pair(a, h);
  if (h.order() != 2) return false;

  const auto type = abelian_type(a);
  if (type.sylow2_elementary()) return true;  // A = Z2^n x Q
  // A_2 has a factor Z_{2^k}, k >= 2: H = {0, h} works iff h has a nonzero
  // coordinate in some Z2 factor, i.e. h is not a double.
  const Element gen = h.members()[0] == a.identity() ? h.members()[1] : h.members()[0];
  return !square_mask(a).test(gen);
}

bool is_code_perfect(const Group& g, CodePerfectMethod method) {
  if (method == CodePerfectMethod::Bruteforce) {
    const auto normals = normal_subgroups(g);
    return std::all_of(normals.begin(), normals.end(),
                       [&](const Subgroup& h) { return decide_perfect_code(g, h).exists; });
  }
  if (!is_dedekind(g)) throw Error(ErrorKind::NotDedekind, "closed form only covers Dedekind groups");
  if (!g.is_abelian()) return false;  // contains Q8
  const auto type = abelian_type(g);
  return type.invariant_factors == std::vector<std::uint64_t>{4} || type.sylow2_elementary();
}

bool order_three_coset_scan(const Group& g, const Subgroup& h) {
  if (h.order() != 3) throw Error(ErrorKind::BadParameter, "|H| must be 3");
  if (h.parent_order() != g.order()) throw Error(ErrorKind::NotASubgroup, "H does not live in G");
  if (!h.is_normal()) throw Error(ErrorKind::NotNormal, "H is not normal");
  for (Element x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    if (!h.contains(g.mul(x, x))) return false;
    const bool has_large = std::any_of(h.members().begin(), h.members().end(), [&](Element m) {
      const Element y = g.mul(m, x);
      return y != g.identity() && g.mul(y, y) != g.identity();
    });
    if (!has_large) return false;
  }
  return true;
}

}  // namespace sumgraph
