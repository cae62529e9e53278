#include "sumgraph/scan.hpp"

#include <algorithm>
#include <bit>
#include <exception>

#include "sumgraph/classifiers.hpp"
#include "sumgraph/codes.hpp"
#include "sumgraph/expr.hpp"

namespace sumgraph {

namespace {

// Non-abelian products used in the sweep, filtered by order.
constexpr const char* kProducts[] = {
    "Q8",        "Q8 x Z2",  "Q8 x Z3",  "D6 x Z2",  "Q8 x Z4",   "Q8 x Z5",   "D6 x Z3",   "D6 x Z4",
    "D8 x Z2",   "D8 x Z3",  "D10 x Z2", "Dic3 x Z2", "D6 x E2^2", "D12 x Z2", "D6 x Z5",   "D10 x Z3",
    "D14 x Z2",  "Q8 x E2^2", "D8 x E2^2", "D16 x Z2", "D8 x Z4",  "Q8 x Z2 x Z3", "D6 x D6", "Dic3 x Z3",
    "D12 x Z3",  "D18 x Z2", "D8 x Z5",  "D6 x Z7",  "Q8 x Z6",   "Dic3 x Z4", "D6 x Z8",   "D8 x Z6",
};

// Chains d1 | d2 | ... | dk with d1 >= 2, k >= 2 and product n.
void invariant_chains(std::uint32_t remaining, std::uint32_t last, std::vector<std::uint32_t>& cur,
                      std::vector<std::vector<std::uint32_t>>& out) {
  if (remaining == 1) {
    if (cur.size() >= 2) out.push_back(cur);
    return;
  }
  for (std::uint32_t d = std::max<std::uint32_t>(last, 2); d <= remaining; ++d) {
    if (d % last != 0 || remaining % d != 0) continue;
    // every later factor is a multiple of d, so d must divide what is left after it
    if ((remaining / d) % d != 0 && remaining / d != 1) continue;
    cur.push_back(d);
    invariant_chains(remaining / d, d, cur, out);
    cur.pop_back();
  }
}

std::string abelian_name(const std::vector<std::uint32_t>& inv) {
  std::string s;
  for (std::size_t i = 0; i < inv.size(); ++i) s += (i ? " x Z" : "Z") + std::to_string(inv[i]);
  return s;
}

bool witness_ok(const Group& g, const Subgroup& h, const Verdict& v) {
  if (!v.exists) return true;
  if (!v.witness) return false;
  return is_valid_code(build_graph(g, h, v.flavor), *v.witness);
}

std::vector<ScanRecord> scan_pair(const ScanGroup& sg, const Subgroup& h, const ScanOptions& opts) {
  const Group& g = sg.group;
  std::vector<ScanRecord> out;
  auto push = [&](std::string decider, bool verdict, bool oracle, bool valid = true) {
    out.push_back({sg.name, g.order(), h.members(), std::move(decider), verdict, oracle, verdict == oracle && valid});
  };

  const bool oracle_perfect = oracle_verdict(g, h, Flavor::Plain, CodeKind::Perfect).exists;
  const bool oracle_total = oracle_verdict(g, h, Flavor::Plain, CodeKind::TotalPerfect).exists;

  if (opts.generic_deciders) {
    const Verdict p = decide_perfect_code(g, h);
    push("perfect", p.exists, oracle_perfect, witness_ok(g, h, p));
    const Verdict t = decide_total_perfect_code(g, h);
    push("total", t.exists, oracle_total, witness_ok(g, h, t));
    const Verdict ep = decide_perfect_code_extended(g, h);
    push("extended-perfect", ep.exists, oracle_verdict(g, h, Flavor::Extended, CodeKind::Perfect).exists,
         witness_ok(g, h, ep));
    const Verdict et = decide_total_perfect_code_extended(g, h);
    push("extended-total", et.exists, oracle_verdict(g, h, Flavor::Extended, CodeKind::TotalPerfect).exists,
         witness_ok(g, h, et));
  }

  if (opts.family_deciders) {
    switch (sg.family) {
      case Family::Cyclic: {
        const Element a = h.order() == 1 ? sg.param : h.members()[1];
        push("cyclic-family", cyclic_perfect_code(sg.param, a), oracle_perfect);
        break;
      }
      case Family::Dihedral:
        push("dihedral-family", dihedral_perfect_code(sg.param, h), oracle_perfect);
        break;
      case Family::Dicyclic:
        push("dicyclic-family", dicyclic_perfect_code(sg.param, h), oracle_perfect);
        break;
      case Family::Abelian: {
        const bool two_group = std::has_single_bit(static_cast<std::uint64_t>(g.order()));
        if (two_group && h.order() >= 3)
          push("abelian-2group-family", abelian_2group_perfect_code(sg.factor_orders, h), oracle_perfect);
        break;
      }
      case Family::Products:
        break;
    }
    if (g.is_abelian()) push("abelian-total-family", abelian_total_perfect_code(g, h), oracle_total);
  }
  return out;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
    case Family::Dicyclic: return "dicyclic";
    case Family::Abelian: return "abelian";
    case Family::Products: return "products";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : all_families())
    if (to_string(f) == name) return f;
  throw Error(ErrorKind::BadParameter, "unknown family '" + std::string(name) +
                                           "' (expected cyclic, dihedral, dicyclic, abelian, products)");
}

std::vector<Family> all_families() {
  return {Family::Cyclic, Family::Dihedral, Family::Dicyclic, Family::Abelian, Family::Products};
}

std::vector<ScanGroup> builtin_groups(std::size_t max_order, std::span<const Family> families) {
  std::vector<ScanGroup> out;
  const auto n_max = static_cast<std::uint32_t>(max_order);
  auto wanted = [&](Family f) { return std::find(families.begin(), families.end(), f) != families.end(); };

  if (wanted(Family::Cyclic))
    for (std::uint32_t n = 1; n <= n_max; ++n)
      out.push_back({"Z" + std::to_string(n), Family::Cyclic, n, {}, cyclic_group(n, max_order)});
  if (wanted(Family::Dihedral))
    for (std::uint32_t n = 3; 2 * n <= n_max; ++n)
      out.push_back({"D" + std::to_string(2 * n), Family::Dihedral, n, {}, dihedral_group(n, max_order)});
  if (wanted(Family::Dicyclic))
    for (std::uint32_t n = 2; 4 * n <= n_max; ++n)
      out.push_back({"Dic" + std::to_string(n), Family::Dicyclic, n, {}, dicyclic_group(n, max_order)});
  if (wanted(Family::Abelian))
    for (std::uint32_t n = 4; n <= n_max; ++n) {
      std::vector<std::vector<std::uint32_t>> chains;
      std::vector<std::uint32_t> cur;
      invariant_chains(n, 1, cur, chains);
      for (auto& inv : chains)
        out.push_back({abelian_name(inv), Family::Abelian, 0, inv, abelian_group(inv, max_order)});
    }
  if (wanted(Family::Products)) {
    std::vector<ScanGroup> prods;
    for (const char* text : kProducts) {
      const GroupExpr e = parse_group_expr(text);
      try {
        prods.push_back({to_string(e), Family::Products, 0, {}, evaluate(e, n_max)});
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::OrderLimit) throw;
      }
    }
    std::stable_sort(prods.begin(), prods.end(),
                     [](const ScanGroup& a, const ScanGroup& b) { return a.group.order() < b.group.order(); });
    for (auto& p : prods) out.push_back(std::move(p));
  }
  return out;
}

std::vector<ScanRecord> run_scan(const std::vector<ScanGroup>& groups, const ScanOptions& opts) {
  struct Pair {
    std::size_t group;
    Subgroup subgroup;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (auto& h : normal_subgroups(groups[i].group)) pairs.push_back({i, std::move(h)});

  std::vector<std::vector<ScanRecord>> slots(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      slots[i] = scan_pair(groups[pairs[i].group], pairs[i].subgroup, opts);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<ScanRecord> out;
  for (auto& s : slots) out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  return out;
}

Json to_json(const ScanRecord& r) {
  return Json{{"group", r.group},     {"order", r.order},   {"subgroup", r.subgroup}, {"decider", r.decider},
              {"verdict", r.verdict}, {"oracle", r.oracle}, {"agree", r.agree}};
}

}  // namespace sumgraph
