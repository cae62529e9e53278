#include "sumgraph/codes.hpp"

#include <algorithm>
#include <chrono>
#include <exception>

namespace sumgraph {

std::string_view to_string(CodeKind k) { return k == CodeKind::Perfect ? "perfect" : "total"; }

// ---------------------------------------------------------------------------
// Validators

namespace {

std::optional<BitSet> code_mask(const SumGraph& graph, std::span<const Element> code) {
  BitSet c(graph.vertex_count());
  for (Element v : code) {
    if (v >= graph.vertex_count() || c.test(v)) return std::nullopt;
    c.set(v);
  }
  return c;
}

std::size_t hits(const BitSet& row, const BitSet& code) { return (row & code).count(); }

}  // namespace

bool is_perfect_code(const SumGraph& graph, std::span<const Element> code) {
  const auto c = code_mask(graph, code);
  if (!c) return false;
  for (Element v = 0; v < graph.vertex_count(); ++v) {
    const std::size_t k = hits(graph.neighbors(v), *c);
    if (c->test(v) ? k != 0 : k != 1) return false;
  }
  return true;
}

bool is_total_perfect_code(const SumGraph& graph, std::span<const Element> code) {
  const auto c = code_mask(graph, code);
  if (!c) return false;
  for (Element v = 0; v < graph.vertex_count(); ++v)
    if (hits(graph.neighbors(v), *c) != 1) return false;
  return true;
}

bool is_valid_code(const SumGraph& graph, const Code& code) {
  return code.kind == CodeKind::Perfect ? is_perfect_code(graph, code.vertices)
                                        : is_total_perfect_code(graph, code.vertices);
}

// ---------------------------------------------------------------------------
// Exhaustive search

namespace {

// Exact cover of a component by the sets D(s), where D is the closed
// neighbourhood (perfect) or the open neighbourhood (total). Vertices are
// decided in index order, "include" before "exclude", so the first cover found
// is the lexicographically least code of the component.
class ComponentSearch {
 public:
  ComponentSearch(const SumGraph& graph, const std::vector<Element>& comp, CodeKind kind)
      : comp_(comp), m_(comp.size()), cover_(m_, BitSet(m_)), closes_at_(m_), covered_(m_), chosen_(m_) {
    std::vector<std::size_t> local(graph.vertex_count(), 0);
    for (std::size_t i = 0; i < m_; ++i) local[comp[i]] = i;
    for (std::size_t i = 0; i < m_; ++i) {
      graph.neighbors(comp[i]).for_each([&](std::size_t w) { cover_[i].set(local[w]); });
      if (kind == CodeKind::Perfect) cover_[i].set(i);
    }
    // w is covered only by s with w ∈ D(s), i.e. s ∈ D(w); after deciding the
    // largest such s, w must already be covered.
    for (std::size_t w = 0; w < m_; ++w) {
      std::size_t last = BitSet::npos;
      cover_[w].for_each([&](std::size_t s) { last = s; });
      if (last == BitSet::npos) dead_ = true;
      else closes_at_[last].push_back(w);
    }
  }

  std::optional<std::vector<Element>> run() {
    if (dead_ || !dfs(0)) return std::nullopt;
    std::vector<Element> out;
    chosen_.for_each([&](std::size_t i) { out.push_back(comp_[i]); });
    return out;
  }

 private:
  bool closed(std::size_t i) const {
    for (std::size_t w : closes_at_[i])
      if (!covered_.test(w)) return false;
    return true;
  }

  bool dfs(std::size_t i) {
    if (i == m_) return true;
    if (!cover_[i].intersects(covered_)) {
      const BitSet saved = covered_;
      covered_ |= cover_[i];
      chosen_.set(i);
      if (closed(i) && dfs(i + 1)) return true;
      chosen_.reset(i);
      covered_ = saved;
    }
    return closed(i) && dfs(i + 1);
  }

  const std::vector<Element>& comp_;
  std::size_t m_;
  std::vector<BitSet> cover_;
  std::vector<std::vector<std::size_t>> closes_at_;
  BitSet covered_;
  BitSet chosen_;
  bool dead_ = false;
};

struct SearchResult {
  std::optional<Code> code;
  std::vector<Element> failing_component;
};

SearchResult search(const SumGraph& graph, CodeKind kind) {
  SearchResult res;
  Code code{{}, kind};
  for (const auto& comp : components(graph)) {
    auto part = ComponentSearch(graph, comp, kind).run();
    if (!part) {
      res.failing_component = comp;
      return res;
    }
    code.vertices.insert(code.vertices.end(), part->begin(), part->end());
  }
  std::sort(code.vertices.begin(), code.vertices.end());
  res.code = std::move(code);
  return res;
}

}  // namespace

std::optional<Code> find_perfect_code_bruteforce(const SumGraph& graph) {
  return search(graph, CodeKind::Perfect).code;
}

std::optional<Code> find_total_perfect_code_bruteforce(const SumGraph& graph) {
  return search(graph, CodeKind::TotalPerfect).code;
}

Verdict oracle_verdict(const Group& g, const Subgroup& h, Flavor flavor, CodeKind kind) {
  const auto graph = build_graph(g, h, flavor);
  auto res = search(graph, kind);
  Verdict v;
  v.flavor = flavor;
  v.kind = kind;
  v.rule = rules::kExhaustiveSearch;
  v.exists = res.code.has_value();
  if (v.exists) {
    v.witness = std::move(res.code);
  } else {
    v.certificate = Certificate{"connected component admits no code", res.failing_component.front(),
                                std::move(res.failing_component)};
  }
  return v;
}

// ---------------------------------------------------------------------------
// Deciders

namespace {

void require_normal(const Group& g, const Subgroup& h) {
  if (h.parent_order() != g.order()) throw Error(ErrorKind::NotASubgroup, "subgroup belongs to a different group");
  if (!h.is_normal()) throw Error(ErrorKind::NotNormal, "subgroup is not normal");
}

bool self_inverse(const Group& g, Element y) { return g.mul(y, y) == g.identity(); }

// First coset Hx (x ∉ H, x² ∈ H) without an involution, if any.
std::optional<Coset> coset_without_involution(const Group& g, const Subgroup& h) {
  for (auto& c : right_cosets(g, h)) {
    const Element x = c.representative;
    if (h.contains(x)) continue;
    if (coset_square_membership(g, h, x) && !coset_has_involution(g, h, x)) return std::move(c);
  }
  return std::nullopt;
}

Code validated(const Group& g, const Subgroup& h, Flavor flavor, Code code) {
  std::sort(code.vertices.begin(), code.vertices.end());
  if (!is_valid_code(build_graph(g, h, flavor), code))
    throw Error(ErrorKind::InternalInconsistency,
                std::string("constructed ") + std::string(to_string(code.kind)) + " code failed validation on the " +
                    std::string(to_string(flavor)) + " graph");
  return code;
}

Verdict negative(Flavor flavor, CodeKind kind, const char* rule, Certificate cert) {
  Verdict v;
  v.flavor = flavor;
  v.kind = kind;
  v.rule = rule;
  v.certificate = std::move(cert);
  return v;
}

Verdict positive(Flavor flavor, CodeKind kind, const char* rule, Code witness) {
  Verdict v;
  v.exists = true;
  v.flavor = flavor;
  v.kind = kind;
  v.rule = rule;
  v.witness = std::move(witness);
  return v;
}

}  // namespace

Code construct_perfect_code(const Group& g, const Subgroup& h) {
  require_normal(g, h);
  const std::size_t n = g.order();
  Code code{{}, CodeKind::Perfect};

  if (h.is_trivial()) {
    for (Element v = 0; v < n; ++v) code.vertices.push_back(v);
    return validated(g, h, Flavor::Plain, std::move(code));
  }
  if (h.order() == 2) {
    // Every vertex has degree 0 or 1: keep isolated vertices and the lower end of each edge.
    const auto graph = build_graph(g, h, Flavor::Plain);
    for (Element v = 0; v < n; ++v) {
      const std::size_t w = graph.neighbors(v).first();
      if (w == BitSet::npos || w > v) code.vertices.push_back(v);
    }
    return validated(g, h, Flavor::Plain, std::move(code));
  }
  if (auto bad = coset_without_involution(g, h))
    throw Error(ErrorKind::PreconditionViolated,
                "coset H" + g.label(bad->representative) + " has x² in H but no involution");

  const auto cosets = right_cosets(g, h);
  std::vector<std::size_t> coset_of(n);
  for (std::size_t k = 0; k < cosets.size(); ++k)
    for (Element m : cosets[k].members) coset_of[m] = k;
  std::vector<char> done(cosets.size(), 0);

  for (std::size_t k = 0; k < cosets.size(); ++k) {
    if (done[k]) continue;
    done[k] = 1;
    const Element x = cosets[k].representative;
    if (k == 0) {
      code.vertices.push_back(g.identity());
    } else if (coset_square_membership(g, h, x)) {
      const auto& ms = cosets[k].members;
      const auto u = std::find_if(ms.begin(), ms.end(), [&](Element y) { return self_inverse(g, y); });
      code.vertices.push_back(*u);
    } else {
      // Hx pairs with the coset holding x⁻¹; the pair contributes {x, x⁻¹}.
      const Element xinv = g.inverse(x);
      done[coset_of[xinv]] = 1;
      code.vertices.push_back(x);
      code.vertices.push_back(xinv);
    }
  }
  return validated(g, h, Flavor::Plain, std::move(code));
}

Verdict decide_perfect_code(const Group& g, const Subgroup& h) {
  require_normal(g, h);
  const auto F = Flavor::Plain;
  const auto K = CodeKind::Perfect;
  if (h.is_trivial()) return positive(F, K, rules::kTrivialSubgroup, construct_perfect_code(g, h));
  if (h.order() == 2) return positive(F, K, rules::kOrderTwo, construct_perfect_code(g, h));
  if (auto bad = coset_without_involution(g, h))
    return negative(F, K, rules::kSquareCosetWithoutInvolution,
                    Certificate{"coset Hx with x² in H contains no involution", bad->representative, bad->members});
  return positive(F, K, rules::kSquareCosetsHaveInvolutions, construct_perfect_code(g, h));
}

bool is_elementary_2_times_z3_pair(const Group& g, const Subgroup& h) {
  if (h.order() != 3 || !g.is_abelian()) return false;
  const auto type = abelian_type(g);
  for (const auto& [p, exps] : type.primary)
    if (p != 2 && p != 3) return false;
  const auto three = type.primary.find(3);
  if (three == type.primary.end() || three->second != std::vector<unsigned>{1}) return false;
  return type.sylow2_elementary() && h == type.odd_part;
}

Verdict decide_total_perfect_code(const Group& g, const Subgroup& h) {
  require_normal(g, h);
  const auto F = Flavor::Plain;
  const auto K = CodeKind::TotalPerfect;
  const std::size_t n = g.order();

  if (h.order() == 2) {
    for (Element x = 0; x < n; ++x) {
      if (h.contains(x) || !h.contains(g.mul(x, x))) continue;
      if (!self_inverse(g, x))
        return negative(F, K, rules::kNoTotalShape,
                        Certificate{"x outside H has x² in H but is not an involution", x, {}});
    }
    // The graph is a perfect matching, so every vertex is its own witness.
    Code all{{}, K};
    for (Element v = 0; v < n; ++v) all.vertices.push_back(v);
    return positive(F, K, rules::kOrderTwoSquaresAreInvolutions, validated(g, h, F, std::move(all)));
  }

  if (h.order() == 3 && is_elementary_2_times_z3_pair(g, h)) {
    // Each coset induces a path y - u - y⁻¹ around its unique self-inverse element u.
    Code code{{}, K};
    for (const auto& c : right_cosets(g, h)) {
      const auto u = std::find_if(c.members.begin(), c.members.end(), [&](Element y) { return self_inverse(g, y); });
      const auto leaf = std::find_if(c.members.begin(), c.members.end(), [&](Element y) { return y != *u; });
      code.vertices.push_back(*u);
      code.vertices.push_back(*leaf);
    }
    return positive(F, K, rules::kOrderThreeElementaryTimesZ3, validated(g, h, F, std::move(code)));
  }

  Certificate cert;
  if (h.order() == 3) {
    cert.reason = "order-3 subgroup but G is not Z2^n x Z3 with H its order-3 subgroup";
    for (Element x = 0; x < n && !cert.representative; ++x)
      if (!h.contains(x) && !h.contains(g.mul(x, x))) cert.representative = x;
  } else {
    cert.reason = "subgroup order " + std::to_string(h.order()) + " is neither 2 nor 3";
  }
  return negative(F, K, rules::kNoTotalShape, std::move(cert));
}

Verdict decide_perfect_code_extended(const Group& g, const Subgroup& h) {
  require_normal(g, h);
  const auto F = Flavor::Extended;
  const auto K = CodeKind::Perfect;
  const std::size_t n = g.order();

  if (h.is_trivial()) {
    // Γ⁺ is the inverse-pair matching plus isolated self-inverse vertices.
    Code code{{}, K};
    for (Element v = 0; v < n; ++v)
      if (v <= g.inverse(v)) code.vertices.push_back(v);
    return positive(F, K, rules::kTrivialSubgroup, validated(g, h, F, std::move(code)));
  }
  if (h.is_whole()) return positive(F, K, rules::kWholeGroup, validated(g, h, F, Code{{g.identity()}, K}));

  for (Element x = 0; x < n; ++x)
    if (!h.contains(g.mul(x, x)))
      return negative(F, K, rules::kSquareOutsideSubgroup, Certificate{"x² lies outside H", x, {}});
  return positive(F, K, rules::kSquaresInsideSubgroup,
                  validated(g, h, F, Code{right_transversal(g, h), K}));
}

Verdict decide_total_perfect_code_extended(const Group& g, const Subgroup& h) {
  require_normal(g, h);
  const auto F = Flavor::Extended;
  const auto K = CodeKind::TotalPerfect;
  if (g.order() % 2 == 1)
    return negative(F, K, rules::kOddGroupOrder, Certificate{"group order is odd", std::nullopt, {}});
  if (h.order() != 2)
    return negative(F, K, rules::kSubgroupOrderNotTwo,
                    Certificate{"subgroup order " + std::to_string(h.order()) + " is not 2", std::nullopt, {}});
  // Components are K_2 or K_{2,2}; the witness comes from the per-component search.
  auto code = find_total_perfect_code_bruteforce(build_graph(g, h, F));
  if (!code) throw Error(ErrorKind::InternalInconsistency, "no total perfect code found with |H| = 2");
  return positive(F, K, rules::kEvenGroupOrderTwoSubgroup, validated(g, h, F, std::move(*code)));
}

Verdict decide(const Group& g, const Subgroup& h, Flavor flavor, CodeKind kind) {
  if (flavor == Flavor::Plain)
    return kind == CodeKind::Perfect ? decide_perfect_code(g, h) : decide_total_perfect_code(g, h);
  return kind == CodeKind::Perfect ? decide_perfect_code_extended(g, h) : decide_total_perfect_code_extended(g, h);
}

// ---------------------------------------------------------------------------
// Cross-check

std::size_t CrossCheckReport::agreements() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](auto& e) { return e.agree; }));
}

std::size_t CrossCheckReport::disagreements() const { return entries.size() - agreements(); }

std::size_t CrossCheckReport::invalid_witnesses() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](auto& e) { return !e.witness_valid; }));
}

CrossCheckReport cross_check(const Group& g) {
  static constexpr std::pair<Flavor, CodeKind> kCases[] = {
      {Flavor::Plain, CodeKind::Perfect},
      {Flavor::Plain, CodeKind::TotalPerfect},
      {Flavor::Extended, CodeKind::Perfect},
      {Flavor::Extended, CodeKind::TotalPerfect},
  };
  constexpr std::size_t kPer = std::size(kCases);

  const auto normals = normal_subgroups(g);
  CrossCheckReport report;
  report.group = g.tag().to_string();
  report.order = g.order();
  report.subgroups = normals.size();
  report.entries.resize(normals.size() * kPer);

  std::vector<std::exception_ptr> errors(normals.size());
  const auto count = static_cast<std::int64_t>(normals.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < count; ++s) {
    try {
      const auto& h = normals[static_cast<std::size_t>(s)];
      for (std::size_t c = 0; c < kPer; ++c) {
        auto& e = report.entries[static_cast<std::size_t>(s) * kPer + c];
        const auto [flavor, kind] = kCases[c];
        const auto t0 = std::chrono::steady_clock::now();
        e.subgroup_index = static_cast<std::size_t>(s);
        e.subgroup = h.members();
        e.flavor = flavor;
        e.kind = kind;
        e.theorem = decide(g, h, flavor, kind);
        e.oracle = oracle_verdict(g, h, flavor, kind);
        e.agree = e.theorem.exists == e.oracle.exists;
        if (e.theorem.witness) e.witness_valid = is_valid_code(build_graph(g, h, flavor), *e.theorem.witness);
        e.micros = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
      }
    } catch (...) {
      errors[static_cast<std::size_t>(s)] = std::current_exception();
    }
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  return report;
}

}  // namespace sumgraph
