#include "sumgraph/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "sumgraph/kernels.hpp"

namespace sumgraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::OrderLimit: return "OrderLimit";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotDedekind: return "NotDedekind";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::size_t max_order_from_env() {
  if (const char* v = std::getenv("SUMGRAPH_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return kDefaultMaxOrder;
}

std::string GroupTag::to_string() const {
  switch (kind) {
    case Kind::Generic: return "Generic";
    case Kind::Cyclic: return "Cyclic(" + std::to_string(n) + ")";
    case Kind::Dihedral: return "Dihedral(" + std::to_string(n) + ")";
    case Kind::Dicyclic: return "Dicyclic(" + std::to_string(n) + ")";
    case Kind::Quaternion: return "Quaternion";
    case Kind::Product: {
      std::string s = "Product(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ",";
        s += factors[i].to_string();
      }
      return s + ")";
    }
  }
  return "Generic";
}

// ---------------------------------------------------------------------------
// Group

Group Group::from_table(const std::vector<std::vector<Element>>& table, std::vector<std::string> labels,
                        GroupTag tag, std::size_t max_order) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::BadParameter, "empty Cayley table");
  if (n > max_order)
    throw Error(ErrorKind::OrderLimit,
                "order " + std::to_string(n) + " exceeds the cap " + std::to_string(max_order));
  for (std::size_t i = 0; i < n; ++i)
    if (table[i].size() != n)
      throw Error(ErrorKind::BadParameter, "row " + std::to_string(i) + " has length " +
                                               std::to_string(table[i].size()) + ", expected " +
                                               std::to_string(n));

  Group g;
  g.n_ = n;
  g.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n)
        throw Error(ErrorKind::NotLatinSquare, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                   ") = " + std::to_string(table[i][j]) + " is out of range");
      g.table_[i * n + j] = table[i][j];
    }

  // Latin square: every row and column is a permutation.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const Element r = g.table_[i * n + j];
      const Element c = g.table_[j * n + i];
      if (row_seen[r]++)
        throw Error(ErrorKind::NotLatinSquare,
                    "row " + std::to_string(i) + " repeats " + std::to_string(r) + " at column " + std::to_string(j));
      if (col_seen[c]++)
        throw Error(ErrorKind::NotLatinSquare,
                    "column " + std::to_string(i) + " repeats " + std::to_string(c) + " at row " + std::to_string(j));
    }
  }

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element j = 0; j < n && ok; ++j) ok = g.table_[e * n + j] == j && g.table_[j * n + e] == j;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorKind::NoIdentity, "no element acts as a two-sided identity");
  g.identity_ = *identity;

  g.inverses_.resize(n);
  for (Element i = 0; i < n; ++i) {
    Element j = 0;
    while (g.table_[i * n + j] != g.identity_) ++j;  // exists: row i is a permutation
    if (g.table_[std::size_t{j} * n + i] != g.identity_)
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(i) + " has right inverse " + std::to_string(j) +
                                            " which is not a left inverse");
    g.inverses_[i] = j;
  }

  const auto bad = n >= 64 ? kernels::find_nonassociative_triple(g.table_, n)
                           : kernels::find_nonassociative_triple_serial(g.table_, n);
  if (bad)
    throw Error(ErrorKind::NotAssociative, "(x" + std::to_string(bad->a) + "·x" + std::to_string(bad->b) + ")·x" +
                                               std::to_string(bad->c) + " != x" + std::to_string(bad->a) + "·(x" +
                                               std::to_string(bad->b) + "·x" + std::to_string(bad->c) + ")");

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n)
    throw Error(ErrorKind::BadParameter,
                "expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n)
    throw Error(ErrorKind::BadParameter, "element labels are not distinct");
  g.labels_ = std::move(labels);
  g.tag_ = std::move(tag);

  g.abelian_ = true;
  for (std::size_t i = 0; i < n && g.abelian_; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.table_[i * n + j] != g.table_[j * n + i]) {
        g.abelian_ = false;
        break;
      }
  return g;
}

std::optional<Element> Group::find_label(std::string_view text) const {
  for (Element i = 0; i < n_; ++i)
    if (labels_[i] == text) return i;
  return std::nullopt;
}

std::vector<std::vector<Element>> Group::table() const {
  std::vector<std::vector<Element>> t(n_);
  for (std::size_t i = 0; i < n_; ++i) t[i].assign(table_.begin() + i * n_, table_.begin() + (i + 1) * n_);
  return t;
}

// ---------------------------------------------------------------------------
// Subgroup

namespace {

BitSet closure(const Group& g, BitSet start, std::span<const Element> gens) {
  std::vector<Element> list;
  start.set(g.identity());
  start.for_each([&](std::size_t i) { list.push_back(Element(i)); });
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Element s : gens) {
      const Element y = g.mul(list[i], s);
      if (!start.test(y)) {
        start.set(y);
        list.push_back(y);
      }
    }
  return start;
}

}  // namespace

Subgroup::Subgroup(const Group& g, BitSet mask) : mask_(std::move(mask)) {
  members_ = mask_.indices<Element>();
  normal_ = g.order() >= 64 ? kernels::is_conjugation_closed(g, mask_)
                            : kernels::is_conjugation_closed_serial(g, mask_);
}

Subgroup Subgroup::from_members(const Group& g, std::span<const Element> members) {
  BitSet m(g.order());
  for (Element a : members) {
    if (a >= g.order()) throw Error(ErrorKind::NotASubgroup, "element index " + std::to_string(a) + " out of range");
    m.set(a);
  }
  if (!m.test(g.identity())) throw Error(ErrorKind::NotASubgroup, "identity is missing");
  const auto list = m.indices<Element>();
  for (Element a : list) {
    if (!m.test(g.inverse(a)))
      throw Error(ErrorKind::NotASubgroup, "inverse of " + g.label(a) + " is missing");
    for (Element b : list)
      if (!m.test(g.mul(a, b)))
        throw Error(ErrorKind::NotASubgroup, "product " + g.label(a) + "·" + g.label(b) + " is missing");
  }
  return Subgroup(g, std::move(m));
}

Subgroup Subgroup::generated_by(const Group& g, std::span<const Element> gens) {
  for (Element a : gens)
    if (a >= g.order()) throw Error(ErrorKind::BadParameter, "generator index " + std::to_string(a) + " out of range");
  return Subgroup(g, closure(g, BitSet(g.order()), gens));
}

Subgroup Subgroup::trivial(const Group& g) { return generated_by(g, {}); }

Subgroup Subgroup::whole(const Group& g) {
  BitSet m(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) m.set(i);
  return Subgroup(g, std::move(m));
}

bool AbelianType::sylow2_elementary() const {
  auto it = primary.find(2);
  if (it == primary.end()) return true;
  return std::all_of(it->second.begin(), it->second.end(), [](unsigned e) { return e == 1; });
}

// ---------------------------------------------------------------------------
// Queries

Element power(const Group& g, Element a, std::uint64_t k) {
  Element result = g.identity();
  Element base = a;
  while (k) {
    if (k & 1) result = g.mul(result, base);
    base = g.mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t element_order(const Group& g, Element a) {
  std::uint64_t m = 1;
  for (Element x = a; x != g.identity(); x = g.mul(x, a)) ++m;
  return m;
}

std::vector<std::uint64_t> element_orders(const Group& g) {
  std::vector<std::uint64_t> out(g.order());
  for (Element a = 0; a < g.order(); ++a) out[a] = element_order(g, a);
  return out;
}

std::vector<Element> involutions(const Group& g) {
  std::vector<Element> out;
  for (Element a = 0; a < g.order(); ++a)
    if (a != g.identity() && g.mul(a, a) == g.identity()) out.push_back(a);
  return out;
}

std::vector<std::vector<Element>> conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  std::vector<char> done(n, 0);
  std::vector<std::vector<Element>> classes;
  for (Element a = 0; a < n; ++a) {
    if (done[a]) continue;
    BitSet cls(n);
    for (Element x = 0; x < n; ++x) cls.set(g.conjugate(a, x));
    auto members = cls.indices<Element>();
    for (Element m : members) done[m] = 1;
    classes.push_back(std::move(members));
  }
  return classes;
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  const auto classes = conjugacy_classes(g);
  std::vector<BitSet> found;
  found.push_back(closure(g, BitSet(g.order()), {}));
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const auto& cls : classes) {
      if (found[k].test(cls.front())) continue;
      const auto base = found[k].indices<Element>();
      std::vector<Element> gens(base.begin(), base.end());
      gens.insert(gens.end(), cls.begin(), cls.end());
      BitSet start = found[k];
      for (Element c : cls) start.set(c);
      BitSet next = closure(g, std::move(start), gens);
      if (std::find(found.begin(), found.end(), next) == found.end()) found.push_back(std::move(next));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& m : found) out.push_back(Subgroup::from_members(g, m.indices<Element>()));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

std::vector<Element> generators(const Group& g, const Subgroup& h) {
  std::vector<Element> gens;
  BitSet span = closure(g, BitSet(g.order()), {});
  for (Element a : h.members()) {
    if (span.test(a)) continue;
    gens.push_back(a);
    span = closure(g, std::move(span), gens);
  }
  return gens;
}

std::vector<Coset> right_cosets(const Group& g, const Subgroup& h) {
  if (h.parent_order() != g.order()) throw Error(ErrorKind::NotASubgroup, "subgroup belongs to a different group");
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<Coset> out;
  auto take = [&](Element x) {
    Coset c{x, {}};
    for (Element m : h.members()) c.members.push_back(g.mul(m, x));
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    for (Element m : c.members) seen[m] = 1;
    out.push_back(std::move(c));
  };
  take(g.identity());
  for (Element x = 0; x < n; ++x)
    if (!seen[x]) take(x);
  return out;
}

std::vector<Element> right_transversal(const Group& g, const Subgroup& h) {
  std::vector<Element> out;
  for (const auto& c : right_cosets(g, h)) out.push_back(c.representative);
  return out;
}

BitSet square_mask(const Group& g) {
  BitSet m(g.order());
  for (Element a = 0; a < g.order(); ++a) m.set(g.mul(a, a));
  return m;
}

std::vector<Element> squares(const Group& g) { return square_mask(g).indices<Element>(); }

bool coset_has_involution(const Group& g, const Subgroup& h, Element x) {
  for (Element m : h.members()) {
    const Element y = g.mul(m, x);
    if (y != g.identity() && g.mul(y, y) == g.identity()) return true;
  }
  return false;
}

bool coset_square_membership(const Group& g, const Subgroup& h, Element x) { return h.contains(g.mul(x, x)); }

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

unsigned exact_log(std::uint64_t value, std::uint64_t base) {
  unsigned k = 0;
  while (value > 1) {
    value /= base;
    ++k;
  }
  return k;
}

}  // namespace

AbelianType abelian_type(const Group& g) {
  if (!g.is_abelian()) throw Error(ErrorKind::NotAbelian, "abelian_type needs an abelian group");
  const auto orders = element_orders(g);
  const std::uint64_t n = g.order();

  std::map<std::uint64_t, std::vector<unsigned>> primary;
  for (std::uint64_t p : prime_factors(n)) {
    // ranks[k] = log_p #{g : g^(p^k) = e}; successive differences count factors of exponent >= k.
    std::vector<unsigned> ranks{0};
    std::uint64_t pk = 1;
    std::uint64_t p_part = 1;
    for (std::uint64_t m = n; m % p == 0; m /= p) p_part *= p;
    while (true) {
      pk *= p;
      const auto cnt = static_cast<std::uint64_t>(
          std::count_if(orders.begin(), orders.end(), [&](std::uint64_t o) { return pk % o == 0; }));
      ranks.push_back(exact_log(cnt, p));
      if (cnt == p_part) break;
    }
    std::vector<unsigned> exps;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
      const unsigned at_least_k = ranks[k] - ranks[k - 1];
      const unsigned at_least_next = k + 1 < ranks.size() ? ranks[k + 1] - ranks[k] : 0;
      for (unsigned c = 0; c < at_least_k - at_least_next; ++c) exps.push_back(static_cast<unsigned>(k));
    }
    std::sort(exps.begin(), exps.end());
    primary[p] = std::move(exps);
  }

  std::size_t width = 0;
  for (const auto& [p, e] : primary) width = std::max(width, e.size());
  std::vector<std::uint64_t> factors(width, 1);
  for (const auto& [p, exps] : primary) {
    // Right-align so the largest exponents land in the last invariant factor.
    const std::size_t off = width - exps.size();
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (unsigned k = 0; k < exps[i]; ++k) factors[off + i] *= p;
  }

  std::vector<Element> two, odd;
  for (Element a = 0; a < g.order(); ++a) {
    if (std::has_single_bit(orders[a])) two.push_back(a);
    if (orders[a] % 2 == 1) odd.push_back(a);
  }
  return AbelianType{std::move(factors), std::move(primary), Subgroup::from_members(g, two),
                     Subgroup::from_members(g, odd)};
}

bool is_dedekind(const Group& g) {
  if (g.is_abelian()) return true;
  for (Element a = 0; a < g.order(); ++a) {
    const Element gen[] = {a};
    if (!Subgroup::generated_by(g, gen).is_normal()) return false;
  }
  return true;
}

}  // namespace sumgraph
