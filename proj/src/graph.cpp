#include "sumgraph/graph.hpp"

#include <algorithm>

#include "sumgraph/kernels.hpp"

namespace sumgraph {

std::string_view to_string(Flavor f) { return f == Flavor::Plain ? "plain" : "extended"; }

std::string_view to_string(BlockShape s) {
  switch (s) {
    case BlockShape::Complete: return "complete";
    case BlockShape::CompleteBipartite: return "complete-bipartite";
    case BlockShape::CompleteMinusMatching: return "complete-minus-matching";
    case BlockShape::BipartiteMinusPerfectMatching: return "bipartite-minus-perfect-matching";
    case BlockShape::Other: return "other";
  }
  return "other";
}

std::size_t SumGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<std::pair<Element, Element>> SumGraph::edges() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element u = 0; u < rows_.size(); ++u)
    for (std::size_t v = rows_[u].next(u + 1); v != BitSet::npos; v = rows_[u].next(v + 1))
      out.emplace_back(u, Element(v));
  return out;
}

SumGraph build_graph(const Group& g, const Subgroup& h, Flavor flavor) {
  if (h.parent_order() != g.order()) throw Error(ErrorKind::NotASubgroup, "subgroup belongs to a different group");
  if (!h.is_normal()) throw Error(ErrorKind::NotNormal, "sum graphs need a normal subgroup");
  BitSet targets = h.mask();
  if (flavor == Flavor::Plain) targets.reset(g.identity());
  auto rows = g.order() >= 128 ? kernels::product_adjacency(g, targets) : kernels::product_adjacency_serial(g, targets);
  return SumGraph(std::move(rows), flavor, h.members());
}

std::vector<std::vector<Element>> components(const SumGraph& graph) {
  const std::size_t n = graph.vertex_count();
  BitSet seen(n);
  std::vector<std::vector<Element>> out;
  for (Element s = 0; s < n; ++s) {
    if (seen.test(s)) continue;
    BitSet comp(n);
    comp.set(s);
    std::vector<Element> stack{s};
    while (!stack.empty()) {
      const Element v = stack.back();
      stack.pop_back();
      graph.neighbors(v).for_each([&](std::size_t w) {
        if (!comp.test(w)) {
          comp.set(w);
          stack.push_back(Element(w));
        }
      });
    }
    seen |= comp;
    out.push_back(comp.indices<Element>());
  }
  return out;
}

namespace {

BitSet mask_of(std::size_t n, const std::vector<Element>& vs) {
  BitSet m(n);
  for (Element v : vs) m.set(v);
  return m;
}

// Returns a missing pair if the vertex set does not induce a complete graph.
std::optional<std::pair<Element, Element>> complete_gap(const SumGraph& gr, const std::vector<Element>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!gr.adjacent(vs[i], vs[j])) return std::make_pair(vs[i], vs[j]);
  return std::nullopt;
}

// Complete bipartite check between the two given parts (no edges inside a part).
std::optional<std::pair<Element, Element>> bipartite_gap(const SumGraph& gr, const std::vector<Element>& p,
                                                         const std::vector<Element>& q) {
  for (const auto* part : {&p, &q})
    for (std::size_t i = 0; i < part->size(); ++i)
      for (std::size_t j = i + 1; j < part->size(); ++j)
        if (gr.adjacent((*part)[i], (*part)[j])) return std::make_pair((*part)[i], (*part)[j]);
  for (Element a : p)
    for (Element b : q)
      if (!gr.adjacent(a, b)) return std::make_pair(a, b);
  return std::nullopt;
}

// Two-colouring of a connected vertex set; nullopt when an odd cycle exists.
std::optional<std::pair<std::vector<Element>, std::vector<Element>>> two_colour(const SumGraph& gr,
                                                                                const std::vector<Element>& vs) {
  const std::size_t n = gr.vertex_count();
  std::vector<int> colour(n, -1);
  std::vector<Element> stack{vs.front()};
  colour[vs.front()] = 0;
  while (!stack.empty()) {
    const Element v = stack.back();
    stack.pop_back();
    bool clash = false;
    gr.neighbors(v).for_each([&](std::size_t w) {
      if (colour[w] < 0) {
        colour[w] = 1 - colour[v];
        stack.push_back(Element(w));
      } else if (colour[w] == colour[v]) {
        clash = true;
      }
    });
    if (clash) return std::nullopt;
  }
  std::pair<std::vector<Element>, std::vector<Element>> parts;
  for (Element v : vs) (colour[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

std::vector<Element> coset_of(const Group& g, const Subgroup& h, Element x) {
  std::vector<Element> c;
  for (Element m : h.members()) c.push_back(g.mul(m, x));
  std::sort(c.begin(), c.end());
  return c;
}

BlockRecord classify_extended_component(const Group& g, const Subgroup& h, const SumGraph& gr,
                                        const std::vector<Element>& comp) {
  BlockRecord rec;
  rec.vertices = comp;
  rec.is_component = true;
  const Element x = comp.front();
  rec.square_inside = h.contains(g.mul(x, x));
  const auto hx = coset_of(g, h, x);
  const auto hxinv = coset_of(g, h, g.inverse(x));
  rec.cosets.push_back(hx.front());

  const std::size_t t = h.order();
  if (rec.square_inside) {
    if (comp != hx) {
      rec.note = "component is not the coset Hx";
      return rec;
    }
    if (auto gap = complete_gap(gr, comp)) {
      rec.witness = gap;
      rec.note = "missing edge inside a square-inside coset";
      return rec;
    }
    rec.shape = BlockShape::Complete;
    rec.part_size = t;
    return rec;
  }

  rec.cosets.push_back(hxinv.front());
  std::vector<Element> both = hx;
  both.insert(both.end(), hxinv.begin(), hxinv.end());
  std::sort(both.begin(), both.end());
  if (comp != both) {
    rec.note = "component is not Hx ∪ Hx⁻¹";
    return rec;
  }
  // The graph-level bipartition must coincide with the coset split.
  auto parts = two_colour(gr, comp);
  if (!parts) {
    rec.note = "component has an odd cycle";
    return rec;
  }
  const bool split_matches = (parts->first == hx && parts->second == hxinv) ||
                             (parts->first == hxinv && parts->second == hx);
  if (!split_matches) {
    rec.note = "bipartition differs from the coset split";
    return rec;
  }
  if (auto gap = bipartite_gap(gr, hx, hxinv)) {
    rec.witness = gap;
    rec.note = "not complete bipartite";
    return rec;
  }
  rec.shape = BlockShape::CompleteBipartite;
  rec.part_size = t;
  return rec;
}

}  // namespace

bool StructureReport::extended_ok() const {
  return std::all_of(extended.begin(), extended.end(), [&](const BlockRecord& r) {
    return r.shape != BlockShape::Other && r.part_size == subgroup_order;
  });
}

bool StructureReport::plain_ok() const {
  return std::all_of(plain.begin(), plain.end(), [&](const BlockRecord& r) {
    return r.shape != BlockShape::Other && r.part_size == subgroup_order;
  });
}

StructureReport verify_structure(const Group& g, const Subgroup& h) {
  const auto extended = build_graph(g, h, Flavor::Extended);
  const auto plain = build_graph(g, h, Flavor::Plain);
  const std::size_t n = g.order();

  StructureReport report;
  report.subgroup_order = h.order();
  for (const auto& comp : components(extended))
    report.extended.push_back(classify_extended_component(g, h, extended, comp));

  const auto plain_components = components(plain);
  const BitSet sq = square_mask(g);
  BitSet used(n);
  for (const auto& coset : right_cosets(g, h)) {
    const Element x = coset.representative;
    if (used.test(x)) continue;
    BlockRecord rec;
    rec.square_inside = h.contains(g.mul(x, x));
    rec.part_size = h.order();
    rec.cosets.push_back(x);
    const auto& hx = coset.members;
    std::vector<Element> hxinv;
    if (rec.square_inside) {
      rec.vertices = hx;
    } else {
      hxinv = coset_of(g, h, g.inverse(x));
      rec.cosets.push_back(hxinv.front());
      rec.vertices = hx;
      rec.vertices.insert(rec.vertices.end(), hxinv.begin(), hxinv.end());
      std::sort(rec.vertices.begin(), rec.vertices.end());
    }
    for (Element v : rec.vertices) used.set(v);

    const BitSet block = mask_of(n, rec.vertices);
    const BitSet part = mask_of(n, hx);
    for (Element v : rec.vertices) {
      if (rec.witness) break;
      const std::size_t out = [&] {
        for (std::size_t w = plain.neighbors(v).first(); w != BitSet::npos; w = plain.neighbors(v).next(w + 1))
          if (!block.test(w)) return w;
        return BitSet::npos;
      }();
      if (out != BitSet::npos) {
        rec.witness = std::make_pair(v, Element(out));
        rec.note = "edge leaves the block";
      }
    }
    // Expected: u ~ v exactly when they are not inverse to each other, and (for
    // coset pairs) they lie in different cosets.
    for (std::size_t i = 0; i < rec.vertices.size() && !rec.witness; ++i)
      for (std::size_t j = i + 1; j < rec.vertices.size() && !rec.witness; ++j) {
        const Element u = rec.vertices[i], v = rec.vertices[j];
        const bool same_side = part.test(u) == part.test(v);
        const bool expected = g.mul(u, v) != g.identity() && (rec.square_inside || !same_side);
        if (plain.adjacent(u, v) != expected) {
          rec.witness = std::make_pair(u, v);
          rec.note = expected ? "missing edge" : "unexpected edge";
        }
      }
    if (!rec.witness)
      rec.shape = rec.square_inside ? BlockShape::CompleteMinusMatching : BlockShape::BipartiteMinusPerfectMatching;
    rec.is_component = std::find(plain_components.begin(), plain_components.end(), rec.vertices) !=
                       plain_components.end();

    if (rec.square_inside) {
      for (Element y : rec.vertices) {
        std::size_t inside = 0;
        plain.neighbors(y).for_each([&](std::size_t w) { inside += block.test(w) ? 1 : 0; });
        const bool all = inside + 1 == rec.vertices.size();
        if (all != sq.test(y)) report.divergences.push_back({y, x, sq.test(y), all});
      }
    }
    report.plain.push_back(std::move(rec));
  }
  return report;
}

}  // namespace sumgraph
