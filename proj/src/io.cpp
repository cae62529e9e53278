#include "sumgraph/io.hpp"

#include <array>
#include <sstream>

namespace sumgraph {

namespace {

GroupTag::Kind kind_from_name(const std::string& s) {
  using K = GroupTag::Kind;
  if (s == "Cyclic") return K::Cyclic;
  if (s == "Dihedral") return K::Dihedral;
  if (s == "Dicyclic") return K::Dicyclic;
  if (s == "Quaternion") return K::Quaternion;
  if (s == "Product") return K::Product;
  if (s == "Generic") return K::Generic;
  throw Error(ErrorKind::BadParameter, "unknown tag kind '" + s + "'");
}

const char* kind_name(GroupTag::Kind k) {
  using K = GroupTag::Kind;
  switch (k) {
    case K::Cyclic: return "Cyclic";
    case K::Dihedral: return "Dihedral";
    case K::Dicyclic: return "Dicyclic";
    case K::Quaternion: return "Quaternion";
    case K::Product: return "Product";
    case K::Generic: return "Generic";
  }
  return "Generic";
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Element resolve_label(const Group& g, std::string_view raw) {
  if (auto x = g.find_label(raw)) return *x;
  const std::string text(raw);
  if (text == "e" || text == "1") return g.identity();
  std::string alias;
  if (text == "a") alias = "a^1";
  if (text == "ab") alias = "a^1b";
  if (text == "b") alias = g.tag().kind == GroupTag::Kind::Dicyclic ? "a^" + std::to_string(2 * g.tag().n) + "b" : "a^0b";
  if (!alias.empty())
    if (auto x = g.find_label(alias)) return *x;
  throw Error(ErrorKind::BadParameter, "no element labelled '" + text + "'");
}

}  // namespace

Subgroup resolve_subgroup(const Group& g, std::string_view selector) {
  if (selector.starts_with("gen:")) {
    std::vector<Element> gens;
    std::string_view rest = selector.substr(4);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto item = rest.substr(0, comma);
      if (item.empty()) throw Error(ErrorKind::BadParameter, "empty label in selector");
      gens.push_back(resolve_label(g, item));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (gens.empty()) throw Error(ErrorKind::BadParameter, "selector 'gen:' needs at least one label");
    return Subgroup::generated_by(g, gens);
  }
  if (selector.starts_with("index:")) {
    const std::string digits(selector.substr(6));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::BadParameter, "selector 'index:' needs a non-negative integer");
    auto normals = normal_subgroups(g);
    const auto k = std::stoull(digits);
    if (k >= normals.size())
      throw Error(ErrorKind::BadParameter, "index " + digits + " out of range (" + std::to_string(normals.size()) +
                                               " normal subgroups)");
    return normals[k];
  }
  throw Error(ErrorKind::BadParameter, "subgroup selector must be gen:<labels> or index:<k>");
}

Json tag_to_json(const GroupTag& tag) {
  Json j{{"kind", kind_name(tag.kind)}};
  if (tag.kind == GroupTag::Kind::Product) {
    j["factors"] = Json::array();
    for (const auto& f : tag.factors) j["factors"].push_back(tag_to_json(f));
  } else if (tag.kind != GroupTag::Kind::Generic) {
    j["n"] = tag.n;
  }
  return j;
}

GroupTag tag_from_json(const Json& j) {
  if (j.is_null()) return {};
  if (!j.is_object() || !j.contains("kind")) throw Error(ErrorKind::BadParameter, "tag must be an object with 'kind'");
  GroupTag tag;
  tag.kind = kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("n")) tag.n = j.at("n").get<std::uint32_t>();
  if (j.contains("factors"))
    for (const auto& f : j.at("factors")) tag.factors.push_back(tag_from_json(f));
  return tag;
}

Json group_to_json(const Group& g) {
  return Json{{"order", g.order()}, {"labels", g.labels()}, {"table", g.table()}, {"tag", tag_to_json(g.tag())}};
}

Group group_from_json(const Json& j, std::size_t max_order) {
  try {
    const auto order = j.at("order").get<std::size_t>();
    auto table = j.at("table").get<std::vector<std::vector<Element>>>();
    if (table.size() != order)
      throw Error(ErrorKind::BadParameter, "'order' says " + std::to_string(order) + " but the table has " +
                                               std::to_string(table.size()) + " rows");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    GroupTag tag = j.contains("tag") ? tag_from_json(j.at("tag")) : GroupTag{};
    return Group::from_table(table, std::move(labels), std::move(tag), max_order);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadParameter, std::string("malformed group document: ") + e.what());
  }
}

Json verdict_to_json(const Group& g, const Subgroup& h, const Verdict& v, bool include_witness) {
  Json j;
  j["group"] = Json{{"tag", g.tag().to_string()}, {"order", g.order()}};
  j["subgroup"] = h.members();
  j["flavor"] = std::string(to_string(v.flavor));
  j["kind"] = std::string(to_string(v.kind));
  j["exists"] = v.exists;
  j["rule"] = v.rule;
  j["witness"] = include_witness && v.witness ? Json(v.witness->vertices) : Json(nullptr);
  if (v.certificate) {
    Json c{{"reason", v.certificate->reason}};
    c["representative"] = v.certificate->representative ? Json(*v.certificate->representative) : Json(nullptr);
    c["elements"] = v.certificate->elements;
    j["certificate"] = std::move(c);
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

Json subgroup_to_json(const Group& g, const Subgroup& h, std::size_t index) {
  Json labels = Json::array(), gens = Json::array();
  for (Element m : h.members()) labels.push_back(g.label(m));
  for (Element x : generators(g, h)) gens.push_back(g.label(x));
  return Json{{"index", index}, {"order", h.order()}, {"members", h.members()}, {"labels", labels},
              {"generators", gens}};
}

Json graph_to_json(const Group& g, const SumGraph& graph) {
  Json adj = Json::array();
  for (Element v = 0; v < graph.vertex_count(); ++v) adj.push_back(graph.neighbors(v).indices<Element>());
  return Json{{"group", Json{{"tag", g.tag().to_string()}, {"order", g.order()}}},
              {"subgroup", graph.subgroup()},
              {"flavor", std::string(to_string(graph.flavor()))},
              {"vertex_count", graph.vertex_count()},
              {"edge_count", graph.edge_count()},
              {"labels", g.labels()},
              {"adjacency", std::move(adj)}};
}

std::string graph_to_dot(const Group& g, const SumGraph& graph, bool colour_components) {
  static constexpr std::array<const char*, 8> kPalette = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                                          "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};
  std::ostringstream out;
  out << "graph " << (graph.flavor() == Flavor::Plain ? "subgroup_sum" : "extended_subgroup_sum") << " {\n";
  std::vector<std::size_t> comp_of(graph.vertex_count(), 0);
  if (colour_components) {
    const auto comps = components(graph);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (Element v : comps[c]) comp_of[v] = c;
  }
  for (Element v = 0; v < graph.vertex_count(); ++v) {
    out << "  " << v << " [label=" << dot_quote(g.label(v));
    if (colour_components)
      out << ", style=filled, fillcolor=\"" << kPalette[comp_of[v] % kPalette.size()] << "\"";
    out << "];\n";
  }
  for (const auto& [u, v] : graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace sumgraph
