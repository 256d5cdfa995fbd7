#ifndef DMSPEC_FIGURE_HPP
#define DMSPEC_FIGURE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "burnside.hpp"
#include "ideals.hpp"
#include "spectrum.hpp"

namespace dmspec {

using Edge = std::array<std::size_t, 2>;

/// Transitive reduction of a partial order given as a full relation
/// (rel(i, j) meaning i <= j). Edges are (lower, upper).
template<typename Rel>
std::vector<Edge> hasse_edges(std::size_t n, Rel &&rel)
{
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !rel(i, j))
        continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (k != i && k != j && rel(i, k) && rel(k, j))
          covered = false;
      if (covered)
        out.push_back({i, j});
    }
  return out;
}

/// Strict transitive closure of an edge list.
inline std::vector<Edge> transitive_closure(std::size_t n, std::vector<Edge> const &edges)
{
  std::vector<bool> reach(n * n, false);
  for (auto [a, b] : edges)
    reach[a * n + b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k * n + j])
            reach[i * n + j] = true;
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && reach[i * n + j])
        out.push_back({i, j});
  return out;
}

struct FigureClass
{
  std::string label;
  std::size_t order = 0;
  std::size_t class_size = 0;

  bool operator==(FigureClass const &) const = default;
};

struct FigurePoint
{
  std::string class_label;
  std::string slot;

  std::string token() const { return "P(" + class_label + "," + slot + ")"; }

  bool operator==(FigurePoint const &) const = default;
};

/// Everything a rendering needs, independent of the group machinery.
/// This is also the JSON document (schema 1).
struct FigureDocument
{
  int schema = 1;
  std::string target;
  std::string group_name;
  std::size_t group_order = 0;
  std::vector<FigureClass> classes;
  std::optional<unsigned> local;
  std::optional<std::size_t> subgroup_count;

  std::vector<FigurePoint> points;
  std::vector<Edge> specialization; // (i, j): point i lies in the closure of point j
  std::vector<Edge> hasse;          // transitive reduction of `specialization`

  std::optional<std::vector<std::vector<std::size_t>>> gluing; // rho-fibers
  std::optional<std::vector<Edge>> quotient_hasse;             // over gluing indices
  std::optional<std::vector<std::string>> chromatic;           // per point
  std::optional<std::uint64_t> admissible_count;
  std::optional<std::vector<std::vector<std::string>>> admissible;

  bool operator==(FigureDocument const &) const = default;
};

namespace detail {

inline FigureDocument figure_header(std::string target, SubgroupLattice const &lat)
{
  FigureDocument doc;
  doc.target = std::move(target);
  doc.group_name = lat.group()->name();
  doc.group_order = lat.group()->order();
  for (auto const &c : lat.classes())
    doc.classes.push_back({c.label, c.order, c.class_size});
  return doc;
}

inline void add_space(FigureDocument &doc, SpecSpace const &space)
{
  doc.local = space.local_prime();
  for (auto const &pt : space.points())
    doc.points.push_back({space.class_label(pt.class_index), pt.slot.token()});
  for (std::size_t q = 0; q < space.size(); ++q)
    for (std::size_t p = 0; p < space.size(); ++p)
      if (q != p && space.specializes(q, p))
        doc.specialization.push_back({q, p});
  doc.hasse = hasse_edges(space.size(), [&](std::size_t a, std::size_t b) {
    return space.specializes(a, b);
  });
}

} // namespace detail

inline FigureDocument spectrum_figure(SpecSpace const &space)
{
  auto doc = detail::figure_header("spectrum", *space.lattice());
  detail::add_space(doc, space);
  return doc;
}

inline FigureDocument subgroups_figure(SubgroupLattice const &lat)
{
  auto doc = detail::figure_header("subgroups", lat);
  doc.subgroup_count = lat.subgroups().size();
  return doc;
}

/// `target` is "burnside" or "compare"; `with_chromatic` adds the image of
/// every point in the height-{0, infinity} slice.
inline FigureDocument burnside_figure(BurnsideSpace const &bs, std::string target = "burnside",
                                      bool with_chromatic = false)
{
  auto const &space = bs.source();
  auto doc = detail::figure_header(std::move(target), *space.lattice());
  detail::add_space(doc, space);
  std::vector<std::vector<std::size_t>> gluing;
  for (auto const &b : bs.points())
    gluing.push_back(b.members);
  doc.gluing = std::move(gluing);

  std::vector<PointSet> closures;
  for (std::size_t b = 0; b < bs.size(); ++b)
    closures.push_back(bs.closure_preimage(b));
  doc.quotient_hasse = hasse_edges(bs.size(), [&](std::size_t a, std::size_t b) {
    return closures[b].contains(bs.point(a).canonical());
  });

  if (with_chromatic) {
    std::vector<std::string> chrom;
    for (std::size_t i = 0; i < space.size(); ++i)
      chrom.push_back(chromatic_image(space, i).token(space));
    doc.chromatic = std::move(chrom);
  }
  return doc;
}

inline FigureDocument ideals_figure(AdmissibleEnumeration const &en, bool list)
{
  auto doc = detail::figure_header("ideals", *en.space.lattice());
  detail::add_space(doc, en.space);
  doc.admissible_count = en.count;
  if (list && !en.count_only) {
    std::vector<std::vector<std::string>> sets;
    for (auto const &s : en.sets) {
      std::vector<std::string> tokens;
      for (auto i : s.members.indices())
        tokens.push_back(en.space.token(i));
      sets.push_back(std::move(tokens));
    }
    doc.admissible = std::move(sets);
  }
  return doc;
}

// ---------------------------------------------------------------- JSON

inline nlohmann::ordered_json to_json(FigureDocument const &doc)
{
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = doc.schema;
  j["target"] = doc.target;
  ordered_json classes = ordered_json::array();
  for (auto const &c : doc.classes)
    classes.push_back({{"label", c.label}, {"order", c.order}, {"class_size", c.class_size}});
  j["group"] = {{"name", doc.group_name}, {"order", doc.group_order}, {"classes", classes}};
  if (doc.local)
    j["local"] = *doc.local;
  if (doc.subgroup_count)
    j["subgroup_count"] = *doc.subgroup_count;
  ordered_json points = ordered_json::array();
  for (auto const &p : doc.points)
    points.push_back({{"class", p.class_label}, {"slot", p.slot}});
  j["points"] = points;
  j["specialization"] = doc.specialization;
  j["hasse"] = doc.hasse;
  if (doc.gluing)
    j["gluing"] = *doc.gluing;
  if (doc.quotient_hasse)
    j["quotient_hasse"] = *doc.quotient_hasse;
  if (doc.chromatic)
    j["chromatic"] = *doc.chromatic;
  if (doc.admissible_count)
    j["admissible_count"] = *doc.admissible_count;
  if (doc.admissible)
    j["admissible"] = *doc.admissible;
  return j;
}

inline std::string to_json_string(FigureDocument const &doc)
{
  return to_json(doc).dump(2) + "\n";
}

inline FigureDocument figure_from_json(nlohmann::ordered_json const &j)
{
  FigureDocument doc;
  doc.schema = j.at("schema").get<int>();
  if (doc.schema != 1)
    throw ParseError("unsupported figure schema " + std::to_string(doc.schema));
  doc.target = j.at("target").get<std::string>();
  auto const &g = j.at("group");
  doc.group_name = g.at("name").get<std::string>();
  doc.group_order = g.at("order").get<std::size_t>();
  for (auto const &c : g.at("classes"))
    doc.classes.push_back({c.at("label").get<std::string>(), c.at("order").get<std::size_t>(),
                           c.at("class_size").get<std::size_t>()});
  if (j.contains("local"))
    doc.local = j.at("local").get<unsigned>();
  if (j.contains("subgroup_count"))
    doc.subgroup_count = j.at("subgroup_count").get<std::size_t>();
  for (auto const &p : j.at("points"))
    doc.points.push_back({p.at("class").get<std::string>(), p.at("slot").get<std::string>()});
  doc.specialization = j.at("specialization").get<std::vector<Edge>>();
  doc.hasse = j.at("hasse").get<std::vector<Edge>>();
  if (j.contains("gluing"))
    doc.gluing = j.at("gluing").get<std::vector<std::vector<std::size_t>>>();
  if (j.contains("quotient_hasse"))
    doc.quotient_hasse = j.at("quotient_hasse").get<std::vector<Edge>>();
  if (j.contains("chromatic"))
    doc.chromatic = j.at("chromatic").get<std::vector<std::string>>();
  if (j.contains("admissible_count"))
    doc.admissible_count = j.at("admissible_count").get<std::uint64_t>();
  if (j.contains("admissible"))
    doc.admissible = j.at("admissible").get<std::vector<std::vector<std::string>>>();
  return doc;
}

inline FigureDocument figure_from_json_string(std::string const &text)
{
  try {
    return figure_from_json(nlohmann::ordered_json::parse(text));
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(std::string("bad figure document: ") + e.what());
  }
}

// ---------------------------------------------------------------- DOT

namespace detail {

inline std::string const &class_color(std::size_t class_index)
{
  static std::vector<std::string> const palette{
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02",
    "#a6761d", "#666666", "#1f78b4", "#b2df8a", "#fb9a99", "#cab2d6"};
  return palette[class_index % palette.size()];
}

inline std::size_t class_index_of(FigureDocument const &doc, std::string const &label)
{
  for (std::size_t i = 0; i < doc.classes.size(); ++i)
    if (doc.classes[i].label == label)
      return i;
  return 0;
}

inline std::string quote(std::string const &s)
{
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace detail

/// One node per point; edge Q -> P when Q is an immediate specialization
/// of P. Burnside/compare documents add the quotient as a second cluster
/// with dashed rho arrows.
inline std::string to_dot(FigureDocument const &doc, bool color = true)
{
  std::ostringstream os;
  os << "digraph " << detail::quote(doc.target + " " + doc.group_name) << " {\n";
  os << "  rankdir=BT;\n  node [shape=ellipse];\n";
  auto node_attrs = [&](std::string const &label, std::string const &class_label) {
    std::string attrs = "label=" + detail::quote(label);
    if (color)
      attrs += ", color=" + detail::quote(detail::class_color(detail::class_index_of(doc, class_label)));
    return attrs;
  };

  bool quotient = doc.gluing.has_value();
  std::string const prefix = quotient ? "s" : "n";
  if (quotient)
    os << "  subgraph cluster_source {\n    label=\"spectrum\";\n";
  for (std::size_t i = 0; i < doc.points.size(); ++i)
    os << (quotient ? "    " : "  ") << prefix << i << " ["
       << node_attrs(doc.points[i].token(), doc.points[i].class_label) << "];\n";
  for (auto [q, p] : doc.hasse)
    os << (quotient ? "    " : "  ") << prefix << q << " -> " << prefix << p << ";\n";

  if (quotient) {
    os << "  }\n  subgraph cluster_quotient {\n    label=\"burnside\";\n";
    auto const &gl = *doc.gluing;
    for (std::size_t b = 0; b < gl.size(); ++b) {
      auto const &canon = doc.points[gl[b].front()];
      os << "    b" << b << " [" << node_attrs("rho[" + canon.token() + "]", canon.class_label)
         << "];\n";
    }
    if (doc.quotient_hasse)
      for (auto [a, b] : *doc.quotient_hasse)
        os << "    b" << a << " -> b" << b << ";\n";
    os << "  }\n";
    for (std::size_t b = 0; b < gl.size(); ++b)
      for (auto i : gl[b])
        os << "  s" << i << " -> b" << b << " [style=dashed, arrowhead=open];\n";
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------- ASCII

namespace detail {

inline std::vector<std::string> slot_rows(FigureDocument const &doc)
{
  // (0) on top, then explicit primes ascending, then q*
  std::vector<std::string> rows;
  for (auto const &p : doc.points)
    if (std::find(rows.begin(), rows.end(), p.slot) == rows.end())
      rows.push_back(p.slot);
  std::sort(rows.begin(), rows.end(), [](std::string const &a, std::string const &b) {
    return *PrimeSlot::parse(a) < *PrimeSlot::parse(b);
  });
  return rows;
}

inline std::string pad(std::string s, std::size_t width)
{
  if (s.size() < width)
    s.append(width - s.size(), ' ');
  return s;
}

inline void ascii_grid(std::ostream &os, FigureDocument const &doc,
                       std::vector<std::string> const &cells_per_point,
                       std::vector<bool> const &shown)
{
  auto rows = slot_rows(doc);
  std::size_t width = 0;
  for (std::size_t i = 0; i < cells_per_point.size(); ++i)
    width = std::max(width, cells_per_point[i].size());
  width += 2;
  for (auto const &slot : rows) {
    std::string line = pad("(" + slot + ")", 6);
    for (auto const &c : doc.classes) {
      std::string cell;
      for (std::size_t i = 0; i < doc.points.size(); ++i)
        if (doc.points[i].slot == slot && doc.points[i].class_label == c.label && shown[i])
          cell = cells_per_point[i];
      line += pad(cell.empty() ? "." : cell, width);
    }
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    os << line << "\n";
  }
}

} // namespace detail

inline std::string to_ascii(FigureDocument const &doc)
{
  std::ostringstream os;
  os << doc.target << " of " << doc.group_name << " (order " << doc.group_order << ")";
  if (doc.local)
    os << ", localised at " << *doc.local;
  os << "\n";

  if (doc.target == "subgroups") {
    os << "subgroups: " << doc.subgroup_count.value_or(0) << ", conjugacy classes: "
       << doc.classes.size() << "\n";
    std::size_t width = 5;
    for (auto const &c : doc.classes)
      width = std::max(width, c.label.size() + 2);
    os << detail::pad("class", width) << "order  class_size\n";
    for (auto const &c : doc.classes)
      os << detail::pad(c.label, width) << detail::pad(std::to_string(c.order), 7)
         << c.class_size << "\n";
    return os.str();
  }

  std::vector<std::string> tokens;
  for (auto const &p : doc.points)
    tokens.push_back(p.token());
  std::vector<bool> all(doc.points.size(), true);

  bool source_grid = doc.target != "burnside";
  if (source_grid) {
    detail::ascii_grid(os, doc, tokens, all);
    os << "specialization (Q -> P: Q lies in the closure of P):\n";
    for (auto [q, p] : doc.hasse)
      os << "  " << tokens[q] << " -> " << tokens[p] << "\n";
  }

  if (doc.gluing) {
    if (source_grid)
      os << "\n      | rho\n      v\n";
    std::vector<std::string> cells(doc.points.size());
    std::vector<bool> shown(doc.points.size(), false);
    for (auto const &fiber : *doc.gluing) {
      auto canon = fiber.front();
      shown[canon] = true;
      cells[canon] = "rho[" + tokens[canon] + "]";
      if (fiber.size() > 1) {
        std::string members;
        for (auto i : fiber)
          members += (members.empty() ? "" : ",") + doc.points[i].class_label;
        cells[canon] += "{" + members + "}";
      }
    }
    detail::ascii_grid(os, doc, cells, shown);
    if (doc.quotient_hasse && !doc.quotient_hasse->empty()) {
      os << "quotient specialization:\n";
      for (auto [a, b] : *doc.quotient_hasse)
        os << "  rho[" << tokens[(*doc.gluing)[a].front()] << "] -> rho["
           << tokens[(*doc.gluing)[b].front()] << "]\n";
    }
    std::size_t glued = 0;
    for (auto const &fiber : *doc.gluing)
      glued += fiber.size() > 1 ? 1 : 0;
    os << "glued fibers: " << glued << " of " << doc.gluing->size() << " points\n";
  }

  if (doc.chromatic) {
    os << "\nchromatic image (height 0 and infinity slice):\n";
    for (std::size_t i = 0; i < tokens.size(); ++i)
      os << "  " << tokens[i] << " |-> " << (*doc.chromatic)[i] << "\n";
  }

  if (doc.admissible_count) {
    os << "admissible subsets: " << *doc.admissible_count << "\n";
    if (doc.admissible)
      for (auto const &set : *doc.admissible) {
        os << "  {";
        for (std::size_t i = 0; i < set.size(); ++i)
          os << (i ? ", " : "") << set[i];
        os << "}\n";
      }
  }
  return os.str();
}

} // namespace dmspec

#endif
