#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "action.hpp"
#include "error.hpp"
#include "fincat.hpp"
#include "groups.hpp"
#include "quintet.hpp"
#include "report.hpp"
#include "transform.hpp"
#include "xmod.hpp"

namespace xmodcat {

using json = nlohmann::json;
namespace fs = std::filesystem;

inline std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json read_json_file(const fs::path& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Format, path.string() + ": " + e.what());
  }
}

inline void write_text_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << text;
}

namespace detail {

[[noreturn]] inline void bad_format(const std::string& what) { throw Error(ErrorKind::Format, what); }

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_format(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline Index index_of(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad_format(where + ": expected a non-negative integer");
  return j.get<Index>();
}

inline std::vector<Index> index_list(const json& j, const std::string& where) {
  if (!j.is_array()) bad_format(where + ": expected an array");
  std::vector<Index> v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(index_of(x, where));
  return v;
}

/// A nested object, or a string naming a JSON file relative to `base`.
inline json inline_or_file(const json& j, const fs::path& base) {
  if (j.is_string()) return read_json_file(base / j.get<std::string>());
  return j;
}

inline fs::path dir_of(const fs::path& file) { return file.has_parent_path() ? file.parent_path() : fs::path("."); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Groups: {"order": n, "identity": i, "table": [[...]], "names": [...]?}

inline json group_to_json(const FiniteGroup& g) {
  json j{{"order", g.order()}, {"identity", g.identity()}, {"table", g.table()}};
  if (g.has_names()) j["names"] = g.names();
  return j;
}

inline FiniteGroup group_from_json(const json& j) {
  const Index n = detail::index_of(detail::field(j, "order"), "order");
  const Index e = detail::index_of(detail::field(j, "identity"), "identity");
  const json& t = detail::field(j, "table");
  if (!t.is_array() || t.size() != n) detail::bad_format("table must have \"order\" rows");
  std::vector<std::vector<Index>> table;
  for (const auto& row : t) table.push_back(detail::index_list(row, "table row"));
  std::vector<std::string> names;
  if (j.contains("names")) {
    if (!j["names"].is_array()) detail::bad_format("names must be an array of strings");
    for (const auto& s : j["names"]) {
      if (!s.is_string()) detail::bad_format("names must be an array of strings");
      names.push_back(s.get<std::string>());
    }
  }
  return group_from_table(table, e, std::move(names));
}

// ---------------------------------------------------------------------------
// Crossed modules: {"G": group|path, "H": group|path, "boundary": [...],
// "action": [[g][h]]}. Loaded without checking the axioms.

inline json xmod_to_json(const CrossedModule& xm) {
  json act = json::array();
  for (Index g = 0; g < xm.G().order(); ++g) {
    json row = json::array();
    for (Index h = 0; h < xm.H().order(); ++h) row.push_back(xm.act(g, h));
    act.push_back(std::move(row));
  }
  json j{{"G", group_to_json(xm.G())}, {"H", group_to_json(xm.H())}, {"boundary", xm.boundary()}, {"action", act}};
  if (!xm.name().empty()) j["name"] = xm.name();
  return j;
}

inline CrossedModule xmod_from_json(const json& j, const fs::path& base = ".") {
  FiniteGroup G = group_from_json(detail::inline_or_file(detail::field(j, "G"), base));
  FiniteGroup H = group_from_json(detail::inline_or_file(detail::field(j, "H"), base));
  std::vector<Index> boundary = detail::index_list(detail::field(j, "boundary"), "boundary");
  if (boundary.size() != H.order()) detail::bad_format("boundary must list one G-element per element of H");
  const json& a = detail::field(j, "action");
  if (!a.is_array() || a.size() != G.order()) detail::bad_format("action must have one row per element of G");
  std::vector<Index> action;
  for (const auto& row : a) {
    auto r = detail::index_list(row, "action row");
    if (r.size() != H.order()) detail::bad_format("action rows must have one entry per element of H");
    action.insert(action.end(), r.begin(), r.end());
  }
  for (Index b : boundary)
    if (b >= G.order()) detail::bad_format("boundary entry out of range");
  for (Index x : action)
    if (x >= H.order()) detail::bad_format("action entry out of range");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  return CrossedModule(std::move(G), std::move(H), std::move(boundary), std::move(action), std::move(name));
}

inline CrossedModule load_xmod(const fs::path& path) {
  auto xm = xmod_from_json(read_json_file(path), detail::dir_of(path));
  if (xm.name().empty()) xm.set_name(path.stem().string());
  return xm;
}

// ---------------------------------------------------------------------------
// Categories: {"objects": n, "morphisms": [{"src", "tgt"}], "identity": [...],
// "comp": [[g, f, g∘f], ...]}

inline json category_to_json(const FiniteCategory& c) {
  json mors = json::array();
  for (const auto& t : c.morphism_types()) mors.push_back({{"src", t.src}, {"tgt", t.tgt}});
  json comp = json::array();
  for (const auto& [g, f, h] : c.composition_triples()) comp.push_back({g, f, h});
  return {{"objects", c.objects()}, {"morphisms", mors}, {"identity", c.identities()}, {"comp", comp}};
}

/// Validated through category_from_tables.
inline FiniteCategory category_from_json(const json& j) {
  const Index n = detail::index_of(detail::field(j, "objects"), "objects");
  std::vector<MorphismType> mors;
  const json& m = detail::field(j, "morphisms");
  if (!m.is_array()) detail::bad_format("morphisms must be an array");
  for (const auto& x : m)
    mors.push_back({detail::index_of(detail::field(x, "src"), "src"), detail::index_of(detail::field(x, "tgt"), "tgt")});
  std::vector<Index> ids = detail::index_list(detail::field(j, "identity"), "identity");
  std::vector<std::array<Index, 3>> comp;
  const json& c = detail::field(j, "comp");
  if (!c.is_array()) detail::bad_format("comp must be an array of [g, f, result] triples");
  for (const auto& t : c) {
    auto v = detail::index_list(t, "comp entry");
    if (v.size() != 3) detail::bad_format("comp entries are [g, f, result] triples");
    comp.push_back({v[0], v[1], v[2]});
  }
  return category_from_tables(n, std::move(mors), std::move(ids), comp);
}

// ---------------------------------------------------------------------------
// Actions: {"xmod": xmod|path, "category": category|path|"underlying",
// "actObj": [[γ][x]], "actMor": [[[γ,χ], f, result], ...]}.
// "underlying" selects the underlying category of the crossed module.
// Loaded without validation.

inline json action_to_json(const StrictAction& a, bool underlying = false) {
  json obj = json::array();
  for (Index g = 0; g < a.xm->G().order(); ++g) {
    json row = json::array();
    for (Index x = 0; x < a.cat->objects(); ++x) row.push_back(a.obj(g, x));
    obj.push_back(std::move(row));
  }
  json mor = json::array();
  for (Index g = 0; g < a.xm->G().order(); ++g)
    for (Index c = 0; c < a.xm->H().order(); ++c)
      for (Index f = 0; f < a.cat->morphisms(); ++f) mor.push_back({{g, c}, f, a.mor(g, c, f)});
  return {{"xmod", xmod_to_json(*a.xm)},
          {"category", underlying ? json("underlying") : category_to_json(*a.cat)},
          {"actObj", obj},
          {"actMor", mor}};
}

inline StrictAction action_from_json(const json& j, const fs::path& base = ".") {
  auto xm = std::make_shared<const CrossedModule>(xmod_from_json(detail::inline_or_file(detail::field(j, "xmod"), base),
                                                                 j["xmod"].is_string()
                                                                     ? detail::dir_of(base / j["xmod"].get<std::string>())
                                                                     : base));
  const json& cj = detail::field(j, "category");
  CategoryRef cat;
  if (cj.is_string() && cj.get<std::string>() == "underlying")
    cat = std::make_shared<const FiniteCategory>(underlying_category(*xm));
  else
    cat = std::make_shared<const FiniteCategory>(category_from_json(detail::inline_or_file(cj, base)));

  const Index ng = xm->G().order();
  const Index nh = xm->H().order();
  StrictAction a{xm, cat, std::vector<Index>(static_cast<std::size_t>(ng) * cat->objects(), kNone),
                 std::vector<Index>(static_cast<std::size_t>(ng) * nh * cat->morphisms(), kNone)};
  const json& ao = detail::field(j, "actObj");
  if (!ao.is_array() || ao.size() != ng) detail::bad_format("actObj must have one row per element of G");
  for (Index g = 0; g < ng; ++g) {
    auto row = detail::index_list(ao[g], "actObj row");
    if (row.size() != cat->objects()) detail::bad_format("actObj rows must have one entry per object");
    for (Index x = 0; x < row.size(); ++x) a.act_obj[static_cast<std::size_t>(g) * cat->objects() + x] = row[x];
  }
  const json& am = detail::field(j, "actMor");
  if (!am.is_array()) detail::bad_format("actMor must be an array of [[g, chi], f, result] triples");
  for (const auto& t : am) {
    if (!t.is_array() || t.size() != 3) detail::bad_format("actMor entries are [[g, chi], f, result] triples");
    auto gc = detail::index_list(t[0], "actMor pair");
    const Index f = t[1].is_array() && t[1].size() == 1 ? detail::index_of(t[1][0], "actMor f")
                                                        : detail::index_of(t[1], "actMor f");
    if (gc.size() != 2 || gc[0] >= ng || gc[1] >= nh || f >= cat->morphisms())
      detail::bad_format("actMor entry out of range");
    Index& slot = a.mor_entry(gc[0], gc[1], f);
    if (slot != kNone) detail::bad_format("actMor lists an entry twice");
    slot = detail::index_of(t[2], "actMor result");
  }
  for (Index v : a.act_mor)
    if (v == kNone) detail::bad_format("actMor must list every ((g, chi), f)");
  return a;
}

inline StrictAction load_action(const fs::path& path) {
  return action_from_json(read_json_file(path), detail::dir_of(path));
}

// ---------------------------------------------------------------------------
// Squares, double categories, 2-cells

inline json quintet_to_json(const Quintet& q) {
  return {{"l", q.left}, {"t", q.top}, {"r", q.right}, {"b", q.bottom}, {"e", q.face}};
}

inline json report_to_json(const Report& r) {
  json v = json::array();
  for (const auto& x : r.violations()) {
    json e{{"law", x.law}, {"witness", x.witness}};
    if (!x.detail.empty()) e["detail"] = x.detail;
    v.push_back(std::move(e));
  }
  json tally = json::object();
  for (const auto& [law, t] : r.tally()) tally[law] = {{"checks", t.checks}, {"failures", t.failures}};
  return {{"ok", r.ok()}, {"violations", r.total()}, {"listed", v}, {"tally", tally}};
}

/// Objects, both morphism families and every square with its boundary.
inline json tdc_to_json(const TransDoubleCat& d) {
  const auto& C = d.horizontal();
  const auto& V = d.vertical();
  json horiz = json::array();
  for (Index f = 0; f < C.morphisms(); ++f) horiz.push_back({{"id", f}, {"src", C.src(f)}, {"tgt", C.tgt(f)}});
  json vert = json::array();
  for (Index v = 0; v < V.morphisms(); ++v) {
    const auto [g, x] = d.vertical_label(v);
    vert.push_back({{"id", v}, {"gamma", g}, {"src", V.src(v)}, {"tgt", V.tgt(v)}});
  }
  json squares = json::array();
  for (std::size_t k = 0; k < d.squares(); ++k) {
    const TDSquare s = d.square_at(k);
    const auto& b = d.boundary(s);
    squares.push_back({{"gamma", s.gamma}, {"chi", s.chi}, {"f", s.f}, {"top", b.top}, {"bottom", b.bottom},
                       {"left", b.left}, {"right", b.right}});
  }
  json j{{"objects", d.objects()}, {"horizontal", horiz}, {"vertical", vert}, {"squares", squares}};
  if (!d.xm().name().empty()) j["xmod"] = d.xm().name();
  return j;
}

inline json two_cells_to_json(const TwoCellTable& t, const std::string& kind) {
  json cells = json::array();
  for (const auto& c : t.cells) cells.push_back({{"source", c.source}, {"chi", c.chi}, {"target", c.target}});
  return {{"kind", kind}, {"cells", cells}, {"count", t.cells.size()}, {"check", report_to_json(t.report)}};
}

}  // namespace xmodcat
