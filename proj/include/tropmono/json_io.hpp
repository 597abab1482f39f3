#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropmono/dual_complex.hpp"
#include "tropmono/error.hpp"
#include "tropmono/superform.hpp"
#include "tropmono/trop_ord.hpp"

namespace tropmono {

using Json = nlohmann::ordered_json;

class ParseError : public Error {
public:
  using Error::Error;
};

/// Line and column (1-based) of a byte offset.
inline std::pair<std::size_t, std::size_t> line_column(const std::string &text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline Json parse_json_text(const std::string &text, const std::string &origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    // byte is the 1-based position of the offending character
    std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, col] = line_column(text, off);
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json load_json_file(const std::string &path) { return parse_json_text(read_file(path), path); }

// ---------------------------------------------------------------------------
// Rationals and matrices.

inline Rat rat_from_json(const Json &j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw ParseError("expected a rational as a string \"a/b\" or an integer, got " + j.dump());
}

inline Json rat_to_json(const Rat &r) { return r.str(); }

inline Json vector_to_json(const QVector &v) {
  Json a = Json::array();
  for (const auto &x : v) a.push_back(rat_to_json(x));
  return a;
}

inline QVector vector_from_json(const Json &j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  QVector v;
  for (const auto &x : j) v.push_back(rat_from_json(x));
  return v;
}

inline Json matrix_to_json(const QMatrix &m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i)));
  return a;
}

inline QMatrix matrix_from_json(const Json &j, std::size_t cols) {
  if (!j.is_array()) throw ParseError("expected a matrix as an array of rows");
  std::vector<QVector> rows;
  for (const auto &r : j) rows.push_back(vector_from_json(r));
  return QMatrix::from_rows(rows, cols);
}

inline IntMatrix int_matrix_from_json(const Json &j) {
  if (!j.is_array()) throw ParseError("expected an integer matrix");
  IntMatrix m;
  for (const auto &r : j) {
    if (!r.is_array()) throw ParseError("expected an integer matrix row");
    std::vector<long> row;
    for (const auto &x : r) {
      if (!x.is_number_integer()) throw ParseError("exponent matrices hold integers, got " + x.dump());
      row.push_back(x.get<long>());
    }
    m.push_back(std::move(row));
  }
  return m;
}

inline Json int_matrix_to_json(const IntMatrix &m) {
  Json a = Json::array();
  for (const auto &r : m) a.push_back(r);
  return a;
}

/// {"[e1,...,en]": "a/b"}
inline Json poly_to_json(const Poly &c) {
  Json coeff = Json::object();
  for (const auto &[e, r] : c.terms()) coeff[Json(e).dump()] = r.str();
  return coeff;
}

// ---------------------------------------------------------------------------
// Superforms: list of {dprime, dsecond, coeff: {"[e1,...,en]": "a/b"}}, 1-based indices.

inline Json superform_to_json(const Superform &w) {
  Json out = Json::array();
  for (const auto &[b, c] : w.terms()) {
    Json t;
    Json dp = Json::array(), ds = Json::array();
    for (int i : b.dprime) dp.push_back(i + 1);
    for (int j : b.dsecond) ds.push_back(j + 1);
    t["dprime"] = dp;
    t["dsecond"] = ds;
    t["coeff"] = poly_to_json(c);
    out.push_back(std::move(t));
  }
  return out;
}

inline MultiIndex one_based_index(const Json &j, int bound, const char *what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of indices");
  std::vector<int> idx;
  for (const auto &x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
    int v = x.get<int>();
    if (v < 1 || v > bound) throw DimensionError(std::string(what) + " index " + std::to_string(v) + " out of range 1.." + std::to_string(bound));
    idx.push_back(v - 1);
  }
  std::vector<int> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != idx || std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw ParseError(std::string(what) + " indices must be strictly increasing");
  return MultiIndex(idx);
}

inline Superform superform_from_json(const Json &j, int n) {
  if (!j.is_array()) throw ParseError("a superform is a list of terms");
  Superform w(n);
  for (const auto &t : j) {
    if (!t.is_object() || !t.contains("coeff")) throw ParseError("superform term needs dprime, dsecond and coeff");
    MultiIndex dp = one_based_index(t.value("dprime", Json::array()), n, "dprime");
    MultiIndex ds = one_based_index(t.value("dsecond", Json::array()), n, "dsecond");
    Poly coeff(n);
    for (const auto &[key, val] : t.at("coeff").items()) {
      Json e = parse_json_text(key, "exponent key");
      if (!e.is_array() || e.size() != static_cast<std::size_t>(n)) throw DimensionError("exponent key '" + key + "' must list n exponents");
      Exponent ex;
      for (const auto &x : e) {
        if (!x.is_number_integer() || x.get<int>() < 0) throw ParseError("exponents must be non-negative integers");
        ex.push_back(x.get<int>());
      }
      coeff.add_term(ex, rat_from_json(val));
    }
    w.add(SuperBasis{dp, ds}, coeff);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Complexes.

inline SemistableCombinatorics complex_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("components")) throw ParseError("complex needs a 'components' list");
  std::vector<std::string> names;
  for (const auto &n : j.at("components")) {
    if (!n.is_string()) throw ParseError("component names must be strings");
    names.push_back(n.get<std::string>());
  }
  int m = static_cast<int>(names.size());
  std::vector<SemistableCombinatorics::StratumSpec> specs;
  Json strata = j.value("strata", Json::array());
  for (const auto &s : strata) {
    MultiIndex idx = one_based_index(s.at("indexSet"), m, "indexSet");
    if (s.contains("level") && s.at("level").get<int>() != static_cast<int>(idx.size()) - 1)
      throw ConsistencyError("declared level does not match index set size");
    if (idx.size() == 1) {
      // level-0 entries restate the components
      std::string lbl = s.value("label", names[static_cast<std::size_t>(idx[0])]);
      if (lbl != names[static_cast<std::size_t>(idx[0])])
        throw ConsistencyError("level-0 stratum label must equal its component name");
      continue;
    }
    SemistableCombinatorics::StratumSpec spec;
    spec.index_set = idx;
    spec.label = s.value("label", complexes::set_label(idx));
    Json parents = s.value("parents", Json::object());
    for (const auto &[key, val] : parents.items()) {
      int removed = std::stoi(key);
      if (removed < 1 || removed > m) throw DimensionError("parent key " + key + " is not a component index");
      spec.parents.emplace(removed - 1, val.get<std::string>());
    }
    specs.push_back(std::move(spec));
  }
  return SemistableCombinatorics(std::move(names), specs);
}

inline Json complex_to_json(const SemistableCombinatorics &c) {
  Json out;
  out["components"] = c.component_names();
  Json strata = Json::array();
  for (int p = 1; p <= c.top_level(); ++p)
    for (const auto &z : c.strata(p)) {
      Json s;
      s["label"] = z.label;
      s["level"] = p;
      Json idx = Json::array();
      for (int i : z.index_set) idx.push_back(i + 1);
      s["indexSet"] = idx;
      Json par = Json::object();
      for (const auto &[k, w] : z.parents) par[std::to_string(k + 1)] = c.strata(p - 1)[w].label;
      s["parents"] = par;
      strata.push_back(std::move(s));
    }
  out["strata"] = strata;
  return out;
}

/// Keywords name the built-in models; an object lists explicit data per stratum label.
inline H2Model h2_from_json(const Json &j, const SemistableCombinatorics &c) {
  if (j.is_string()) {
    std::string k = j.get<std::string>();
    if (k == "unit") return H2Model::unit(c);
    if (k == "unit-restrict") return H2Model::unit(c, true);
    if (k == "zero") return H2Model::zero(c);
    if (k == "intersection") return H2Model::unit_intersection(c);
    throw ParseError("unknown H2 model keyword '" + k + "'");
  }
  if (!j.is_object()) throw ParseError("h2 must be a keyword or an object keyed by stratum label");
  H2Model h;
  for (const auto &[label, e] : j.items()) {
    auto ref = c.find(label);
    if (!ref) throw ConsistencyError("h2 data for unknown stratum '" + label + "'");
    H2Entry entry;
    entry.dim = e.at("dim").get<std::size_t>();
    Json gysin = e.value("gysin", Json::object());
    for (const auto &[child, g] : gysin.items()) {
      auto cr = c.find(child);
      if (!cr || cr->level != ref->level + 1) throw ConsistencyError("'" + child + "' is not a child level of '" + label + "'");
      entry.gysin.emplace(cr->pos, vector_from_json(g));
    }
    Json restrict = e.value("restrict", Json::object());
    for (const auto &[child, r] : restrict.items()) {
      auto cr = c.find(child);
      if (!cr || cr->level != ref->level + 1) throw ConsistencyError("'" + child + "' is not a child level of '" + label + "'");
      entry.restrict.emplace(cr->pos, matrix_from_json(r, entry.dim));
    }
    h.set(*ref, std::move(entry));
  }
  h.validate_shapes(c);
  return h;
}

inline Json h2_to_json(const H2Model &h, const SemistableCombinatorics &c) {
  Json out = Json::object();
  for (const auto &[ref, e] : h.entries()) {
    Json o;
    o["dim"] = e.dim;
    Json g = Json::object(), r = Json::object();
    for (const auto &[child, v] : e.gysin) g[c.strata(ref.level + 1)[child].label] = vector_to_json(v);
    for (const auto &[child, m] : e.restrict) r[c.strata(ref.level + 1)[child].label] = matrix_to_json(m);
    o["gysin"] = g;
    if (!e.restrict.empty()) o["restrict"] = r;
    out[c.at(ref).label] = o;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Presentations: {component, weights, flags: {label: [[ints]]}} or
// {component, weights, wallOrders: {wallLabel: [[ints]]}}; component is a
// 1-based index or a component name.

inline int component_from_json(const Json &j, const SemistableCombinatorics &c) {
  if (j.is_number_integer()) {
    int i = j.get<int>();
    if (i < 1 || i > c.components()) throw DimensionError("component index out of range");
    return i - 1;
  }
  if (j.is_string()) {
    const auto &names = c.component_names();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == j.get<std::string>()) return static_cast<int>(i);
    throw ConsistencyError("unknown component '" + j.get<std::string>() + "'");
  }
  throw ParseError("component must be an index or a name");
}

inline std::vector<Presentation> presentations_from_json(const Json &j, const SemistableCombinatorics &c) {
  const Json &list = j.is_object() && j.contains("presentations") ? j.at("presentations") : j;
  if (!list.is_array()) throw ParseError("expected a list of presentations");
  std::vector<Presentation> out;
  for (const auto &e : list) {
    int comp = component_from_json(e.at("component"), c);
    std::vector<Rat> weights;
    for (const auto &w : e.at("weights")) weights.push_back(rat_from_json(w));
    if (e.contains("wallOrders")) {
      std::map<std::string, IntMatrix> walls;
      int p = 0;
      for (const auto &[label, m] : e.at("wallOrders").items()) {
        walls.emplace(label, int_matrix_from_json(m));
        int cols = walls.at(label).empty() ? 0 : static_cast<int>(walls.at(label).front().size());
        if (p && cols != p) throw DimensionError("wall orders disagree on p");
        p = cols;
      }
      out.push_back(presentation_from_wall_orders(comp, p, std::move(weights), walls, c));
    } else {
      Presentation pr{comp, 0, std::move(weights), {}};
      for (const auto &[label, m] : e.at("flags").items()) {
        if (!c.find(label)) throw ConsistencyError("flag for unknown stratum '" + label + "'");
        pr.flags.emplace(label, int_matrix_from_json(m));
      }
      if (e.contains("p")) pr.p = e.at("p").get<int>();
      else if (!pr.flags.empty() && !pr.weights.empty()) pr.p = static_cast<int>(pr.flags.begin()->second.size() / pr.weights.size());
      pr.validate();
      for (const auto &[label, m] : pr.flags) {
        auto ref = c.find(label);
        const Stratum &s = c.at(*ref);
        if (!s.index_set.contains(comp)) throw ConsistencyError("flag '" + label + "' does not contain the component");
        if (m.front().size() != static_cast<std::size_t>(ref->level)) throw DimensionError("flag '" + label + "' needs one column per wall");
      }
      out.push_back(std::move(pr));
    }
  }
  return out;
}

inline Json presentations_to_json(const std::vector<Presentation> &pres, const SemistableCombinatorics &c) {
  Json out = Json::array();
  for (const auto &pr : pres) {
    Json e;
    e["component"] = c.component_names()[static_cast<std::size_t>(pr.component)];
    e["p"] = pr.p;
    Json w = Json::array();
    for (const auto &x : pr.weights) w.push_back(x.str());
    e["weights"] = w;
    Json f = Json::object();
    for (const auto &[label, m] : pr.flags) f[label] = int_matrix_to_json(m);
    e["flags"] = f;
    out.push_back(std::move(e));
  }
  return out;
}

} // namespace tropmono
