#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropmono/dual_complex.hpp"
#include "tropmono/error.hpp"
#include "tropmono/matrix.hpp"
#include "tropmono/multi_index.hpp"
#include "tropmono/simplex.hpp"
#include "tropmono/superform.hpp"

namespace tropmono {

using IntMatrix = std::vector<std::vector<long>>;

inline QMatrix to_qmatrix(const IntMatrix &m, std::size_t cols) {
  QMatrix out(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != cols) throw DimensionError("ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = Rat(m[i][j]);
  }
  return out;
}

/// Exponent data of a p-form on one component Y^i: weights c_l and, per
/// stratum Z ∋ i of level q, an (M·p) × q matrix whose row l·p+k lists the
/// orders of f_{lk} along the walls Y^i ∩ Y^j ⊃ Z, j ∈ I(Z)∖{i} ascending.
struct Presentation {
  int component = 0;
  int p = 0;
  std::vector<Rat> weights;
  std::map<std::string, IntMatrix> flags;

  [[nodiscard]] std::size_t symbols() const { return weights.size(); }

  void validate() const {
    if (weights.empty()) throw DimensionError("a presentation needs at least one weight");
    if (p < 1) throw DimensionError("presentation degree must be at least 1");
    for (const auto &[label, m] : flags) {
      if (m.size() != weights.size() * static_cast<std::size_t>(p))
        throw DimensionError("flag '" + label + "' must have M*p rows");
      for (const auto &row : m)
        if (m.empty() || row.size() != m.front().size()) throw DimensionError("flag '" + label + "' is ragged");
    }
  }

  /// a_l restricted to the chosen wall columns, as a p × |cols| matrix.
  [[nodiscard]] QMatrix symbol_block(const std::string &label, std::size_t l, const std::vector<std::size_t> &cols) const {
    auto it = flags.find(label);
    if (it == flags.end()) throw DomainError("presentation on component " + std::to_string(component + 1) +
                                             " has no exponent matrix for '" + label + "'");
    const IntMatrix &m = it->second;
    QMatrix out(static_cast<std::size_t>(p), cols.size());
    for (std::size_t k = 0; k < static_cast<std::size_t>(p); ++k)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto &row = m.at(l * static_cast<std::size_t>(p) + k);
        if (cols[c] >= row.size()) throw DimensionError("wall column out of range for '" + label + "'");
        out(k, c) = Rat(row[cols[c]]);
      }
    return out;
  }
};

/// Σ_l c_l det(a_{lkj}) with walls taken in the given column order (default
/// ascending); the matrix must have exactly p wall columns.
inline Rat ord_value(const Presentation &pres, const std::string &label, std::optional<std::vector<std::size_t>> wall_order = {}) {
  pres.validate();
  auto it = pres.flags.find(label);
  if (it == pres.flags.end())
    throw DomainError("presentation on component " + std::to_string(pres.component + 1) + " has no exponent matrix for '" + label + "'");
  std::size_t walls = it->second.front().size();
  if (walls != static_cast<std::size_t>(pres.p)) throw DimensionError("flag '" + label + "' is not a level-p flag");
  std::vector<std::size_t> cols;
  if (wall_order) {
    cols = *wall_order;
    std::vector<int> as_int(cols.begin(), cols.end());
    if (cols.size() != walls) throw DimensionError("wall order must list every wall once");
    permutation_sign(as_int);
  } else {
    for (std::size_t j = 0; j < walls; ++j) cols.push_back(j);
  }
  Rat total;
  for (std::size_t l = 0; l < pres.symbols(); ++l) total += pres.weights[l] * det(pres.symbol_block(label, l, cols));
  return total;
}

/// ε(σ) for σ a permutation of {0..p}, by case split on σ(0).
inline int epsilon_sign(const std::vector<int> &sigma) {
  permutation_sign(sigma);
  std::size_t p = sigma.size() - 1;
  if (sigma[0] == 0) {
    std::vector<int> rest;
    for (std::size_t j = 1; j <= p; ++j) rest.push_back(sigma[j] - 1);
    return permutation_sign(rest);
  }
  // (1,…,p) with σ(0) replaced by 0, sent to (σ(1),…,σ(p))
  std::vector<int> from;
  for (int j = 1; j <= static_cast<int>(p); ++j) from.push_back(j == sigma[0] ? 0 : j);
  std::vector<int> where(p + 1, -1);
  for (std::size_t k = 0; k < p; ++k) where[static_cast<std::size_t>(from[k])] = static_cast<int>(k);
  std::vector<int> perm;
  for (std::size_t k = 1; k <= p; ++k) perm.push_back(where[static_cast<std::size_t>(sigma[k])]);
  return -permutation_sign(perm);
}

// ---------------------------------------------------------------------------

struct OrdVector {
  int p = 0;
  std::vector<Rat> values; // indexed by position in c.strata(p)

  [[nodiscard]] bool is_zero() const { return is_zero_vector(values); }
};

namespace detail {
inline const Presentation *presentation_for(const std::vector<Presentation> &all, int component) {
  const Presentation *found = nullptr;
  for (const auto &pr : all)
    if (pr.component == component) {
      if (found) throw ConsistencyError("two presentations for component " + std::to_string(component + 1));
      found = &pr;
    }
  return found;
}
} // namespace detail

/// ord^σ(Z): the value computed from the presentation on Y^{i_σ(0)} with walls
/// ordered i_σ(1), …, i_σ(p).
inline Rat ord_permuted(const std::vector<Presentation> &pres, const SemistableCombinatorics &c, StratumRef z,
                        const std::vector<int> &sigma) {
  const Stratum &s = c.at(z);
  if (sigma.size() != s.index_set.size()) throw DimensionError("permutation size must be p+1");
  permutation_sign(sigma);
  int home = s.index_set[static_cast<std::size_t>(sigma[0])];
  const Presentation *pr = detail::presentation_for(pres, home);
  if (!pr) throw DomainError("no presentation on component " + std::to_string(home + 1));
  // wall column of j is its rank among I(Z)∖{home}
  MultiIndex others = s.index_set.without(home);
  std::vector<std::size_t> order;
  for (std::size_t k = 1; k < sigma.size(); ++k)
    order.push_back(static_cast<std::size_t>(others.position(s.index_set[static_cast<std::size_t>(sigma[k])])));
  return ord_value(*pr, s.label, order);
}

/// ord_ω on Y^(p); every covering presentation must give the same value.
inline OrdVector ord_vector(const std::vector<Presentation> &pres, const SemistableCombinatorics &c, int p) {
  if (p < 1 || p > c.top_level()) throw DimensionError("ord level must satisfy 1 <= p <= top level");
  for (const auto &pr : pres)
    if (pr.p != p) throw DimensionError("presentation degree does not match p");
  OrdVector out{p, {}};
  const auto &lvl = c.strata(p);
  for (std::size_t z = 0; z < lvl.size(); ++z) {
    std::optional<Rat> value;
    std::string first_from;
    for (std::size_t s = 0; s < lvl[z].index_set.size(); ++s) {
      int i = lvl[z].index_set[s];
      const Presentation *pr = detail::presentation_for(pres, i);
      if (!pr || !pr->flags.contains(lvl[z].label)) continue;
      Rat v = Rat(minus_one_pow(static_cast<long>(s))) * ord_value(*pr, lvl[z].label);
      std::string from = c.component_names()[static_cast<std::size_t>(i)];
      if (value && *value != v)
        throw ConsistencyError("presentations disagree on '" + lvl[z].label + "': " + value->str() + " via " + first_from +
                               ", " + v.str() + " via " + from);
      if (!value) {
        value = v;
        first_from = from;
      }
    }
    if (!value) throw DomainError("stratum '" + lvl[z].label + "' is not covered by any presentation");
    out.values.push_back(*value);
  }
  return out;
}

struct E2Membership {
  bool pullback_zero = false;
  bool pushforward_zero = false;
  QVector pullback;
  QVector pushforward;
};

inline E2Membership check_e2_membership(const OrdVector &v, const SemistableCombinatorics &c, const H2Model &h2) {
  if (v.values.size() != c.count(v.p)) throw DimensionError("ord vector level does not match the complex");
  E2Membership out;
  out.pullback = delta_pullback(c, v.p) * v.values;
  out.pushforward = delta_pushforward(c, v.p, h2) * v.values;
  out.pullback_zero = is_zero_vector(out.pullback);
  out.pushforward_zero = is_zero_vector(out.pushforward);
  return out;
}

// ---------------------------------------------------------------------------

/// τ({f_1..f_p}) pulled back to chart coordinates g_1..g_r when f_k = Π g_j^{M_kj}.
inline Superform tau_pullback(const IntMatrix &m, std::size_t r) {
  Superform out(static_cast<int>(r));
  std::size_t p = m.size();
  QMatrix q = to_qmatrix(m, r);
  if (p > r) return out;
  for (const auto &s : subsets(static_cast<int>(r), static_cast<int>(p))) {
    QMatrix minor(p, p);
    for (std::size_t k = 0; k < p; ++k)
      for (std::size_t j = 0; j < p; ++j) minor(k, j) = q(k, static_cast<std::size_t>(s[j]));
    Rat d = det(minor);
    if (!d.is_zero()) out.add(SuperBasis{s, {}}, Poly::constant(static_cast<int>(r), d));
  }
  return out;
}

// ---------------------------------------------------------------------------

/// Builds per-component presentations from orders along walls: for each
/// level-1 stratum W ∋ i, an M × p matrix of orders of f_{lk} along W. Flags
/// are produced for every stratum of level 1..top containing i.
inline Presentation presentation_from_wall_orders(int component, int p, std::vector<Rat> weights,
                                                  const std::map<std::string, IntMatrix> &walls,
                                                  const SemistableCombinatorics &c) {
  Presentation pr{component, p, std::move(weights), {}};
  std::size_t M = pr.weights.size();
  for (const auto &[label, m] : walls) {
    auto ref = c.find(label);
    if (!ref || ref->level != 1 || !c.at(*ref).index_set.contains(component))
      throw ConsistencyError("'" + label + "' is not a wall of component " + std::to_string(component + 1));
    if (m.size() != M) throw DimensionError("wall '" + label + "' needs one row per weight");
    for (const auto &row : m)
      if (row.size() != static_cast<std::size_t>(p)) throw DimensionError("wall '" + label + "' needs p columns");
  }
  for (int q = 1; q <= c.top_level(); ++q)
    for (std::size_t z = 0; z < c.count(q); ++z) {
      const Stratum &s = c.strata(q)[z];
      if (!s.index_set.contains(component)) continue;
      MultiIndex others = s.index_set.without(component);
      IntMatrix flag(M * static_cast<std::size_t>(p), std::vector<long>(others.size()));
      bool complete = true;
      for (std::size_t j = 0; j < others.size(); ++j) {
        StratumRef w = c.ancestor(StratumRef{q, z}, MultiIndex::from_unsorted({component, others[j]}));
        auto it = walls.find(c.at(w).label);
        if (it == walls.end()) {
          complete = false;
          break;
        }
        for (std::size_t l = 0; l < M; ++l)
          for (std::size_t k = 0; k < static_cast<std::size_t>(p); ++k)
            flag[l * static_cast<std::size_t>(p) + k][j] = it->second[l][k];
      }
      if (complete) pr.flags.emplace(s.label, std::move(flag));
    }
  return pr;
}

/// Globally consistent exponent data: on component i the order of f_{lk}
/// along the wall to j is b[l][k][j] - b[l][k][i].
inline std::vector<Presentation> piecewise_linear_presentations(const SemistableCombinatorics &c, int p,
                                                                const std::vector<Rat> &weights,
                                                                const std::vector<std::vector<std::vector<long>>> &b) {
  std::size_t M = weights.size();
  if (b.size() != M) throw DimensionError("PL data needs one block per weight");
  std::vector<Presentation> out;
  for (int i = 0; i < c.components(); ++i) {
    std::map<std::string, IntMatrix> walls;
    for (const auto &w : c.strata(1)) {
      if (!w.index_set.contains(i)) continue;
      int j = w.index_set.without(i)[0];
      IntMatrix m(M, std::vector<long>(static_cast<std::size_t>(p)));
      for (std::size_t l = 0; l < M; ++l)
        for (std::size_t k = 0; k < static_cast<std::size_t>(p); ++k)
          m[l][k] = b.at(l).at(k).at(static_cast<std::size_t>(j)) - b.at(l).at(k).at(static_cast<std::size_t>(i));
      walls.emplace(w.label, std::move(m));
    }
    out.push_back(presentation_from_wall_orders(i, p, weights, walls, c));
  }
  return out;
}

/// m-gon data with ord = 1 on Z_{i,i+1} and ord = -1 on Z_{1,m}: one symbol
/// per component, order +1 along each wall from the lower component.
inline std::vector<Presentation> cyclic_mgon_presentations(const SemistableCombinatorics &c) {
  if (c.top_level() != 1) throw DomainError("cyclic data needs a one-dimensional complex");
  int m = c.components();
  std::vector<Presentation> out;
  for (int i = 0; i < m; ++i) {
    std::map<std::string, IntMatrix> walls;
    for (const auto &w : c.strata(1)) {
      if (!w.index_set.contains(i)) continue;
      int lo = w.index_set[0], hi = w.index_set[1];
      long value = (lo == 0 && hi == m - 1 && m > 2) ? -1 : 1;
      // the higher component sees the wall with the opposite orientation
      if (i == hi) value = -value;
      walls.emplace(w.label, IntMatrix{{value}});
    }
    out.push_back(presentation_from_wall_orders(i, 1, {Rat(1)}, walls, c));
  }
  return out;
}

// ---------------------------------------------------------------------------

struct TopCellLadder {
  std::string label;
  SimplexForm beta;
  BetaLadder ladder;
  std::vector<SimplexCochain<SimplexForm>> theta; // θ_r = I(β_r), r = 0..p-1
};

struct DolbeaultLadder {
  int p = 0;
  std::vector<TopCellLadder> cells;
  OrdVector ord;
  std::vector<Rat> delta_theta; // δθ_{p-1} on Y^(p)
  bool steps_ok = true;         // dθ_r = β_r and every β_r constant
  bool final_check = false;
  std::string witness;
};

/// Constant p-form on the simplex of a top stratum z, written with respect
/// to its smallest component: Σ_S (Σ_l c_l det a_l[:,S]) dx_S, S ⊂ {1..n}.
inline SimplexForm top_cell_form(const std::vector<Presentation> &pres, const SemistableCombinatorics &c, std::size_t z) {
  int n = c.top_level();
  const Stratum &s = c.strata(n)[z];
  int home = s.index_set[0];
  const Presentation *pr = detail::presentation_for(pres, home);
  if (!pr) throw DomainError("no presentation on component " + std::to_string(home + 1));
  if (!pr->flags.contains(s.label)) throw DomainError("presentation on component " + std::to_string(home + 1) +
                                                      " lacks the top stratum '" + s.label + "'");
  int p = pr->p;
  DiffForm f(n + 1);
  for (const auto &sub : subsets(n, p)) {
    std::vector<std::size_t> cols;
    std::vector<int> idx;
    for (int j : sub) {
      cols.push_back(static_cast<std::size_t>(j));
      idx.push_back(j + 1);
    }
    Rat coeff;
    for (std::size_t l = 0; l < pr->symbols(); ++l) coeff += pr->weights[l] * det(pr->symbol_block(s.label, l, cols));
    f.add(MultiIndex(idx), Poly::constant(n + 1, coeff));
  }
  return SimplexForm(n, p, std::move(f));
}

inline DolbeaultLadder dolbeault_ladder(const std::vector<Presentation> &pres, const SemistableCombinatorics &c, int p) {
  int n = c.top_level();
  if (!c.is_simplicial()) throw DomainError("the ladder needs a simplicial dual complex");
  if (p < 1 || p > n) throw DimensionError("ladder degree must satisfy 1 <= p <= top level");
  DolbeaultLadder out;
  out.p = p;
  out.ord = ord_vector(pres, c, p);

  std::vector<std::optional<Rat>> top(c.count(p));
  std::vector<std::string> top_from(c.count(p));
  Rat factor = Rat(minus_one_pow(static_cast<long>(p) * (p + 1) / 2)) / factorial(p);
  for (std::size_t z = 0; z < c.count(n); ++z) {
    const Stratum &zs = c.strata(n)[z];
    TopCellLadder cell{zs.label, top_cell_form(pres, c, z), {}, {}};
    cell.ladder = beta_recursion(cell.beta, p);
    for (int r = 0; r < p; ++r) {
      const auto &br = cell.ladder.levels[static_cast<std::size_t>(r)];
      auto th = integrate_at_barycenters(br);
      for (const auto &[face, form] : br.values()) {
        if (!form.has_constant_coefficients()) out.steps_ok = false;
        if (exterior_d(th.at(face)) != form) {
          out.steps_ok = false;
          if (out.witness.empty()) out.witness = "d(theta_" + std::to_string(r) + ") != beta_" + std::to_string(r) + " at " + zs.label;
        }
      }
      cell.theta.push_back(std::move(th));
    }
    for (const auto &[face, value] : cell.ladder.top.values()) {
      std::vector<int> comps;
      for (int v : face) comps.push_back(zs.index_set[static_cast<std::size_t>(v)]);
      StratumRef zr = c.ancestor(StratumRef{n, z}, MultiIndex(comps));
      auto &slot = top[zr.pos];
      if (slot && *slot != value) {
        if (out.witness.empty())
          out.witness = "top cells " + top_from[zr.pos] + " and " + zs.label + " disagree on '" + c.at(zr).label + "'";
        out.steps_ok = false;
      }
      if (!slot) {
        slot = value;
        top_from[zr.pos] = zs.label;
      }
    }
    out.cells.push_back(std::move(cell));
  }
  out.final_check = out.steps_ok;
  for (std::size_t k = 0; k < top.size(); ++k) {
    if (!top[k]) throw DomainError("stratum '" + c.strata(p)[k].label + "' lies in no top stratum");
    out.delta_theta.push_back(*top[k]);
    if (*top[k] != factor * out.ord.values[k]) {
      out.final_check = false;
      if (out.witness.empty())
        out.witness = "delta theta = " + top[k]->str() + " at '" + c.strata(p)[k].label + "', expected " +
                      (factor * out.ord.values[k]).str();
    }
  }
  return out;
}

} // namespace tropmono
