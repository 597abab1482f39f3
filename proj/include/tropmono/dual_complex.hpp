#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropmono/error.hpp"
#include "tropmono/matrix.hpp"
#include "tropmono/multi_index.hpp"

namespace tropmono {

/// One connected stratum Z of Y^{(p)}: its index set I(Z) (0-based
/// component numbers, |I(Z)| = p+1) and, for each j in I(Z), the position of
/// the level p-1 stratum with index set I(Z)∖{j} that contains it.
struct Stratum {
  std::string label;
  MultiIndex index_set;
  std::map<int, std::size_t> parents;

  [[nodiscard]] int level() const { return static_cast<int>(index_set.size()) - 1; }
};

struct StratumRef {
  int level = 0;
  std::size_t pos = 0;
  friend auto operator<=>(const StratumRef &, const StratumRef &) = default;
};

/// ε(I∖{i_j}, I) = (-1)^j.
inline int removal_sign(const MultiIndex &index_set, int removed) {
  int pos = index_set.position(removed);
  if (pos < 0) throw DimensionError("removed index is not in the index set");
  return minus_one_pow(pos);
}

/// Strata poset of a strictly semistable special fiber with components
/// Y^1..Y^m (stored 0-based). Component order is part of the data.
class SemistableCombinatorics {
public:
  /// Stratum as supplied by a caller: parents given by label (may be left
  /// out when the parent is determined by its index set).
  struct StratumSpec {
    std::string label;
    MultiIndex index_set;
    std::map<int, std::string> parents;
  };

  SemistableCombinatorics() = default;

  /// Level-0 strata are created from the component names; `higher` lists
  /// strata of level >= 1 in any order.
  SemistableCombinatorics(std::vector<std::string> components, const std::vector<StratumSpec> &higher)
      : names_(std::move(components)) {
    int m = static_cast<int>(names_.size());
    if (m < 1) throw DimensionError("at least one component is required");
    std::set<std::string> seen;
    levels_.emplace_back();
    for (int i = 0; i < m; ++i) {
      if (!seen.insert(names_[static_cast<std::size_t>(i)]).second)
        throw ConsistencyError("duplicate stratum label '" + names_[static_cast<std::size_t>(i)] + "'");
      levels_[0].push_back(Stratum{names_[static_cast<std::size_t>(i)], MultiIndex{i}, {}});
    }
    std::vector<std::vector<const StratumSpec *>> by_level;
    for (const auto &s : higher) {
      int lvl = static_cast<int>(s.index_set.size()) - 1;
      if (lvl < 1) throw DimensionError("stratum '" + s.label + "' must have at least two indices");
      if (!s.index_set.within(0, m)) throw DimensionError("stratum '" + s.label + "' uses an unknown component");
      if (!seen.insert(s.label).second) throw ConsistencyError("duplicate stratum label '" + s.label + "'");
      if (static_cast<int>(by_level.size()) <= lvl) by_level.resize(static_cast<std::size_t>(lvl) + 1);
      by_level[static_cast<std::size_t>(lvl)].push_back(&s);
    }
    for (std::size_t lvl = 1; lvl < by_level.size(); ++lvl) {
      if (by_level[lvl].empty()) throw ConsistencyError("stratum levels must be contiguous");
      levels_.emplace_back();
      for (const StratumSpec *s : by_level[lvl]) {
        Stratum z{s->label, s->index_set, {}};
        for (int j : s->index_set) {
          MultiIndex want = s->index_set.without(j);
          auto given = s->parents.find(j);
          std::optional<std::size_t> found;
          if (given != s->parents.end()) {
            found = find_at(static_cast<int>(lvl) - 1, given->second);
            if (!found) throw ConsistencyError("stratum '" + s->label + "' names unknown parent '" + given->second + "'");
            if (levels_[lvl - 1][*found].index_set != want)
              throw ConsistencyError("parent '" + given->second + "' of '" + s->label + "' has the wrong index set");
          } else {
            for (std::size_t k = 0; k < levels_[lvl - 1].size(); ++k)
              if (levels_[lvl - 1][k].index_set == want) {
                if (found) throw ConsistencyError("parent of '" + s->label + "' removing index " +
                                                  std::to_string(j + 1) + " is ambiguous");
                found = k;
              }
            if (!found) throw ConsistencyError("stratum '" + s->label + "' has no parent with index set " + want.str());
          }
          z.parents.emplace(j, *found);
        }
        levels_[lvl].push_back(std::move(z));
      }
    }
    check_commuting_parents();
    for (const auto &s : higher)
      for (const auto &[j, lbl] : s.parents)
        if (!s.index_set.contains(j))
          throw ConsistencyError("stratum '" + s.label + "' lists a parent for an index it does not contain");
  }

  [[nodiscard]] int components() const { return static_cast<int>(names_.size()); }
  [[nodiscard]] const std::vector<std::string> &component_names() const { return names_; }
  /// Highest nonempty level.
  [[nodiscard]] int top_level() const { return static_cast<int>(levels_.size()) - 1; }
  [[nodiscard]] std::size_t count(int p) const {
    return (p < 0 || p > top_level()) ? 0 : levels_[static_cast<std::size_t>(p)].size();
  }
  [[nodiscard]] const std::vector<Stratum> &strata(int p) const {
    static const std::vector<Stratum> none;
    return (p < 0 || p > top_level()) ? none : levels_[static_cast<std::size_t>(p)];
  }
  [[nodiscard]] const Stratum &at(StratumRef r) const { return strata(r.level).at(r.pos); }

  [[nodiscard]] std::optional<StratumRef> find(const std::string &label) const {
    for (int p = 0; p <= top_level(); ++p)
      if (auto k = find_at(p, label)) return StratumRef{p, *k};
    return std::nullopt;
  }

  /// Unique stratum containing `from` whose index set is `target` ⊂ I(from).
  [[nodiscard]] StratumRef ancestor(StratumRef from, const MultiIndex &target) const {
    const Stratum *z = &at(from);
    if (target.empty() || !target.is_subset_of(z->index_set)) throw DimensionError("ancestor index set must be a nonempty subset");
    StratumRef cur = from;
    for (int j : z->index_set.values()) {
      if (target.contains(j)) continue;
      const Stratum &s = at(cur);
      cur = StratumRef{cur.level - 1, s.parents.at(j)};
    }
    return cur;
  }

  /// (child position at level p+1, removed index) for every child of (p, pos).
  [[nodiscard]] std::vector<std::pair<std::size_t, int>> children(int p, std::size_t pos) const {
    std::vector<std::pair<std::size_t, int>> out;
    const auto &next = strata(p + 1);
    for (std::size_t k = 0; k < next.size(); ++k)
      for (const auto &[j, par] : next[k].parents)
        if (par == pos) out.emplace_back(k, j);
    return out;
  }

  /// No two strata of the same level share an index set.
  [[nodiscard]] bool is_simplicial() const {
    for (const auto &lvl : levels_) {
      std::set<MultiIndex> sets;
      for (const auto &z : lvl)
        if (!sets.insert(z.index_set).second) return false;
    }
    return true;
  }

  /// Renumbers components by `perm` (component i becomes perm[i]) and
  /// reorders the component list accordingly; signs follow the new order.
  [[nodiscard]] SemistableCombinatorics relabeled(const std::vector<int> &perm) const {
    if (static_cast<int>(perm.size()) != components()) throw DimensionError("permutation size mismatch");
    permutation_sign(perm);
    std::vector<std::string> names(names_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) names[static_cast<std::size_t>(perm[i])] = names_[i];
    std::vector<StratumSpec> specs;
    for (int p = 1; p <= top_level(); ++p)
      for (const auto &z : strata(p)) {
        std::vector<int> idx;
        for (int j : z.index_set) idx.push_back(perm[static_cast<std::size_t>(j)]);
        StratumSpec s{z.label, MultiIndex::from_unsorted(idx), {}};
        for (const auto &[j, par] : z.parents)
          s.parents.emplace(perm[static_cast<std::size_t>(j)], strata(p - 1)[par].label);
        specs.push_back(std::move(s));
      }
    return SemistableCombinatorics(std::move(names), specs);
  }

private:
  [[nodiscard]] std::optional<std::size_t> find_at(int p, const std::string &label) const {
    const auto &lvl = strata(p);
    for (std::size_t k = 0; k < lvl.size(); ++k)
      if (lvl[k].label == label) return k;
    return std::nullopt;
  }

  void check_commuting_parents() const {
    for (int p = 2; p <= top_level(); ++p)
      for (const auto &z : strata(p))
        for (int j : z.index_set)
          for (int k : z.index_set) {
            if (j >= k) continue;
            std::size_t via_j = strata(p - 1)[z.parents.at(j)].parents.at(k);
            std::size_t via_k = strata(p - 1)[z.parents.at(k)].parents.at(j);
            if (via_j != via_k)
              throw ConsistencyError("parent paths of '" + z.label + "' do not commute");
          }
  }

  std::vector<std::string> names_;
  std::vector<std::vector<Stratum>> levels_;
};

// ---------------------------------------------------------------------------
// Standard complexes.

namespace complexes {

inline std::string component_label(int i) { return "Y" + std::to_string(i + 1); }

inline std::string set_label(const MultiIndex &s) {
  std::string out = "Y";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "_" : "") + std::to_string(s[k] + 1);
  return out;
}

inline std::vector<std::string> component_labels(int m) {
  std::vector<std::string> v;
  for (int i = 0; i < m; ++i) v.push_back(component_label(i));
  return v;
}

/// A single smooth component.
inline SemistableCombinatorics point() { return SemistableCombinatorics(component_labels(1), {}); }

/// k components in a row, consecutive ones meeting once.
inline SemistableCombinatorics chain(int k) {
  std::vector<SemistableCombinatorics::StratumSpec> s;
  for (int i = 0; i + 1 < k; ++i) {
    MultiIndex e{i, i + 1};
    s.push_back({set_label(e), e, {}});
  }
  return SemistableCombinatorics(component_labels(k), s);
}

/// Cycle of m components (m >= 2); for m = 2 the two components meet twice.
inline SemistableCombinatorics mgon(int m) {
  if (m < 2) throw DimensionError("an m-gon needs m >= 2");
  std::vector<SemistableCombinatorics::StratumSpec> s;
  if (m == 2) {
    MultiIndex e{0, 1};
    for (int c = 0; c < 2; ++c)
      s.push_back({"Y1_2#" + std::to_string(c + 1), e, {{0, "Y2"}, {1, "Y1"}}});
  } else {
    for (int i = 0; i < m; ++i) {
      MultiIndex e = MultiIndex::from_unsorted({i, (i + 1) % m});
      s.push_back({set_label(e), e, {}});
    }
  }
  return SemistableCombinatorics(component_labels(m), s);
}

/// Boundary of the d-simplex: d+1 components, every proper subset a stratum.
inline SemistableCombinatorics simplex_boundary(int d) {
  std::vector<SemistableCombinatorics::StratumSpec> s;
  for (int k = 2; k <= d; ++k)
    for (auto &sub : subsets(d + 1, k)) s.push_back({set_label(sub), sub, {}});
  return SemistableCombinatorics(component_labels(d + 1), s);
}

/// Full d-simplex: d+1 components all meeting.
inline SemistableCombinatorics full_simplex(int d) {
  std::vector<SemistableCombinatorics::StratumSpec> s;
  for (int k = 2; k <= d + 1; ++k)
    for (auto &sub : subsets(d + 1, k)) s.push_back({set_label(sub), sub, {}});
  return SemistableCombinatorics(component_labels(d + 1), s);
}

/// Components of b are numbered after those of a.
inline SemistableCombinatorics disjoint_union(const SemistableCombinatorics &a, const SemistableCombinatorics &b) {
  int shift = a.components();
  std::vector<std::string> names;
  for (const auto &n : a.component_names()) names.push_back("A." + n);
  for (const auto &n : b.component_names()) names.push_back("B." + n);
  std::vector<SemistableCombinatorics::StratumSpec> specs;
  auto take = [&](const SemistableCombinatorics &c, int off, const std::string &tag) {
    for (int p = 1; p <= c.top_level(); ++p)
      for (const auto &z : c.strata(p)) {
        std::vector<int> idx;
        for (int j : z.index_set) idx.push_back(j + off);
        SemistableCombinatorics::StratumSpec s{tag + z.label, MultiIndex(idx), {}};
        for (const auto &[j, par] : z.parents) s.parents.emplace(j + off, tag + c.strata(p - 1)[par].label);
        specs.push_back(std::move(s));
      }
  };
  take(a, 0, "A.");
  take(b, shift, "B.");
  return SemistableCombinatorics(std::move(names), specs);
}

} // namespace complexes

// ---------------------------------------------------------------------------

/// Finite-dimensional stand-in for H^2 of a stratum. Restriction matrices
/// may be absent when only pushforwards are needed.
struct H2Entry {
  std::size_t dim = 0;
  std::map<std::size_t, QVector> gysin;    // child position (level+1) → class in Q^dim
  std::map<std::size_t, QMatrix> restrict; // child position → d_child × dim
};

class H2Model {
public:
  H2Model() = default;

  void set(StratumRef r, H2Entry e) {
    for (const auto &[child, g] : e.gysin)
      if (g.size() != e.dim) throw DimensionError("Gysin vector length must equal the stratum's H2 dimension");
    for (const auto &[child, mtx] : e.restrict)
      if (mtx.cols() != e.dim) throw DimensionError("restriction matrix must have one column per H2 basis vector");
    entries_[r] = std::move(e);
  }
  [[nodiscard]] bool has(StratumRef r) const { return entries_.contains(r); }
  [[nodiscard]] const H2Entry &at(StratumRef r) const {
    auto it = entries_.find(r);
    if (it == entries_.end())
      throw ConsistencyError("no H2 data for stratum at level " + std::to_string(r.level) + " position " + std::to_string(r.pos));
    return it->second;
  }
  [[nodiscard]] const std::map<StratumRef, H2Entry> &entries() const { return entries_; }

  /// Checks dimensions of restriction matrices against children's dims.
  void validate_shapes(const SemistableCombinatorics &c) const {
    for (const auto &[ref, e] : entries_) {
      if (ref.pos >= c.count(ref.level)) throw DimensionError("H2 data for a nonexistent stratum");
      for (const auto &[child, g] : e.gysin)
        if (child >= c.count(ref.level + 1)) throw DimensionError("Gysin class for a nonexistent child");
      for (const auto &[child, mtx] : e.restrict) {
        StratumRef cr{ref.level + 1, child};
        if (child >= c.count(ref.level + 1)) throw DimensionError("restriction to a nonexistent child");
        if (has(cr) && mtx.rows() != at(cr).dim) throw DimensionError("restriction matrix rows must equal the child's H2 dimension");
      }
    }
  }

  /// d_W = 1 and every Gysin class equal to 1; optional all-ones restrictions.
  static H2Model unit(const SemistableCombinatorics &c, bool with_restrictions = false) {
    H2Model h;
    for (int p = 0; p <= c.top_level(); ++p)
      for (std::size_t k = 0; k < c.count(p); ++k) {
        H2Entry e;
        e.dim = 1;
        for (const auto &[child, j] : c.children(p, k)) {
          e.gysin.emplace(child, QVector{Rat(1)});
          if (with_restrictions) e.restrict.emplace(child, QMatrix::from_rows({{Rat(1)}}));
        }
        h.set(StratumRef{p, k}, std::move(e));
      }
    return h;
  }

  /// Every Gysin class set to zero (same dimensions as `unit`).
  static H2Model zero(const SemistableCombinatorics &c) {
    H2Model h;
    for (int p = 0; p <= c.top_level(); ++p)
      for (std::size_t k = 0; k < c.count(p); ++k) {
        H2Entry e;
        e.dim = 1;
        for (const auto &[child, j] : c.children(p, k)) e.gysin.emplace(child, QVector{Rat(0)});
        h.set(StratumRef{p, k}, std::move(e));
      }
    return h;
  }

  /// Double curves without triple points: H^2(W) has one basis vector per
  /// child curve, which is also that child's Gysin class. Restriction reads
  /// off the self-intersection, +1 in the lower-numbered component and -1 in
  /// the higher one, so the two cancel. Double curves inside one component
  /// are disjoint, so other children restrict to zero.
  static H2Model unit_intersection(const SemistableCombinatorics &c) {
    if (c.top_level() > 1) throw DomainError("unit intersection model needs a complex without triple strata");
    H2Model h;
    for (std::size_t k = 0; k < c.count(0); ++k) {
      auto kids = c.children(0, k);
      H2Entry e;
      e.dim = kids.size();
      for (std::size_t t = 0; t < kids.size(); ++t) {
        auto [child, removed] = kids[t];
        QVector g(e.dim);
        g[t] = Rat(1);
        e.gysin.emplace(child, g);
        // W keeps the smaller index exactly when the larger one was removed
        int kept = c.strata(0)[k].index_set[0];
        int self = kept < removed ? 1 : -1;
        QMatrix r(1, e.dim);
        r(0, t) = Rat(self);
        e.restrict.emplace(child, r);
      }
      h.set(StratumRef{0, k}, std::move(e));
    }
    for (std::size_t k = 0; k < c.count(1); ++k) h.set(StratumRef{1, k}, H2Entry{1, {}, {}});
    return h;
  }

private:
  std::map<StratumRef, H2Entry> entries_;
};

// ---------------------------------------------------------------------------

/// δ_p^*: Q^{#Y^(p)} → Q^{#Y^(p+1)}, entry ε(I(W), I(Z)) when W is a parent of Z.
inline QMatrix delta_pullback(const SemistableCombinatorics &c, int p) {
  QMatrix m(c.count(p + 1), c.count(p));
  const auto &next = c.strata(p + 1);
  for (std::size_t z = 0; z < next.size(); ++z)
    for (const auto &[j, w] : next[z].parents) {
      if (w >= c.count(p)) throw ConsistencyError("malformed parent structure");
      m(z, w) += Rat(removal_sign(next[z].index_set, j));
    }
  return m;
}

namespace detail {
inline std::vector<std::size_t> block_offsets(const SemistableCombinatorics &c, const H2Model &h2, int level) {
  std::vector<std::size_t> off{0};
  for (std::size_t k = 0; k < c.count(level); ++k) off.push_back(off.back() + h2.at(StratumRef{level, k}).dim);
  return off;
}
} // namespace detail

/// δ_{p*}: Q^{#Y^(p)} → ⊕_{W ∈ Y^(p-1)} Q^{d_W}, alternating sum of Gysin classes.
inline QMatrix delta_pushforward(const SemistableCombinatorics &c, int p, const H2Model &h2) {
  if (p <= 0) return QMatrix(0, c.count(p));
  auto off = detail::block_offsets(c, h2, p - 1);
  QMatrix m(off.back(), c.count(p));
  const auto &lvl = c.strata(p);
  for (std::size_t z = 0; z < lvl.size(); ++z)
    for (const auto &[j, w] : lvl[z].parents) {
      const H2Entry &e = h2.at(StratumRef{p - 1, w});
      auto g = e.gysin.find(z);
      if (g == e.gysin.end())
        throw ConsistencyError("missing Gysin class of '" + lvl[z].label + "' in '" + c.strata(p - 1)[w].label + "'");
      Rat s(removal_sign(lvl[z].index_set, j));
      for (std::size_t t = 0; t < e.dim; ++t) m(off[w] + t, z) += s * g->second[t];
    }
  return m;
}

/// Pullback on the H^2 models: ⊕_{W ∈ Y^(p)} Q^{d_W} → ⊕_{Z ∈ Y^(p+1)} Q^{d_Z}.
inline QMatrix delta_pullback_h2(const SemistableCombinatorics &c, int p, const H2Model &h2) {
  auto src = detail::block_offsets(c, h2, p);
  auto dst = detail::block_offsets(c, h2, p + 1);
  QMatrix m(dst.back(), src.back());
  const auto &next = c.strata(p + 1);
  for (std::size_t z = 0; z < next.size(); ++z)
    for (const auto &[j, w] : next[z].parents) {
      const H2Entry &e = h2.at(StratumRef{p, w});
      auto r = e.restrict.find(z);
      if (r == e.restrict.end())
        throw ConsistencyError("missing restriction from '" + c.strata(p)[w].label + "' to '" + next[z].label + "'");
      std::size_t dz = h2.at(StratumRef{p + 1, z}).dim;
      if (r->second.rows() != dz || r->second.cols() != e.dim) throw DimensionError("restriction matrix has the wrong shape");
      Rat s(removal_sign(next[z].index_set, j));
      for (std::size_t a = 0; a < dz; ++a)
        for (std::size_t b = 0; b < e.dim; ++b) m(dst[z] + a, src[w] + b) += s * r->second(a, b);
    }
  return m;
}

/// δ_{p-1}^*∘δ_{p*} + δ_{p+1*}∘δ_p^* as a matrix Q^{#Y^(p)} → ⊕_{Z ∈ Y^(p)} Q^{d_Z}.
inline QMatrix relation_residual(const SemistableCombinatorics &c, const H2Model &h2, int p) {
  if (p < 1) throw DomainError("the pullback/pushforward relation is stated for p >= 1");
  QMatrix first = delta_pullback_h2(c, p - 1, h2) * delta_pushforward(c, p, h2);
  QMatrix second = delta_pushforward(c, p + 1, h2) * delta_pullback(c, p);
  return first + second;
}

inline bool validate_relation(const SemistableCombinatorics &c, const H2Model &h2, int p) {
  return relation_residual(c, h2, p).is_zero();
}

// ---------------------------------------------------------------------------

struct E2Quotient {
  std::size_t dim = 0;
  std::vector<QVector> representatives; // lift a basis of ker/im
  std::vector<QVector> cocycles;        // basis of ker δ_p^*
  std::vector<QVector> coboundaries;    // spanning set of im δ_{p-1}^*
};

/// E_2^{p,0} = ker δ_p^* / im δ_{p-1}^*.
inline E2Quotient e2_p0(const SemistableCombinatorics &c, int p) {
  E2Quotient out;
  std::size_t width = c.count(p);
  out.cocycles = kernel_basis(delta_pullback(c, p));
  if (p >= 1) {
    QMatrix prev = delta_pullback(c, p - 1);
    for (std::size_t j = 0; j < prev.cols(); ++j) {
      QVector col = prev.column(j);
      if (!is_zero_vector(col)) out.coboundaries.push_back(std::move(col));
    }
  }
  out.dim = quotient_dim(out.coboundaries, out.cocycles);
  auto span = out.coboundaries;
  std::size_t r = span_rank(span, width);
  for (const auto &v : out.cocycles) {
    span.push_back(v);
    std::size_t r2 = span_rank(span, width);
    if (r2 > r) {
      out.representatives.push_back(v);
      r = r2;
    } else {
      span.pop_back();
    }
  }
  return out;
}

struct E2Corner {
  int p = 0;
  std::vector<QVector> kernel_basis; // ker δ_p^* ∩ ker δ_{p*}
  E2Quotient target;
};

inline E2Corner e2_corner_kernel(const SemistableCombinatorics &c, int p, const H2Model &h2) {
  E2Corner out;
  out.p = p;
  QMatrix stacked = QMatrix::vstack(delta_pullback(c, p), delta_pushforward(c, p, h2));
  out.kernel_basis = tropmono::kernel_basis(stacked);
  out.target = e2_p0(c, p);
  return out;
}

struct CornerMap {
  QMatrix matrix; // target.dim × kernel dim, coordinates in the representative basis
  E2Corner corner;
  bool injective = false;
  bool surjective = false;
  bool iso = false;
};

/// The map E_2^{-p,2p}(p) → E_2^{p,0} induced by the identity on H^0(Y^(p)).
inline CornerMap corner_monodromy(const SemistableCombinatorics &c, int p, const H2Model &h2) {
  CornerMap out;
  out.corner = e2_corner_kernel(c, p, h2);
  const auto &tgt = out.corner.target;
  std::size_t width = c.count(p), e = tgt.dim, k = out.corner.kernel_basis.size();
  // columns: representatives, then coboundaries, then the kernel vectors to express
  std::vector<QVector> cols = tgt.representatives;
  cols.insert(cols.end(), tgt.coboundaries.begin(), tgt.coboundaries.end());
  std::size_t basis_cols = cols.size();
  cols.insert(cols.end(), out.corner.kernel_basis.begin(), out.corner.kernel_basis.end());
  out.matrix = QMatrix(e, k);
  if (k > 0 && width > 0) {
    auto [red, piv] = rref(QMatrix::from_columns(cols, width));
    // representatives are independent modulo the coboundaries, so they are pivots
    for (std::size_t row = 0; row < piv.size(); ++row) {
      if (piv[row] >= basis_cols) throw ConsistencyError("corner kernel vector is not a cocycle");
      if (piv[row] >= e) continue;
      for (std::size_t col = 0; col < k; ++col) out.matrix(piv[row], col) = red(row, basis_cols + col);
    }
  }
  std::size_t rk = rank(out.matrix);
  out.injective = rk == k;
  out.surjective = rk == e;
  out.iso = out.injective && out.surjective;
  return out;
}

} // namespace tropmono
