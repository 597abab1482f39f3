#pragma once

#include <map>
#include <string>
#include <vector>

#include "tropmono/diff_form.hpp"
#include "tropmono/error.hpp"
#include "tropmono/matrix.hpp"
#include "tropmono/multi_index.hpp"

namespace tropmono {

/// The standard n-simplex Δ ⊂ R^{n+1} (coordinates x_0..x_n, Σx = 1).
class SimplexContext {
public:
  explicit SimplexContext(int n) : n_(n) {
    if (n < 1) throw DimensionError("simplex dimension must be at least 1");
  }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int ambient_dim() const { return n_ + 1; }

  [[nodiscard]] QVector vertex(int j) const {
    if (j < 0 || j > n_) throw DimensionError("vertex index out of range");
    QVector v(static_cast<std::size_t>(n_ + 1));
    v[static_cast<std::size_t>(j)] = Rat(1);
    return v;
  }
  /// Barycenter of the face spanned by the vertices in J.
  [[nodiscard]] QVector barycenter(const MultiIndex &face) const {
    if (face.empty() || !face.within(0, n_ + 1)) throw DimensionError("face must be a nonempty subset of {0..n}");
    QVector v(static_cast<std::size_t>(n_ + 1));
    Rat w = Rat(1) / Rat(static_cast<long>(face.size()));
    for (int j : face) v[static_cast<std::size_t>(j)] = w;
    return v;
  }
  [[nodiscard]] bool on_hyperplane(const QVector &point) const {
    if (static_cast<int>(point.size()) != n_ + 1) return false;
    Rat s(0);
    for (const auto &x : point) s += x;
    return s == Rat(1);
  }

private:
  int n_;
};

/// Pullback of an ambient form to the face Δ^I, written in the canonical
/// chart that eliminates the pivot coordinate (x_pivot = 1 - Σ others,
/// dx_pivot = -Σ d others); coordinates outside I are set to zero.
inline DiffForm restrict_to_face(const DiffForm &a, const MultiIndex &face, int pivot) {
  int m = a.dim();
  if (!face.within(0, m) || !face.contains(pivot)) throw DimensionError("pivot must lie in the face");
  auto mu = static_cast<std::size_t>(m);
  QMatrix lin(mu, mu);
  QVector shift(mu);
  for (int j : face) {
    auto ju = static_cast<std::size_t>(j);
    if (j == pivot) continue;
    lin(ju, ju) = Rat(1);
    lin(static_cast<std::size_t>(pivot), ju) = Rat(-1);
  }
  shift[static_cast<std::size_t>(pivot)] = Rat(1);
  return pullback_affine(lin, shift, a);
}

/// An r-form on Δ, stored as an ambient form on R^{n+1}. Two values are
/// equal when their restrictions to the hyperplane Σx = 1 agree.
class SimplexForm {
public:
  SimplexForm() = default;
  SimplexForm(int n, int degree, DiffForm ambient) : n_(n), degree_(degree), ambient_(std::move(ambient)) {
    if (ambient_.dim() != n + 1) throw DimensionError("ambient form must live on R^{n+1}");
    if (degree < 0 || degree > n + 1) throw DimensionError("form degree out of range");
    for (const auto &[idx, c] : ambient_.terms())
      if (static_cast<int>(idx.size()) != degree) throw DimensionError("ambient form is not of the declared degree");
  }
  static SimplexForm zero(int n, int degree) { return SimplexForm(n, degree, DiffForm(n + 1)); }
  static SimplexForm constant(int n, const Rat &c) {
    return SimplexForm(n, 0, DiffForm::function(Poly::constant(n + 1, c)));
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const DiffForm &ambient() const { return ambient_; }

  /// Unique representative without dx_pivot and without x_pivot.
  [[nodiscard]] DiffForm canonical(int pivot = 0) const {
    std::vector<int> all(static_cast<std::size_t>(n_ + 1));
    for (int j = 0; j <= n_; ++j) all[static_cast<std::size_t>(j)] = j;
    return tropmono::restrict_to_face(ambient_, MultiIndex(all), pivot);
  }
  [[nodiscard]] DiffForm restrict_to_face(const MultiIndex &face) const {
    return tropmono::restrict_to_face(ambient_, face, face[0]);
  }
  [[nodiscard]] bool has_constant_coefficients() const { return canonical(0).has_constant_coefficients(); }
  [[nodiscard]] bool is_zero() const { return canonical(0).is_zero(); }

  /// Value of a 0-form that is constant on Δ.
  [[nodiscard]] Rat constant_value() const {
    if (degree_ != 0) throw DomainError("constant_value needs a 0-form");
    DiffForm c = canonical(0);
    if (!c.has_constant_coefficients()) throw DomainError("0-form is not constant on the simplex");
    auto it = c.terms().find(MultiIndex{});
    return it == c.terms().end() ? Rat(0) : it->second.constant_term();
  }

  SimplexForm &operator+=(const SimplexForm &o) {
    compatible(o);
    ambient_ += o.ambient_;
    return *this;
  }
  SimplexForm &operator-=(const SimplexForm &o) {
    compatible(o);
    ambient_ -= o.ambient_;
    return *this;
  }
  SimplexForm &operator*=(const Rat &s) {
    ambient_ *= s;
    return *this;
  }
  friend SimplexForm operator+(SimplexForm a, const SimplexForm &b) { return a += b; }
  friend SimplexForm operator-(SimplexForm a, const SimplexForm &b) { return a -= b; }
  friend SimplexForm operator*(const Rat &s, SimplexForm a) { return a *= s; }
  friend SimplexForm operator*(SimplexForm a, const Rat &s) { return a *= s; }
  friend bool operator==(const SimplexForm &a, const SimplexForm &b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.canonical(0) == b.canonical(0);
  }

  [[nodiscard]] std::string str() const { return canonical(0).str(); }

private:
  void compatible(const SimplexForm &o) const {
    if (o.n_ != n_ || o.degree_ != degree_) throw DimensionError("simplex forms of different shape");
  }
  int n_ = 0;
  int degree_ = 0;
  DiffForm ambient_;
};

/// C_Q: left contraction by Σ q_j ∂/∂x_j.
inline SimplexForm contract(const QVector &q, const SimplexForm &a) {
  if (a.degree() == 0) throw DomainError("contraction of a 0-form");
  if (static_cast<int>(q.size()) != a.n() + 1) throw DimensionError("contraction vector has wrong dimension");
  return SimplexForm(a.n(), a.degree() - 1, contract_vector(q, a.ambient()));
}

inline DiffForm contract_ambient(const QVector &q, const DiffForm &a) { return contract_vector(q, a); }

/// Contraction by the position (Euler) vector field Σ x_j ∂/∂x_j.
inline DiffForm contract_position(const DiffForm &a) {
  std::vector<Poly> field;
  for (int j = 0; j < a.dim(); ++j) field.push_back(Poly::variable(a.dim(), j));
  return contract_field(field, a);
}

/// Star-shaped integration on R^m centered at an arbitrary point q:
/// ∫_0^1 <∂/∂t, γ^*α> dt with γ(x,t) = (1-t)q + t x. On f dx_I this is
/// Σ_k (-1)^k (x_{i_k} - q_{i_k}) (∫_0^1 t^{r-1} f(γ(x,t)) dt) dx_{I∖i_k}.
inline DiffForm star_integrate_ambient(const QVector &q, const DiffForm &a) {
  int m = a.dim();
  if (static_cast<int>(q.size()) != m) throw DimensionError("star center has wrong dimension");
  // x_j ↦ q_j + t (x_j - q_j) in R^{m+1}, t being the last variable
  std::vector<Poly> ray;
  Poly t = Poly::variable(m + 1, m);
  for (int j = 0; j < m; ++j) {
    const Rat &qj = q[static_cast<std::size_t>(j)];
    ray.push_back(Poly::constant(m + 1, qj) + t * (Poly::variable(m + 1, j) - Poly::constant(m + 1, qj)));
  }
  DiffForm out(m);
  for (const auto &[idx, c] : a.terms()) {
    int r = static_cast<int>(idx.size());
    if (r == 0) throw DomainError("star-shaped integration of a 0-form");
    Poly along = c.substitute(ray, m + 1);
    Poly integrated(m);
    for (const auto &[e, coef] : along.terms()) {
      Exponent ex(e.begin(), e.end() - 1);
      integrated.add_term(std::move(ex), coef / Rat(r + e.back()));
    }
    for (std::size_t k = 0; k < idx.size(); ++k) {
      int ik = idx[k];
      Poly lever = Poly::variable(m, ik) - Poly::constant(m, q[static_cast<std::size_t>(ik)]);
      out.add(idx.without_position(k), (integrated * lever) * Rat(minus_one_pow(static_cast<long>(k))));
    }
  }
  return out;
}

/// I_P on Δ; P must satisfy Σ p_j = 1.
inline SimplexForm star_integrate(const QVector &p, const SimplexForm &a) {
  if (a.degree() == 0) throw DomainError("star-shaped integration of a 0-form");
  SimplexContext ctx(a.n());
  if (!ctx.on_hyperplane(p)) throw DomainError("star center must lie on the hyperplane of the simplex");
  return SimplexForm(a.n(), a.degree() - 1, star_integrate_ambient(p, a.ambient()));
}

inline SimplexForm exterior_d(const SimplexForm &a) {
  return SimplexForm(a.n(), a.degree() + 1, exterior_d(a.ambient()));
}

// ---------------------------------------------------------------------------

/// Cochain on the faces of Δ: one value per (r+1)-subset of {0..n}.
template <class F>
class SimplexCochain {
public:
  SimplexCochain() = default;
  SimplexCochain(int n, int r, std::map<MultiIndex, F> values) : n_(n), r_(r), values_(std::move(values)) {
    auto keys = subsets(n + 1, r + 1);
    if (keys.empty()) throw DimensionError("cochain degree out of range");
    if (keys.size() != values_.size()) throw DimensionError("cochain must have a value on every face");
    for (const auto &k : keys)
      if (!values_.contains(k)) throw DimensionError("cochain is missing face " + k.str());
  }
  static SimplexCochain constant(int n, int r, const F &v) {
    std::map<MultiIndex, F> vals;
    for (auto &k : subsets(n + 1, r + 1)) vals.emplace(k, v);
    return SimplexCochain(n, r, std::move(vals));
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int degree() const { return r_; }
  [[nodiscard]] const F &at(const MultiIndex &face) const {
    auto it = values_.find(face);
    if (it == values_.end()) throw DimensionError("no cochain value on face " + face.str());
    return it->second;
  }
  [[nodiscard]] const std::map<MultiIndex, F> &values() const { return values_; }

  friend bool operator==(const SimplexCochain &a, const SimplexCochain &b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.values_ == b.values_;
  }

private:
  int n_ = 0, r_ = 0;
  std::map<MultiIndex, F> values_;
};

/// (δc)(J) = Σ_j (-1)^j c(J minus its j-th element).
template <class F>
SimplexCochain<F> coboundary(const SimplexCochain<F> &c) {
  int n = c.n(), r = c.degree();
  if (r >= n) throw DimensionError("no faces above the top degree");
  std::map<MultiIndex, F> out;
  for (auto &face : subsets(n + 1, r + 2)) {
    F acc = c.at(face.without_position(0));
    for (std::size_t j = 1; j < face.size(); ++j) {
      const F &v = c.at(face.without_position(j));
      if (j % 2 == 0) acc += v;
      else acc -= v;
    }
    out.emplace(face, std::move(acc));
  }
  return SimplexCochain<F>(n, r + 1, std::move(out));
}

/// Face-wise star integration centered at the face barycenters.
inline SimplexCochain<SimplexForm> integrate_at_barycenters(const SimplexCochain<SimplexForm> &c) {
  SimplexContext ctx(c.n());
  std::map<MultiIndex, SimplexForm> out;
  for (const auto &[face, form] : c.values()) out.emplace(face, star_integrate(ctx.barycenter(face), form));
  return SimplexCochain<SimplexForm>(c.n(), c.degree(), std::move(out));
}

/// β_0,…,β_p with β_0 ≡ β and β_r = δ(I β_{r-1}); `top` holds β_p as numbers.
struct BetaLadder {
  int p = 0;
  std::vector<SimplexCochain<SimplexForm>> levels;
  SimplexCochain<Rat> top;
};

inline BetaLadder beta_recursion(const SimplexForm &beta, int p) {
  int n = beta.n();
  if (p < 1 || p > n) throw DomainError("beta recursion needs 1 <= p <= n");
  if (beta.degree() != p) throw DimensionError("beta must be a p-form");
  if (!beta.has_constant_coefficients()) throw DomainError("beta must have constant coefficients");
  SimplexForm rep(n, p, beta.canonical(0));
  BetaLadder out;
  out.p = p;
  out.levels.push_back(SimplexCochain<SimplexForm>::constant(n, 0, rep));
  for (int r = 1; r <= p; ++r) out.levels.push_back(coboundary(integrate_at_barycenters(out.levels.back())));
  std::map<MultiIndex, Rat> top;
  for (const auto &[face, form] : out.levels.back().values()) top.emplace(face, form.constant_value());
  out.top = SimplexCochain<Rat>(n, p, std::move(top));
  return out;
}

/// Closed form for β_r(I): (-1)^r/(p(p-1)…(p-r+1)) Σ_j (-1)^j (C_{P^{i_0}}∘…∘Ĉ_{P^{i_j}}∘…∘C_{P^{i_r}})(β).
inline SimplexForm beta_closed_form(const SimplexForm &beta, int r, const MultiIndex &face) {
  int n = beta.n(), p = beta.degree();
  if (r < 0 || r > p) throw DimensionError("closed form needs 0 <= r <= p");
  if (static_cast<int>(face.size()) != r + 1 || !face.within(0, n + 1))
    throw DimensionError("face must have r+1 vertices in {0..n}");
  SimplexContext ctx(n);
  DiffForm rep = beta.canonical(0);
  DiffForm sum(n + 1);
  for (std::size_t j = 0; j <= static_cast<std::size_t>(r); ++j) {
    DiffForm cur = rep;
    // rightmost contraction acts first
    for (std::size_t k = face.size(); k-- > 0;) {
      if (k == j) continue;
      cur = contract_vector(ctx.vertex(face[k]), cur);
    }
    if (j % 2 == 0) sum += cur;
    else sum -= cur;
  }
  Rat falling(1);
  for (int t = 0; t < r; ++t) falling *= Rat(p - t);
  sum *= Rat(minus_one_pow(r)) / falling;
  return SimplexForm(n, p - r, std::move(sum));
}

/// β|_{Δ^I} == (-1)^{p(p+1)/2} p! β_p(I) dx_{i_1}∧…∧dx_{i_p}, pivot i_0.
inline bool restriction_formula_holds(const SimplexForm &beta, const BetaLadder &ladder, const MultiIndex &face) {
  int p = ladder.p;
  DiffForm lhs = beta.restrict_to_face(face);
  Rat scale = Rat(minus_one_pow(static_cast<long>(p) * (p + 1) / 2)) * factorial(p) * ladder.top.at(face);
  DiffForm rhs = DiffForm::monomial(beta.n() + 1, face.without_position(0), scale);
  return lhs == rhs;
}

} // namespace tropmono
