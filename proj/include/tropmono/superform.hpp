#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropmono/error.hpp"
#include "tropmono/matrix.hpp"
#include "tropmono/multi_index.hpp"
#include "tropmono/polynomial.hpp"

namespace tropmono {

/// Basis element d'x_I ∧ d''x_J (indices 0-based, each block increasing).
struct SuperBasis {
  MultiIndex dprime;
  MultiIndex dsecond;

  [[nodiscard]] int p() const { return static_cast<int>(dprime.size()); }
  [[nodiscard]] int q() const { return static_cast<int>(dsecond.size()); }
  friend bool operator==(const SuperBasis &, const SuperBasis &) = default;
  friend auto operator<=>(const SuperBasis &, const SuperBasis &) = default;
};

/// Superform on R^n with polynomial coefficients. May mix bidegrees; every
/// graded operation acts piece by piece.
class Superform {
public:
  using Terms = std::map<SuperBasis, Poly>;

  Superform() = default;
  explicit Superform(int n) : n_(n) {
    if (n < 0) throw DimensionError("negative ambient dimension");
  }

  static Superform monomial(int n, MultiIndex dprime, MultiIndex dsecond, Poly coeff) {
    Superform w(n);
    w.add(SuperBasis{std::move(dprime), std::move(dsecond)}, std::move(coeff));
    return w;
  }
  static Superform monomial(int n, MultiIndex dprime, MultiIndex dsecond, const Rat &c) {
    return monomial(n, std::move(dprime), std::move(dsecond), Poly::constant(n, c));
  }
  static Superform function(const Poly &f) {
    return monomial(f.nvars(), {}, {}, f);
  }
  static Superform dprime_x(int n, int i) { return monomial(n, MultiIndex{i}, {}, Rat(1)); }
  static Superform dsecond_x(int n, int i) { return monomial(n, {}, MultiIndex{i}, Rat(1)); }

  [[nodiscard]] int dim() const { return n_; }
  [[nodiscard]] const Terms &terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// Adds coeff·basis; validates the index range.
  void add(SuperBasis b, Poly coeff) {
    if (coeff.nvars() != n_) throw DimensionError("coefficient ring does not match ambient dimension");
    if (!b.dprime.within(0, n_) || !b.dsecond.within(0, n_))
      throw DimensionError("superform index out of range");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(b), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  [[nodiscard]] std::set<std::pair<int, int>> bidegrees() const {
    std::set<std::pair<int, int>> out;
    for (const auto &[b, c] : terms_) out.emplace(b.p(), b.q());
    return out;
  }
  [[nodiscard]] Superform component(int p, int q) const {
    Superform out(n_);
    for (const auto &[b, c] : terms_)
      if (b.p() == p && b.q() == q) out.terms_.emplace(b, c);
    return out;
  }
  [[nodiscard]] bool is_homogeneous() const { return bidegrees().size() <= 1; }

  Superform &operator+=(const Superform &o) {
    same_space(o);
    for (const auto &[b, c] : o.terms_) add(b, c);
    return *this;
  }
  Superform &operator-=(const Superform &o) {
    same_space(o);
    for (const auto &[b, c] : o.terms_) add(b, -c);
    return *this;
  }
  Superform &operator*=(const Rat &s) {
    if (s.is_zero()) terms_.clear();
    for (auto &[b, c] : terms_) c *= s;
    return *this;
  }
  friend Superform operator+(Superform a, const Superform &b) { return a += b; }
  friend Superform operator-(Superform a, const Superform &b) { return a -= b; }
  friend Superform operator*(const Rat &s, Superform a) { return a *= s; }
  friend Superform operator-(Superform a) { return a *= Rat(-1); }
  friend bool operator==(const Superform &a, const Superform &b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto &[b, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")";
      for (int i : b.dprime) s += " d'x" + std::to_string(i + 1);
      for (int j : b.dsecond) s += " d''x" + std::to_string(j + 1);
    }
    return s;
  }

  void same_space(const Superform &o) const {
    if (o.n_ != n_) throw DimensionError("superforms on different ambient spaces");
  }

private:
  int n_ = 0;
  Terms terms_;
};

/// x ↦ A x' + b from R^{n'} (columns of A) to R^n (rows of A).
struct AffineMap {
  QMatrix linear;
  QVector translation;

  AffineMap() = default;
  AffineMap(QMatrix a, QVector b) : linear(std::move(a)), translation(std::move(b)) {
    if (translation.size() != linear.rows())
      throw DimensionError("affine translation length must equal target dimension");
  }
  static AffineMap linear_map(QMatrix a) {
    QVector b(a.rows());
    return AffineMap(std::move(a), std::move(b));
  }
  static AffineMap identity(std::size_t n) { return linear_map(QMatrix::identity(n)); }

  /// Parametrization of the affine span of the given points (rank-many
  /// columns taken from the differences to the first point).
  static AffineMap span_of_points(const std::vector<QVector> &points) {
    if (points.empty()) throw DimensionError("affine span of no points");
    std::size_t n = points.front().size();
    std::vector<QVector> diffs;
    for (std::size_t k = 1; k < points.size(); ++k) {
      if (points[k].size() != n) throw DimensionError("points of different dimension");
      QVector d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = points[k][i] - points[0][i];
      if (!in_span(d, diffs)) diffs.push_back(std::move(d));
    }
    return AffineMap(QMatrix::from_columns(diffs, n), points.front());
  }

  [[nodiscard]] int source_dim() const { return static_cast<int>(linear.cols()); }
  [[nodiscard]] int target_dim() const { return static_cast<int>(linear.rows()); }
};

// ---------------------------------------------------------------------------

/// Graded-commutative wedge product.
inline Superform wedge(const Superform &a, const Superform &b) {
  a.same_space(b);
  Superform out(a.dim());
  for (const auto &[ba, ca] : a.terms())
    for (const auto &[bb, cb] : b.terms()) {
      auto sp = shuffle_sign(ba.dprime, bb.dprime);
      if (!sp) continue;
      auto ss = shuffle_sign(ba.dsecond, bb.dsecond);
      if (!ss) continue;
      // d''x_J of the left factor moves past d'x_{I'} of the right factor
      int sign = sp->sign * ss->sign * minus_one_pow(static_cast<long>(ba.q()) * bb.p());
      out.add(SuperBasis{sp->merged, ss->merged}, (ca * cb) * Rat(sign));
    }
  return out;
}

inline Superform d_prime(const Superform &w) {
  int n = w.dim();
  Superform out(n);
  for (const auto &[b, c] : w.terms())
    for (int i = 0; i < n; ++i) {
      Poly dc = c.derivative(i);
      if (dc.is_zero()) continue;
      auto s = shuffle_sign(MultiIndex{i}, b.dprime);
      if (!s) continue;
      out.add(SuperBasis{s->merged, b.dsecond}, dc * Rat(s->sign));
    }
  return out;
}

inline Superform d_second(const Superform &w) {
  int n = w.dim();
  Superform out(n);
  for (const auto &[b, c] : w.terms())
    for (int j = 0; j < n; ++j) {
      Poly dc = c.derivative(j);
      if (dc.is_zero()) continue;
      auto s = shuffle_sign(MultiIndex{j}, b.dsecond);
      if (!s) continue;
      out.add(SuperBasis{b.dprime, s->merged}, dc * Rat(s->sign * minus_one_pow(b.p())));
    }
  return out;
}

/// The involution J: (p,q) → (q,p) with sign (-1)^{pq}.
inline Superform flip_J(const Superform &w) {
  Superform out(w.dim());
  for (const auto &[b, c] : w.terms())
    out.add(SuperBasis{b.dsecond, b.dprime}, c * Rat(minus_one_pow(static_cast<long>(b.p()) * b.q())));
  return out;
}

/// Monodromy N: (p,q) → (p-1,q+1), moving one d'-leg over to the d''-block.
/// Undefined on (0,q) pieces.
inline Superform monodromy_N(const Superform &w) {
  Superform out(w.dim());
  for (const auto &[b, c] : w.terms()) {
    int p = b.p();
    if (p == 0) throw DomainError("monodromy N is only defined in bidegrees (p,q) with p >= 1");
    for (int k = 0; k < p; ++k) {
      int ik = b.dprime[static_cast<std::size_t>(k)];
      auto s = shuffle_sign(MultiIndex{ik}, b.dsecond);
      if (!s) continue;
      // (-1)^{p-k} with k counted from 1
      int sign = minus_one_pow(p - (k + 1)) * s->sign;
      out.add(SuperBasis{b.dprime.without_position(static_cast<std::size_t>(k)), s->merged},
              c * Rat(sign));
    }
  }
  return out;
}

inline Superform monodromy_power(Superform w, int r) {
  for (int t = 0; t < r; ++t) w = monodromy_N(w);
  return w;
}

/// Pullback along φ: R^{n'} → R^n.
inline Superform pullback(const AffineMap &phi, const Superform &w) {
  if (phi.target_dim() != w.dim())
    throw DimensionError("affine map target does not match the form's ambient space");
  int src = phi.source_dim();
  // coordinate functions x_i = Σ_j A_ij x'_j + b_i
  std::vector<Poly> coords;
  std::vector<Superform> dprime_img, dsecond_img;
  coords.reserve(static_cast<std::size_t>(w.dim()));
  for (int i = 0; i < w.dim(); ++i) {
    auto iu = static_cast<std::size_t>(i);
    Poly li = Poly::constant(src, phi.translation[iu]);
    Superform dp(src), ds(src);
    for (int j = 0; j < src; ++j) {
      const Rat &aij = phi.linear(iu, static_cast<std::size_t>(j));
      if (aij.is_zero()) continue;
      li += Poly::variable(src, j) * aij;
      dp += aij * Superform::dprime_x(src, j);
      ds += aij * Superform::dsecond_x(src, j);
    }
    coords.push_back(std::move(li));
    dprime_img.push_back(std::move(dp));
    dsecond_img.push_back(std::move(ds));
  }
  Superform out(src);
  for (const auto &[b, c] : w.terms()) {
    Superform piece = Superform::function(c.substitute(coords, src));
    for (int i : b.dprime) piece = wedge(piece, dprime_img[static_cast<std::size_t>(i)]);
    for (int j : b.dsecond) piece = wedge(piece, dsecond_img[static_cast<std::size_t>(j)]);
    out += piece;
  }
  return out;
}

/// True when the restriction of w to the affine subspace parametrized by
/// `span` vanishes.
inline bool vanishes_on(const Superform &w, const AffineMap &span) {
  return pullback(span, w).is_zero();
}

/// Membership in the null subspace of a polyhedral complex: the form
/// restricts to zero on the affine span of every listed polyhedron.
inline bool is_null_on_complex(const Superform &w, const std::vector<AffineMap> &cell_spans) {
  for (const auto &span : cell_spans)
    if (!vanishes_on(w, span)) return false;
  return true;
}

} // namespace tropmono
