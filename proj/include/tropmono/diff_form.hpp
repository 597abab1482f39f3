#pragma once

#include <map>
#include <string>
#include <vector>

#include "tropmono/error.hpp"
#include "tropmono/matrix.hpp"
#include "tropmono/multi_index.hpp"
#include "tropmono/polynomial.hpp"

namespace tropmono {

/// Ordinary differential form Σ f_I dx_I on R^m with polynomial
/// coefficients; indices 0-based.
class DiffForm {
public:
  using Terms = std::map<MultiIndex, Poly>;

  DiffForm() = default;
  explicit DiffForm(int m) : m_(m) {}

  static DiffForm monomial(int m, MultiIndex idx, Poly coeff) {
    DiffForm f(m);
    f.add(std::move(idx), std::move(coeff));
    return f;
  }
  static DiffForm monomial(int m, MultiIndex idx, const Rat &c) {
    return monomial(m, std::move(idx), Poly::constant(m, c));
  }
  static DiffForm function(const Poly &f) { return monomial(f.nvars(), {}, f); }
  static DiffForm dx(int m, int i) { return monomial(m, MultiIndex{i}, Rat(1)); }

  [[nodiscard]] int dim() const { return m_; }
  [[nodiscard]] const Terms &terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add(MultiIndex idx, Poly coeff) {
    if (coeff.nvars() != m_) throw DimensionError("coefficient ring does not match form dimension");
    if (!idx.within(0, m_)) throw DimensionError("form index out of range");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(idx), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  [[nodiscard]] bool has_constant_coefficients() const {
    for (const auto &[i, c] : terms_)
      if (!c.is_constant()) return false;
    return true;
  }

  DiffForm &operator+=(const DiffForm &o) {
    same_space(o);
    for (const auto &[i, c] : o.terms_) add(i, c);
    return *this;
  }
  DiffForm &operator-=(const DiffForm &o) {
    same_space(o);
    for (const auto &[i, c] : o.terms_) add(i, -c);
    return *this;
  }
  DiffForm &operator*=(const Rat &s) {
    if (s.is_zero()) terms_.clear();
    for (auto &[i, c] : terms_) c *= s;
    return *this;
  }
  friend DiffForm operator+(DiffForm a, const DiffForm &b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm &b) { return a -= b; }
  friend DiffForm operator*(const Rat &s, DiffForm a) { return a *= s; }
  friend DiffForm operator*(DiffForm a, const Rat &s) { return a *= s; }
  friend DiffForm operator-(DiffForm a) { return a *= Rat(-1); }
  friend bool operator==(const DiffForm &a, const DiffForm &b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto &[idx, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")";
      for (int i : idx) s += " dx" + std::to_string(i);
    }
    return s;
  }

  void same_space(const DiffForm &o) const {
    if (o.m_ != m_) throw DimensionError("forms on different spaces");
  }

private:
  int m_ = 0;
  Terms terms_;
};

inline DiffForm wedge(const DiffForm &a, const DiffForm &b) {
  a.same_space(b);
  DiffForm out(a.dim());
  for (const auto &[ia, ca] : a.terms())
    for (const auto &[ib, cb] : b.terms()) {
      auto s = shuffle_sign(ia, ib);
      if (!s) continue;
      out.add(s->merged, (ca * cb) * Rat(s->sign));
    }
  return out;
}

/// Exterior derivative.
inline DiffForm exterior_d(const DiffForm &a) {
  DiffForm out(a.dim());
  for (const auto &[idx, c] : a.terms())
    for (int i = 0; i < a.dim(); ++i) {
      Poly dc = c.derivative(i);
      if (dc.is_zero()) continue;
      auto s = shuffle_sign(MultiIndex{i}, idx);
      if (!s) continue;
      out.add(s->merged, dc * Rat(s->sign));
    }
  return out;
}

/// Left contraction by the vector field Σ v_j ∂/∂x_j.
inline DiffForm contract_field(const std::vector<Poly> &field, const DiffForm &a) {
  if (static_cast<int>(field.size()) != a.dim()) throw DimensionError("vector field has wrong dimension");
  DiffForm out(a.dim());
  for (const auto &[idx, c] : a.terms())
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Poly &vk = field[static_cast<std::size_t>(idx[k])];
      if (vk.is_zero()) continue;
      out.add(idx.without_position(k), (c * vk) * Rat(minus_one_pow(static_cast<long>(k))));
    }
  return out;
}

/// Left contraction by the constant vector Σ q_j ∂/∂x_j.
inline DiffForm contract_vector(const QVector &q, const DiffForm &a) {
  std::vector<Poly> field;
  field.reserve(q.size());
  for (const auto &x : q) field.push_back(Poly::constant(a.dim(), x));
  return contract_field(field, a);
}

/// Pullback along the affine map x ↦ A y + b, A of shape dim(a) × m'.
inline DiffForm pullback_affine(const QMatrix &lin, const QVector &shift, const DiffForm &a) {
  if (static_cast<int>(lin.rows()) != a.dim() || shift.size() != lin.rows())
    throw DimensionError("affine map does not match form dimension");
  int src = static_cast<int>(lin.cols());
  std::vector<Poly> coords;
  std::vector<DiffForm> dimg;
  for (std::size_t i = 0; i < lin.rows(); ++i) {
    Poly li = Poly::constant(src, shift[i]);
    DiffForm di(src);
    for (std::size_t j = 0; j < lin.cols(); ++j) {
      if (lin(i, j).is_zero()) continue;
      li += Poly::variable(src, static_cast<int>(j)) * lin(i, j);
      di += lin(i, j) * DiffForm::dx(src, static_cast<int>(j));
    }
    coords.push_back(std::move(li));
    dimg.push_back(std::move(di));
  }
  DiffForm out(src);
  for (const auto &[idx, c] : a.terms()) {
    DiffForm piece = DiffForm::function(c.substitute(coords, src));
    for (int i : idx) piece = wedge(piece, dimg[static_cast<std::size_t>(i)]);
    out += piece;
  }
  return out;
}

} // namespace tropmono
