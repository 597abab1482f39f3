#pragma once

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tropmono/error.hpp"
#include "tropmono/rational.hpp"

namespace tropmono {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Zero coefficients are never stored.
class Poly {
public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw DimensionError("negative variable count");
  }

  static Poly constant(int nvars, const Rat &c) {
    Poly p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }
  static Poly variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw DimensionError("variable index out of range");
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    Poly p(nvars);
    p.add_term(std::move(e), Rat(1));
    return p;
  }
  static Poly monomial(Exponent e, const Rat &c) {
    Poly p(static_cast<int>(e.size()));
    p.add_term(std::move(e), c);
    return p;
  }

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Exponent, Rat> &terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] int total_degree() const {
    int d = -1;
    for (const auto &[e, c] : terms_) {
      int s = 0;
      for (int v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }
  [[nodiscard]] bool is_constant() const { return total_degree() <= 0; }
  /// Constant term (the value at the origin).
  [[nodiscard]] Rat constant_term() const {
    auto it = terms_.find(Exponent(static_cast<std::size_t>(nvars_), 0));
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(Exponent e, const Rat &c) {
    if (static_cast<int>(e.size()) != nvars_)
      throw DimensionError("exponent vector length does not match variable count");
    for (int v : e)
      if (v < 0) throw DimensionError("negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly &operator+=(const Poly &o) {
    same_ring(o);
    for (const auto &[e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly &operator-=(const Poly &o) {
    same_ring(o);
    for (const auto &[e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly &operator*=(const Rat &s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto &[e, c] : terms_) c *= s;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly &b) { return a += b; }
  friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat &s) { return a *= s; }
  friend Poly operator*(const Rat &s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }

  friend Poly operator*(const Poly &a, const Poly &b) {
    a.same_ring(b);
    Poly out(a.nvars_);
    Exponent e(static_cast<std::size_t>(a.nvars_));
    for (const auto &[ea, ca] : a.terms_)
      for (const auto &[eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  Poly &operator*=(const Poly &o) { return *this = *this * o; }

  [[nodiscard]] Poly pow(int k) const {
    if (k < 0) throw DomainError("negative power");
    Poly out = constant(nvars_, Rat(1));
    for (int t = 0; t < k; ++t) out *= *this;
    return out;
  }

  /// Exact partial derivative in variable i.
  [[nodiscard]] Poly derivative(int i) const {
    if (i < 0 || i >= nvars_) throw DimensionError("derivative variable out of range");
    Poly out(nvars_);
    for (const auto &[e, c] : terms_) {
      int k = e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      Exponent f = e;
      --f[static_cast<std::size_t>(i)];
      out.add_term(std::move(f), c * Rat(k));
    }
    return out;
  }

  [[nodiscard]] Rat evaluate(std::span<const Rat> point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw DimensionError("evaluation point has wrong dimension");
    Rat total(0);
    for (const auto &[e, c] : terms_) {
      Rat m = c;
      for (std::size_t k = 0; k < e.size(); ++k)
        for (int t = 0; t < e[k]; ++t) m *= point[k];
      total += m;
    }
    return total;
  }

  /// Replaces variable k by images[k]; all images share one ring.
  [[nodiscard]] Poly substitute(std::span<const Poly> images, int target_nvars) const {
    if (static_cast<int>(images.size()) != nvars_)
      throw DimensionError("substitution needs one image per variable");
    for (const auto &img : images)
      if (img.nvars() != target_nvars) throw DimensionError("substitution images in different rings");
    // cache powers per variable
    std::vector<std::vector<Poly>> powers(images.size());
    Poly out(target_nvars);
    for (const auto &[e, c] : terms_) {
      Poly m = constant(target_nvars, c);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        auto &pw = powers[k];
        if (pw.empty()) pw.push_back(constant(target_nvars, Rat(1)));
        while (static_cast<int>(pw.size()) <= e[k]) pw.push_back(pw.back() * images[k]);
        m *= pw[static_cast<std::size_t>(e[k])];
      }
      out += m;
    }
    return out;
  }

  friend bool operator==(const Poly &a, const Poly &b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto &[e, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += c.str();
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        s += "*x" + std::to_string(k);
        if (e[k] > 1) s += "^" + std::to_string(e[k]);
      }
    }
    return s;
  }
  friend std::ostream &operator<<(std::ostream &os, const Poly &p) { return os << p.str(); }

private:
  void same_ring(const Poly &o) const {
    if (o.nvars_ != nvars_) throw DimensionError("polynomials in different rings");
  }
  int nvars_ = 0;
  std::map<Exponent, Rat> terms_;
};

} // namespace tropmono
