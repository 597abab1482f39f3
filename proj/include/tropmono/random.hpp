#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tropmono/diff_form.hpp"
#include "tropmono/matrix.hpp"
#include "tropmono/multi_index.hpp"
#include "tropmono/polynomial.hpp"
#include "tropmono/superform.hpp"

namespace tropmono {

/// Seeded generator whose draws are fixed by the 64-bit engine output alone,
/// so every platform produces the same sequence.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
  }
  bool coin() { return (eng_() & 1U) != 0; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

  /// a/b with a ∈ [-num, num], b ∈ [1, den].
  Rat rational(long num = 5, long den = 3) {
    long a = uniform(-num, num);
    long b = uniform(1, den);
    return Rat(a, b);
  }
  Rat nonzero_rational(long num = 5, long den = 3) {
    for (;;) {
      Rat r = rational(num, den);
      if (!r.is_zero()) return r;
    }
  }

  Poly polynomial(int nvars, int max_degree, int terms = 3) {
    Poly p(nvars);
    for (int t = 0; t < terms; ++t) {
      Exponent e(static_cast<std::size_t>(nvars), 0);
      int deg = static_cast<int>(uniform(0, max_degree));
      for (int k = 0; k < deg && nvars > 0; ++k) ++e[index(static_cast<std::size_t>(nvars))];
      p.add_term(std::move(e), rational());
    }
    return p;
  }

  MultiIndex subset(int n, int k) {
    auto all = subsets(n, k);
    return all[index(all.size())];
  }

  Superform superform(int n, int p, int q, int max_degree, int terms = 2) {
    Superform w(n);
    if (p > n || q > n) return w;
    for (int t = 0; t < terms; ++t) {
      SuperBasis b{subset(n, p), subset(n, q)};
      w.add(std::move(b), polynomial(n, max_degree));
    }
    return w;
  }
  /// Random bidegree in [0,n]^2.
  Superform superform(int n, int max_degree) {
    int p = static_cast<int>(uniform(0, n)), q = static_cast<int>(uniform(0, n));
    return superform(n, p, q, max_degree);
  }

  QMatrix matrix(std::size_t rows, std::size_t cols, long bound = 3) {
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(uniform(-bound, bound));
    return m;
  }
  /// rows × cols of rank at most r: product of random rows × r and r × cols factors.
  QMatrix low_rank_matrix(std::size_t rows, std::size_t cols, std::size_t r, long bound = 2) {
    QMatrix left = matrix(rows, r, bound);
    QMatrix right = matrix(r, cols, bound);
    return left * right;
  }

  std::vector<std::vector<long>> int_matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
    std::vector<std::vector<long>> m(rows, std::vector<long>(cols));
    for (auto &row : m)
      for (auto &x : row) x = uniform(lo, hi);
    return m;
  }

  QVector vector(std::size_t n) {
    QVector v(n);
    for (auto &x : v) x = rational();
    return v;
  }

  /// Fisher–Yates with the generator's own index draws.
  std::vector<int> permutation(int k) {
    std::vector<int> v(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i;
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
    return v;
  }

private:
  std::mt19937_64 eng_;
};

} // namespace tropmono
