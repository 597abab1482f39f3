#include <gtest/gtest.h>

#include <algorithm>

#include "tropmono/json_io.hpp"
#include "tropmono/random.hpp"
#include "tropmono/suites.hpp"
#include "tropmono/superform.hpp"

using namespace tropmono;

namespace {

// A basis monomial as a word in odd generators: d'x_i is i, d''x_j is n + j.
struct Word {
  int sign = 1;
  std::vector<int> gens;
};

Word word_of(const SuperBasis &b, int n) {
  Word w;
  for (int i : b.dprime) w.gens.push_back(i);
  for (int j : b.dsecond) w.gens.push_back(n + j);
  return w;
}

// Sorts by adjacent swaps; empty optional when a generator repeats.
std::optional<std::pair<int, SuperBasis>> normalize(Word w, int n) {
  auto &g = w.gens;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j + 1 < g.size() - i; ++j)
      if (g[j] > g[j + 1]) {
        std::swap(g[j], g[j + 1]);
        w.sign = -w.sign;
      }
  if (std::adjacent_find(g.begin(), g.end()) != g.end()) return std::nullopt;
  std::vector<int> dp, ds;
  for (int x : g) (x < n ? dp : ds).push_back(x < n ? x : x - n);
  return std::make_pair(w.sign, SuperBasis{MultiIndex(dp), MultiIndex(ds)});
}

Superform oracle_wedge(const Superform &a, const Superform &b) {
  int n = a.dim();
  Superform out(n);
  for (const auto &[ba, ca] : a.terms())
    for (const auto &[bb, cb] : b.terms()) {
      Word w = word_of(ba, n);
      Word v = word_of(bb, n);
      w.gens.insert(w.gens.end(), v.gens.begin(), v.gens.end());
      auto r = normalize(w, n);
      if (r) out.add(r->second, ca * cb * Rat(r->first));
    }
  return out;
}

// N: replace each d'x_i in place by d''x_i.
Superform oracle_N(const Superform &a) {
  int n = a.dim();
  Superform out(n);
  for (const auto &[b, c] : a.terms()) {
    Word w = word_of(b, n);
    for (std::size_t k = 0; k < b.dprime.size(); ++k) {
      Word v = w;
      v.gens[k] += n;
      auto r = normalize(v, n);
      if (r) out.add(r->second, c * Rat(r->first));
    }
  }
  return out;
}

// J: swap the roles of d' and d'' keeping the word order.
Superform oracle_J(const Superform &a) {
  int n = a.dim();
  Superform out(n);
  for (const auto &[b, c] : a.terms()) {
    Word w;
    for (int i : b.dprime) w.gens.push_back(n + i);
    for (int j : b.dsecond) w.gens.push_back(j);
    auto r = normalize(w, n);
    out.add(r->second, c * Rat(r->first));
  }
  return out;
}

// d'' as left multiplication by Σ_j d''x_j ∂_j.
Superform oracle_dsecond(const Superform &a) {
  int n = a.dim();
  Superform out(n);
  for (const auto &[b, c] : a.terms())
    for (int j = 0; j < n; ++j) {
      Superform left = Superform::monomial(n, {}, MultiIndex{j}, c.derivative(j));
      out += oracle_wedge(left, Superform::monomial(n, b.dprime, b.dsecond, Rat(1)));
    }
  return out;
}

} // namespace

TEST(Superform, WorkedExamples) {
  int n = 2;
  Superform w = wedge(Superform::dprime_x(n, 0), Superform::dprime_x(n, 1));
  EXPECT_EQ(monodromy_power(w, 2), Superform::monomial(n, {}, MultiIndex{0, 1}, Rat(2)));
  EXPECT_EQ(monodromy_N(w), Superform::monomial(n, MultiIndex{1}, MultiIndex{0}, Rat(-1)) +
                                Superform::monomial(n, MultiIndex{0}, MultiIndex{1}, Rat(1)));
  EXPECT_EQ(flip_J(Superform::monomial(n, MultiIndex{0}, MultiIndex{1}, Rat(1))),
            Superform::monomial(n, MultiIndex{1}, MultiIndex{0}, Rat(-1)));
  // d''(x_1 d'x_2) = -d'x_2 ∧ d''x_1 in the d'-first basis
  Superform f = Superform::monomial(n, MultiIndex{1}, {}, Poly::variable(n, 0));
  EXPECT_EQ(d_second(f), Superform::monomial(n, MultiIndex{1}, MultiIndex{0}, Rat(-1)));
  EXPECT_EQ(d_prime(f), Superform::monomial(n, MultiIndex{0, 1}, {}, Rat(1)));
}

TEST(Superform, MonodromyUndefinedOnZeroDprimeDegree) {
  EXPECT_THROW(monodromy_N(Superform::dsecond_x(2, 0)), DomainError);
  EXPECT_THROW(monodromy_N(Superform::function(Poly::constant(2, Rat(1)))), DomainError);
  EXPECT_TRUE(monodromy_N(Superform(2)).is_zero());
}

TEST(Superform, Validation) {
  Superform w(2);
  EXPECT_THROW(w.add(SuperBasis{MultiIndex{2}, {}}, Poly::constant(2, Rat(1))), DimensionError);
  EXPECT_THROW(w.add(SuperBasis{{}, {}}, Poly::constant(3, Rat(1))), DimensionError);
  EXPECT_THROW(wedge(Superform(2), Superform(3)), DimensionError);
  EXPECT_THROW(pullback(AffineMap::identity(3), Superform(2)), DimensionError);
}

TEST(Superform, OperationsMatchWordOracles) {
  Rng rng(17);
  for (int t = 0; t < 150; ++t) {
    int n = static_cast<int>(rng.uniform(1, 4));
    Superform a = rng.superform(n, 2), b = rng.superform(n, 2);
    EXPECT_EQ(wedge(a, b), oracle_wedge(a, b));
    EXPECT_EQ(flip_J(a), oracle_J(a));
    EXPECT_EQ(d_second(a), oracle_dsecond(a));
    int p = static_cast<int>(rng.uniform(1, n));
    Superform c = rng.superform(n, p, static_cast<int>(rng.uniform(0, n)), 2);
    EXPECT_EQ(monodromy_N(c), oracle_N(c));
  }
}

TEST(Superform, PullbackIsFunctorialAndCommutesWithDifferentials) {
  Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    int n = static_cast<int>(rng.uniform(1, 3)), m = static_cast<int>(rng.uniform(1, 3)), k = static_cast<int>(rng.uniform(1, 3));
    AffineMap phi(rng.matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(m)), rng.vector(static_cast<std::size_t>(n)));
    AffineMap psi(rng.matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(k)), rng.vector(static_cast<std::size_t>(m)));
    AffineMap comp(phi.linear * psi.linear, phi.linear * psi.translation);
    for (std::size_t i = 0; i < comp.translation.size(); ++i) comp.translation[i] += phi.translation[i];
    Superform w = rng.superform(n, 2);
    EXPECT_EQ(pullback(psi, pullback(phi, w)), pullback(comp, w));
    EXPECT_EQ(pullback(phi, d_second(w)), d_second(pullback(phi, w)));
    EXPECT_EQ(pullback(phi, d_prime(w)), d_prime(pullback(phi, w)));
  }
}

TEST(Superform, NullOnPolyhedralComplex) {
  int n = 2;
  // two segments on the x_1 axis and the point (0,0)
  std::vector<AffineMap> cells{
      AffineMap::span_of_points({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}}),
      AffineMap::span_of_points({{Rat(-1), Rat(0)}, {Rat(0), Rat(0)}}),
      AffineMap::span_of_points({{Rat(0), Rat(0)}}),
  };
  EXPECT_EQ(cells[0].source_dim(), 1);
  EXPECT_EQ(cells[2].source_dim(), 0);
  EXPECT_TRUE(is_null_on_complex(Superform::dprime_x(n, 1), cells));
  EXPECT_TRUE(is_null_on_complex(Superform::function(Poly::variable(n, 1)), cells));
  EXPECT_FALSE(is_null_on_complex(Superform::dprime_x(n, 0), cells));
  EXPECT_TRUE(is_null_on_complex(wedge(Superform::dprime_x(n, 0), Superform::dprime_x(n, 1)), cells));
  // N preserves the null subspace on these cells
  Superform w = wedge(Superform::dprime_x(n, 1), Superform::dsecond_x(n, 0));
  EXPECT_TRUE(is_null_on_complex(w, cells));
  EXPECT_TRUE(is_null_on_complex(monodromy_N(w), cells));
}

TEST(Superform, JsonRoundTrip) {
  Rng rng(29);
  for (int t = 0; t < 30; ++t) {
    Superform w = rng.superform(3, 2);
    Json j = superform_to_json(w);
    EXPECT_EQ(superform_from_json(Json::parse(j.dump()), 3), w);
  }
  Json bad = Json::parse(R"([{"dprime":[2,1],"dsecond":[],"coeff":{"[0,0]":"1"}}])");
  EXPECT_THROW(superform_from_json(bad, 2), ParseError);
  Json range = Json::parse(R"([{"dprime":[3],"dsecond":[],"coeff":{"[0,0]":"1"}}])");
  EXPECT_THROW(superform_from_json(range, 2), DimensionError);
}

class IdentitySuite : public ::testing::TestWithParam<int> {};

TEST_P(IdentitySuite, AllIdentitiesHold) {
  SuperformSuiteOptions o;
  o.n = GetParam();
  o.cases = 60;
  o.maps = 20;
  o.seed = 100 + static_cast<std::uint64_t>(o.n);
  for (const auto &c : superform_identity_suite(o)) {
    EXPECT_TRUE(c.passed) << c.name << " witness " << c.witness;
    EXPECT_GT(c.cases, 0) << c.name;
  }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, IdentitySuite, ::testing::Values(1, 2, 3, 4));

TEST(Superform, WedgeAnticommutationNeedsTheDegreeBound) {
  // p = p' = 1 in R^3 lies below the bound p + p' >= n + 1
  int n = 3;
  Superform a = Superform::dprime_x(n, 0), b = Superform::dprime_x(n, 1);
  EXPECT_NE(wedge(monodromy_N(a), b), -wedge(a, monodromy_N(b)));
}
