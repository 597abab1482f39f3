#include <gtest/gtest.h>

#include "tropmono/random.hpp"
#include "tropmono/simplex.hpp"
#include "tropmono/suites.hpp"

using namespace tropmono;

namespace {

// ∫_0^1 <∂_t, γ^*α> dt computed literally on R^{m+1} with t as the last coordinate.
DiffForm star_integral_by_pullback(const QVector &q, const DiffForm &a) {
  int m = a.dim();
  Poly t = Poly::variable(m + 1, m);
  std::vector<Poly> ray;
  std::vector<DiffForm> dray;
  for (int j = 0; j < m; ++j) {
    Poly lever = Poly::variable(m + 1, j) - Poly::constant(m + 1, q[static_cast<std::size_t>(j)]);
    ray.push_back(Poly::constant(m + 1, q[static_cast<std::size_t>(j)]) + t * lever);
    dray.push_back(DiffForm::monomial(m + 1, MultiIndex{j}, t) + DiffForm::monomial(m + 1, MultiIndex{m}, lever));
  }
  DiffForm pulled(m + 1);
  for (const auto &[idx, c] : a.terms()) {
    DiffForm term = DiffForm::function(c.substitute(ray, m + 1));
    for (int i : idx) term = wedge(term, dray[static_cast<std::size_t>(i)]);
    pulled += term;
  }
  QVector dt(static_cast<std::size_t>(m + 1));
  dt.back() = Rat(1);
  DiffForm inner = contract_vector(dt, pulled);
  DiffForm out(m);
  for (const auto &[idx, c] : inner.terms()) {
    Poly acc(m);
    for (const auto &[e, coef] : c.terms()) acc.add_term(Exponent(e.begin(), e.end() - 1), coef / Rat(e.back() + 1));
    out.add(idx, acc);
  }
  return out;
}

DiffForm random_form(Rng &rng, int m, int r) {
  DiffForm f(m);
  for (int k = 0; k < 2; ++k) f.add(rng.subset(m, r), rng.polynomial(m, 2));
  return f;
}

} // namespace

TEST(Simplex, CanonicalRepresentativeForgetsPivot) {
  int n = 2;
  // dx_0 + dx_1 + dx_2 vanishes on the hyperplane
  DiffForm s = DiffForm::dx(3, 0) + DiffForm::dx(3, 1) + DiffForm::dx(3, 2);
  EXPECT_TRUE(SimplexForm(n, 1, s).is_zero());
  // x_0 + x_1 + x_2 is the constant 1
  Poly sum = Poly::variable(3, 0) + Poly::variable(3, 1) + Poly::variable(3, 2);
  EXPECT_EQ(SimplexForm(n, 0, DiffForm::function(sum)), SimplexForm::constant(n, Rat(1)));
  EXPECT_EQ(SimplexForm(n, 0, DiffForm::function(sum)).constant_value(), Rat(1));
  EXPECT_EQ(SimplexForm(n, 1, DiffForm::dx(3, 0)), SimplexForm(n, 1, -(DiffForm::dx(3, 1) + DiffForm::dx(3, 2))));
  EXPECT_THROW(SimplexForm(n, 1, DiffForm::dx(2, 0)), DimensionError);
  EXPECT_THROW(SimplexForm(n, 2, DiffForm::dx(3, 0)), DimensionError);
  EXPECT_THROW(SimplexContext(0), DimensionError);
}

TEST(Simplex, StarIntegralWorkedExample) {
  SimplexForm a(1, 1, DiffForm::dx(2, 1));
  QVector p{Rat(1, 2), Rat(1, 2)};
  SimplexForm expected(1, 0, DiffForm::function(Poly::variable(2, 1) - Poly::constant(2, Rat(1, 2))));
  EXPECT_EQ(star_integrate(p, a), expected);
  EXPECT_THROW(star_integrate(QVector{Rat(1), Rat(1)}, a), DomainError);
  EXPECT_THROW(star_integrate(p, SimplexForm::constant(1, Rat(1))), DomainError);
}

TEST(Simplex, StarIntegralMatchesLiteralPullback) {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    int m = static_cast<int>(rng.uniform(1, 4));
    int r = static_cast<int>(rng.uniform(1, m));
    DiffForm a = random_form(rng, m, r);
    QVector q = rng.vector(static_cast<std::size_t>(m));
    EXPECT_EQ(star_integrate_ambient(q, a), star_integral_by_pullback(q, a)) << a.str();
  }
}

TEST(Simplex, HomotopyFormula) {
  // d I_Q + I_Q d = id on forms of degree at least 1
  Rng rng(37);
  for (int t = 0; t < 40; ++t) {
    int m = static_cast<int>(rng.uniform(1, 4));
    int r = static_cast<int>(rng.uniform(1, m));
    DiffForm a = random_form(rng, m, r);
    QVector q = rng.vector(static_cast<std::size_t>(m));
    DiffForm da = exterior_d(a);
    DiffForm lhs = exterior_d(star_integrate_ambient(q, a));
    if (!da.is_zero()) lhs += star_integrate_ambient(q, da);
    EXPECT_EQ(lhs, a);
  }
}

TEST(Simplex, CoboundarySquaredVanishes) {
  Rng rng(41);
  int n = 4;
  std::map<MultiIndex, Rat> vals;
  for (const auto &s : subsets(n + 1, 1)) vals.emplace(s, rng.rational());
  SimplexCochain<Rat> c(n, 0, vals);
  auto dd = coboundary(coboundary(c));
  for (const auto &[face, v] : dd.values()) EXPECT_TRUE(v.is_zero()) << face.str();
  EXPECT_THROW(SimplexCochain<Rat>(n, 0, {}), DimensionError);
  EXPECT_THROW(coboundary(SimplexCochain<Rat>::constant(n, n, Rat(1))), DimensionError);
}

TEST(Simplex, RestrictionFactorOnInterval) {
  SimplexForm unit(1, 1, DiffForm::dx(2, 1));
  BetaLadder l = beta_recursion(unit, 1);
  EXPECT_EQ(l.top.at(MultiIndex{0, 1}), Rat(-1));
  EXPECT_TRUE(restriction_formula_holds(unit, l, MultiIndex{0, 1}));
}

TEST(Simplex, RestrictionFactorClosedForm) {
  for (int p = 1; p <= 4; ++p) {
    std::vector<int> idx, face;
    for (int j = 1; j <= p; ++j) idx.push_back(j);
    for (int j = 0; j <= p; ++j) face.push_back(j);
    SimplexForm unit(p, p, DiffForm::monomial(p + 1, MultiIndex(idx), Rat(1)));
    Rat top = beta_recursion(unit, p).top.at(MultiIndex(face));
    Rat expected = Rat(minus_one_pow(static_cast<long>(p) * (p + 1) / 2)) / factorial(p);
    EXPECT_EQ(top, expected) << "p=" << p;
  }
}

TEST(Simplex, BetaRecursionRejectsBadInput) {
  SimplexForm poly(2, 1, DiffForm::monomial(3, MultiIndex{1}, Poly::variable(3, 1)));
  EXPECT_THROW(beta_recursion(poly, 1), DomainError);
  SimplexForm b(2, 1, DiffForm::dx(3, 1));
  EXPECT_THROW(beta_recursion(b, 2), DimensionError);
  EXPECT_THROW(beta_recursion(b, 0), DomainError);
  EXPECT_THROW(beta_recursion(b, 3), DomainError);
  EXPECT_THROW(beta_closed_form(b, 1, MultiIndex{0}), DimensionError);
}

TEST(Simplex, StarIntegralSuite) {
  for (int n = 1; n <= 4; ++n)
    for (const auto &c : star_integral_suite(n, 10, 50 + static_cast<std::uint64_t>(n))) EXPECT_TRUE(c.passed) << c.name << " " << c.witness;
}

class Starprop : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(Starprop, AllClaimsHold) {
  StarpropOptions o;
  o.n = GetParam().first;
  o.p = GetParam().second;
  o.random_betas = 10;
  o.random_points = 5;
  o.seed = 7;
  auto checks = starprop_suite(o);
  ASSERT_FALSE(checks.empty());
  for (const auto &c : checks) {
    EXPECT_TRUE(c.passed) << c.name << " " << c.witness;
    // δδ needs faces two levels up, absent on the interval
    bool vacuous = o.n < 2 && c.name.rfind("coboundary squared zero", 0) == 0;
    if (!vacuous) {
      EXPECT_GT(c.cases, 0) << c.name;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllDegrees, Starprop,
                         ::testing::Values(std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1},
                                           std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 1}, std::pair{4, 2},
                                           std::pair{4, 3}, std::pair{4, 4}));

TEST(Simplex, PerFaceChecks) {
  StarpropOptions o;
  o.n = 3;
  o.p = 2;
  o.random_betas = 2;
  o.per_face = true;
  auto checks = starprop_suite(o);
  // 6 aggregate checks plus one per (β, face): 3 basis forms + 2 random, 4 faces each
  EXPECT_EQ(checks.size(), 6u + 5u * 4u);
}
