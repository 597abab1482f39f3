#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "tropmono/json_io.hpp"
#include "tropmono/random.hpp"
#include "tropmono/report.hpp"
#include "tropmono/simplex.hpp"
#include "tropmono/superform.hpp"

namespace tropmono {

namespace detail {

inline std::string form_witness(const std::string &what, const Superform &w) {
  return what + " " + Json{{"n", w.dim()}, {"form", superform_to_json(w)}}.dump();
}

inline std::string pair_witness(const Superform &a, const Superform &b) {
  return Json{{"n", a.dim()}, {"left", superform_to_json(a)}, {"right", superform_to_json(b)}}.dump();
}

inline Json affine_to_json(const AffineMap &phi) {
  return Json{{"linear", matrix_to_json(phi.linear)}, {"translation", vector_to_json(phi.translation)}};
}

inline int total_degree(const Superform &w) {
  auto b = w.bidegrees();
  return b.empty() ? 0 : b.begin()->first + b.begin()->second;
}

} // namespace detail

struct SuperformSuiteOptions {
  int n = 3;
  int cases = 200;
  int maps = 50;
  int max_degree = 2;
  std::uint64_t seed = 1;
};

/// Exact identities of the superform calculus on seeded random inputs; one
/// Check per identity family.
inline std::vector<Check> superform_identity_suite(const SuperformSuiteOptions &o) {
  int n = o.n;
  Rng rng(o.seed);
  std::string tag = "[n=" + std::to_string(n) + "]";
  Check dd1{"d'd'=0" + tag}, dd2{"d''d''=0" + tag}, anti{"d'd''+d''d'=0" + tag}, jj{"JJ=id" + tag};
  Check j1{"d''=Jd'J" + tag}, j2{"Jd'=d''J" + tag}, j3{"Jd''=d'J" + tag}, j4{"d'=Jd''J" + tag};
  Check lp{"leibniz d'" + tag}, ls{"leibniz d''" + tag}, comm{"graded commutativity" + tag};
  Check nd{"Nd''=d''N" + tag}, np{"N^p=p!J on (p,0)" + tag}, nw{"Nw^w'=-w^Nw' for p+p'>=n+1" + tag};
  Check pb{"pullback N = N pullback" + tag};

  for (int t = 0; t < o.cases; ++t) {
    Superform w = rng.superform(n, o.max_degree);
    record(dd1, d_prime(d_prime(w)).is_zero(), detail::form_witness("d'd'", w));
    record(dd2, d_second(d_second(w)).is_zero(), detail::form_witness("d''d''", w));
    record(anti, (d_prime(d_second(w)) + d_second(d_prime(w))).is_zero(), detail::form_witness("d'd''+d''d'", w));
    record(jj, flip_J(flip_J(w)) == w, detail::form_witness("JJ", w));
    record(j1, d_second(w) == flip_J(d_prime(flip_J(w))), detail::form_witness("d''=Jd'J", w));
    record(j2, flip_J(d_prime(w)) == d_second(flip_J(w)), detail::form_witness("Jd'=d''J", w));
    record(j3, flip_J(d_second(w)) == d_prime(flip_J(w)), detail::form_witness("Jd''=d'J", w));
    record(j4, d_prime(w) == flip_J(d_second(flip_J(w))), detail::form_witness("d'=Jd''J", w));

    Superform v = rng.superform(n, o.max_degree);
    Rat sign(minus_one_pow(detail::total_degree(w)));
    record(lp, d_prime(wedge(w, v)) == wedge(d_prime(w), v) + sign * wedge(w, d_prime(v)), detail::pair_witness(w, v));
    record(ls, d_second(wedge(w, v)) == wedge(d_second(w), v) + sign * wedge(w, d_second(v)), detail::pair_witness(w, v));
    Rat csign(minus_one_pow(static_cast<long>(detail::total_degree(w)) * detail::total_degree(v)));
    record(comm, wedge(w, v) == csign * wedge(v, w), detail::pair_witness(w, v));

    int p = static_cast<int>(rng.uniform(1, n));
    int q = static_cast<int>(rng.uniform(0, n - 1));
    Superform u = rng.superform(n, p, q, o.max_degree);
    record(nd, monodromy_N(d_second(u)) == d_second(monodromy_N(u)), detail::form_witness("Nd''", u));

    int pp = static_cast<int>(rng.uniform(1, std::min(n, 4)));
    Superform h = rng.superform(n, pp, 0, o.max_degree);
    record(np, monodromy_power(h, pp) == factorial(pp) * flip_J(h), detail::form_witness("N^p", h));

    int p1 = static_cast<int>(rng.uniform(1, n));
    int p2 = static_cast<int>(rng.uniform(std::max(1, n + 1 - p1), n));
    int q1 = static_cast<int>(rng.uniform(0, n));
    int q2 = static_cast<int>(rng.uniform(0, n));
    Superform a = rng.superform(n, p1, q1, o.max_degree);
    Superform b = rng.superform(n, p2, q2, o.max_degree);
    record(nw, wedge(monodromy_N(a), b) == -wedge(a, monodromy_N(b)), detail::pair_witness(a, b));
  }

  for (int t = 0; t < o.maps; ++t) {
    int src = static_cast<int>(rng.uniform(1, 4));
    std::size_t r = static_cast<std::size_t>(rng.uniform(0, std::min(src, n)));
    // every other map is rank-deficient
    QMatrix lin = (t % 2 == 0) ? rng.low_rank_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(src), r)
                               : rng.matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(src));
    QVector shift = rng.vector(static_cast<std::size_t>(n));
    AffineMap phi(lin, shift);
    int p = static_cast<int>(rng.uniform(1, n));
    int q = static_cast<int>(rng.uniform(0, n));
    Superform w = rng.superform(n, p, q, o.max_degree);
    bool ok = pullback(phi, monodromy_N(w)) == monodromy_N(pullback(phi, w));
    record(pb, ok, Json{{"map", detail::affine_to_json(phi)}, {"n", n}, {"form", superform_to_json(w)}}.dump());
  }
  return {dd1, dd2, anti, jj, j1, j2, j3, j4, lp, ls, comm, nd, np, nw, pb};
}

// ---------------------------------------------------------------------------

struct StarpropOptions {
  int n = 2;
  int p = 2;
  int random_betas = 50;
  int random_points = 20;
  std::uint64_t seed = 1;
  bool per_face = false; // one Check per (β, I) instead of one per claim
};

namespace detail {

/// Constant ambient p-form Σ c_S dx_S with S ⊂ {0..n}: ambient representatives
/// are deliberately non-canonical.
inline SimplexForm random_constant_simplex_form(Rng &rng, int n, int p) {
  DiffForm f(n + 1);
  for (const auto &s : subsets(n + 1, p))
    if (rng.uniform(0, 2) > 0) f.add(s, Poly::constant(n + 1, rng.rational()));
  return SimplexForm(n, p, std::move(f));
}

inline std::string cochain_label(const MultiIndex &face) {
  std::string s = "{";
  for (std::size_t k = 0; k < face.size(); ++k) s += (k ? "," : "") + std::to_string(face[k]);
  return s + "}";
}

inline Json simplex_form_json(const SimplexForm &b) {
  Json terms = Json::array();
  for (const auto &[idx, c] : b.ambient().terms()) terms.push_back(Json{{"dx", idx.values()}, {"coeff", poly_to_json(c)}});
  return Json{{"n", b.n()}, {"degree", b.degree()}, {"ambient", terms}};
}

} // namespace detail

/// For constant r-forms on R^{n+1} (1 <= r <= n+1) and random Q,
/// I'_Q α - I'_O α = -(1/r) ι_Q α and I'_O α = (1/r) ι_x α.
inline std::vector<Check> star_integral_suite(int n, int random_points, std::uint64_t seed) {
  Rng rng(seed);
  std::string tag = "[n=" + std::to_string(n) + "]";
  Check shift{"star integral shift by Q" + tag}, origin{"star integral at origin" + tag};
  QVector zero(static_cast<std::size_t>(n + 1));
  std::vector<QVector> points;
  for (int k = 0; k < random_points; ++k) points.push_back(rng.vector(static_cast<std::size_t>(n + 1)));
  for (int r = 1; r <= n + 1; ++r)
    for (const auto &s : subsets(n + 1, r)) {
      DiffForm a = DiffForm::monomial(n + 1, s, Rat(1));
      DiffForm at_origin = star_integrate_ambient(zero, a);
      record(origin, at_origin == Rat(1, r) * contract_position(a), "dx" + detail::cochain_label(s));
      for (const auto &q : points) {
        DiffForm lhs = star_integrate_ambient(q, a) - at_origin;
        DiffForm rhs = Rat(-1, r) * contract_vector(q, a);
        record(shift, lhs == rhs, "dx" + detail::cochain_label(s) + " Q=" + vector_str(q));
      }
    }
  return {shift, origin};
}

/// The β-ladder claims on a basis of constant p-forms plus random ones.
inline std::vector<Check> starprop_suite(const StarpropOptions &o) {
  int n = o.n, p = o.p;
  if (p < 1 || p > n) throw DimensionError("starprop needs 1 <= p <= n");
  Rng rng(o.seed);
  std::string tag = "[n=" + std::to_string(n) + ",p=" + std::to_string(p) + "]";
  std::vector<std::pair<std::string, SimplexForm>> betas;
  for (const auto &s : subsets(n, p)) {
    std::vector<int> idx;
    for (int j : s) idx.push_back(j + 1);
    betas.emplace_back("basis dx" + detail::cochain_label(MultiIndex(idx)),
                       SimplexForm(n, p, DiffForm::monomial(n + 1, MultiIndex(idx), Rat(1))));
  }
  for (int k = 0; k < o.random_betas; ++k)
    betas.emplace_back("random#" + std::to_string(k), detail::random_constant_simplex_form(rng, n, p));

  Check constant{"ladder has constant coefficients" + tag}, restriction{"restriction formula" + tag};
  Check closed{"closed form matches recursion" + tag}, dd{"coboundary squared zero" + tag};
  Check homotopy{"d(I_P a)=a for closed a" + tag};
  std::vector<Check> per_face;

  Rat factor = Rat(minus_one_pow(static_cast<long>(p) * (p + 1) / 2)) * factorial(p);
  Check factor_check{"restriction factor " + factor.str() + tag};
  {
    // unit top form on the face {0..p}; the recursion must recover the factor
    std::vector<int> idx;
    for (int j = 1; j <= p; ++j) idx.push_back(j);
    SimplexForm unit(n, p, DiffForm::monomial(n + 1, MultiIndex(idx), Rat(1)));
    std::vector<int> face;
    for (int j = 0; j <= p; ++j) face.push_back(j);
    Rat bp = beta_recursion(unit, p).top.at(MultiIndex(face));
    bool ok = !bp.is_zero() && Rat(1) / bp == factor;
    record(factor_check, ok, "beta_p = " + bp.str());
  }

  for (const auto &[name, beta] : betas) {
    BetaLadder ladder = beta_recursion(beta, p);
    std::string w = name + " " + detail::simplex_form_json(beta).dump();
    for (int r = 0; r <= p; ++r) {
      const auto &lvl = ladder.levels[static_cast<std::size_t>(r)];
      for (const auto &[face, form] : lvl.values()) {
        record(constant, form.has_constant_coefficients(), w + " r=" + std::to_string(r) + " I=" + detail::cochain_label(face));
        record(closed, beta_closed_form(beta, r, face) == form, w + " r=" + std::to_string(r) + " I=" + detail::cochain_label(face));
      }
      if (r + 2 <= n) {
        auto twice = coboundary(coboundary(lvl));
        bool zero = std::all_of(twice.values().begin(), twice.values().end(), [](const auto &kv) { return kv.second.is_zero(); });
        record(dd, zero, w + " r=" + std::to_string(r));
      }
    }
    for (const auto &[face, value] : ladder.top.values()) {
      bool ok = restriction_formula_holds(beta, ladder, face);
      std::string fw = w + " I=" + detail::cochain_label(face);
      record(restriction, ok, fw);
      if (o.per_face) {
        Check c{"restriction " + name + " I=" + detail::cochain_label(face) + tag};
        record(c, ok, fw);
        per_face.push_back(std::move(c));
      }
    }
  }

  // closed polynomial p-forms: exact ones d(γ), checked against random star centres on the hyperplane
  for (int k = 0; k < o.random_points; ++k) {
    DiffForm gamma(n + 1);
    for (int t = 0; t < 2; ++t) {
      MultiIndex s = rng.subset(n + 1, p - 1);
      gamma.add(s, rng.polynomial(n + 1, 2));
    }
    SimplexForm alpha(n, p, exterior_d(gamma));
    QVector centre = rng.vector(static_cast<std::size_t>(n + 1));
    Rat rest(1);
    for (std::size_t i = 1; i < centre.size(); ++i) rest -= centre[i];
    centre[0] = rest;
    SimplexForm back = exterior_d(star_integrate(centre, alpha));
    record(homotopy, back == alpha, "alpha=" + detail::simplex_form_json(alpha).dump() + " P=" + vector_str(centre));
  }

  std::vector<Check> out{factor_check, constant, restriction, closed, dd, homotopy};
  out.insert(out.end(), per_face.begin(), per_face.end());
  return out;
}

} // namespace tropmono
