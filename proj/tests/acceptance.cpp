// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tropmono/cli.hpp"
#include "tropmono/tropmono.hpp"

using namespace tropmono;

namespace {

struct Verdict {
  bool ok = true;
  long cases = 0;
  std::string first_failure;

  void take(const Check &c) {
    cases += c.cases;
    if (!c.passed && ok) {
      ok = false;
      first_failure = c.name + ": " + c.witness;
    }
  }
  void take(const std::vector<Check> &cs) {
    for (const auto &c : cs) take(c);
  }
  void expect(bool cond, const std::string &what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

std::string data(const std::string &rel) { return std::string(TROPMONO_DATA_DIR) + "/" + rel; }

// Cochain complex rebuilt from index sets alone.
std::vector<std::size_t> simplicial_betti(const SemistableCombinatorics &c) {
  std::vector<std::size_t> ranks;
  for (int p = 0; p < c.top_level(); ++p) {
    const auto &lo = c.strata(p);
    const auto &hi = c.strata(p + 1);
    QMatrix m(hi.size(), lo.size());
    for (std::size_t z = 0; z < hi.size(); ++z)
      for (std::size_t k = 0; k < hi[z].index_set.size(); ++k) {
        MultiIndex face = hi[z].index_set.without_position(k);
        for (std::size_t w = 0; w < lo.size(); ++w)
          if (lo[w].index_set == face) m(z, w) += Rat(k % 2 == 0 ? 1 : -1);
      }
    ranks.push_back(rank(m));
  }
  std::vector<std::size_t> out;
  for (int p = 0; p <= c.top_level(); ++p) {
    std::size_t out_rank = p < c.top_level() ? ranks[static_cast<std::size_t>(p)] : 0;
    std::size_t in_rank = p > 0 ? ranks[static_cast<std::size_t>(p - 1)] : 0;
    out.push_back(c.count(p) - out_rank - in_rank);
  }
  return out;
}

long cofactor_det(const IntMatrix &m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  long total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    long term = m[0][j] * cofactor_det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

Verdict superform_criterion() {
  Verdict v;
  for (int n = 1; n <= 4; ++n) v.take(superform_identity_suite(SuperformSuiteOptions{n, 200, 50, 2, 1000 + static_cast<std::uint64_t>(n)}));
  return v;
}

Verdict star_ladder_criterion() {
  Verdict v;
  for (int n = 1; n <= 4; ++n) {
    v.take(star_integral_suite(n, 20, 2000 + static_cast<std::uint64_t>(n)));
    for (int p = 1; p <= n; ++p)
      v.take(starprop_suite(StarpropOptions{n, p, 50, 20, 3000 + static_cast<std::uint64_t>(10 * n + p), false}));
  }
  return v;
}

Verdict dual_complex_criterion() {
  Verdict v;
  std::vector<std::string> names{"point", "chain2", "mgon3", "mgon4", "mgon5", "mgon6", "mgon7", "tetra"};
  for (const auto &name : names) {
    auto c = complex_from_json(load_json_file(data("complexes/" + name + ".json")));
    for (int p = 0; p + 2 <= c.top_level(); ++p)
      v.expect((delta_pullback(c, p + 1) * delta_pullback(c, p)).is_zero(), name + ": delta*delta* != 0 at p=" + std::to_string(p));
    auto oracle = simplicial_betti(c);
    for (int p = 0; p <= c.top_level(); ++p)
      v.expect(e2_p0(c, p).dim == oracle[static_cast<std::size_t>(p)], name + ": E2 dim mismatch at p=" + std::to_string(p));
  }
  for (int m = 3; m <= 7; ++m) {
    auto c = complexes::mgon(m);
    std::string tag = "mgon" + std::to_string(m);
    CornerMap unit = corner_monodromy(c, 1, H2Model::unit(c));
    v.expect(unit.iso && unit.corner.kernel_basis.size() == 1 && unit.corner.target.dim == 1, tag + ": unit corner map not a 1-dim iso");
    CornerMap zero = corner_monodromy(c, 1, H2Model::zero(c));
    v.expect(!zero.injective, tag + ": zero-Gysin control reported injective");
    H2Model h = H2Model::unit_intersection(c);
    v.expect(validate_relation(c, h, 1), tag + ": relation fails on the unit model");
    H2Entry e = h.at(StratumRef{0, 0});
    QMatrix &r = e.restrict.begin()->second;
    for (std::size_t col = 0; col < r.cols(); ++col) r(0, col) = -r(0, col);
    h.set(StratumRef{0, 0}, e);
    v.expect(!validate_relation(c, h, 1), tag + ": relation survives a sign flip");
  }
  return v;
}

Verdict ord_criterion() {
  Verdict v;
  Rng rng(4000);
  for (int t = 0; t < 200; ++t) {
    int p = static_cast<int>(rng.uniform(1, 4));
    IntMatrix a = rng.int_matrix(static_cast<std::size_t>(p), static_cast<std::size_t>(p), -5, 5);
    Presentation pr{0, p, {Rat(1)}, {{"Z", a}}};
    v.expect(ord_value(pr, "Z") == Rat(cofactor_det(a)), "ord_value != cofactor determinant");
  }
  for (int p = 1; p <= 3; ++p) {
    auto c = complexes::full_simplex(p);
    std::vector<std::vector<std::vector<long>>> b(2);
    for (auto &blk : b) blk = rng.int_matrix(static_cast<std::size_t>(p), static_cast<std::size_t>(p + 1), -3, 3);
    auto pres = piecewise_linear_presentations(c, p, {Rat(2, 3), Rat(-1)}, b);
    OrdVector ov = ord_vector(pres, c, p);
    for (const auto &sigma : permutations(p + 1))
      v.expect(ord_permuted(pres, c, StratumRef{p, 0}, sigma) == Rat(epsilon_sign(sigma)) * ov.values[0] &&
                   epsilon_sign(sigma) == permutation_sign(sigma),
               "permutation law fails for p=" + std::to_string(p));
  }
  for (int m = 3; m <= 7; ++m) {
    auto c = complex_from_json(load_json_file(data("complexes/mgon" + std::to_string(m) + ".json")));
    auto pres = presentations_from_json(load_json_file(data("presentations/mgon" + std::to_string(m) + "_cyclic.json")), c);
    DolbeaultLadder l = dolbeault_ladder(pres, c, 1);
    v.expect(l.final_check, "mgon" + std::to_string(m) + " ladder: " + l.witness);
    for (std::size_t k = 0; k < l.delta_theta.size(); ++k)
      v.expect(l.delta_theta[k] == Rat(-1) * l.ord.values[k], "mgon" + std::to_string(m) + " constant is not -1");
  }
  auto tetra = complex_from_json(load_json_file(data("complexes/tetra.json")));
  auto pres = presentations_from_json(load_json_file(data("presentations/tetra_p2.json")), tetra);
  DolbeaultLadder l = dolbeault_ladder(pres, tetra, 2);
  v.expect(l.final_check, "tetra p=2 ladder: " + l.witness);
  v.expect(!l.ord.is_zero(), "tetra p=2 example is degenerate");
  for (std::size_t k = 0; k < l.delta_theta.size(); ++k)
    v.expect(l.delta_theta[k] == Rat(-1, 2) * l.ord.values[k], "tetra constant is not -1/2");
  return v;
}

std::string cli_suite(std::uint64_t seed) {
  std::string s = std::to_string(seed);
  std::vector<std::vector<std::string>> cmds{
      {"check", "superform", "--n", "3", "--cases", "50", "--maps", "10", "--seed", s},
      {"simplex", "starprop", "--n", "3", "--p", "2", "--random", "10", "--points", "5", "--seed", s},
      {"ss", "e2", "--input", data("complexes/tetra.json"), "--seed", s},
      {"ss", "monodromy", "--input", data("complexes/mgon5.json"), "--p", "1", "--seed", s},
      {"ss", "validate", "--input", data("complexes/mgon5.json"), "--h2", "unit-restrict", "--seed", s},
      {"ord", "compute", "--complex", data("complexes/tetra.json"), "--pres", data("presentations/tetra_p2.json"), "--seed", s},
      {"ord", "check", "--complex", data("complexes/mgon6.json"), "--pres", data("presentations/mgon6_cyclic.json"), "--seed", s},
      {"dolbeault", "--complex", data("complexes/tetra.json"), "--pres", data("presentations/tetra_p2.json"), "--format", "tsv", "--seed", s},
  };
  std::ostringstream all;
  for (const auto &cmd : cmds) {
    std::ostringstream out, err;
    int code = cli::run(cmd, out, err);
    all << "$ " << cmd[0] << " " << cmd[1] << " -> " << code << "\n" << out.str() << err.str();
  }
  return all.str();
}

Verdict determinism_criterion() {
  Verdict v;
  std::string a = cli_suite(20261014), b = cli_suite(20261014);
  v.expect(!a.empty() && a == b, "reports differ between runs with the same seed");
  return v;
}

} // namespace

int main() {
  struct Criterion {
    const char *name;
    double limit_s;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> criteria{
      {"1 superform identities n=1..4, 200 forms, 50 maps", 60, superform_criterion},
      {"2 star integration and beta ladder, 1<=p<=n<=4, 50 beta, 20 Q", 120, star_ladder_criterion},
      {"3 dual complex cohomology, corner monodromy, relation", 10, dual_complex_criterion},
      {"4 ord determinant, permutation law, ladder constant", 30, ord_criterion},
      {"5 CLI reports byte-identical for a fixed seed", 60, determinism_criterion},
  };
  bool all = true;
  for (const auto &c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception &e) {
      v.ok = false;
      v.first_failure = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.limit_s;
    bool pass = v.ok && in_time;
    all = all && pass;
    std::printf("%s  %s  (%ld cases, %.2f s, limit %.0f s)", pass ? "PASS" : "FAIL", c.name, v.cases, secs, c.limit_s);
    if (!v.ok) std::printf("  first failure: %s", v.first_failure.c_str());
    else if (!in_time) std::printf("  over the time limit");
    std::printf("\n");
  }
  return all ? 0 : 1;
}
