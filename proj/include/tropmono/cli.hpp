#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropmono/dual_complex.hpp"
#include "tropmono/json_io.hpp"
#include "tropmono/report.hpp"
#include "tropmono/suites.hpp"
#include "tropmono/trop_ord.hpp"

namespace tropmono::cli {

/// Upper bound on --n, from TROPMONO_MAX_DIM (default 6).
inline int max_dim() {
  const char *env = std::getenv("TROPMONO_MAX_DIM");
  if (!env || !*env) return 6;
  char *end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw Error("TROPMONO_MAX_DIM must be a positive integer");
  return static_cast<int>(v);
}

struct Options {
  std::string input, complex, pres, h2, format = "json";
  int p = -1, n = 3, cases = 200, maps = 50, random = 50, points = 20;
  std::uint64_t seed = 1;
};

namespace detail {

inline void check_dim(int n) {
  if (n < 1) throw DimensionError("--n must be at least 1");
  int cap = max_dim();
  if (n > cap) throw DimensionError("--n " + std::to_string(n) + " exceeds TROPMONO_MAX_DIM=" + std::to_string(cap));
}

inline Json load_input(RunReport &rep, const std::string &role, const std::string &path) {
  std::string text = read_file(path);
  rep.inputs.push_back(InputDigest{role, path, hex64(fnv1a64(text))});
  return parse_json_text(text, path);
}

inline const std::string &require(const std::string &v, const char *flag) {
  if (v.empty()) throw Error(std::string("missing required option ") + flag);
  return v;
}

inline bool is_h2_keyword(const std::string &s) {
  return s == "unit" || s == "unit-restrict" || s == "zero" || s == "intersection";
}

/// --h2 keyword or file, else the complex file's own "h2", else `fallback`.
inline H2Model resolve_h2(RunReport &rep, const Options &o, const Json &complex_json, const SemistableCombinatorics &c,
                          const std::string &fallback, std::string &source) {
  if (!o.h2.empty()) {
    if (is_h2_keyword(o.h2)) {
      source = o.h2;
      return h2_from_json(Json(o.h2), c);
    }
    Json j = load_input(rep, "h2", o.h2);
    source = o.h2;
    return h2_from_json(j.is_object() && j.contains("h2") ? j.at("h2") : j, c);
  }
  if (complex_json.contains("h2")) {
    source = "embedded";
    return h2_from_json(complex_json.at("h2"), c);
  }
  if (fallback.empty()) throw Error("no H2 model: pass --h2 or embed an \"h2\" entry");
  source = fallback;
  return h2_from_json(Json(fallback), c);
}

inline Check delta_squared_check(const SemistableCombinatorics &c) {
  Check chk{"delta*delta*=0"};
  for (int p = 0; p + 2 <= c.top_level(); ++p) {
    QMatrix comp = delta_pullback(c, p + 1) * delta_pullback(c, p);
    record(chk, comp.is_zero(), "p=" + std::to_string(p) + " product=" + comp.str());
  }
  if (chk.cases == 0) chk.cases = 1;
  return chk;
}

inline Json vectors_json(const std::vector<QVector> &vs) {
  Json a = Json::array();
  for (const auto &v : vs) a.push_back(vector_to_json(v));
  return a;
}

inline Json labelled(const SemistableCombinatorics &c, int p, const QVector &v) {
  Json o = Json::object();
  for (std::size_t k = 0; k < v.size(); ++k) o[c.strata(p)[k].label] = v[k].str();
  return o;
}

// ---------------------------------------------------------------------------

inline void run_check_superform(RunReport &rep, const Options &o) {
  check_dim(o.n);
  rep.seed = o.seed;
  SuperformSuiteOptions so{o.n, o.cases, o.maps, 2, o.seed};
  rep.checks = superform_identity_suite(so);
  Json res{{"n", o.n}, {"cases", o.cases}, {"maps", o.maps}};
  if (!o.input.empty()) {
    Json j = load_input(rep, "superforms", o.input);
    int n = j.is_object() ? j.value("n", o.n) : o.n;
    check_dim(n);
    const Json &list = j.is_object() ? j.at("forms") : j;
    // a bare single form is a list of term objects
    std::vector<Json> forms;
    if (!list.empty() && list.front().is_object()) forms.push_back(list);
    else
      for (const auto &f : list) forms.push_back(f);
    for (std::size_t k = 0; k < forms.size(); ++k) {
      Superform w = superform_from_json(forms[k], n);
      std::string tag = "input#" + std::to_string(k) + " ";
      std::string wit = forms[k].dump();
      auto add = [&](const std::string &name, bool ok) {
        Check c{tag + name};
        record(c, ok, wit);
        rep.checks.push_back(c);
      };
      add("d'd'=0", d_prime(d_prime(w)).is_zero());
      add("d''d''=0", d_second(d_second(w)).is_zero());
      add("d'd''+d''d'=0", (d_prime(d_second(w)) + d_second(d_prime(w))).is_zero());
      add("JJ=id", flip_J(flip_J(w)) == w);
      add("d''=Jd'J", d_second(w) == flip_J(d_prime(flip_J(w))));
      auto bideg = w.bidegrees();
      bool has_p0 = std::any_of(bideg.begin(), bideg.end(), [](const auto &b) { return b.first == 0; });
      if (!has_p0 && !w.is_zero()) add("Nd''=d''N", monodromy_N(d_second(w)) == d_second(monodromy_N(w)));
      if (bideg.size() == 1 && bideg.begin()->second == 0 && bideg.begin()->first >= 1) {
        int p = bideg.begin()->first;
        add("N^p=p!J", monodromy_power(w, p) == factorial(p) * flip_J(w));
      }
    }
    res["inputForms"] = forms.size();
  }
  rep.result = res;
}

inline void run_starprop(RunReport &rep, const Options &o) {
  check_dim(o.n);
  int p = o.p < 0 ? o.n : o.p;
  rep.seed = o.seed;
  StarpropOptions so{o.n, p, o.random, o.points, o.seed, true};
  rep.checks = star_integral_suite(o.n, o.points, o.seed);
  auto more = starprop_suite(so);
  rep.checks.insert(rep.checks.end(), more.begin(), more.end());
  Rat factor = Rat(minus_one_pow(static_cast<long>(p) * (p + 1) / 2)) * factorial(p);
  rep.result = Json{{"n", o.n}, {"p", p}, {"factor", factor.str()}};
}

inline void run_ss(RunReport &rep, const Options &o, const std::string &which) {
  const std::string &path = o.input.empty() ? require(o.complex, "--input") : o.input;
  Json cj = load_input(rep, "complex", path);
  SemistableCombinatorics c = complex_from_json(cj);
  rep.checks.push_back(delta_squared_check(c));
  if (which == "e2") {
    std::vector<int> levels;
    if (o.p >= 0) levels.push_back(o.p);
    else
      for (int p = 0; p <= c.top_level(); ++p) levels.push_back(p);
    Json dims = Json::array(), detail = Json::array();
    for (int p : levels) {
      if (p > c.top_level()) throw DimensionError("--p exceeds the top level of the complex");
      E2Quotient q = e2_p0(c, p);
      dims.push_back(q.dim);
      detail.push_back(Json{{"p", p},
                            {"dim", q.dim},
                            {"cocycleDim", q.cocycles.size()},
                            {"coboundaryRank", span_rank(q.coboundaries, c.count(p))},
                            {"representatives", vectors_json(q.representatives)}});
    }
    rep.result = Json{{"dims", dims}, {"levels", detail}};
  } else if (which == "monodromy") {
    if (o.p < 0) throw Error("missing required option --p");
    std::string src;
    H2Model h2 = resolve_h2(rep, o, cj, c, "unit", src);
    CornerMap cm = corner_monodromy(c, o.p, h2);
    Check iso{"corner map is an isomorphism"};
    record(iso, cm.iso,
           "dims=[" + std::to_string(cm.corner.kernel_basis.size()) + "," + std::to_string(cm.corner.target.dim) +
               "] matrix=" + cm.matrix.str());
    rep.checks.push_back(iso);
    rep.result = Json{{"p", o.p},
                      {"h2", src},
                      {"iso", cm.iso},
                      {"injective", cm.injective},
                      {"surjective", cm.surjective},
                      {"dims", Json::array({cm.corner.kernel_basis.size(), cm.corner.target.dim})},
                      {"matrix", matrix_to_json(cm.matrix)},
                      {"kernelBasis", vectors_json(cm.corner.kernel_basis)}};
  } else {
    std::string src;
    H2Model h2 = resolve_h2(rep, o, cj, c, "", src);
    std::vector<int> levels;
    if (o.p >= 1) levels.push_back(o.p);
    else
      for (int p = 1; p <= c.top_level(); ++p) levels.push_back(p);
    for (int p : levels) {
      Check chk{"pullback/pushforward relation p=" + std::to_string(p)};
      QMatrix res = relation_residual(c, h2, p);
      record(chk, res.is_zero(), "residual=" + res.str());
      rep.checks.push_back(chk);
    }
    rep.result = Json{{"h2", src}, {"levels", levels}};
  }
}

inline std::vector<Presentation> load_presentations(RunReport &rep, const Options &o, const SemistableCombinatorics &c) {
  return presentations_from_json(load_input(rep, "presentations", require(o.pres, "--pres")), c);
}

inline int presentation_degree(const std::vector<Presentation> &pres, int requested) {
  if (requested >= 0) return requested;
  if (pres.empty()) throw Error("missing required option --p");
  return pres.front().p;
}

inline void run_ord(RunReport &rep, const Options &o, const std::string &which) {
  const std::string &path = o.complex.empty() ? require(o.input, "--complex") : o.complex;
  Json cj = load_input(rep, "complex", path);
  SemistableCombinatorics c = complex_from_json(cj);
  auto pres = load_presentations(rep, o, c);
  int p = presentation_degree(pres, o.p);
  OrdVector v = ord_vector(pres, c, p);
  Check agree{"covering presentations agree"};
  record(agree, true, "");
  rep.checks.push_back(agree);
  Json res{{"p", p}, {"ord", labelled(c, p, v.values)}};
  if (which == "check") {
    std::string src;
    H2Model h2 = resolve_h2(rep, o, cj, c, "", src);
    E2Membership m = check_e2_membership(v, c, h2);
    Check pb{"delta_p^* ord = 0"}, pf{"delta_p* ord = 0"};
    record(pb, m.pullback_zero, "delta_p^* ord = " + vector_str(m.pullback));
    record(pf, m.pushforward_zero, "delta_p* ord = " + vector_str(m.pushforward));
    rep.checks.push_back(pb);
    rep.checks.push_back(pf);
    res["h2"] = src;
    res["pullbackZero"] = m.pullback_zero;
    res["pushforwardZero"] = m.pushforward_zero;
  }
  rep.result = res;
}

inline void run_dolbeault(RunReport &rep, const Options &o) {
  const std::string &path = o.complex.empty() ? require(o.input, "--complex") : o.complex;
  Json cj = load_input(rep, "complex", path);
  SemistableCombinatorics c = complex_from_json(cj);
  auto pres = load_presentations(rep, o, c);
  int p = presentation_degree(pres, o.p);
  DolbeaultLadder dl = dolbeault_ladder(pres, c, p);
  Check steps{"ladder steps"}, fin{"final check"};
  record(steps, dl.steps_ok, dl.witness);
  record(fin, dl.final_check, dl.witness);
  rep.checks.push_back(steps);
  rep.checks.push_back(fin);
  Rat factor = Rat(minus_one_pow(static_cast<long>(p) * (p + 1) / 2)) / factorial(p);
  Json cells = Json::array();
  for (const auto &cell : dl.cells) {
    Json th = Json::array();
    for (const auto &cochain : cell.theta) {
      Json o2 = Json::object();
      for (const auto &[face, form] : cochain.values()) o2[face.str()] = form.str();
      th.push_back(o2);
    }
    cells.push_back(Json{{"stratum", cell.label}, {"beta", cell.beta.str()}, {"theta", th}});
  }
  rep.result = Json{{"p", p},
                    {"factor", factor.str()},
                    {"ord", labelled(c, p, dl.ord.values)},
                    {"deltaTheta", labelled(c, p, dl.delta_theta)},
                    {"cells", cells}};
}

} // namespace detail

/// Parses arguments (program name excluded) and writes the report; returns
/// the process exit code (0 all checks pass, 1 some check failed, 2 usage or
/// input error).
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact checks for tropical superforms, simplex integration, dual complexes and ord maps", "tropmono"};
  app.require_subcommand(1);
  Options o;
  std::string chosen;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--seed", o.seed, "random seed");
  };
  auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &desc) {
    CLI::App *s = parent->add_subcommand(name, desc);
    common(s);
    s->callback([&chosen, parent, name] { chosen = parent->get_name() + " " + name; });
    return s;
  };

  CLI::App *check = app.add_subcommand("check", "identity suites");
  check->require_subcommand(1);
  CLI::App *csf = leaf(check, "superform", "superform identity suite");
  csf->add_option("--n", o.n, "ambient dimension");
  csf->add_option("--cases", o.cases, "random cases");
  csf->add_option("--maps", o.maps, "random affine maps");
  csf->add_option("--input", o.input, "superform JSON file");

  CLI::App *simplex = app.add_subcommand("simplex", "simplex integration");
  simplex->require_subcommand(1);
  CLI::App *sp = leaf(simplex, "starprop", "beta ladder claims");
  sp->add_option("--n", o.n, "simplex dimension");
  sp->add_option("--p", o.p, "form degree (default n)");
  sp->add_option("--random", o.random, "random constant forms");
  sp->add_option("--points", o.points, "random star centres");

  CLI::App *ss = app.add_subcommand("ss", "weight spectral sequence corner");
  ss->require_subcommand(1);
  for (const char *name : {"e2", "monodromy", "validate"}) {
    CLI::App *s = leaf(ss, name, std::string("ss ") + name);
    s->add_option("--input,--complex", o.input, "complex JSON file");
    s->add_option("--p", o.p, "level");
    if (std::string(name) != "e2") s->add_option("--h2", o.h2, "H2 model file or keyword");
  }

  CLI::App *ord = app.add_subcommand("ord", "ord map");
  ord->require_subcommand(1);
  for (const char *name : {"compute", "check"}) {
    CLI::App *s = leaf(ord, name, std::string("ord ") + name);
    s->add_option("--complex,--input", o.complex, "complex JSON file");
    s->add_option("--pres", o.pres, "presentations JSON file");
    s->add_option("--p", o.p, "degree");
    if (std::string(name) == "check") s->add_option("--h2", o.h2, "H2 model file or keyword");
  }

  CLI::App *dol = app.add_subcommand("dolbeault", "representative ladder");
  common(dol);
  dol->add_option("--complex,--input", o.complex, "complex JSON file");
  dol->add_option("--pres", o.pres, "presentations JSON file");
  dol->add_option("--p", o.p, "degree");
  dol->callback([&chosen] { chosen = "dolbeault"; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  RunReport rep;
  rep.command = chosen;
  try {
    if (chosen == "check superform") detail::run_check_superform(rep, o);
    else if (chosen == "simplex starprop") detail::run_starprop(rep, o);
    else if (chosen.rfind("ss ", 0) == 0) detail::run_ss(rep, o, chosen.substr(3));
    else if (chosen.rfind("ord ", 0) == 0) detail::run_ord(rep, o, chosen.substr(4));
    else if (chosen == "dolbeault") detail::run_dolbeault(rep, o);
    else {
      err << "error: unknown command\n" << app.help();
      return 2;
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  rep.finalize();
  out << rep.render(o.format);
  return rep.exit_code;
}

} // namespace tropmono::cli
