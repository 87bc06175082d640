#include "perdom/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "perdom/dm.hpp"
#include "perdom/hodge.hpp"
#include "perdom/k3_catalog.hpp"
#include "perdom/lattice.hpp"
#include "perdom/lattice_expr.hpp"

namespace perdom::cli {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

std::string rat_str(const Rational& x) { return x.get_str(); }

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const siegel::CMatrix& m) {
  json e = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) e.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(e)}};
}

json to_json(const SignatureTriple& s) { return json{{"plus", s.plus}, {"minus", s.minus}, {"zero", s.zero}}; }

json to_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const dm::WeightSystem& w) {
  json pairs = json::array();
  for (const auto& x : w.entries()) pairs.push_back(json::array({to_json(Integer(x.get_num())), to_json(Integer(x.get_den()))}));
  return pairs;
}

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json checks = json::array();
  json warnings = json::array();

  void check(const std::string& name, bool pass) { checks.push_back(json{{"name", name}, {"pass", pass}}); }

  bool pass() const {
    for (const auto& c : checks)
      if (!c["pass"].get<bool>()) return false;
    return true;
  }
};

json header(const std::string& command) {
  return json{{"schema", kSchema}, {"tool", kToolName}, {"version", kVersion}, {"command", command}};
}

json lattice_json(const lattice::IntegralLattice& l) {
  json j{{"expression", l.label()},
         {"rank", l.rank()},
         {"gram", to_json(l.gram())},
         {"determinant", to_json(l.determinant())},
         {"signature", to_json(l.signature())},
         {"even", l.is_even()},
         {"discriminant_group", to_json(lattice::discriminant_group(l))}};
  return j;
}

json form_json(const lattice::FiniteQuadraticForm& f) {
  json values = json::array();
  for (std::size_t i = 0; i < f.num_generators(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.num_generators(); ++j) row.push_back(rat_str(f.values()(i, j)));
    values.push_back(std::move(row));
  }
  return json{{"invariant_factors", to_json(f.invariant_factors())}, {"values", std::move(values)}};
}

json glue_json(const k3::GlueReport& r) {
  return json{{"name", r.name},
              {"constraint_mode", r.constraint_mode},
              {"rank_M", r.rank_M},
              {"rank_N", r.rank_N},
              {"rank_sum_is_22", r.rank_sum_is_22},
              {"sig_M", r.constraint_mode ? json(nullptr) : to_json(r.sig_M)},
              {"sig_N", to_json(r.sig_N)},
              {"sig_pattern_ok", r.sig_pattern_ok},
              {"det_M", to_json(r.det_M)},
              {"det_N", to_json(r.det_N)},
              {"det_match", r.det_match},
              {"group_M", to_json(r.group_M)},
              {"group_N", to_json(r.group_N)},
              {"group_iso", r.group_iso},
              {"form_anti_iso", k3::to_string(r.form_anti_iso)},
              {"ok", r.ok()}};
}

void add_glue_checks(Report& rep, const k3::GlueReport& r, const std::string& prefix) {
  rep.check(prefix + "rank_sum_is_22", r.rank_sum_is_22);
  rep.check(prefix + "sig_pattern_ok", r.sig_pattern_ok);
  rep.check(prefix + "det_match", r.det_match);
  rep.check(prefix + "group_iso", r.group_iso);
  if (r.form_anti_iso != k3::FormCheck::NotApplicable)
    rep.check(prefix + "form_anti_iso", r.form_anti_iso != k3::FormCheck::False);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("invalid JSON in '" + path + "': " + e.what());
  }
}

std::vector<long> parse_long_list(const std::string& text, const char* what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument("trailing");
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError(std::string("bad integer '") + item + "' in " + what);
    }
  }
  if (out.empty()) throw InputError(std::string("empty ") + what);
  return out;
}

std::vector<std::vector<std::size_t>> parse_groups(const std::string& text) {
  std::vector<std::vector<std::size_t>> groups;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '/')) {
    std::vector<std::size_t> g;
    for (long v : parse_long_list(part, "coincidence class")) {
      if (v < 1) throw InputError("point indices are 1-based");
      g.push_back(static_cast<std::size_t>(v - 1));
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

hodge::CharacterHodgeStructure read_chs(const std::string& path) {
  const json j = load_json(path);
  try {
    hodge::CharacterHodgeStructure h(j.at("weight").get<long>(), j.at("group_order").get<long>());
    for (const auto& e : j.at("dims")) {
      if (!e.is_array() || e.size() != 3) throw InputError("dims entries must be [a, p, h]");
      const long p = e[1].get<long>();
      if (p < 0 || p > h.weight()) throw InputError("Hodge index p out of range in dims");
      h.set(e[0].get<long>(), p, e[2].get<long>());
    }
    return h;
  } catch (const json::exception& e) {
    throw InputError("malformed Hodge structure file: " + std::string(e.what()));
  }
}

json chs_json(const hodge::CharacterHodgeStructure& h) {
  json dims = json::array();
  for (long a = 0; a < h.group_order(); ++a)
    for (long p = 0; p <= h.weight(); ++p)
      if (h.h(a, p)) dims.push_back(json::array({a, p, h.h(a, p)}));
  return json{{"weight", h.weight()}, {"group_order", h.group_order()}, {"dims", std::move(dims)}};
}

void print_summary(std::ostream& err, const Report& r, bool pass) {
  err << kToolName << ' ' << r.command << ": " << (pass ? "PASS" : "FAIL") << '\n';
  for (const auto& c : r.checks)
    if (!c["pass"].get<bool>()) err << "  failed: " << c["name"].get<std::string>() << '\n';
  for (const auto& w : r.warnings) err << "  warning: " << w.get<std::string>() << '\n';
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

siegel::CMatrix read_complex_matrix(const std::string& path) {
  const json j = load_json(path);
  try {
    const long rows = j.at("rows").get<long>();
    const long cols = j.at("cols").get<long>();
    const auto& e = j.at("entries");
    if (rows < 0 || cols < 0 || !e.is_array() || static_cast<long>(e.size()) != rows * cols)
      throw InputError("complex matrix '" + path + "': entries must hold rows*cols values");
    siegel::CMatrix m(rows, cols);
    for (long k = 0; k < rows * cols; ++k) {
      const auto& x = e[k];
      if (x.is_number()) m(k / cols, k % cols) = siegel::cplx(x.get<double>(), 0.0);
      else if (x.is_array() && x.size() == 2) m(k / cols, k % cols) = siegel::cplx(x[0].get<double>(), x[1].get<double>());
      else throw InputError("complex matrix '" + path + "': entries must be [re, im] pairs");
    }
    return m;
  } catch (const json::exception& ex) {
    throw InputError("malformed complex matrix '" + path + "': " + ex.what());
  }
}

IntMatrix read_int_matrix(const std::string& path) {
  const json j = load_json(path);
  try {
    auto entry = [](const json& x) -> Integer {
      if (x.is_number_integer()) return Integer(x.get<long>());
      if (x.is_string()) return Integer(x.get<std::string>());
      throw InputError("integer matrix entries must be integers");
    };
    if (j.is_array()) {
      const std::size_t rows = j.size();
      const std::size_t cols = rows ? j[0].size() : 0;
      IntMatrix m(rows, cols);
      for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw InputError("integer matrix rows must have equal length");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = entry(j[i][c]);
      }
      return m;
    }
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& e = j.at("entries");
    if (e.size() != rows * cols) throw InputError("integer matrix entries must hold rows*cols values");
    IntMatrix m(rows, cols);
    for (std::size_t k = 0; k < rows * cols; ++k) m(k / cols, k % cols) = entry(e[k]);
    return m;
  } catch (const json::exception& ex) {
    throw InputError("malformed integer matrix '" + path + "': " + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw InputError("malformed integer matrix '" + path + "': " + ex.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool human) {
  CLI::App app{"Lattice, period-domain and Deligne-Mostow computations", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Report rep;
  std::function<void(Report&)> action;

  // Shared option storage.
  std::string s1, s2, s3;
  long n1 = 0, n2 = 0;
  long dmax = 60;
  unsigned threads = default_threads();
  bool flag = false;
  double tol = siegel::kDefaultTol.eps;
  std::string mode = "coperiod";

  auto group = [&app](const char* name, const char* desc) {
    auto* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  };
  auto bind = [&](CLI::App* cmd, std::string name, std::function<void(Report&)> f) {
    cmd->callback([&rep, &action, name = std::move(name), f = std::move(f)] {
      rep.command = name;
      action = f;
    });
  };

  // lattice
  auto* lat = group("lattice", "Integral lattice invariants");
  auto* info = lat->add_subcommand("info", "Rank, Gram matrix, determinant, signature, discriminant group and form");
  info->add_option("EXPR", s1, "Lattice expression, e.g. \"U+U+U+E8^2\"")->required();
  info->add_flag("--roots", flag, "Also count roots (negative definite lattices only)");
  bind(info, "lattice info", [&](Report& r) {
    r.inputs["expression"] = s1;
    const auto l = lattice::parse_lattice_expr(s1);
    r.results = lattice_json(l);
    if (l.is_even() && abs(l.determinant()) <= lattice::kDefaultFqfCap)
      r.results["discriminant_form"] = form_json(lattice::discriminant_form(l));
    const auto group = lattice::discriminant_group(l);
    json pel = nullptr;
    if (!group.empty() && std::all_of(group.begin(), group.end(), [&](const Integer& x) { return x == group[0]; })) {
      const Integer p = group[0];
      if (mpz_probab_prime_p(p.get_mpz_t(), 30) > 0) pel = to_json(p);
    }
    r.results["p_elementary"] = pel;
    if (flag) {
      if (l.signature().minus != l.rank()) throw InputError("--roots requires a negative definite lattice");
      r.results["root_count"] = lattice::root_vectors(l).size();
    }
  });

  // k3
  auto* k3g = group("k3", "K3 lattice catalog and cyclic isometries");
  auto* vt = k3g->add_subcommand("verify-table", "Run the gluing checks on every catalog pair");
  bind(vt, "k3 verify-table", [&](Report& r) {
    const auto summary = k3::verify_catalog();
    const auto pairs = k3::catalog();
    json entries = json::array();
    for (std::size_t i = 0; i < summary.reports.size(); ++i) {
      json e = glue_json(summary.reports[i]);
      e["M"] = pairs[i].M ? json(pairs[i].M->label()) : json(nullptr);
      e["N"] = pairs[i].N.label();
      e["source"] = pairs[i].source == k3::Source::Table ? "table" : "in_text";
      if (!pairs[i].mu.empty()) e["mu"] = pairs[i].mu;
      if (!pairs[i].table_note.empty()) e["table_note"] = pairs[i].table_note;
      entries.push_back(std::move(e));
      add_glue_checks(r, summary.reports[i], summary.reports[i].name + ".");
    }
    r.results["entries"] = std::move(entries);
    for (const auto& w : summary.warnings) r.warnings.push_back(w);
  });
  auto* glue = k3g->add_subcommand("glue", "Gluing checks for a pair of lattice expressions");
  glue->add_option("M_EXPR", s1, "Lattice M")->required();
  glue->add_option("N_EXPR", s2, "Lattice N")->required();
  bind(glue, "k3 glue", [&](Report& r) {
    r.inputs["M"] = s1;
    r.inputs["N"] = s2;
    k3::GluePair pair{"custom", lattice::parse_lattice_expr(s1), lattice::parse_lattice_expr(s2), k3::Source::Table, {}, {}, {}};
    const auto g = k3::glue_report(pair);
    r.results = glue_json(g);
    add_glue_checks(r, g, "");
    if (g.form_anti_iso == k3::FormCheck::CapExceeded) r.warnings.push_back("discriminant form comparison skipped (cap exceeded)");
  });
  auto* cyc = k3g->add_subcommand("cyclic", "Order-p isometry of the root lattice A(p-1)");
  cyc->add_option("P", n1, "Prime p <= 13")->required();
  bind(cyc, "k3 cyclic", [&](Report& r) {
    r.inputs["p"] = n1;
    const auto c = k3::cyclic_root_isometry(n1);
    r.results["lattice"] = c.L.label();
    r.results["rho"] = to_json(c.rho);
    r.check("isometry", c.report.isometry);
    r.check("order_p", c.report.order_p);
    r.check("no_fixed_vector", c.report.no_fixed_vector);
    r.check("fixes_glue_class", c.report.fixes_glue_class);
    r.check("orbit_sums_vanish", c.report.orbit_sums_vanish);
  });

  // dm
  auto* dmg = group("dm", "Deligne-Mostow weight systems");
  auto* en = dmg->add_subcommand("enum", "Enumerate weight systems with |mu| = 2");
  en->add_option("M", n1, "Number of weights")->required();
  en->add_option("COND", s1, "INT or SigmaINT")->required()->check(CLI::IsMember({"INT", "SigmaINT"}));
  en->add_option("--dmax", dmax, "Bound on the common denominator")->capture_default_str();
  en->add_option("--threads", threads, "Worker threads");
  en->add_flag("--reverse", flag, "Reverse the traversal order");
  bind(en, "dm enum", [&](Report& r) {
    r.inputs["m"] = n1;
    r.inputs["condition"] = s1;
    r.inputs["dmax"] = dmax;
    if (n1 < 3) throw InputError("m must be at least 3");
    const auto list = dm::enumerate(static_cast<std::size_t>(n1), s1 == "INT" ? dm::Condition::INT : dm::Condition::SigmaINT,
                                    dm::EnumOptions{dmax, threads, flag});
    json systems = json::array();
    for (const auto& w : list) systems.push_back(w.to_string());
    r.results["count"] = list.size();
    r.results["systems"] = std::move(systems);
  });
  auto* chk = dmg->add_subcommand("check", "Validate a weight system and test INT / SigmaINT");
  chk->add_option("MU", s1, "Weights, e.g. \"1/3*6\" or \"2/5,2/5,2/5,2/5,2/5\"")->required();
  bind(chk, "dm check", [&](Report& r) {
    r.inputs["mu"] = s1;
    const auto w = dm::validate_weights(dm::parse_weights(s1));
    r.results["canonical"] = w.to_string();
    r.results["weights"] = to_json(w);
    r.results["m"] = w.m();
    r.results["d"] = w.d();
    r.results["sum"] = to_json(w.total());
    r.results["INT"] = dm::is_int(w);
    r.results["SigmaINT"] = dm::is_sigma_int(w);
    if (w.m() >= 4) r.results["ball_dimension"] = dm::ball_dimension(static_cast<long>(w.m()));
    if (w.total() >= 1) {
      const auto e = hodge::arrangement_eigendims(w, 1);
      r.results["eigendims_n1"] = json{{"h10", e.h[1]}, {"h01", e.h[0]}, {"total", e.total}};
    }
  });
  auto* gen = dmg->add_subcommand("genus", "Genus of y^d = prod (x - z_i)^{k_i}");
  gen->add_option("D", n1, "Degree d")->required();
  gen->add_option("K", s1, "Exponents k1,k2,...")->required();
  bind(gen, "dm genus", [&](Report& r) {
    const auto k = parse_long_list(s1, "exponent list");
    r.inputs["d"] = n1;
    r.inputs["k"] = k;
    r.results["genus"] = dm::cyclic_cover_genus(n1, k);
  });
  auto* stab = dmg->add_subcommand("stability", "GIT stability of a weighted point configuration");
  stab->add_option("K", s1, "Weights k1,k2,...")->required();
  stab->add_option("GROUPS", s2, "Coincidence classes, 1-based, e.g. \"1,2,3/4/5/6\"")->required();
  bind(stab, "dm stability", [&](Report& r) {
    const auto k = parse_long_list(s1, "weight list");
    r.inputs["k"] = k;
    r.inputs["groups"] = s2;
    const auto v = dm::git_classify(k, parse_groups(s2));
    r.results["verdict"] = dm::to_string(v.verdict);
    json wit = json::array();
    for (const auto& g : v.witnesses) {
      json c = json::array();
      for (std::size_t i : g) c.push_back(i + 1);
      wit.push_back(std::move(c));
    }
    r.results["witnesses"] = std::move(wit);
  });

  // siegel
  auto* sg = group("siegel", "Siegel half-space and period matrices");
  auto* cp = sg->add_subcommand("check-point", "Test membership in the Siegel half-space");
  cp->add_option("FILE", s1, "Complex matrix JSON")->required()->check(CLI::ExistingFile);
  cp->add_option("--tol", tol, "Tolerance")->capture_default_str();
  bind(cp, "siegel check-point", [&](Report& r) {
    r.inputs["file"] = s1;
    r.inputs["tol"] = tol;
    const auto z = read_complex_matrix(s1);
    if (z.rows() != z.cols()) throw InputError("Z must be square");
    const bool ok = siegel::is_siegel_point(z, {tol});
    r.results["g"] = z.rows();
    r.results["siegel_point"] = ok;
    if (ok) {
      const auto w = siegel::cayley_to_bounded(z, {tol});
      r.results["cayley"] = to_json(w);
      r.results["cayley_in_bounded_domain"] = siegel::in_bounded_siegel(w, {tol});
    }
    r.check("siegel_point", ok);
  });
  auto* rf = sg->add_subcommand("riemann", "Riemann-Frobenius conditions for a period matrix and a skew form");
  rf->add_option("FILE", s1, "Complex matrix JSON (2g x g coperiod or g x 2g period)")->required()->check(CLI::ExistingFile);
  rf->add_option("AFILE", s2, "Integer skew matrix JSON")->required()->check(CLI::ExistingFile);
  rf->add_option("--mode", mode, "coperiod or period")->check(CLI::IsMember({"coperiod", "period"}))->capture_default_str();
  rf->add_option("--tol", tol, "Tolerance")->capture_default_str();
  bind(rf, "siegel riemann", [&](Report& r) {
    r.inputs["file"] = s1;
    r.inputs["a_file"] = s2;
    r.inputs["mode"] = mode;
    r.inputs["tol"] = tol;
    const auto pi = read_complex_matrix(s1);
    const auto a = read_int_matrix(s2);
    const bool ok = siegel::riemann_frobenius(pi, a, mode == "period" ? siegel::PeriodMode::Period : siegel::PeriodMode::Coperiod,
                                              {tol});
    r.results["riemann_frobenius"] = ok;
    r.check("riemann_frobenius", ok);
  });
  auto* fp = sg->add_subcommand("find-polarization", "Search skew integer forms satisfying the period-mode conditions");
  fp->add_option("FILE", s1, "Complex g x 2g period matrix JSON")->required()->check(CLI::ExistingFile);
  fp->add_option("BOUND", n1, "Entry bound")->required();
  fp->add_option("--threads", threads, "Worker threads");
  fp->add_option("--tol", tol, "Tolerance")->capture_default_str();
  bind(fp, "siegel find-polarization", [&](Report& r) {
    r.inputs["file"] = s1;
    r.inputs["bound"] = n1;
    r.inputs["tol"] = tol;
    const auto p = read_complex_matrix(s1);
    const auto res = siegel::find_polarization(p, n1, threads, {tol});
    json found = json::array();
    for (const auto& a : res.found) found.push_back(to_json(a));
    r.results["candidates"] = res.candidates;
    r.results["count"] = res.found.size();
    r.results["found"] = std::move(found);
  });
  auto* sat = sg->add_subcommand("satake", "Satake embedding of a point of I_pq");
  sat->add_option("FILE", s1, "Complex q x p matrix JSON")->required()->check(CLI::ExistingFile);
  sat->add_option("P", n1, "p")->required();
  sat->add_option("Q", n2, "q")->required();
  sat->add_option("--tol", tol, "Tolerance")->capture_default_str();
  bind(sat, "siegel satake", [&](Report& r) {
    r.inputs["file"] = s1;
    r.inputs["p"] = n1;
    r.inputs["q"] = n2;
    const auto z = read_complex_matrix(s1);
    if (z.rows() != n2 || z.cols() != n1) throw InputError("Z must be q x p");
    const bool in_ipq = siegel::in_bounded_Ipq(z, {tol});
    const auto zp = siegel::satake_embed(z);
    const bool in_bounded = siegel::in_bounded_siegel(zp, {tol});
    r.results["in_Ipq"] = in_ipq;
    r.results["embedded"] = to_json(zp);
    r.results["embedded_in_bounded_domain"] = in_bounded;
    r.check("membership_equivalence", in_ipq == in_bounded);
  });

  // hodge
  auto* hg = group("hodge", "Character Hodge structures");
  auto* ht = hg->add_subcommand("halftwist", "Negative half-twist of a character Hodge structure");
  ht->add_option("FILE", s1, "JSON {weight, group_order, dims: [[a, p, h], ...]}")->required()->check(CLI::ExistingFile);
  ht->add_option("SIGMA", s2, "Character indices a1,a2,... or \"canonical\"")->required();
  bind(ht, "hodge halftwist", [&](Report& r) {
    r.inputs["file"] = s1;
    r.inputs["sigma"] = s2;
    const auto h = read_chs(s1);
    const auto sigma = s2 == "canonical" ? hodge::canonical_sigma(h.group_order()) : parse_long_list(s2, "Sigma");
    const auto in_valid = hodge::validate_chs(h);
    const auto tw = hodge::half_twist(h, sigma);
    const auto out_valid = hodge::validate_chs(tw);
    long before = 0;
    for (long a = 0; a < h.group_order(); ++a) {
      const long c = h.reduce(a);
      const bool used = std::any_of(sigma.begin(), sigma.end(), [&](long s) { return h.reduce(s) == c || h.reduce(-s) == c; });
      if (used)
        for (long p = 0; p <= h.weight(); ++p) before += h.h(a, p);
    }
    r.results["sigma"] = sigma;
    r.results["twist"] = chs_json(tw);
    r.results["hodge_numbers"] = tw.hodge_numbers();
    for (const auto& d : in_valid.diagnostics) r.warnings.push_back("input: " + d);
    r.check("input_reality", in_valid.ok);
    r.check("output_reality", out_valid.ok);
    r.check("dimension_conserved", before == tw.total());
  });
  auto* ed = hg->add_subcommand("eigendims", "Eigencohomology dimensions of a point arrangement");
  ed->add_option("MU", s1, "Weights")->required();
  ed->add_option("N", n1, "Degree n")->required();
  bind(ed, "hodge eigendims", [&](Report& r) {
    r.inputs["mu"] = s1;
    r.inputs["n"] = n1;
    const auto w = dm::validate_weights(dm::parse_weights(s1));
    const auto e = hodge::arrangement_eigendims(w, n1);
    json h = json::array();
    for (long p = n1; p >= 0; --p) h.push_back(json{{"p", p}, {"q", n1 - p}, {"h", e.h[p]}});
    r.results["dims"] = std::move(h);
    r.results["total"] = e.total;
  });
  auto* sig = hg->add_subcommand("signature", "Sylvester signature from Hodge numbers");
  sig->add_option("B", n1, "Betti number b_n")->required();
  sig->add_option("H", s1, "Hodge numbers h^{0,n},h^{1,n-1},...")->required();
  bind(sig, "hodge signature", [&](Report& r) {
    const auto h = parse_long_list(s1, "Hodge numbers");
    r.inputs["b"] = n1;
    r.inputs["h"] = h;
    const auto s = hodge::sylvester_signature(n1, h, static_cast<long>(h.size()) - 1);
    r.results["index"] = s.index;
    r.results["t_plus"] = s.t_plus;
    r.results["t_minus"] = s.t_minus;
  });

  const auto t0 = std::chrono::steady_clock::now();
  auto fail = [&](const std::string& msg) {
    json j = header(rep.command);
    j["error"] = msg;
    j["pass"] = false;
    out << j.dump(2) << '\n';
    err << kToolName << ": error: " << msg << '\n';
    return 2;
  };

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(e.what());
  }
  if (!action) return fail("no command given");

  try {
    action(rep);
  } catch (const InputError& e) {
    return fail(e.what());
  } catch (const NumericalError& e) {
    return fail(e.what());
  } catch (const CapExceeded& e) {
    return fail(e.what());
  }

  const bool pass = rep.pass();
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  json j = header(rep.command);
  j["inputs"] = rep.inputs;
  j["results"] = rep.results;
  j["checks"] = rep.checks;
  j["warnings"] = rep.warnings;
  j["pass"] = pass;
  j["timing_ms"] = ms;
  out << j.dump(2) << '\n';
  if (human) print_summary(err, rep, pass);
  return pass ? 0 : 1;
}

}  // namespace perdom::cli
