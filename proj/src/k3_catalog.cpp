#include "perdom/k3_catalog.hpp"

#include <algorithm>
#include <map>

namespace perdom::k3 {

using namespace perdom::lattice;

IntegralLattice k3_lattice() {
  const auto u = hyperbolic_plane();
  const auto e8 = root_lattice_e(8);
  IntegralLattice l = direct_sum({u, u, u, e8, e8});
  return IntegralLattice(l.gram(), "L_K3");
}

const char* to_string(FormCheck f) {
  switch (f) {
    case FormCheck::True: return "true";
    case FormCheck::False: return "false";
    case FormCheck::CapExceeded: return "cap exceeded";
    case FormCheck::NotApplicable: return "not applicable";
  }
  return "?";
}

bool GlueReport::ok() const {
  return rank_sum_is_22 && sig_pattern_ok && det_match && group_iso && form_anti_iso != FormCheck::False;
}

namespace {

IntegralLattice labeled(const std::vector<IntegralLattice>& parts, const std::string& label) {
  return IntegralLattice(direct_sum(parts).gram(), label);
}

std::vector<IntegralLattice> pow(const IntegralLattice& l, int k) { return std::vector<IntegralLattice>(k, l); }

std::vector<IntegralLattice> cat(std::initializer_list<std::vector<IntegralLattice>> parts) {
  std::vector<IntegralLattice> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

std::vector<GluePair> catalog() {
  const auto U = hyperbolic_plane();
  const auto U2 = rescale(U, 2);
  const auto U3 = rescale(U, 3);
  const auto A1 = root_lattice_a(1);
  const auto A2 = root_lattice_a(2);
  const auto A4 = root_lattice_a(4);
  const auto D4 = root_lattice_d(4);
  const auto D8 = root_lattice_d(8);
  const auto E6 = root_lattice_e(6);
  const auto E8 = root_lattice_e(8);

  std::vector<GluePair> out;
  auto add = [&out](std::string name, std::optional<IntegralLattice> m, IntegralLattice n, Source src, std::string mu,
                    std::string note = {}) {
    GluePair g{std::move(name), std::move(m), std::move(n), src, {}, std::move(mu), std::move(note)};
    out.push_back(std::move(g));
  };

  add("genus4", labeled({U3}, "U(3)"), labeled({U, U3, E8, E8}, "U+U(3)+E8^2"), Source::Table, "1/6*12");
  add("dp1", labeled({U, rescale(A2, 2)}, "U+A2(2)"), labeled({U, U, E8, D4, A2}, "U^2+E8+D4+A2"), Source::Table, "",
      "a subball quotient");
  add("dp2", labeled(cat({{U2}, pow(A1, 6)}), "U(2)+A1^6"), labeled(cat({{U2, U2, D8}, pow(A1, 2)}), "U(2)^2+D8+A1^2"),
      Source::Table, "", "not appear");
  add("dp3", labeled(cat({{U}, pow(A2, 5)}), "U+A2^5"), labeled(cat({{rescale(A2, -1)}, pow(A2, 4)}), "A2(-1)+A2^4"),
      Source::Table, "2/6*5,1/6*2");
  add("dp4_table", labeled({U, D8, D8}, "U+D8^2"), labeled({U2, U2}, "U(2)^2"), Source::Table, "2/5*5");

  const IntegralLattice n_text = labeled({IntegralLattice(IntMatrix{{0, 1}, {1, 0}}, "U"),
                                          IntegralLattice(IntMatrix{{2, 1}, {1, -2}}, "[[2,1],[1,-2]]"), A4, A4},
                                         "U+[[2,1],[1,-2]]+A4^2");
  add("dp4_text", std::nullopt, n_text, Source::InText, "2/5*5");
  out.back().m_constraint = MConstraint{10, {Integer(5), Integer(5), Integer(5)}};

  add("pts6", labeled(cat({{U, E6}, pow(A2, 3)}), "U+E6+A2^3"), labeled(cat({{rescale(A2, -1)}, pow(A2, 3)}), "A2(-1)+A2^3"),
      Source::Table, "1/3*6");
  add("pts8", labeled({U2, D4, D4}, "U(2)+D4^2"), labeled({U, U2, D4, D4}, "U+U(2)+D4^2"), Source::Table, "1/4*8");
  return out;
}

bool same_abelian_group(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  auto primary = [](const std::vector<Integer>& fs) {
    std::map<std::pair<Integer, Integer>, int> parts;  // (p, p^e) -> multiplicity
    for (Integer n : fs) {
      if (n < 0) n = -n;
      for (Integer p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        Integer pe = 1;
        while (n % p == 0) {
          n /= p;
          pe *= p;
        }
        ++parts[{p, pe}];
      }
      if (n > 1) ++parts[{n, n}];
    }
    return parts;
  };
  return primary(a) == primary(b);
}

GlueReport glue_report(const GluePair& pair) {
  GlueReport r;
  r.name = pair.name;
  r.rank_N = pair.N.rank();
  r.sig_N = pair.N.signature();
  r.det_N = pair.N.determinant();
  r.group_N = discriminant_group(pair.N);

  if (pair.M) {
    const auto& m = *pair.M;
    r.rank_M = m.rank();
    r.sig_M = m.signature();
    r.det_M = m.determinant();
    r.group_M = discriminant_group(m);
  } else {
    r.constraint_mode = true;
    r.rank_M = pair.m_constraint.rank;
    r.group_M = pair.m_constraint.discriminant_factors;
    r.det_M = 1;
    for (const auto& f : r.group_M) r.det_M *= f;
  }

  r.rank_sum_is_22 = r.rank_M + r.rank_N == 22;
  const std::size_t rm = r.rank_M;
  const bool n_ok = rm <= 20 && r.sig_N == SignatureTriple{2, 20 - rm, 0};
  const bool m_ok = r.constraint_mode || (rm >= 1 && r.sig_M == SignatureTriple{1, rm - 1, 0});
  r.sig_pattern_ok = r.rank_sum_is_22 && n_ok && m_ok;
  r.det_match = abs(r.det_M) == abs(r.det_N);
  r.group_iso = same_abelian_group(r.group_M, r.group_N);

  if (pair.M && pair.M->is_even() && pair.N.is_even()) {
    try {
      r.form_anti_iso =
          fqf_isomorphic(discriminant_form(*pair.M), discriminant_form(pair.N), true) ? FormCheck::True : FormCheck::False;
    } catch (const CapExceeded&) {
      r.form_anti_iso = FormCheck::CapExceeded;
    }
  }
  return r;
}

CatalogSummary verify_catalog() {
  CatalogSummary s;
  const auto pairs = catalog();
  s.all_ok = true;
  for (const auto& p : pairs) {
    s.reports.push_back(glue_report(p));
    if (!s.reports.back().ok()) s.all_ok = false;
    if (s.reports.back().form_anti_iso == FormCheck::CapExceeded)
      s.warnings.push_back(p.name + ": discriminant form comparison skipped (cap exceeded)");
  }
  const GlueReport* table = nullptr;
  const GlueReport* text = nullptr;
  for (const auto& r : s.reports) {
    if (r.name == "dp4_table") table = &r;
    if (r.name == "dp4_text") text = &r;
  }
  if (table && text && table->rank_M != text->rank_M)
    s.warnings.push_back("dp4 table vs text: rank(M) " + std::to_string(table->rank_M) + " vs " +
                         std::to_string(text->rank_M) + "; both variants checked independently");
  return s;
}

CyclicResult cyclic_root_isometry(long p) {
  if (p < 2) throw InputError("p must be prime");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InputError("p must be prime");
  if (p > 13) throw InputError("p must be at most 13");

  const std::size_t n = static_cast<std::size_t>(p - 1);
  IntegralLattice L = root_lattice_a(p - 1);
  IntMatrix rho(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) rho(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) rho(i, n - 1) = -1;

  CyclicReport rep;
  rep.isometry = is_isometry(L, rho);

  const IntMatrix id = IntMatrix::identity(n);
  IntMatrix power = rho;
  bool early = false;
  for (long k = 1; k < p; ++k) {
    if (power == id) early = true;
    power = power * rho;
  }
  rep.order_p = !early && power == id;
  rep.no_fixed_vector = exact_determinant(rho - id) != 0;

  std::vector<Rational> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = Rational(static_cast<long>(i + 1), p);
  bool integral = true;
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = -w[i];
    for (std::size_t j = 0; j < n; ++j) s += Rational(rho(i, j)) * w[j];
    if (s.get_den() != 1) integral = false;
  }
  rep.fixes_glue_class = integral;

  bool sums = true;
  for (const auto& root : root_vectors(L)) {
    std::vector<Integer> x = root, total(n, 0);
    for (long k = 0; k < p; ++k) {
      for (std::size_t i = 0; i < n; ++i) total[i] += x[i];
      std::vector<Integer> y(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y[i] += rho(i, j) * x[j];
      x = std::move(y);
    }
    if (std::any_of(total.begin(), total.end(), [](const Integer& v) { return v != 0; })) sums = false;
  }
  rep.orbit_sums_vanish = sums;
  return CyclicResult{std::move(L), std::move(rho), rep};
}

}  // namespace perdom::k3
