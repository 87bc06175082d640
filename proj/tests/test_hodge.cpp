#include <doctest.h>

#include <random>

#include "perdom/dm.hpp"
#include "perdom/hodge.hpp"

using namespace perdom;
using namespace perdom::hodge;

namespace {

CharacterHodgeStructure curve_structure(long m, long chi, long h10, long h01) {
  CharacterHodgeStructure h(1, m);
  h.set(chi, 1, h10);
  h.set(chi, 0, h01);
  h.set(-chi, 0, h10);
  h.set(-chi, 1, h01);
  return h;
}

/// Random structure satisfying the reality condition: fill (a, p) and mirror to (-a, k-p).
CharacterHodgeStructure random_real_structure(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> mdist(1, 9), kdist(0, 4), v(0, 5);
  const long m = mdist(rng), k = kdist(rng);
  CharacterHodgeStructure h(k, m);
  for (long a = 0; a < m; ++a)
    for (long p = 0; p <= k; ++p) {
      const long x = v(rng);
      h.set(a, p, x);
      h.set(-a, k - p, x);
    }
  return h;
}

}  // namespace

TEST_CASE("reality validation") {
  CharacterHodgeStructure g4(1, 3);
  g4.set(1, 1, 1);
  g4.set(2, 0, 1);
  g4.set(1, 0, 3);
  g4.set(2, 1, 3);
  CHECK(validate_chs(g4).ok);

  CharacterHodgeStructure bad(1, 3);
  bad.set(1, 1, 1);
  const auto v = validate_chs(bad);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.diagnostics.empty());

  CHECK(validate_chs(CharacterHodgeStructure(3, 5)).ok);
  CHECK_THROWS_AS(CharacterHodgeStructure(-1, 3), InputError);
  CHECK_THROWS_AS(CharacterHodgeStructure(1, 0), InputError);
  CHECK_THROWS_AS(g4.set(0, 2, 1), InputError);
}

TEST_CASE("canonical sigma") {
  CHECK(canonical_sigma(1).empty());
  CHECK(canonical_sigma(2).empty());
  CHECK(canonical_sigma(3) == std::vector<long>{1});
  CHECK(canonical_sigma(6) == std::vector<long>{1, 2});
  CHECK(canonical_sigma(7) == std::vector<long>{1, 2, 3});
}

TEST_CASE("half twist on fixed inputs") {
  for (long m = 5; m <= 12; ++m) {
    INFO(m);
    const auto w = half_twist(curve_structure(3, 1, 1, m - 3), {1});
    CHECK(w.weight() == 2);
    CHECK(w.hodge_numbers() == std::vector<long>{1, 2 * m - 6, 1});
    CHECK(validate_chs(w).ok);
  }
  const auto t = half_twist(curve_structure(5, 2, 2, 2), {2});
  CHECK(t.hodge_numbers() == std::vector<long>{2, 4, 2});
  CHECK(t.h(2, 2) == 2);
  CHECK(t.h(2, 1) == 2);
  CHECK(t.h(3, 0) == 2);

  const auto z = half_twist(curve_structure(3, 1, 1, 2), {});
  CHECK(z.total() == 0);
  CHECK(z.weight() == 2);

  CHECK_THROWS_AS(half_twist(curve_structure(4, 1, 1, 1), {2}), InputError);
  CHECK_THROWS_AS(half_twist(curve_structure(4, 1, 1, 1), {0}), InputError);
  CHECK_THROWS_AS(half_twist(curve_structure(5, 1, 1, 1), {1, 4}), InputError);
  CHECK_THROWS_AS(half_twist(curve_structure(5, 1, 1, 1), {1, 6}), InputError);
}

TEST_CASE("half twist properties on random structures") {
  std::mt19937_64 rng(17);
  int tested = 0;
  while (tested < 200) {
    const auto h = random_real_structure(rng);
    const long m = h.group_order();
    std::vector<long> sigma;
    std::uniform_int_distribution<int> coin(0, 2);
    for (long a = 1; 2 * a < m; ++a) {
      const int c = coin(rng);
      if (c == 1) sigma.push_back(a);
      else if (c == 2) sigma.push_back(m - a);
    }
    long expect = 0;
    for (long a : sigma)
      for (long p = 0; p <= h.weight(); ++p) expect += h.h(a, p) + h.h(-a, p);
    const auto w = half_twist(h, sigma);
    CHECK(w.weight() == h.weight() + 1);
    CHECK(w.total() == expect);
    CHECK(validate_chs(w).ok);
    ++tested;
  }
}

TEST_CASE("Sylvester signature") {
  const auto k3 = sylvester_signature(22, {1, 20, 1}, 2);
  CHECK(k3.index == -16);
  CHECK(k3.t_plus == 3);
  CHECK(k3.t_minus == 19);

  const auto s = sylvester_signature(2, {1, 0, 1}, 2);
  CHECK(s.index == 2);
  CHECK(s.t_plus == 2);
  CHECK(s.t_minus == 0);

  const auto one = sylvester_signature(1, {0, 1, 0}, 2);
  CHECK(one.t_plus == 1);
  CHECK(one.t_minus == 0);

  CHECK_THROWS_AS(sylvester_signature(21, {1, 20, 1}, 2), InputError);
  CHECK_THROWS_AS(sylvester_signature(24, {1, 20, 1}, 2), InputError);
  CHECK_THROWS_AS(sylvester_signature(2, {1, 1}, 1), InputError);
  CHECK_THROWS_AS(sylvester_signature(22, {1, 20}, 2), InputError);

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> wd(0, 3), v(0, 6);
  for (int t = 0; t < 200; ++t) {
    const long n = 2 * wd(rng);
    std::vector<long> hn(n + 1);
    for (long p = 0; p <= n / 2; ++p) hn[p] = hn[n - p] = v(rng);
    hn[n / 2] = 1 + v(rng);
    long b = 0;
    for (long x : hn) b += x;
    const auto r = sylvester_signature(b, hn, n);
    CHECK(r.t_plus + r.t_minus == b);
    CHECK(r.t_plus - r.t_minus == r.index);
  }
}

TEST_CASE("arrangement eigenspace dimensions") {
  const auto six = arrangement_eigendims(dm::validate_weights(dm::parse_weights("1/3*6")), 1);
  CHECK(six.h == std::vector<long>{3, 1});  // indexed by p: h^{0,1}, h^{1,0}
  CHECK(six.total == 4);

  const auto four = arrangement_eigendims(dm::validate_weights(dm::parse_weights("1/2*4")), 1);
  CHECK(four.h == std::vector<long>{1, 1});
  CHECK(four.total == 2);

  // |mu| = n + 1 forces h^{n,0} = 1.
  const auto w = dm::validate_weights(dm::parse_weights("1/2*6"));
  CHECK(arrangement_eigendims(w, 2).h[2] == 1);

  for (std::size_t m = 5; m <= 12; ++m)
    for (const auto& mu : dm::enumerate(m, dm::Condition::SigmaINT, {20, 1, false}))
      for (long n = 0; n <= static_cast<long>(m) - 2; ++n) {
        const auto e = arrangement_eigendims(mu, n);
        long sum = 0;
        for (long x : e.h) sum += x;
        CHECK(sum == binomial(static_cast<long>(m) - 2, n));
      }
}

TEST_CASE("domain classifier") {
  const auto b3 = domain_classifier({{false, 1, 3}});
  REQUIRE(b3.factors.size() == 1);
  CHECK(b3.factors[0].kind == DomainKind::Ball);
  CHECK(b3.factors[0].dimension == 3);
  CHECK(describe(b3.factors[0]) == "ball(3)");

  const auto b1 = domain_classifier({{false, 1, 1}});
  CHECK(b1.total_dimension == 1);

  const auto t22 = domain_classifier({{false, 2, 2}});
  CHECK(t22.factors[0].kind == DomainKind::TypeI);
  CHECK(t22.total_dimension == 4);
  CHECK(t22.siegel_genus == 4);

  const auto iv = domain_classifier({{true, 2, 19}});
  CHECK(iv.factors[0].kind == DomainKind::TypeIV);
  CHECK(iv.total_dimension == 19);

  const auto mix = domain_classifier({{false, 1, 3}, {false, 2, 2}, {true, 2, 5}});
  CHECK(mix.total_dimension == 3 + 4 + 5);
  CHECK(mix.siegel_genus == 8);
  CHECK_THROWS_AS(domain_classifier({{false, 0, 0}}), InputError);
}

TEST_CASE("eigenperiod ball dimension") {
  CHECK(eigenperiod_ball_dim(4) == 3);
  CHECK(eigenperiod_ball_dim(1) == 0);
  CHECK(eigenperiod_ball_dim(10) == 9);
  CHECK_THROWS_AS(eigenperiod_ball_dim(0), InputError);
}
