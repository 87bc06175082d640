#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "perdom/siegel.hpp"

using namespace perdom;
using namespace perdom::siegel;

namespace {

const cplx I(0, 1);

CMatrix mat(std::initializer_list<std::initializer_list<cplx>> rows) {
  CMatrix m(rows.size(), rows.begin()->size());
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (const auto& x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix minus_j() { return IntMatrix{{0, -1}, {1, 0}}; }

}  // namespace

TEST_CASE("Siegel points") {
  CHECK(is_siegel_point(I * CMatrix::Identity(3, 3)));
  CHECK_FALSE(is_siegel_point(mat({{I, 0}, {0, -I}})));
  CHECK(is_siegel_point(mat({{I, 0.5}, {0.5, 2.0 * I}})));
  CHECK_FALSE(is_siegel_point(mat({{I, 0.5}, {0.4, 2.0 * I}})));
  CHECK_THROWS_AS(is_siegel_point(CMatrix::Zero(2, 3)), InputError);
}

TEST_CASE("symplectic matrices") {
  const RMatrix j = standard_j(2);
  CHECK(is_symplectic(j));
  CHECK(is_symplectic(RMatrix(RMatrix::Identity(4, 4))));
  RMatrix s = RMatrix::Zero(4, 4);
  s.diagonal() << 2, 3, 0.5, 1.0 / 3;
  CHECK(is_symplectic(s));
  CHECK(is_symplectic(s, std::vector<long>{1, 2}));
  RMatrix swap = RMatrix::Zero(4, 4);
  swap(0, 1) = swap(1, 0) = swap(2, 3) = swap(3, 2) = 1;
  CHECK(is_symplectic(swap));
  CHECK_FALSE(is_symplectic(swap, std::vector<long>{1, 2}));
  CHECK(is_symplectic(polarization_form_exact({1, 1}), std::vector<long>{1, 1}));
  CHECK(is_symplectic(IntMatrix::identity(4), std::vector<long>{1, 2}));
  CHECK_THROWS_AS(is_symplectic(j, std::vector<long>{1}), InputError);
}

TEST_CASE("symplectic action") {
  const CMatrix z = I * CMatrix::Identity(2, 2);
  CHECK(max_norm(CMatrix(symplectic_action(RMatrix::Identity(4, 4), z) - z)) < 1e-12);
  CHECK(max_norm(CMatrix(symplectic_action(standard_j(2), z) - z)) < 1e-12);
  CHECK_THROWS_AS(symplectic_action(RMatrix(2.0 * RMatrix::Identity(4, 4)), z), InputError);
}

TEST_CASE("group law property") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Index g = 1 + t % 3;
    const RMatrix m1 = oracle::random_sp(rng, g, 4), m2 = oracle::random_sp(rng, g, 4);
    const CMatrix z = oracle::random_siegel_point(rng, g);
    const CMatrix lhs = symplectic_action(RMatrix(m1 * m2), z);
    const CMatrix rhs = symplectic_action(m1, symplectic_action(m2, z));
    CHECK(max_norm(CMatrix(lhs - rhs)) < 1e-8);
    CHECK(is_siegel_point(lhs));
  }
}

TEST_CASE("transitivity witness") {
  CHECK(max_norm(RMatrix(transitivity_witness(I * CMatrix::Identity(2, 2)) - RMatrix::Identity(4, 4))) < 1e-12);
  CMatrix z3(1, 1);
  z3(0, 0) = 3.0 * I;
  const RMatrix m = transitivity_witness(z3);
  CHECK(std::abs(m(0, 0) - std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(m(1, 1) - 1 / std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(m(0, 1)) < 1e-12);
  CHECK(std::abs(m(1, 0)) < 1e-12);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index g = 1 + t % 3;
    const CMatrix z = oracle::random_siegel_point(rng, g);
    const RMatrix w = transitivity_witness(z);
    CHECK(is_symplectic(w));
    CHECK(max_norm(CMatrix(symplectic_action(w, I * CMatrix::Identity(g, g)) - z)) < 1e-9);
  }
  CHECK_THROWS_AS(transitivity_witness(mat({{-I}})), InputError);
}

TEST_CASE("Cayley transform") {
  CHECK(max_norm(cayley_to_bounded(I * CMatrix::Identity(2, 2))) < 1e-15);
  CHECK(max_norm(CMatrix(cayley_from_bounded(CMatrix::Zero(2, 2)) - I * CMatrix::Identity(2, 2))) < 1e-15);
  CHECK_THROWS_AS(cayley_from_bounded(CMatrix(CMatrix::Identity(1, 1))), InputError);

  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const CMatrix z = oracle::random_siegel_point(rng, 2);
    const CMatrix w = cayley_to_bounded(z);
    CHECK(in_bounded_siegel(w));
    const CMatrix back = cayley_from_bounded(w);
    CHECK(max_norm(CMatrix(back - z)) / std::max(1.0, max_norm(z)) < 1e-9);
  }
}

TEST_CASE("bounded domains and the Satake embedding") {
  CHECK(in_bounded_Ipq(CMatrix::Zero(3, 2)));
  CMatrix col(3, 1);
  col << 0.5, 0.5, 0.5;
  CHECK(in_bounded_Ipq(col));
  CMatrix unit(2, 2);
  unit << 1.0, 0, 0, 0.2;
  CHECK_FALSE(in_bounded_Ipq(unit));

  CMatrix z(1, 1);
  z(0, 0) = 0.9;
  const CMatrix zp = satake_embed(z);
  CHECK(max_norm(CMatrix(zp - mat({{0, 0.9}, {0.9, 0}}))) < 1e-15);
  CHECK(in_bounded_siegel(zp));
  CHECK_FALSE(in_bounded_siegel(satake_embed(unit)));
  CHECK(max_norm(satake_embed(CMatrix::Zero(2, 3))) == 0.0);

  const CMatrix prod = product_embed({z, col});
  CHECK(prod.rows() == 6);
  CHECK(max_norm(CMatrix(prod.block(0, 0, 2, 2) - zp)) == 0.0);
  CHECK(in_bounded_siegel(prod));

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> sv(0.0, 1.2), ang(0.0, 2 * M_PI);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index p = 1 + t % 3, q = 1 + (t / 3) % 3;
    // Z = U diag(s) V with random unitary factors from QR.
    CMatrix a = CMatrix::Random(q, q), b = CMatrix::Random(p, p);
    const CMatrix u = Eigen::HouseholderQR<CMatrix>(a).householderQ();
    const CMatrix v = Eigen::HouseholderQR<CMatrix>(b).householderQ();
    CMatrix s = CMatrix::Zero(q, p);
    double top = 0;
    for (Eigen::Index k = 0; k < std::min(p, q); ++k) {
      s(k, k) = sv(rng);
      top = std::max(top, std::abs(s(k, k)));
    }
    if (std::abs(top - 1.0) < 1e-6) continue;
    const CMatrix zz = u * s * v;
    CHECK(in_bounded_Ipq(zz) == in_bounded_siegel(satake_embed(zz)));
    CHECK(in_bounded_Ipq(zz) == (top < 1.0));
  }
}

TEST_CASE("Riemann-Frobenius conditions") {
  CMatrix pi(2, 1);
  pi << I, 1.0;
  CHECK(riemann_frobenius(pi, minus_j(), PeriodMode::Coperiod));
  pi << -I, 1.0;
  CHECK_FALSE(riemann_frobenius(pi, minus_j(), PeriodMode::Coperiod));

  for (long r : {-1L, -2L, -7L}) {
    CMatrix p(1, 2);
    p << 1.0, cplx(0.3, 1.7);
    const IntMatrix a = Integer(r) * polarization_form_exact({1});
    CHECK(riemann_frobenius(p, a, PeriodMode::Period));
    CHECK_FALSE(riemann_frobenius(p, Integer(-1) * a, PeriodMode::Period));
    p << 1.0, cplx(0.3, -1.7);
    CHECK_FALSE(riemann_frobenius(p, a, PeriodMode::Period));
  }

  CMatrix torus(2, 4);
  torus << cplx(1, 0), cplx(0, 0), I * std::sqrt(2.0), I * std::sqrt(3.0), cplx(0, 0), cplx(1, 0), I * std::sqrt(5.0),
      I * std::sqrt(7.0);
  CHECK_FALSE(riemann_frobenius(torus, Integer(-1) * polarization_form_exact({1, 1}), PeriodMode::Period));
  CHECK_THROWS_AS(riemann_frobenius(pi, IntMatrix{{0, 1}, {1, 0}}, PeriodMode::Coperiod), InputError);
  CHECK_THROWS_AS(riemann_frobenius(CMatrix::Zero(1, 2), IntMatrix(2, 2), PeriodMode::Period), InputError);
}

TEST_CASE("polarization search") {
  CMatrix p(1, 2);
  p << 1.0, I;
  auto res = find_polarization(p, 1);
  REQUIRE(res.found.size() == 1);
  CHECK(res.found[0] == IntMatrix{{0, -1}, {1, 0}});

  p << 1.0, 2.0 * I;
  CHECK_FALSE(find_polarization(p, 2).found.empty());

  // Principal product of two elliptic curves: -J is found, and the result is independent of threading.
  CMatrix e(2, 4);
  e << 1.0, 0.0, I, 0.0, 0.0, 1.0, 0.0, 2.0 * I;
  const auto one = find_polarization(e, 1, 1);
  const auto two = find_polarization(e, 1, 3);
  CHECK(one.found == two.found);
  bool has_minus_j = false;
  for (const auto& a : one.found)
    if (a == Integer(-1) * polarization_form_exact({1, 1})) has_minus_j = true;
  CHECK(has_minus_j);
  for (const auto& a : one.found) CHECK(riemann_frobenius(e, a, PeriodMode::Period));
  CHECK_THROWS_AS(find_polarization(e, 0), InputError);
}

TEST_CASE("normalized period matrices") {
  CMatrix pi(2, 1);
  pi << 2.0 * I, 2.0;
  CHECK(std::abs(normalize_period(pi)(0, 0) - I) < 1e-15);

  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    const CMatrix z = oracle::random_siegel_point(rng, 2);
    CMatrix base(4, 2);
    base << z, CMatrix::Identity(2, 2);
    CHECK(max_norm(CMatrix(normalize_period(base) - z)) < 1e-12);
    CMatrix x = CMatrix::Random(2, 2) + 2.0 * CMatrix::Identity(2, 2);
    CHECK(max_norm(CMatrix(normalize_period(CMatrix(base * x)) - z)) < 1e-9);
  }
  CMatrix sing(2, 1);
  sing << I, 0.0;
  CHECK_THROWS_AS(normalize_period(sing), NumericalError);
}

TEST_CASE("dual polarization types") {
  CHECK(dual_polarization_type({1, 1, 1}) == std::vector<long>{1, 1, 1});
  CHECK(dual_polarization_type({1, 2}) == std::vector<long>{1, 2});
  CHECK(dual_polarization_type({1, 1, 2}) == std::vector<long>{1, 2, 2});
  for (const std::vector<long>& d : {std::vector<long>{1, 2, 6}, {1, 3, 3, 9}, {1, 1, 4, 8}})
    CHECK(dual_polarization_type(dual_polarization_type(d)) == d);
  CHECK_THROWS_AS(dual_polarization_type({2, 3}), InputError);
}

TEST_CASE("order-4 complex structure") {
  const auto r10 = order4_structure(1, 0);
  CHECK(r10.I == IntMatrix{{0, -1}, {1, 0}});
  CHECK(r10.squares_to_minus_one);
  CHECK(r10.symplectic);
  CHECK(r10.form_signature == SignatureTriple{2, 0, 0});

  const auto r11 = order4_structure(1, 1);
  CHECK(r11.squares_to_minus_one);
  CHECK(r11.symplectic);
  CHECK(r11.form_symmetric);
  CHECK(r11.form_signature == SignatureTriple{2, 2, 0});

  const auto r22 = order4_structure(2, 2);
  CHECK(r22.squares_to_minus_one);
  CHECK(r22.symplectic);
  CHECK(r22.form_signature == SignatureTriple{4, 4, 0});
  CHECK_THROWS_AS(order4_structure(0, 0), InputError);
}
