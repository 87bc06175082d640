#pragma once

// Independent oracles and random generators shared by the unit tests and the
// acceptance runner. Nothing here calls the library routine it is checking.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "perdom/exact_core.hpp"
#include "perdom/siegel.hpp"

namespace oracle {

using perdom::IntMatrix;
using perdom::Integer;
using perdom::Rational;

inline Eigen::MatrixXd to_double(const IntMatrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).get_d();
  return m;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  return m;
}

/// Product of elementary transvections and sign flips: determinant +-1.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix t = IntMatrix::identity(n);
  if (n < 2) {
    if (rng() % 2) t(0, 0) = -1;
    return t;
  }
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> k(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) {
      for (std::size_t c = 0; c < n; ++c) t(i, c) = -t(i, c);
      continue;
    }
    const long f = k(rng);
    for (std::size_t c = 0; c < n; ++c) t(i, c) += f * t(j, c);
  }
  return t;
}

/// Sign counts of eigenvalues, with |lambda| <= 1e-6 * max(1, |G|) counted as zero.
inline perdom::SignatureTriple eigen_signature(const IntMatrix& g) {
  const Eigen::MatrixXd m = to_double(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff() * static_cast<double>(m.rows()));
  perdom::SignatureTriple s;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()(i);
    if (std::abs(l) <= 1e-6 * scale) ++s.zero;
    else if (l > 0) ++s.plus;
    else ++s.minus;
  }
  return s;
}

/// Cofactor-expansion determinant (small matrices only).
inline Integer laplace_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    const Integer sub = laplace_det(minor);
    s += (j % 2 ? -1 : 1) * a(0, j) * sub;
  }
  return s;
}

/// Invariant factors via determinantal divisors: d_k = gcd of k x k minors, s_k = d_k / d_{k-1}.
inline std::vector<Integer> determinantal_invariants(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols(), r = std::min(m, n);
  std::vector<Integer> d(r + 1, 0);
  d[0] = 1;
  std::vector<std::size_t> rows, cols;
  std::function<void(std::size_t, std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start, std::size_t k) {
    if (rows.size() == k) {
      cols.clear();
      pick_cols(0, k, 0);
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      rows.push_back(i);
      pick_rows(i + 1, k);
      rows.pop_back();
    }
  };
  pick_cols = [&](std::size_t start, std::size_t k, std::size_t) {
    if (cols.size() == k) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
      Integer v = laplace_det(sub);
      d[k] = gcd(d[k], v);
      return;
    }
    for (std::size_t j = start; j < n; ++j) {
      cols.push_back(j);
      pick_cols(j + 1, k, 0);
      cols.pop_back();
    }
  };
  for (std::size_t k = 1; k <= r; ++k) pick_rows(0, k);
  std::vector<Integer> s(r, 0);
  for (std::size_t k = 1; k <= r; ++k) s[k - 1] = d[k] == 0 ? Integer(0) : Integer(d[k] / d[k - 1]);
  return s;
}

/// Integer vectors in the box [-b, b]^n with x^T G x = target.
inline std::size_t box_count(const IntMatrix& g, long b, long target) {
  const std::size_t n = g.rows();
  std::vector<long> gl(n * n);
  for (std::size_t i = 0; i < n * n; ++i) gl[i] = g(i / n, i % n).get_si();
  std::vector<long> x(n, -b);
  std::size_t count = 0;
  for (;;) {
    long q = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i]) continue;
      long row = 0;
      for (std::size_t j = 0; j < n; ++j) row += gl[i * n + j] * x[j];
      q += x[i] * row;
    }
    if (q == target) ++count;
    std::size_t k = 0;
    while (k < n && x[k] == b) x[k++] = -b;
    if (k == n) break;
    ++x[k];
  }
  return count;
}

/// Box count for a negative definite G with per-coordinate bounds
/// |x_i| <= sqrt(|target| * (P^{-1})_{ii}), P = -G (Cauchy-Schwarz in the P-metric).
inline std::size_t box_count_tight(const IntMatrix& g, long target) {
  const std::size_t n = g.rows();
  const Eigen::MatrixXd pinv = (-to_double(g)).inverse();
  std::vector<long> bound(n), gl(n * n), x(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    bound[i] = static_cast<long>(std::floor(std::sqrt(std::abs(target) * pinv(i, i)) + 1e-9));
  for (std::size_t i = 0; i < n * n; ++i) gl[i] = g(i / n, i % n).get_si();
  std::size_t count = 0;
  std::function<void(std::size_t, long)> rec = [&](std::size_t k, long q) {
    if (k == n) {
      if (q == target) ++count;
      return;
    }
    for (long v = -bound[k]; v <= bound[k]; ++v) {
      long cross = 0;
      for (std::size_t j = 0; j < k; ++j) cross += gl[k * n + j] * x[j];
      x[k] = v;
      rec(k + 1, q + v * v * gl[k * n + k] + 2 * v * cross);
    }
    x[k] = 0;
  };
  rec(0, 0);
  return count;
}

/// Floating-point Fincke-Pohst on the positive definite P = -G: count of x^T P x = norm.
inline std::size_t float_short_vectors(const IntMatrix& g, long norm) {
  const Eigen::MatrixXd p = -to_double(g);
  const Eigen::Index n = p.rows();
  Eigen::LLT<Eigen::MatrixXd> llt(p);
  const Eigen::MatrixXd r = llt.matrixU();  // P = R^T R
  std::vector<long> x(n, 0);
  std::size_t count = 0;
  std::function<void(Eigen::Index, double)> rec = [&](Eigen::Index i, double rem) {
    double c = 0;
    for (Eigen::Index j = i + 1; j < n; ++j) c += r(i, j) * static_cast<double>(x[j]);
    c /= r(i, i);
    const double w = std::sqrt(std::max(0.0, rem)) / r(i, i) + 1e-9;
    for (long v = static_cast<long>(std::ceil(-c - w)); v <= static_cast<long>(std::floor(-c + w)); ++v) {
      x[i] = v;
      const double t = r(i, i) * (v + c);
      const double left = rem - t * t;
      if (i == 0) {
        long q = 0;
        for (Eigen::Index a = 0; a < n; ++a)
          for (Eigen::Index b = 0; b < n; ++b) q += x[a] * static_cast<long>(std::lround(p(a, b))) * x[b];
        if (q == norm) ++count;
      } else {
        rec(i - 1, left);
      }
    }
    x[i] = 0;
  };
  rec(n - 1, static_cast<double>(norm) + 1e-9);
  return count;
}

/// Norm-2 vectors of D8 union (D8 + 1/2): integer vectors with even coordinate sum,
/// and all-half vectors with an even number of minus signs.
inline std::size_t e8_coordinate_roots() {
  std::size_t count = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) count += 4;  // (+-1, +-1) in positions i, j
  for (int mask = 0; mask < 256; ++mask)
    if (__builtin_popcount(mask) % 2 == 0) ++count;
  return count;
}

/// Random point of the Siegel half-space: X symmetric, Y = B B^T + c I.
inline perdom::siegel::CMatrix random_siegel_point(std::mt19937_64& rng, Eigen::Index g, double spread = 1.0) {
  std::uniform_real_distribution<double> u(-spread, spread);
  Eigen::MatrixXd x(g, g), b(g, g);
  for (Eigen::Index i = 0; i < g; ++i)
    for (Eigen::Index j = 0; j < g; ++j) {
      x(i, j) = u(rng);
      b(i, j) = u(rng);
    }
  x = ((x + x.transpose()) / 2.0).eval();
  const Eigen::MatrixXd y = b * b.transpose() + 0.5 * Eigen::MatrixXd::Identity(g, g);
  perdom::siegel::CMatrix z(g, g);
  for (Eigen::Index i = 0; i < g; ++i)
    for (Eigen::Index j = 0; j < g; ++j) z(i, j) = {x(i, j), y(i, j)};
  return z;
}

/// Random element of Sp(2g, Z) from elementary generators.
inline Eigen::MatrixXd random_sp(std::mt19937_64& rng, Eigen::Index g, int steps) {
  const Eigen::Index n = 2 * g;
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<Eigen::Index> idx(0, g - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int s = 0; s < steps; ++s) {
    Eigen::MatrixXd e = Eigen::MatrixXd::Identity(n, n);
    const Eigen::Index i = idx(rng), j = idx(rng);
    const int c = coef(rng) == 0 ? 1 : coef(rng) >= 0 ? 1 : -1;
    switch (kind(rng)) {
      case 0:  // [[I, S], [0, I]]
        e(i, g + j) += c;
        if (i != j) e(j, g + i) += c;
        break;
      case 1:  // [[I, 0], [S, I]]
        e(g + i, j) += c;
        if (i != j) e(g + j, i) += c;
        break;
      case 2: {  // [[A, 0], [0, A^{-T}]]
        if (i == j) break;
        Eigen::MatrixXd a = Eigen::MatrixXd::Identity(g, g);
        a(i, j) = c;
        e.topLeftCorner(g, g) = a;
        e.bottomRightCorner(g, g) = a.inverse().transpose();
        break;
      }
      default:  // J
        e.setZero();
        e.topRightCorner(g, g) = Eigen::MatrixXd::Identity(g, g);
        e.bottomLeftCorner(g, g) = -Eigen::MatrixXd::Identity(g, g);
    }
    m = m * e;
  }
  return m;
}

}  // namespace oracle
