#include "perdom/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace perdom::siegel {

namespace {

const cplx kI(0.0, 1.0);

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw InputError(std::string(what) + " must be square");
}

void require_finite(const CMatrix& m) {
  if (!m.allFinite()) throw InputError("matrix has non-finite entries");
}

bool invertible(const CMatrix& m, double tol) {
  Eigen::FullPivLU<CMatrix> lu(m);
  lu.setThreshold(tol);
  return lu.isInvertible();
}

}  // namespace

double max_norm(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
double max_norm(const RMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

bool is_positive_definite(const CMatrix& h_in, Tolerance tol) {
  require_square(h_in, "matrix");
  if (max_norm(CMatrix(h_in - h_in.adjoint())) > tol.eps) return false;
  CMatrix h = (h_in + h_in.adjoint()) / 2.0;
  const Eigen::Index n = h.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index best = k;
    for (Eigen::Index i = k + 1; i < n; ++i)
      if (h(i, i).real() > h(best, best).real()) best = i;
    if (best != k) {
      h.row(k).swap(h.row(best));
      h.col(k).swap(h.col(best));
    }
    const double piv = h(k, k).real();
    if (!(piv > tol.eps)) return false;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const cplx f = h(i, k) / piv;
      for (Eigen::Index j = k + 1; j < n; ++j) h(i, j) -= f * h(k, j);
    }
  }
  return true;
}

bool is_positive_definite(const RMatrix& h, Tolerance tol) { return is_positive_definite(CMatrix(h.cast<cplx>()), tol); }

bool is_siegel_point(const CMatrix& z, Tolerance tol) {
  require_square(z, "Z");
  if (!z.allFinite()) return false;
  if (max_norm(CMatrix(z - z.transpose())) > tol.eps) return false;
  RMatrix y = z.imag();
  y = ((y + y.transpose()) / 2.0).eval();
  return is_positive_definite(y, tol);
}

RMatrix polarization_form(const std::vector<long>& d) {
  const Eigen::Index g = static_cast<Eigen::Index>(d.size());
  RMatrix j = RMatrix::Zero(2 * g, 2 * g);
  for (Eigen::Index i = 0; i < g; ++i) {
    j(i, g + i) = static_cast<double>(d[i]);
    j(g + i, i) = -static_cast<double>(d[i]);
  }
  return j;
}

IntMatrix polarization_form_exact(const std::vector<long>& d) {
  const std::size_t g = d.size();
  IntMatrix j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = d[i];
    j(g + i, i) = -d[i];
  }
  return j;
}

RMatrix standard_j(std::size_t g) { return polarization_form(std::vector<long>(g, 1)); }

bool is_symplectic(const RMatrix& m, const std::vector<long>& d, Tolerance tol) {
  if (m.rows() != m.cols() || m.rows() != 2 * static_cast<Eigen::Index>(d.size()))
    throw InputError("matrix size does not match the polarization type");
  const RMatrix j = polarization_form(d);
  const double scale = std::max(1.0, max_norm(m) * max_norm(m));
  return max_norm(RMatrix(m.transpose() * j * m - j)) <= tol.eps * scale;
}

bool is_symplectic(const RMatrix& m, Tolerance tol) {
  if (m.rows() != m.cols() || m.rows() % 2) throw InputError("symplectic check requires an even square matrix");
  return is_symplectic(m, std::vector<long>(m.rows() / 2, 1), tol);
}

bool is_symplectic(const IntMatrix& m, const std::vector<long>& d) {
  if (m.rows() != m.cols() || m.rows() != 2 * d.size()) throw InputError("matrix size does not match the polarization type");
  const IntMatrix j = polarization_form_exact(d);
  return m.transpose() * j * m == j;
}

CMatrix symplectic_action(const RMatrix& m, const CMatrix& z, Tolerance tol) {
  require_square(z, "Z");
  const Eigen::Index g = z.rows();
  if (m.rows() != 2 * g || m.cols() != 2 * g) throw InputError("symplectic matrix must be 2g x 2g");
  if (!is_siegel_point(z, tol)) throw InputError("Z is not a Siegel point");
  if (!is_symplectic(m, tol)) throw InputError("matrix is not symplectic");
  const CMatrix a = m.topLeftCorner(g, g).cast<cplx>();
  const CMatrix b = m.topRightCorner(g, g).cast<cplx>();
  const CMatrix c = m.bottomLeftCorner(g, g).cast<cplx>();
  const CMatrix d = m.bottomRightCorner(g, g).cast<cplx>();
  const CMatrix den = c * z + d;
  if (!invertible(den, tol.eps)) throw NumericalError("boundary collapse");
  // Right division: solve X den = num via den^T X^T = num^T.
  CMatrix out = den.transpose().fullPivLu().solve(CMatrix((a * z + b).transpose())).transpose();
  return (out + out.transpose()) / 2.0;
}

RMatrix transitivity_witness(const CMatrix& z, Tolerance tol) {
  if (!is_siegel_point(z, tol)) throw InputError("Z is not a Siegel point");
  const Eigen::Index g = z.rows();
  RMatrix y = z.imag();
  y = ((y + y.transpose()) / 2.0).eval();
  const RMatrix x = (RMatrix(z.real()) + RMatrix(z.real()).transpose()) / 2.0;

  // Y = L D L^T, unit lower triangular L.
  RMatrix l = RMatrix::Identity(g, g);
  Eigen::VectorXd dd(g);
  for (Eigen::Index j = 0; j < g; ++j) {
    double s = y(j, j);
    for (Eigen::Index k = 0; k < j; ++k) s -= l(j, k) * l(j, k) * dd(k);
    if (!(s > tol.eps)) throw InputError("Im Z is not positive definite");
    dd(j) = s;
    for (Eigen::Index i = j + 1; i < g; ++i) {
      double t = y(i, j);
      for (Eigen::Index k = 0; k < j; ++k) t -= l(i, k) * l(j, k) * dd(k);
      l(i, j) = t / s;
    }
  }
  const RMatrix a = l * dd.cwiseSqrt().asDiagonal();
  const RMatrix a_inv_t = a.inverse().transpose();
  RMatrix m = RMatrix::Zero(2 * g, 2 * g);
  m.topLeftCorner(g, g) = a;
  m.topRightCorner(g, g) = x * a_inv_t;
  m.bottomRightCorner(g, g) = a_inv_t;
  return m;
}

bool in_bounded_siegel(const CMatrix& w, Tolerance tol) {
  require_square(w, "W");
  if (!w.allFinite()) return false;
  if (max_norm(CMatrix(w - w.transpose())) > tol.eps) return false;
  const Eigen::Index g = w.rows();
  return is_positive_definite(CMatrix(CMatrix::Identity(g, g) - w.conjugate() * w), tol);
}

CMatrix cayley_to_bounded(const CMatrix& z, Tolerance tol) {
  if (!is_siegel_point(z, tol)) throw InputError("Z is not a Siegel point");
  const Eigen::Index g = z.rows();
  const CMatrix id = CMatrix::Identity(g, g);
  const CMatrix num = z - kI * id;
  const CMatrix den = z + kI * id;
  CMatrix w = den.transpose().fullPivLu().solve(CMatrix(num.transpose())).transpose();
  return (w + w.transpose()) / 2.0;
}

CMatrix cayley_from_bounded(const CMatrix& w, Tolerance tol) {
  if (!in_bounded_siegel(w, tol)) throw InputError("W is on or outside the boundary of the bounded domain");
  const Eigen::Index g = w.rows();
  const CMatrix id = CMatrix::Identity(g, g);
  const CMatrix num = kI * (id + w);
  const CMatrix den = id - w;
  CMatrix z = den.transpose().fullPivLu().solve(CMatrix(num.transpose())).transpose();
  return (z + z.transpose()) / 2.0;
}

bool in_bounded_Ipq(const CMatrix& z, Tolerance tol) {
  require_finite(z);
  const Eigen::Index p = z.cols();
  if (p == 0) return true;
  return is_positive_definite(CMatrix(CMatrix::Identity(p, p) - z.transpose() * z.conjugate()), tol);
}

CMatrix satake_embed(const CMatrix& z) {
  const Eigen::Index q = z.rows(), p = z.cols();
  CMatrix out = CMatrix::Zero(p + q, p + q);
  out.block(0, p, p, q) = z.transpose();
  out.block(p, 0, q, p) = z;
  return out;
}

CMatrix product_embed(const std::vector<CMatrix>& blocks) {
  Eigen::Index total = 0;
  for (const auto& b : blocks) total += b.rows() + b.cols();
  CMatrix out = CMatrix::Zero(total, total);
  Eigen::Index off = 0;
  for (const auto& b : blocks) {
    const Eigen::Index n = b.rows() + b.cols();
    out.block(off, off, n, n) = satake_embed(b);
    off += n;
  }
  return out;
}

namespace {

CMatrix to_complex(const IntMatrix& a) {
  CMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = cplx(a(i, j).get_d(), 0.0);
  return m;
}

void require_skew(const IntMatrix& a) {
  if (!a.is_square() || a.rows() % 2) throw InputError("A must be an even-size square matrix");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != -a(j, i)) throw InputError("A must be skew-symmetric");
}

bool rf_numeric(const CMatrix& pi, const CMatrix& a, PeriodMode mode, Tolerance tol) {
  if (mode == PeriodMode::Coperiod) {
    const CMatrix first = pi.transpose() * a * pi;
    if (max_norm(first) > tol.eps) return false;
    return is_positive_definite(CMatrix(kI * (pi.transpose() * a * pi.conjugate())), tol);
  }
  const CMatrix ainv = a.inverse();
  const CMatrix first = pi * ainv * pi.transpose();
  if (max_norm(first) > tol.eps) return false;
  return is_positive_definite(CMatrix(-kI * (pi.conjugate() * ainv * pi.transpose())), tol);
}

}  // namespace

bool riemann_frobenius(const CMatrix& pi, const IntMatrix& a, PeriodMode mode, Tolerance tol) {
  require_skew(a);
  require_finite(pi);
  const Eigen::Index n = static_cast<Eigen::Index>(a.rows());
  const Eigen::Index g = n / 2;
  if (mode == PeriodMode::Coperiod && (pi.rows() != n || pi.cols() != g))
    throw InputError("coperiod matrix must be 2g x g");
  if (mode == PeriodMode::Period && (pi.rows() != g || pi.cols() != n)) throw InputError("period matrix must be g x 2g");
  if (mode == PeriodMode::Period && exact_determinant(a) == 0) throw InputError("A is singular");
  return rf_numeric(pi, to_complex(a), mode, tol);
}

namespace {

long igcd(long a, long b) { return std::gcd(a, b); }

IntMatrix skew_from_upper(const std::vector<long>& up, std::size_t n, long sign) {
  IntMatrix a(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      a(i, j) = sign * up[k];
      a(j, i) = -sign * up[k];
    }
  return a;
}

std::vector<long> upper_of(const IntMatrix& a) {
  std::vector<long> up;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) up.push_back(a(i, j).get_si());
  return up;
}

struct Shard {
  std::vector<IntMatrix> found;
  std::size_t candidates = 0;
};

// Enumerates upper-triangular vectors whose first entry is `first`, with the
// remaining entries in [-bound, bound].
void search_shard(const CMatrix& p, long bound, long first, std::size_t m, Tolerance tol, Shard& out) {
  const std::size_t n = static_cast<std::size_t>(p.cols());
  const bool genus2 = n == 4;
  // Pluecker coordinates for the genus-2 first-condition prefilter.
  cplx pl[4][4];
  if (genus2)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) pl[i][j] = p(0, i) * p(1, j) - p(0, j) * p(1, i);

  std::vector<long> up(m, -bound);
  up[0] = first;
  for (;;) {
    // First nonzero entry positive, gcd 1.
    long g = 0;
    long lead = 0;
    for (long v : up) {
      g = igcd(g, v < 0 ? -v : v);
      if (!lead && v) lead = v;
    }
    if (g == 1 && lead > 0) {
      ++out.candidates;
      bool pass_filter = true;
      if (genus2) {
        const long a01 = up[0], a02 = up[1], a03 = up[2], a12 = up[3], a13 = up[4], a23 = up[5];
        const long pf = a01 * a23 - a02 * a13 + a03 * a12;
        if (pf == 0) {
          pass_filter = false;
        } else {
          const cplx v = -double(a23) * pl[0][1] + double(a13) * pl[0][2] - double(a12) * pl[0][3] -
                         double(a03) * pl[1][2] + double(a02) * pl[1][3] - double(a01) * pl[2][3];
          pass_filter = std::abs(v) <= 2.0 * tol.eps * std::abs(double(pf));
        }
      }
      if (pass_filter) {
        for (long sign : {1L, -1L}) {
          IntMatrix a = skew_from_upper(up, n, sign);
          if (exact_determinant(a) == 0) break;
          if (rf_numeric(p, to_complex(a), PeriodMode::Period, tol)) {
            out.found.push_back(std::move(a));
            break;
          }
        }
      }
    }
    std::size_t k = m;
    while (k > 1) {
      --k;
      if (up[k] < bound) {
        ++up[k];
        break;
      }
      up[k] = -bound;
      if (k == 1) return;
    }
    if (m == 1) return;
  }
}

}  // namespace

PolarizationSearch find_polarization(const CMatrix& p, long bound, unsigned threads, Tolerance tol) {
  if (bound < 1) throw InputError("entry bound must be at least 1");
  require_finite(p);
  const std::size_t g = static_cast<std::size_t>(p.rows());
  if (g == 0 || p.cols() != static_cast<Eigen::Index>(2 * g)) throw InputError("period matrix must be g x 2g");
  const std::size_t n = 2 * g;
  const std::size_t m = n * (n - 1) / 2;

  std::vector<long> firsts;
  for (long v = -bound; v <= bound; ++v) firsts.push_back(v);
  std::vector<Shard> shards(firsts.size());
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < firsts.size(); ++i) search_shard(p, bound, firsts[i], m, tol, shards[i]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < firsts.size(); i += threads) search_shard(p, bound, firsts[i], m, tol, shards[i]);
      });
    for (auto& th : pool) th.join();
  }

  PolarizationSearch res;
  for (auto& s : shards) {
    res.candidates += s.candidates;
    for (auto& a : s.found) res.found.push_back(std::move(a));
  }
  std::sort(res.found.begin(), res.found.end(),
            [](const IntMatrix& x, const IntMatrix& y) { return upper_of(x) < upper_of(y); });
  return res;
}

CMatrix normalize_period(const CMatrix& pi, Tolerance tol) {
  require_finite(pi);
  const Eigen::Index g = pi.cols();
  if (pi.rows() != 2 * g || g == 0) throw InputError("period matrix must be 2g x g");
  const CMatrix top = pi.topRows(g);
  const CMatrix bot = pi.bottomRows(g);
  if (!invertible(bot, tol.eps)) throw NumericalError("non-normalizable basis");
  CMatrix z = bot.transpose().fullPivLu().solve(CMatrix(top.transpose())).transpose();
  if (!is_siegel_point(z, tol)) throw InputError("normalized period matrix is not a Siegel point");
  return (z + z.transpose()) / 2.0;
}

std::vector<long> dual_polarization_type(const std::vector<long>& d) {
  if (d.empty()) throw InputError("polarization type must be nonempty");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 1) throw InputError("polarization type entries must be positive");
    if (i + 1 < d.size() && d[i + 1] % d[i] != 0) throw InputError("polarization type must form a divisibility chain");
  }
  const std::size_t g = d.size();
  std::vector<long> out(g);
  for (std::size_t k = 0; k < g; ++k) out[k] = d[g - 1] / d[g - 1 - k];
  long c = 0;
  for (long v : out) c = std::gcd(c, v);
  for (long& v : out) v /= c;
  return out;
}

Order4Report order4_structure(std::size_t p, std::size_t q) {
  const std::size_t g = p + q;
  if (g == 0) throw InputError("p + q must be at least 1");
  Order4Report r;
  r.I = IntMatrix(2 * g, 2 * g);
  for (std::size_t k = 0; k < g; ++k) {
    const long s = k < p ? 1 : -1;
    r.I(g + k, k) = s;   // I e_k = s e_{g+k}
    r.I(k, g + k) = -s;  // I e_{g+k} = -s e_k
  }
  const IntMatrix id = IntMatrix::identity(2 * g);
  r.squares_to_minus_one = r.I * r.I == Integer(-1) * id;
  r.symplectic = is_symplectic(r.I, std::vector<long>(g, 1));
  const IntMatrix form = polarization_form_exact(std::vector<long>(g, 1)) * r.I;
  r.form_symmetric = form.is_symmetric();
  if (r.form_symmetric) r.form_signature = exact_signature(form);
  return r;
}

}  // namespace perdom::siegel
