#include "perdom/exact_core.hpp"

#include <algorithm>

namespace perdom {

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

IntMatrix block_diagonal(std::span<const IntMatrix> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  IntMatrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const SignatureTriple& s) {
  return os << '(' << s.plus << ',' << s.minus << ',' << s.zero << ')';
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  const std::size_t r = std::min(S.rows(), S.cols());
  d.reserve(r);
  for (std::size_t i = 0; i < r; ++i) d.push_back(S(i, i));
  return d;
}

namespace {

// Row operation row_dst += k * row_src, mirrored on the transform.
void add_row(IntMatrix& s, IntMatrix& u, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t j = 0; j < s.cols(); ++j) s(dst, j) += k * s(src, j);
  for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += k * u(src, j);
}

void add_col(IntMatrix& s, IntMatrix& v, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t i = 0; i < s.rows(); ++i) s(i, dst) += k * s(i, src);
  for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) += k * v(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block, first in row-major order.
      std::size_t pi = m, pj = n;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (s(i, j) == 0) continue;
          Integer mag = abs(s(i, j));
          if (pi == m || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (pi == m) break;  // trailing block is zero

      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / s(t, t);
        add_row(s, u, i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        add_col(s, v, j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot isolated; enforce divisibility of the remaining block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s(i, j) % s(t, t) != 0) {
            add_row(s, u, t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) s(t, j) = -s(t, j);
      for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
  }
  return SmithForm{std::move(u), std::move(s), std::move(v)};
}

Integer exact_determinant(const IntMatrix& a) {
  if (!a.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational exact_determinant(const RatMatrix& a) {
  if (!a.is_square()) throw InputError("determinant of a non-square matrix");
  RatMatrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && m(r, k) == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      m.swap_rows(k, r);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

SignatureTriple exact_signature(const RatMatrix& g_in) {
  if (!g_in.is_symmetric()) throw InputError("signature requires a symmetric matrix");
  RatMatrix g = g_in;
  const std::size_t n = g.rows();
  SignatureTriple sig;
  std::size_t k = 0;

  auto sym_swap = [&g](std::size_t a, std::size_t b) {
    g.swap_rows(a, b);
    g.swap_cols(a, b);
  };

  while (k < n) {
    std::size_t d = k;
    while (d < n && g(d, d) == 0) ++d;
    if (d < n) {
      sym_swap(k, d);
      const Rational p = g(k, k);
      (sgn(p) > 0 ? sig.plus : sig.minus) += 1;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (g(i, k) == 0) continue;
        const Rational f = g(i, k) / p;
        for (std::size_t j = k + 1; j < n; ++j) g(i, j) -= f * g(k, j);
      }
      ++k;
      continue;
    }

    // All remaining diagonal entries vanish: look for a hyperbolic pair.
    std::size_t hi = n, hj = n;
    for (std::size_t i = k; i < n && hi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (g(i, j) != 0) {
          hi = i;
          hj = j;
          break;
        }
    if (hi == n) {
      sig.zero += n - k;
      break;
    }
    sym_swap(k, hi);
    sym_swap(k + 1, hj == k ? hi : hj);
    const Rational b = g(k, k + 1);
    sig.plus += 1;
    sig.minus += 1;
    // Schur complement of [[0,b],[b,0]].
    for (std::size_t r = k + 2; r < n; ++r)
      for (std::size_t c = k + 2; c < n; ++c)
        g(r, c) -= (g(r, k) * g(k + 1, c) + g(r, k + 1) * g(k, c)) / b;
    k += 2;
  }
  return sig;
}

SignatureTriple exact_signature(const IntMatrix& g) { return exact_signature(to_rational(g)); }

RatMatrix exact_inverse(const RatMatrix& a) {
  if (!a.is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && m(r, k) == 0) ++r;
    if (r == n) throw InputError("matrix is singular");
    m.swap_rows(k, r);
    inv.swap_rows(k, r);
    const Rational p = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= p;
      inv(k, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const Rational f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

}  // namespace perdom
