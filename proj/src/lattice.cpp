#include "perdom/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace perdom::lattice {

IntegralLattice::IntegralLattice(IntMatrix gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
  if (!gram_.is_symmetric()) throw InputError("lattice Gram matrix must be square and symmetric");
  if (gram_.rows() == 0) throw InputError("lattice must have positive rank");
  if (exact_determinant(gram_) == 0) throw InputError("lattice Gram matrix is degenerate");
}

bool IntegralLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (mpz_odd_p(gram_(i, i).get_mpz_t())) return false;
  return true;
}

Integer IntegralLattice::determinant() const { return exact_determinant(gram_); }

SignatureTriple IntegralLattice::signature() const { return exact_signature(gram_); }

IntegralLattice hyperbolic_plane() { return IntegralLattice(IntMatrix{{0, 1}, {1, 0}}, "U"); }

namespace {

IntMatrix negated_cartan_path(long n) {
  IntMatrix g(n, n);
  for (long i = 0; i < n; ++i) {
    g(i, i) = -2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = 1;
  }
  return g;
}

}  // namespace

IntegralLattice root_lattice_a(long n) {
  if (n < 1) throw InputError("A(n) requires n >= 1");
  return IntegralLattice(negated_cartan_path(n), "A" + std::to_string(n));
}

IntegralLattice root_lattice_d(long n) {
  if (n < 4) throw InputError("D(n) requires n >= 4");
  // Chain r1 - ... - r_{n-1}, with r_n attached to r_{n-2}.
  IntMatrix g = negated_cartan_path(n);
  g(n - 2, n - 1) = g(n - 1, n - 2) = 0;
  g(n - 3, n - 1) = g(n - 1, n - 3) = 1;
  return IntegralLattice(std::move(g), "D" + std::to_string(n));
}

IntegralLattice root_lattice_e(long n) {
  if (n < 6 || n > 8) throw InputError("E(n) requires n in {6, 7, 8}");
  // Bourbaki numbering: chain 1-3-4-5-...-n, node 2 attached to node 4.
  IntMatrix g(n, n);
  for (long i = 0; i < n; ++i) g(i, i) = -2;
  auto link = [&g](long a, long b) { g(a - 1, b - 1) = g(b - 1, a - 1) = 1; };
  link(1, 3);
  link(2, 4);
  for (long k = 3; k < n; ++k) link(k, k + 1);
  return IntegralLattice(std::move(g), "E" + std::to_string(n));
}

IntegralLattice rank_one(long m) {
  if (m == 0) throw InputError("<m> requires m != 0");
  return IntegralLattice(IntMatrix{{Integer(m)}}, "<" + std::to_string(m) + ">");
}

IntegralLattice standard_lattice(Family family, long param) {
  switch (family) {
    case Family::U: return hyperbolic_plane();
    case Family::A: return root_lattice_a(param);
    case Family::D: return root_lattice_d(param);
    case Family::E: return root_lattice_e(param);
    case Family::Rank1: return rank_one(param);
  }
  throw InputError("unknown lattice family");
}

IntegralLattice rescale(const IntegralLattice& l, long s) {
  if (s == 0) throw InputError("rescale factor must be nonzero");
  if (s == 1) return l;
  return IntegralLattice(Integer(s) * l.gram(), l.label() + "(" + std::to_string(s) + ")");
}

IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts) {
  if (parts.empty()) throw InputError("direct sum of an empty list");
  if (parts.size() == 1) return parts.front();
  std::vector<IntMatrix> blocks;
  std::string label;
  for (const auto& p : parts) {
    blocks.push_back(p.gram());
    label += (label.empty() ? "" : "+") + p.label();
  }
  return IntegralLattice(block_diagonal(blocks), label);
}

std::vector<Integer> discriminant_group(const IntegralLattice& l) {
  std::vector<Integer> out;
  for (const auto& s : smith_normal_form(l.gram()).diagonal())
    if (s > 1) out.push_back(s);
  return out;
}

bool is_p_elementary(const IntegralLattice& l, long p) {
  if (p < 2) throw InputError("p must be prime");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InputError("p must be prime");
  for (const auto& f : discriminant_group(l))
    if (f != p) return false;
  return true;
}

Rational reduce_mod(const Rational& x, long modulus) {
  Rational m(modulus);
  Rational t = x / m;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  Rational r = x - m * Rational(fl);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer(const Rational& x) { return x.get_den() == 1; }

}  // namespace

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<Integer> invariant_factors, RatMatrix values)
    : factors_(std::move(invariant_factors)), values_(std::move(values)) {
  const std::size_t k = factors_.size();
  if (values_.rows() != k || values_.cols() != k) throw InputError("form values must be a k x k matrix");
  if (!values_.is_symmetric()) throw InputError("form values must be symmetric");
  for (std::size_t i = 0; i < k; ++i) {
    if (factors_[i] <= 1) throw InputError("invariant factors must exceed 1");
    if (i + 1 < k && factors_[i + 1] % factors_[i] != 0) throw InputError("invariant factors must form a divisibility chain");
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Rational n(factors_[i]);
      if (i == j) {
        values_(i, i) = reduce_mod(values_(i, i), 2);
        if (!is_integer(n * values_(i, i))) throw InputError("q is not defined on the cyclic factor");
        Rational nn = n * n * values_(i, i);
        if (!is_integer(nn) || mpz_odd_p(nn.get_num_mpz_t())) throw InputError("q is not defined on the cyclic factor");
      } else {
        values_(i, j) = reduce_mod(values_(i, j), 1);
        if (!is_integer(n * values_(i, j))) throw InputError("b is not defined on the group");
      }
    }
}

Integer FiniteQuadraticForm::order() const {
  Integer o = 1;
  for (const auto& f : factors_) o *= f;
  return o;
}

Rational FiniteQuadraticForm::q(const std::vector<Integer>& a) const {
  if (a.size() != factors_.size()) throw InputError("coefficient vector has wrong length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += Rational(a[i] * a[i]) * values_(i, i);
    for (std::size_t j = i + 1; j < a.size(); ++j) s += Rational(2 * a[i] * a[j]) * values_(i, j);
  }
  return reduce_mod(s, 2);
}

Rational FiniteQuadraticForm::b(const std::vector<Integer>& x, const std::vector<Integer>& y) const {
  if (x.size() != factors_.size() || y.size() != factors_.size()) throw InputError("coefficient vector has wrong length");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += Rational(x[i] * y[j]) * values_(i, j);
  return reduce_mod(s, 1);
}

FiniteQuadraticForm FiniteQuadraticForm::negated() const {
  FiniteQuadraticForm f(factors_, Rational(-1) * values_);
  f.generators_ = generators_;
  return f;
}

FiniteQuadraticForm discriminant_form(const IntegralLattice& l) {
  if (!l.is_even()) throw InputError("discriminant form requires an even lattice");
  const SmithForm snf = smith_normal_form(l.gram());
  const auto diag = snf.diagonal();
  const RatMatrix g = to_rational(l.gram());
  const std::size_t r = l.rank();

  std::vector<Integer> factors;
  std::vector<std::vector<Rational>> gens;
  for (std::size_t i = 0; i < r; ++i) {
    if (diag[i] <= 1) continue;
    factors.push_back(diag[i]);
    std::vector<Rational> y(r);
    for (std::size_t k = 0; k < r; ++k) y[k] = Rational(snf.V(k, i)) / Rational(diag[i]);
    gens.push_back(std::move(y));
  }

  const std::size_t k = factors.size();
  RatMatrix values(k, k), gv(k, r);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t c = 0; c < r; ++c) gv(a, c) = gens[a][c];
    for (std::size_t b = 0; b < k; ++b) {
      Rational s = 0;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (g(i, j) != 0) s += gens[a][i] * g(i, j) * gens[b][j];
      values(a, b) = s;
    }
  }
  FiniteQuadraticForm f(std::move(factors), std::move(values));
  f.set_generator_vectors(std::move(gv));
  return f;
}

namespace {

// Abelian group Z/n_1 x ... x Z/n_k with elements indexed in mixed radix and
// form values scaled to integers by a common denominator.
struct Enumerated {
  std::vector<long> n;
  std::size_t size = 1;
  std::vector<std::vector<long>> elems;
  std::vector<long> order;
  std::vector<long> qv;  // N * q mod 2N
  std::vector<std::vector<long>> bmat;  // N * values mod (2N on the diagonal, N off it)

  long coord(std::size_t e, std::size_t i) const { return elems[e][i]; }

  std::size_t index(const std::vector<long>& c) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n.size(); ++i) idx = idx * n[i] + c[i];
    return idx;
  }

  std::size_t add(std::size_t a, std::size_t b) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n.size(); ++i) idx = idx * n[i] + (elems[a][i] + elems[b][i]) % n[i];
    return idx;
  }

  long pair(std::size_t a, std::size_t b, long N) const {
    long s = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (!elems[a][i]) continue;
      for (std::size_t j = 0; j < n.size(); ++j) s = (s + elems[a][i] * elems[b][j] % N * (bmat[i][j] % N)) % N;
    }
    return ((s % N) + N) % N;
  }
};

Enumerated enumerate(const FiniteQuadraticForm& f, long N) {
  Enumerated e;
  for (const auto& x : f.invariant_factors()) e.n.push_back(x.get_si());
  for (long x : e.n) e.size *= static_cast<std::size_t>(x);
  const std::size_t k = e.n.size();
  e.bmat.assign(k, std::vector<long>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational v = f.values()(i, j) * Rational(N);
      e.bmat[i][j] = v.get_num().get_si();
    }
  e.elems.resize(e.size);
  e.order.resize(e.size);
  e.qv.resize(e.size);
  std::vector<long> c(k, 0);
  for (std::size_t idx = 0; idx < e.size; ++idx) {
    e.elems[idx] = c;
    long ord = 1;
    for (std::size_t i = 0; i < k; ++i) {
      long g = std::gcd(c[i], e.n[i]);
      ord = std::lcm(ord, e.n[i] / g);
    }
    e.order[idx] = ord;
    long s = 0;
    const long M = 2 * N;
    for (std::size_t i = 0; i < k; ++i) {
      if (!c[i]) continue;
      s = (s + c[i] * c[i] % M * e.bmat[i][i]) % M;
      for (std::size_t j = i + 1; j < k; ++j) s = (s + 2 * c[i] * c[j] % M * (e.bmat[i][j] % M)) % M;
    }
    e.qv[idx] = ((s % M) + M) % M;
    for (std::size_t i = k; i-- > 0;) {
      if (++c[i] < e.n[i]) break;
      c[i] = 0;
    }
  }
  return e;
}

long common_denominator(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
  Integer N = 1;
  for (const auto* f : {&a, &b})
    for (const auto& v : f->values().entries()) N = lcm(N, Integer(v.get_den()));
  return N.get_si();
}

struct IsoSearch {
  const Enumerated& src;
  const Enumerated& dst;
  long N;
  bool negate;
  std::vector<std::size_t> gens_src;  // generator indices in src
  std::vector<std::size_t> images;
  std::vector<std::vector<std::size_t>> candidates;

  long target_q(std::size_t i) const {
    long v = src.qv[gens_src[i]];
    return negate ? (2 * N - v) % (2 * N) : v;
  }
  long target_b(std::size_t i, std::size_t j) const {
    long v = src.pair(gens_src[i], gens_src[j], N);
    return negate ? (N - v) % N : v;
  }

  bool dfs(std::size_t i, std::vector<char>& span, std::size_t span_size) {
    if (i == gens_src.size()) return true;
    const long ni = src.n[i];
    for (std::size_t y : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (dst.pair(y, images[j], N) != target_b(i, j)) ok = false;
      if (!ok) continue;
      // Injectivity: the multiples k*y for 0 < k < n_i must lie outside the current span.
      std::size_t m = y;
      for (long t = 1; t < ni && ok; ++t) {
        if (span[m]) ok = false;
        m = dst.add(m, y);
      }
      if (!ok) continue;
      std::vector<char> next(dst.size, 0);
      std::size_t next_size = 0;
      for (std::size_t s = 0; s < dst.size; ++s) {
        if (!span[s]) continue;
        std::size_t z = s;
        for (long t = 0; t < ni; ++t) {
          if (!next[z]) {
            next[z] = 1;
            ++next_size;
          }
          z = dst.add(z, y);
        }
      }
      if (next_size != span_size * static_cast<std::size_t>(ni)) continue;
      images.push_back(y);
      if (dfs(i + 1, next, next_size)) return true;
      images.pop_back();
    }
    return false;
  }
};

}  // namespace

bool fqf_isomorphic(const FiniteQuadraticForm& q1, const FiniteQuadraticForm& q2, bool negate, std::size_t cap) {
  const Integer o1 = q1.order(), o2 = q2.order();
  if (o1 > Integer(static_cast<unsigned long>(cap)) || o2 > Integer(static_cast<unsigned long>(cap)))
    throw CapExceeded("cap exceeded: discriminant group order above " + std::to_string(cap));
  if (q1.invariant_factors() != q2.invariant_factors()) return false;
  if (q1.num_generators() == 0) return true;

  const long N = common_denominator(q1, q2);
  const Enumerated a = enumerate(q1, N);
  const Enumerated b = enumerate(q2, N);

  std::map<std::pair<long, long>, long> hist;
  for (std::size_t i = 0; i < a.size; ++i) {
    long q = negate ? (2 * N - a.qv[i]) % (2 * N) : a.qv[i];
    ++hist[{a.order[i], q}];
  }
  for (std::size_t i = 0; i < b.size; ++i) --hist[{b.order[i], b.qv[i]}];
  for (const auto& [key, c] : hist)
    if (c != 0) return false;

  IsoSearch s{a, b, N, negate, {}, {}, {}};
  const std::size_t k = a.n.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<long> e(k, 0);
    e[i] = 1;
    s.gens_src.push_back(a.index(e));
  }
  s.candidates.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const long tq = s.target_q(i);
    for (std::size_t y = 0; y < b.size; ++y)
      if (b.order[y] == a.n[i] && b.qv[y] == tq) s.candidates[i].push_back(y);
  }
  std::vector<char> span(b.size, 0);
  span[0] = 1;
  return s.dfs(0, span, 1);
}

std::vector<std::vector<Integer>> vectors_of_norm(const IntegralLattice& l, const Integer& norm) {
  const std::size_t n = l.rank();
  const SignatureTriple sig = l.signature();
  if (sig.minus != n) throw InputError("short-vector enumeration requires a negative definite lattice");

  // -G = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2
  RatMatrix p = Rational(-1) * to_rational(l.gram());
  std::vector<Rational> d(n);
  RatMatrix mu(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = p(i, i);
    for (std::size_t j = i + 1; j < n; ++j) mu(i, j) = p(i, j) / d[i];
    for (std::size_t r = i + 1; r < n; ++r)
      for (std::size_t c = i + 1; c < n; ++c) p(r, c) -= mu(i, r) * d[i] * mu(i, c);
  }

  std::vector<std::vector<Integer>> out;
  std::vector<Integer> x(n);
  const Rational target(norm);

  auto rec = [&](auto&& self, std::size_t level, const Rational& used) -> void {
    const std::size_t i = level - 1;
    Rational c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c -= mu(i, j) * Rational(x[j]);
    const Rational budget = target - used;
    const Rational t = budget / d[i];
    Integer tf;
    mpz_fdiv_q(tf.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    Integer rad = sqrt(tf) + 1;
    Integer cf;
    mpz_fdiv_q(cf.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    for (Integer v = cf - rad; v <= cf + rad + 1; ++v) {
      Rational diff = Rational(v) - c;
      Rational term = d[i] * diff * diff;
      if (term > budget) continue;
      x[i] = v;
      const Rational next = used + term;
      if (i == 0) {
        if (next == target) out.push_back(x);
      } else {
        self(self, i, next);
      }
    }
    x[i] = 0;
  };
  if (n > 0 && norm > 0) rec(rec, n, Rational(0));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Integer>> root_vectors(const IntegralLattice& l) { return vectors_of_norm(l, Integer(2)); }

bool is_isometry(const IntegralLattice& l, const IntMatrix& t) {
  if (t.rows() != l.rank() || t.cols() != l.rank()) throw InputError("isometry matrix has wrong size");
  if (t.transpose() * l.gram() * t != l.gram()) return false;
  const Integer d = exact_determinant(t);
  return d == 1 || d == -1;
}

}  // namespace perdom::lattice
