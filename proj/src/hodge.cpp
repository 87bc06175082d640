#include "perdom/hodge.hpp"

#include <algorithm>
#include <numeric>

namespace perdom::hodge {

CharacterHodgeStructure::CharacterHodgeStructure(long weight, long group_order) : weight_(weight), m_(group_order) {
  if (weight < 0) throw InputError("weight must be nonnegative");
  if (group_order < 1) throw InputError("group order must be positive");
  dims_.assign(static_cast<std::size_t>(m_ * (weight_ + 1)), 0);
}

long CharacterHodgeStructure::h(long a, long p) const {
  if (p < 0 || p > weight_) return 0;
  return dims_[static_cast<std::size_t>(reduce(a) * (weight_ + 1) + p)];
}

void CharacterHodgeStructure::set(long a, long p, long value) {
  if (p < 0 || p > weight_) throw InputError("Hodge index p out of range");
  if (value < 0) throw InputError("Hodge numbers must be nonnegative");
  dims_[static_cast<std::size_t>(reduce(a) * (weight_ + 1) + p)] = value;
}

long CharacterHodgeStructure::total() const { return std::accumulate(dims_.begin(), dims_.end(), 0L); }

std::vector<long> CharacterHodgeStructure::hodge_numbers() const {
  std::vector<long> out(static_cast<std::size_t>(weight_ + 1), 0);
  for (long a = 0; a < m_; ++a)
    for (long p = 0; p <= weight_; ++p) out[p] += h(a, p);
  return out;
}

bool CharacterHodgeStructure::is_real(long a) const {
  const long r = reduce(a);
  return r == 0 || 2 * r == m_;
}

Validation validate_chs(const CharacterHodgeStructure& h) {
  Validation v;
  const long k = h.weight();
  for (long a = 0; a < h.group_order(); ++a)
    for (long p = 0; p <= k; ++p)
      if (h.h(a, p) != h.h(-a, k - p)) {
        v.ok = false;
        v.diagnostics.push_back("h^{" + std::to_string(p) + "," + std::to_string(k - p) + "}_" + std::to_string(a) + " = " +
                                std::to_string(h.h(a, p)) + " but h^{" + std::to_string(k - p) + "," + std::to_string(p) +
                                "}_" + std::to_string(h.reduce(-a)) + " = " + std::to_string(h.h(-a, k - p)));
      }
  return v;
}

std::vector<long> canonical_sigma(long m) {
  std::vector<long> out;
  for (long a = 1; 2 * a < m; ++a) out.push_back(a);
  return out;
}

CharacterHodgeStructure half_twist(const CharacterHodgeStructure& h, const std::vector<long>& sigma) {
  const long m = h.group_order();
  const long k = h.weight();
  std::vector<char> in_sigma(m, 0), in_conj(m, 0);
  for (long a : sigma) {
    const long r = h.reduce(a);
    if (h.is_real(r)) throw InputError("Sigma contains the real character " + std::to_string(r));
    if (in_sigma[r]) throw InputError("Sigma lists character " + std::to_string(r) + " twice");
    in_sigma[r] = 1;
  }
  for (long a = 0; a < m; ++a)
    if (in_sigma[a]) {
      const long c = h.reduce(-a);
      if (in_sigma[c]) throw InputError("Sigma meets its conjugate at character " + std::to_string(c));
      in_conj[c] = 1;
    }

  CharacterHodgeStructure out(k + 1, m);
  for (long a = 0; a < m; ++a) {
    if (in_sigma[a])
      for (long r = 1; r <= k + 1; ++r) out.set(a, r, h.h(a, r - 1));
    else if (in_conj[a])
      for (long r = 0; r <= k; ++r) out.set(a, r, h.h(a, r));
  }
  return out;
}

SylvesterSignature sylvester_signature(long b, const std::vector<long>& hn, long n) {
  if (n < 0 || b < 0) throw InputError("weight and Betti number must be nonnegative");
  if (hn.size() != static_cast<std::size_t>(n + 1)) throw InputError("expected n+1 Hodge numbers");
  for (long x : hn)
    if (x < 0) throw InputError("Hodge numbers must be nonnegative");

  long index = 0;
  for (long p = 0; p <= n; ++p) {
    const long q = n - p;
    if (p == q || (p - q) % 2 != 0) continue;
    index += (p % 2 == 0 ? 1 : -1) * hn[p];
  }
  if (n % 2 == 0) {
    const long mid = n / 2;
    const long sign = mid % 2 == 0 ? 1 : -1;
    const long hmm = hn[mid];
    index += hmm >= 1 ? sign * (hmm - 1) + 1 : sign * hmm;
  }

  if ((b - index) % 2 != 0)
    throw InputError("parity mismatch: b = " + std::to_string(b) + " and index I = " + std::to_string(index) +
                     " differ by an odd number");
  const long sum = std::accumulate(hn.begin(), hn.end(), 0L);
  if (sum != b) throw InputError("Hodge numbers sum to " + std::to_string(sum) + ", not b = " + std::to_string(b));
  if (n % 2 != 0) throw InputError("weight n must be even");

  SylvesterSignature s;
  s.index = index;
  s.t_plus = (b + index) / 2;
  s.t_minus = (b - index) / 2;
  if (s.t_plus < 0 || s.t_minus < 0) throw InputError("index exceeds the Betti number");
  return s;
}

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

EigenDims arrangement_eigendims(const dm::WeightSystem& mu, long n) {
  if (n < 0) throw InputError("degree n must be nonnegative");
  const long m = static_cast<long>(mu.m());
  const long s = mu.total().get_si();
  EigenDims e;
  for (long p = 0; p <= n; ++p) e.h.push_back(binomial(s - 1, p) * binomial(m - 1 - s, n - p));
  e.total = binomial(m - 2, n);
  if (std::accumulate(e.h.begin(), e.h.end(), 0L) != e.total)
    throw InputError("eigenspace dimensions do not add up to C(m-2, n)");
  return e;
}

std::string describe(const DomainFactor& f) {
  switch (f.kind) {
    case DomainKind::Ball: return "ball(" + std::to_string(f.dimension) + ")";
    case DomainKind::TypeI: return "type_I(" + std::to_string(f.p) + "," + std::to_string(f.q) + ")";
    case DomainKind::TypeIV: return "type_IV(" + std::to_string(f.dimension) + ")";
  }
  return "?";
}

DomainDescriptor domain_classifier(const std::vector<DomainEntry>& entries) {
  DomainDescriptor d;
  for (const auto& e : entries) {
    if (e.p < 0 || e.q < 0 || e.p + e.q < 1) throw InputError("each entry needs p, q >= 0 and p + q >= 1");
    DomainFactor f{DomainKind::TypeI, e.p, e.q, 0};
    if (e.is_real) {
      f.kind = DomainKind::TypeIV;
      f.dimension = std::max(0L, e.p + e.q - 2);
    } else {
      d.siegel_genus += e.p + e.q;
      if (std::min(e.p, e.q) == 1) {
        f.kind = DomainKind::Ball;
        f.dimension = std::max(e.p, e.q);
      } else {
        f.dimension = e.p * e.q;
      }
    }
    d.total_dimension += f.dimension;
    d.factors.push_back(f);
  }
  return d;
}

long eigenperiod_ball_dim(long dim_n_chi) {
  if (dim_n_chi < 1) throw InputError("dim N(chi) must be at least 1");
  return dim_n_chi - 1;
}

}  // namespace perdom::hodge
