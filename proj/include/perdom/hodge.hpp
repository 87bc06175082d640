#pragma once

// Hodge numbers refined by the characters of a cyclic group Z/m: validation,
// the negative half-twist, Sylvester signatures from Hodge numbers, the
// eigencohomology dimensions of a point arrangement, and eigenperiod domains.

#include <cstddef>
#include <string>
#include <vector>

#include "perdom/dm.hpp"

namespace perdom::hodge {

/// h(a, p) = h^{p, k-p}_a for a in Z/m, 0 <= p <= k.
class CharacterHodgeStructure {
 public:
  CharacterHodgeStructure(long weight, long group_order);

  long weight() const { return weight_; }
  long group_order() const { return m_; }

  long h(long a, long p) const;
  void set(long a, long p, long value);

  long total() const;
  /// Sum over characters: h^{p, k-p}.
  std::vector<long> hodge_numbers() const;

  long reduce(long a) const { return ((a % m_) + m_) % m_; }
  bool is_real(long a) const;

  friend bool operator==(const CharacterHodgeStructure&, const CharacterHodgeStructure&) = default;

 private:
  long weight_;
  long m_;
  std::vector<long> dims_;  // (a, p) row-major
};

struct Validation {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

/// h^{pq}_a = h^{qp}_{-a} for every (a, p).
Validation validate_chs(const CharacterHodgeStructure& h);

/// {a : 0 < 2a < m}.
std::vector<long> canonical_sigma(long m);

/// Weight k+1 structure: h'^{r,s}_a = h^{r-1,s}_a for a in Sigma,
/// h^{r,s-1}_a for a in -Sigma, zero elsewhere.
CharacterHodgeStructure half_twist(const CharacterHodgeStructure& h, const std::vector<long>& sigma);

struct SylvesterSignature {
  long index = 0;
  long t_plus = 0;
  long t_minus = 0;
};

/// hodge_numbers[p] = h^{p, n-p}. The middle class h^{n/2,n/2} counts one
/// polarization class positively.
SylvesterSignature sylvester_signature(long b, const std::vector<long>& hodge_numbers, long n);

struct EigenDims {
  std::vector<long> h;  // h[p] = h^{p, n-p}_chi
  long total = 0;       // C(m-2, n)
};

/// h^{p,q}_chi = C(|mu|-1, p) C(m-1-|mu|, q) with p + q = n.
EigenDims arrangement_eigendims(const dm::WeightSystem& mu, long n);

enum class DomainKind { Ball, TypeI, TypeIV };

struct DomainFactor {
  DomainKind kind;
  long p = 0;
  long q = 0;
  long dimension = 0;
};

struct DomainEntry {
  bool is_real = false;
  long p = 0;
  long q = 0;
};

struct DomainDescriptor {
  std::vector<DomainFactor> factors;
  long total_dimension = 0;
  long siegel_genus = 0;
};

std::string describe(const DomainFactor& f);

DomainDescriptor domain_classifier(const std::vector<DomainEntry>& entries);

long eigenperiod_ball_dim(long dim_n_chi);

long binomial(long n, long k);

}  // namespace perdom::hodge
