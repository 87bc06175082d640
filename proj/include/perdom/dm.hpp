#pragma once

// Deligne-Mostow weight systems: validation, INT / Sigma-INT predicates,
// exhaustive enumeration in the ball case |mu| = 2, GIT stability of weighted
// point configurations and the genus of the associated cyclic cover.

#include <cstddef>
#include <string>
#include <vector>

#include "perdom/exact_core.hpp"

namespace perdom::dm {

/// Reduced rationals in (0,1), sorted descending, with integral sum.
class WeightSystem {
 public:
  const std::vector<Rational>& entries() const { return entries_; }
  std::size_t m() const { return entries_.size(); }
  /// Least common denominator.
  long d() const { return d_; }
  /// Numerators over d, in entry order.
  std::vector<long> numerators() const;
  Integer total() const;

  /// "k1/d,k2/d,..." over the common denominator.
  std::string to_string() const;

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const WeightSystem& a, const WeightSystem& b) { return a.entries_ < b.entries_; }

 private:
  friend WeightSystem validate_weights(std::vector<Rational> mu);
  std::vector<Rational> entries_;
  long d_ = 1;
};

/// Throws InputError naming the violated condition.
WeightSystem validate_weights(std::vector<Rational> mu);

/// Comma-separated rationals "a/b"; "a/b*n" repeats an entry n times.
std::vector<Rational> parse_weights(const std::string& text);

bool is_int(const WeightSystem& mu);
bool is_sigma_int(const WeightSystem& mu);

enum class Condition { INT, SigmaINT };

struct EnumOptions {
  long d_max = 60;
  unsigned threads = 1;
  bool reverse_order = false;  // traversal order only; output is identical
};

/// All multisets of m weights with |mu| = 2, common denominator <= d_max,
/// satisfying the condition; sorted.
std::vector<WeightSystem> enumerate(std::size_t m, Condition cond, const EnumOptions& opts = {});

enum class Stability { Stable, StrictlySemistable, Unstable };

const char* to_string(Stability s);

struct StabilityVerdict {
  Stability verdict = Stability::Stable;
  std::vector<std::vector<std::size_t>> witnesses;  // offending classes (0-based indices)
};

/// `groups` partitions {0..m-1} into classes of coincident points.
StabilityVerdict git_classify(const std::vector<long>& k, const std::vector<std::vector<std::size_t>>& groups);

/// Genus of the smooth model of y^d = prod (x - z_i)^{k_i}.
long cyclic_cover_genus(long d, const std::vector<long>& k);

long ball_dimension(long m);

}  // namespace perdom::dm
