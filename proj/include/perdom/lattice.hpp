#pragma once

// Integral lattices: building blocks (U, A_n, D_n, E_n, <m>), rescaling and
// orthogonal sums, discriminant groups and quadratic forms, root enumeration.
//
// Sign convention: A/D/E lattices are negative definite (Gram = -Cartan).
// Positive-definite versions are rescale(L, -1), written L(-1).

#include <cstddef>
#include <string>
#include <vector>

#include "perdom/exact_core.hpp"

namespace perdom::lattice {

class IntegralLattice {
 public:
  /// Validates symmetry and nondegeneracy.
  IntegralLattice(IntMatrix gram, std::string label);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::string& label() const { return label_; }

  bool is_even() const;
  Integer determinant() const;
  SignatureTriple signature() const;

  /// Gram equality; labels are metadata.
  friend bool operator==(const IntegralLattice& a, const IntegralLattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
  std::string label_;
};

enum class Family { U, A, D, E, Rank1 };

/// U, A(n>=1), D(n>=4), E(6|7|8), Rank1(m != 0). `param` is n, or m for Rank1.
IntegralLattice standard_lattice(Family family, long param = 0);

IntegralLattice hyperbolic_plane();
IntegralLattice root_lattice_a(long n);
IntegralLattice root_lattice_d(long n);
IntegralLattice root_lattice_e(long n);
IntegralLattice rank_one(long m);

IntegralLattice rescale(const IntegralLattice& l, long s);
IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts);

/// Invariant factors > 1 of coker(gram); empty for unimodular lattices.
std::vector<Integer> discriminant_group(const IntegralLattice& l);

bool is_p_elementary(const IntegralLattice& l, long p);

/// Finite quadratic form on D = Z/n_1 x ... x Z/n_k (n_1 | ... | n_k, n_i > 1).
/// values(i,i) = q(g_i) in [0,2); values(i,j) = b(g_i,g_j) in [0,1) for i != j.
class FiniteQuadraticForm {
 public:
  FiniteQuadraticForm() = default;
  /// Reduces entries into range and checks well-definedness on the group.
  FiniteQuadraticForm(std::vector<Integer> invariant_factors, RatMatrix values);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  const RatMatrix& values() const { return values_; }
  std::size_t num_generators() const { return factors_.size(); }
  Integer order() const;

  /// q on an element given by generator coefficients; result in [0,2).
  Rational q(const std::vector<Integer>& coeffs) const;
  /// b on two elements; result in [0,1).
  Rational b(const std::vector<Integer>& x, const std::vector<Integer>& y) const;

  FiniteQuadraticForm negated() const;

  /// Dual-lattice representatives of the generators (rows), when built from a lattice.
  const RatMatrix& generator_vectors() const { return generators_; }
  void set_generator_vectors(RatMatrix g) { generators_ = std::move(g); }

 private:
  std::vector<Integer> factors_;
  RatMatrix values_;
  RatMatrix generators_;
};

/// Reduce into [0, modulus).
Rational reduce_mod(const Rational& x, long modulus);

/// Generators from the SNF transform applied to the dual basis. Rejects odd lattices.
FiniteQuadraticForm discriminant_form(const IntegralLattice& l);

inline constexpr std::size_t kDefaultFqfCap = 2000;

/// Exhaustive search for a group isomorphism carrying q1 to q2 (or to -q2).
/// Throws CapExceeded when either group order exceeds `cap`.
bool fqf_isomorphic(const FiniteQuadraticForm& q1, const FiniteQuadraticForm& q2, bool negate,
                    std::size_t cap = kDefaultFqfCap);

/// All x with x^T G x = -2 for negative definite L, sorted lexicographically.
std::vector<std::vector<Integer>> root_vectors(const IntegralLattice& l);

/// Vectors of a given (positive) norm of the positive-definite form -G.
std::vector<std::vector<Integer>> vectors_of_norm(const IntegralLattice& l, const Integer& norm);

bool is_isometry(const IntegralLattice& l, const IntMatrix& t);

}  // namespace perdom::lattice
