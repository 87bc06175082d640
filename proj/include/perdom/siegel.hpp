#pragma once

// Siegel half-space Z_g, its bounded models, symplectic actions with
// polarization types, and Riemann-Frobenius checks on period matrices.
//
// All tolerance comparisons are absolute in the max-norm.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

#include "perdom/exact_core.hpp"

namespace perdom::siegel {

using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using cplx = std::complex<double>;

struct Tolerance {
  double eps = 1e-9;
};

inline constexpr Tolerance kDefaultTol{};

double max_norm(const CMatrix& m);
double max_norm(const RMatrix& m);

/// Hermitian within tol and every pivot of symmetric pivoted elimination > tol.
bool is_positive_definite(const CMatrix& h, Tolerance tol = kDefaultTol);
bool is_positive_definite(const RMatrix& h, Tolerance tol = kDefaultTol);

bool is_siegel_point(const CMatrix& z, Tolerance tol = kDefaultTol);

/// [[0, D], [-D, 0]] with D = diag(d); the standard J when d is all ones.
RMatrix polarization_form(const std::vector<long>& d);
IntMatrix polarization_form_exact(const std::vector<long>& d);
RMatrix standard_j(std::size_t g);

/// M^T J_D M = J_D within tol, scaled by max(1, |M|^2).
bool is_symplectic(const RMatrix& m, const std::vector<long>& d, Tolerance tol = kDefaultTol);
bool is_symplectic(const RMatrix& m, Tolerance tol = kDefaultTol);
/// Exact integer check.
bool is_symplectic(const IntMatrix& m, const std::vector<long>& d);

/// (A Z + B)(C Z + D)^{-1}. Throws NumericalError("boundary collapse") when C Z + D is singular.
CMatrix symplectic_action(const RMatrix& m, const CMatrix& z, Tolerance tol = kDefaultTol);

/// M with M . iI = Z, built from an LDL^T factorization of Im Z.
RMatrix transitivity_witness(const CMatrix& z, Tolerance tol = kDefaultTol);

/// W = (Z - iI)(Z + iI)^{-1} and its inverse Z = i(I + W)(I - W)^{-1}.
CMatrix cayley_to_bounded(const CMatrix& z, Tolerance tol = kDefaultTol);
CMatrix cayley_from_bounded(const CMatrix& w, Tolerance tol = kDefaultTol);

/// W symmetric with I - conj(W) W positive definite.
bool in_bounded_siegel(const CMatrix& w, Tolerance tol = kDefaultTol);

/// Z is q x p; I_p - Z^T conj(Z) positive definite.
bool in_bounded_Ipq(const CMatrix& z, Tolerance tol = kDefaultTol);

/// [[0_p, Z^T], [Z, 0_q]] for a q x p matrix Z.
CMatrix satake_embed(const CMatrix& z);
/// Block-diagonal assembly of the Satake images of each factor.
CMatrix product_embed(const std::vector<CMatrix>& blocks);

enum class PeriodMode { Coperiod, Period };

/// Coperiod (Pi is 2g x g): Pi^T A Pi = 0 and i Pi^T A conj(Pi) > 0.
/// Period (P is g x 2g): P A^{-1} P^T = 0 and -i conj(P) A^{-1} P^T > 0.
bool riemann_frobenius(const CMatrix& pi, const IntMatrix& a, PeriodMode mode, Tolerance tol = kDefaultTol);

struct PolarizationSearch {
  std::vector<IntMatrix> found;
  std::size_t candidates = 0;  // primitive skew matrices examined (each tested with both signs)
};

/// Skew integer A with entries in [-bound, bound], primitive, passing the period-mode
/// conditions for P (g x 2g). Sorted by upper-triangular entries.
PolarizationSearch find_polarization(const CMatrix& p, long bound, unsigned threads = 1,
                                     Tolerance tol = kDefaultTol);

/// Z = Pi_top Pi_bot^{-1}. Throws NumericalError("non-normalizable basis") when Pi_bot is singular.
CMatrix normalize_period(const CMatrix& pi, Tolerance tol = kDefaultTol);

/// D*_k = d_g / d_{g+1-k}, divided by the gcd.
std::vector<long> dual_polarization_type(const std::vector<long>& d);

struct Order4Report {
  IntMatrix I;
  bool squares_to_minus_one = false;
  bool symplectic = false;
  bool form_symmetric = false;
  SignatureTriple form_signature;  // of v, v' -> Q(v, I v')
};

Order4Report order4_structure(std::size_t p, std::size_t q);

}  // namespace perdom::siegel
