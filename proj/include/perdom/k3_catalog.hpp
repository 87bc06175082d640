#pragma once

// The K3 lattice U^3 + E8^2, the example lattice pairs (M, N) with a gluing
// verifier, and the cyclic A_{p-1} isometry checks.

#include <optional>
#include <string>
#include <vector>

#include "perdom/lattice.hpp"

namespace perdom::k3 {

using lattice::IntegralLattice;

lattice::IntegralLattice k3_lattice();

enum class Source { Table, InText };

/// Constraints recorded for M when no Gram matrix is available.
struct MConstraint {
  std::size_t rank = 0;
  std::vector<Integer> discriminant_factors;
};

struct GluePair {
  std::string name;
  std::optional<IntegralLattice> M;  // empty in constraint mode
  IntegralLattice N;
  Source source = Source::Table;
  MConstraint m_constraint;  // used only when M is empty
  std::string mu;            // weight system from the summary table ("k/d*n,..."), empty if none
  std::string table_note;    // table text when no weight system is listed
};

enum class FormCheck { True, False, CapExceeded, NotApplicable };

const char* to_string(FormCheck f);

struct GlueReport {
  std::string name;
  std::size_t rank_M = 0;
  std::size_t rank_N = 0;
  bool rank_sum_is_22 = false;
  SignatureTriple sig_M;
  SignatureTriple sig_N;
  bool sig_pattern_ok = false;
  Integer det_M;
  Integer det_N;
  bool det_match = false;
  std::vector<Integer> group_M;
  std::vector<Integer> group_N;
  bool group_iso = false;
  FormCheck form_anti_iso = FormCheck::NotApplicable;
  bool constraint_mode = false;

  /// Every applicable check holds.
  bool ok() const;
};

std::vector<GluePair> catalog();

GlueReport glue_report(const GluePair& pair);

struct CatalogSummary {
  std::vector<GlueReport> reports;
  std::vector<std::string> warnings;
  bool all_ok = false;
};

CatalogSummary verify_catalog();

/// Abelian-group isomorphism via primary decomposition of invariant factors.
bool same_abelian_group(const std::vector<Integer>& a, const std::vector<Integer>& b);

struct CyclicReport {
  bool isometry = false;
  bool order_p = false;         // rho^p = I and rho^k != I for 0 < k < p
  bool no_fixed_vector = false; // det(rho - I) != 0
  bool fixes_glue_class = false;
  bool orbit_sums_vanish = false;

  bool ok() const { return isometry && order_p && no_fixed_vector && fixes_glue_class && orbit_sums_vanish; }
};

struct CyclicResult {
  IntegralLattice L;
  IntMatrix rho;  // columns are images of the basis vectors
  CyclicReport report;
};

/// p prime, p <= 13.
CyclicResult cyclic_root_isometry(long p);

}  // namespace perdom::k3
