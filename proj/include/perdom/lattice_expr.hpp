#pragma once

// Lattice expression mini-language:
//   expr := term ("+" term)*
//   term := base ["(" signed-int ")"] ["^" pos-int]
//   base := "U" | "A"n | "D"n | "E"n | "<" signed-int ">"
// Whitespace is ignored.

#include <string>
#include <vector>

#include "perdom/lattice.hpp"

namespace perdom::lattice {

struct LatticeTerm {
  Family family = Family::U;
  long n = 0;  // rank parameter, or m for <m>
  long scale = 1;
  long power = 1;

  friend bool operator==(const LatticeTerm&, const LatticeTerm&) = default;
};

struct LatticeExpr {
  std::vector<LatticeTerm> terms;

  friend bool operator==(const LatticeExpr&, const LatticeExpr&) = default;
};

/// Syntax errors carry the 0-based character offset.
class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : InputError(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

LatticeExpr parse_expr(const std::string& text);

/// Folds <m>(s) into <ms>, merges equal terms and sorts: U first, then A, D, E, <m>,
/// each by rank (or m) then scale.
LatticeExpr canonicalize(const LatticeExpr& e);

std::string to_string(const LatticeExpr& e);

/// Terms are summed in the order given.
IntegralLattice build(const LatticeExpr& e);

/// build(parse_expr(text)), labelled with the canonical print.
IntegralLattice parse_lattice_expr(const std::string& text);

}  // namespace perdom::lattice
