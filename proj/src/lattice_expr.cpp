#include "perdom/lattice_expr.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <tuple>

namespace perdom::lattice {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        pos_.push_back(i);
      }
  }

  LatticeExpr parse() {
    LatticeExpr e;
    if (chars_.empty()) throw ParseError("empty lattice expression", 0);
    e.terms.push_back(term());
    while (!done()) {
      expect('+');
      e.terms.push_back(term());
    }
    return e;
  }

 private:
  std::string chars_;
  std::vector<std::size_t> pos_;
  std::size_t i_ = 0;

  bool done() const { return i_ >= chars_.size(); }
  char peek() const { return done() ? '\0' : chars_[i_]; }
  std::size_t where() const { return done() ? (pos_.empty() ? 0 : pos_.back() + 1) : pos_[i_]; }

  void expect(char c) {
    if (peek() != c) {
      if (done()) throw ParseError(std::string("expected '") + c + "' but input ended", where());
      throw ParseError(std::string("expected '") + c + "' but found '" + peek() + "'", where());
    }
    ++i_;
  }

  long integer(bool allow_sign) {
    const std::size_t start = where();
    bool neg = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++i_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected an integer", where());
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int digit = peek() - '0';
      if (v > (LONG_MAX - digit) / 10) throw ParseError("integer too large", start);
      v = v * 10 + digit;
      ++i_;
    }
    return neg ? -v : v;
  }

  LatticeTerm term() {
    LatticeTerm t;
    const std::size_t start = where();
    const char c = peek();
    switch (c) {
      case 'U': ++i_; t.family = Family::U; break;
      case 'A': ++i_; t.family = Family::A; t.n = integer(false); break;
      case 'D': ++i_; t.family = Family::D; t.n = integer(false); break;
      case 'E': ++i_; t.family = Family::E; t.n = integer(false); break;
      case '<':
        ++i_;
        t.family = Family::Rank1;
        t.n = integer(true);
        expect('>');
        break;
      default:
        if (done()) throw ParseError("expected a lattice name but input ended", start);
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    validate(t, start);
    if (peek() == '(') {
      ++i_;
      const std::size_t at = where();
      t.scale = integer(true);
      if (t.scale == 0) throw ParseError("scale factor must be nonzero", at);
      expect(')');
    }
    if (peek() == '^') {
      ++i_;
      const std::size_t at = where();
      t.power = integer(false);
      if (t.power < 1) throw ParseError("power must be positive", at);
      if (t.power > 64) throw ParseError("power too large", at);
    }
    return t;
  }

  static void validate(const LatticeTerm& t, std::size_t at) {
    switch (t.family) {
      case Family::A:
        if (t.n < 1 || t.n > 64) throw ParseError("A(n) requires 1 <= n <= 64", at);
        break;
      case Family::D:
        if (t.n < 4 || t.n > 64) throw ParseError("D(n) requires 4 <= n <= 64", at);
        break;
      case Family::E:
        if (t.n < 6 || t.n > 8) throw ParseError("E(n) requires n in {6, 7, 8}", at);
        break;
      case Family::Rank1:
        if (t.n == 0) throw ParseError("<m> requires m != 0", at);
        break;
      case Family::U: break;
    }
  }
};

int family_rank(Family f) {
  switch (f) {
    case Family::U: return 0;
    case Family::A: return 1;
    case Family::D: return 2;
    case Family::E: return 3;
    case Family::Rank1: return 4;
  }
  return 5;
}

IntegralLattice base_lattice(const LatticeTerm& t) {
  IntegralLattice l = standard_lattice(t.family, t.n);
  return t.scale == 1 ? l : rescale(l, t.scale);
}

}  // namespace

LatticeExpr parse_expr(const std::string& text) { return Parser(text).parse(); }

LatticeExpr canonicalize(const LatticeExpr& e) {
  std::vector<LatticeTerm> terms;
  for (LatticeTerm t : e.terms) {
    if (t.family == Family::Rank1 && t.scale != 1) {
      t.n *= t.scale;
      t.scale = 1;
    }
    auto it = std::find_if(terms.begin(), terms.end(), [&t](const LatticeTerm& u) {
      return u.family == t.family && u.n == t.n && u.scale == t.scale;
    });
    if (it == terms.end()) terms.push_back(t);
    else it->power += t.power;
  }
  std::sort(terms.begin(), terms.end(), [](const LatticeTerm& a, const LatticeTerm& b) {
    return std::make_tuple(family_rank(a.family), a.n, a.scale) < std::make_tuple(family_rank(b.family), b.n, b.scale);
  });
  return LatticeExpr{std::move(terms)};
}

std::string to_string(const LatticeExpr& e) {
  std::string out;
  for (const auto& t : e.terms) {
    if (!out.empty()) out += "+";
    switch (t.family) {
      case Family::U: out += "U"; break;
      case Family::A: out += "A" + std::to_string(t.n); break;
      case Family::D: out += "D" + std::to_string(t.n); break;
      case Family::E: out += "E" + std::to_string(t.n); break;
      case Family::Rank1: out += "<" + std::to_string(t.n) + ">"; break;
    }
    if (t.scale != 1) out += "(" + std::to_string(t.scale) + ")";
    if (t.power != 1) out += "^" + std::to_string(t.power);
  }
  return out;
}

IntegralLattice build(const LatticeExpr& e) {
  if (e.terms.empty()) throw InputError("empty lattice expression");
  std::vector<IntegralLattice> parts;
  for (const auto& t : e.terms) {
    const IntegralLattice l = base_lattice(t);
    for (long k = 0; k < t.power; ++k) parts.push_back(l);
  }
  return IntegralLattice(direct_sum(parts).gram(), to_string(e));
}

IntegralLattice parse_lattice_expr(const std::string& text) {
  const LatticeExpr e = parse_expr(text);
  return IntegralLattice(build(e).gram(), to_string(canonicalize(e)));
}

}  // namespace perdom::lattice
