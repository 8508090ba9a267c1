#include "pim/equation.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "pim/errors.hpp"

namespace pim {
namespace {

// Position of a side in the fixed row order of the table.
int pattern_key(const CanonicalShape& s) {
  return 2 * s.d + s.f;
}

RowClass row_of_patterns(int key0, int key1) {
  // (d0 f0, d1 f1) with key0 <= key1 covers exactly the ten table rows.
  static constexpr RowClass rows[4][4] = {
      {RowClass::eq0, RowClass::eq1, RowClass::eq2, RowClass::eq3},
      {RowClass::eq0, RowClass::eq4, RowClass::eq5, RowClass::eq6},
      {RowClass::eq0, RowClass::eq0, RowClass::eq7, RowClass::eq8},
      {RowClass::eq0, RowClass::eq0, RowClass::eq0, RowClass::eq9},
  };
  return rows[key0][key1];
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string to_string(RowClass row) {
  return "Eq_" + std::to_string(static_cast<int>(row));
}

GenericEquation GenericEquation::from_words(const Word& lhs, const Word& rhs) {
  CanonicalShape a = shape_of(lhs);
  CanonicalShape b = shape_of(rhs);
  if (a == b) {
    throw TrivialEquation("both sides quasi-reduce to " +
                          display(to_word(a)));
  }
  int ka = pattern_key(a);
  int kb = pattern_key(b);
  if (ka > kb || (ka == kb && a.k > b.k)) {
    std::swap(a, b);
    std::swap(ka, kb);
  }
  return GenericEquation(a, b, row_of_patterns(ka, kb));
}

GenericEquation GenericEquation::parse(std::string_view text) {
  auto pos = text.find('=');
  if (pos == std::string_view::npos) {
    throw SyntaxError("equation must contain '='");
  }
  if (text.find('=', pos + 1) != std::string_view::npos) {
    throw SyntaxError("equation must contain exactly one '='");
  }
  Word lhs = Word::parse(trim(text.substr(0, pos)));
  Word rhs = Word::parse(trim(text.substr(pos + 1)));
  return from_words(lhs, rhs);
}

std::string GenericEquation::to_string() const {
  return display(lhs_word()) + " = " + display(rhs_word());
}

DegeneracyVerdict detect_degenerate(const GenericEquation& e) {
  // Table of degenerate specializations: rows eq0..eq6 collapse at k0 = 0
  // (additionally k1 = 0 for eq1; eq4's k1 = 0 cannot survive side
  // normalization).  Rows eq7..eq9 have no degenerate specialization: both
  // sides keep a B.
  const int k0 = e.k0();
  const int k1 = e.k1();
  switch (e.row()) {
    case RowClass::eq0:
      if (k0 == 0) return {DegeneracyVerdict::Kind::monogenic, 1};
      break;
    case RowClass::eq1:
      if (k0 == 0 || k1 == 0) return {DegeneracyVerdict::Kind::monogenic, 2};
      break;
    case RowClass::eq2:
      if (k0 == 0) return {DegeneracyVerdict::Kind::monogenic, 3};
      break;
    case RowClass::eq3:
      if (k0 == 0) return {DegeneracyVerdict::Kind::monogenic, 4};
      break;
    case RowClass::eq4:
      if (k0 == 0) return {DegeneracyVerdict::Kind::monogenic, 5};
      break;
    case RowClass::eq5:
      if (k0 == 0) return {DegeneracyVerdict::Kind::monogenic, 6};
      break;
    case RowClass::eq6:
      if (k0 == 0) return {DegeneracyVerdict::Kind::monogenic, 7};
      break;
    case RowClass::eq7:
    case RowClass::eq8:
    case RowClass::eq9:
      break;
  }
  return {DegeneracyVerdict::Kind::non_degenerate, 0};
}

DegeneracyVerdict detect_degenerate(const Word& lhs, const Word& rhs) {
  if (shape_of(lhs) == shape_of(rhs)) {
    return {DegeneracyVerdict::Kind::trivial, 0};
  }
  return detect_degenerate(GenericEquation::from_words(lhs, rhs));
}

std::string to_string(Family f) {
  switch (f) {
    case Family::f00: return "00";
    case Family::f01: return "01";
    case Family::f10: return "10";
    case Family::f11: return "11";
  }
  return "?";
}

std::string to_string(Parity s) {
  return s == Parity::circ ? "circ" : "bullet";
}

ParamEq ParamEq::family00(int k, int ell) {
  if (k < 1 || ell < 1) {
    throw Error("family 00 requires k >= 1 and ell >= 1");
  }
  return {Family::f00, ell % 2 == 0 ? Parity::circ : Parity::bullet, k, ell};
}

ParamEq ParamEq::single(Family family, Parity parity, int k) {
  if (family == Family::f00) {
    throw Error("family 00 carries ell; use ParamEq::family00");
  }
  if (k < 1) {
    throw Error("class parameter k must be >= 1");
  }
  return {family, parity, k, 0};
}

std::pair<Word, Word> ParamEq::defining_sides() const {
  switch (family) {
    case Family::f00:
      return {db_power(k), db_power(k + ell)};
    case Family::f01:
      return parity == Parity::circ
                 ? std::pair{db_power(k), db_power(k + 1) + Generator::inv}
                 : std::pair{db_power(k), db_power(k) + Generator::inv};
    case Family::f10:
      return parity == Parity::circ
                 ? std::pair{db_power(k), bd_power(k) + Generator::idem}
                 : std::pair{db_power(k), bd_power(k - 1) + Generator::idem};
    case Family::f11:
      return parity == Parity::circ
                 ? std::pair{db_power(k), bd_power(k)}
                 : std::pair{db_power(k), bd_power(k + 1)};
  }
  throw Error("unreachable");
}

std::string ParamEq::to_string() const {
  std::string out = "family=" + pim::to_string(family);
  if (family == Family::f00) {
    out += " k=" + std::to_string(k) + " ell=" + std::to_string(ell);
  } else {
    out += " parity=" + pim::to_string(parity) + " k=" + std::to_string(k);
  }
  return out;
}

ParamEq to_param(const GenericEquation& e) {
  if (!detect_degenerate(e).non_degenerate()) {
    throw DegenerateInput("cannot parameterize the degenerate equation " +
                          e.to_string());
  }

  // Step 1: one-sided multiplications by the involution move the row into
  // the representative component {eq0, eq1, eq2, eq3}.
  int k0 = e.k0();
  int k1 = e.k1();
  RowClass row = e.row();
  switch (row) {
    case RowClass::eq4:  // right D, same k's
      row = RowClass::eq0;
      break;
    case RowClass::eq7:  // left D, k's + 1
    case RowClass::eq9:  // right then left D, k's + 1
      row = RowClass::eq0;
      ++k0;
      ++k1;
      break;
    case RowClass::eq8:  // left D, k's + 1
      row = RowClass::eq1;
      ++k0;
      ++k1;
      break;
    case RowClass::eq6:  // right D, same k's
      row = RowClass::eq2;
      break;
    case RowClass::eq5:  // right D, same k's
      row = RowClass::eq3;
      break;
    default:
      break;
  }

  // Step 2: one parameter plus a parity.
  switch (row) {
    case RowClass::eq0:
      return ParamEq::family00(k0, k1 - k0);
    case RowClass::eq1: {
      // (DB)^k0 = (DB)^k1 D; a right D swaps the parameters.
      if (k0 > k1) std::swap(k0, k1);
      Parity s = (k1 - k0) % 2 == 1 ? Parity::circ : Parity::bullet;
      return ParamEq::single(Family::f01, s, k0);
    }
    case RowClass::eq2: {
      // (DB)^k0 = (BD)^k1 B; a left D maps (k0, k1) to (k1 + 1, k0 - 1).
      if (k0 > k1 + 1) {
        int t = k0;
        k0 = k1 + 1;
        k1 = t - 1;
      }
      Parity s = (k1 - k0) % 2 != 0 ? Parity::bullet : Parity::circ;
      return ParamEq::single(Family::f10, s, k0);
    }
    case RowClass::eq3: {
      // (DB)^k0 = B(DB)^k1 D, i.e. (DB)^k0 = (BD)^(k1+1); conjugating by D
      // swaps the two exponents.
      int a = k0;
      int b = k1 + 1;
      if (a > b) std::swap(a, b);
      Parity s = (b - a) % 2 != 0 ? Parity::bullet : Parity::circ;
      return ParamEq::single(Family::f11, s, a);
    }
    default:
      throw Error("unreachable row after exchange moves");
  }
}

}  // namespace pim
