#ifndef PIM_EQUATION_HPP_
#define PIM_EQUATION_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "pim/word.hpp"

namespace pim {

/// Rows of the table of useful equations; the row is determined by the bit
/// pattern (d0, f0, d1, f1) after side normalization.
enum class RowClass {
  eq0,  // (DB)^k0       = (DB)^k1          k0 < k1
  eq1,  // (DB)^k0       = (DB)^k1 D
  eq2,  // (DB)^k0       = B(DB)^k1
  eq3,  // (DB)^k0       = B(DB)^k1 D
  eq4,  // (DB)^k0 D     = (DB)^k1 D        k0 < k1
  eq5,  // (DB)^k0 D     = B(DB)^k1
  eq6,  // (DB)^k0 D     = B(DB)^k1 D
  eq7,  // B(DB)^k0      = B(DB)^k1         k0 < k1
  eq8,  // B(DB)^k0      = B(DB)^k1 D
  eq9,  // B(DB)^k0 D    = B(DB)^k1 D       k0 < k1
};

std::string to_string(RowClass row);

/// One relation between two quasi-reduced shapes, stored side-normalized:
/// sides ordered by the (d, f) bit pattern, ties broken by k0 < k1.
/// Trivial identities are rejected at construction.
class GenericEquation {
 public:
  static GenericEquation from_words(const Word& lhs, const Word& rhs);

  /// Parses "word = word"; leading/trailing ASCII whitespace around each
  /// side is ignored, an empty side denotes Id.
  static GenericEquation parse(std::string_view text);

  const CanonicalShape& lhs() const { return lhs_; }
  const CanonicalShape& rhs() const { return rhs_; }
  RowClass row() const { return row_; }
  int k0() const { return lhs_.k; }
  int k1() const { return rhs_.k; }

  Word lhs_word() const { return to_word(lhs_); }
  Word rhs_word() const { return to_word(rhs_); }
  std::pair<Word, Word> words() const { return {lhs_word(), rhs_word()}; }

  std::string to_string() const;

  auto operator<=>(const GenericEquation&) const = default;

 private:
  GenericEquation(CanonicalShape lhs, CanonicalShape rhs, RowClass row)
      : lhs_(lhs), rhs_(rhs), row_(row) {}

  CanonicalShape lhs_;
  CanonicalShape rhs_;
  RowClass row_;
};

/// Outcome of the degeneracy test.  lemma_case numbers the items of the
/// monogenic-cases lemma (1..7).  The trivial verdict can only arise from
/// the raw word-pair overload; GenericEquation construction rejects it.
struct DegeneracyVerdict {
  enum class Kind { non_degenerate, monogenic, trivial };
  Kind kind = Kind::non_degenerate;
  int lemma_case = 0;

  bool non_degenerate() const { return kind == Kind::non_degenerate; }
  bool monogenic() const { return kind == Kind::monogenic; }
  auto operator<=>(const DegeneracyVerdict&) const = default;
};

DegeneracyVerdict detect_degenerate(const GenericEquation& e);
DegeneracyVerdict detect_degenerate(const Word& lhs, const Word& rhs);

/// Family tags with the 2-bit encoding 00=0, 01=1, 10=2, 11=3, so that the
/// lattice meet of two families is their bitwise or.
enum class Family : int { f00 = 0, f01 = 1, f10 = 2, f11 = 3 };

enum class Parity { circ, bullet };

std::string to_string(Family f);
std::string to_string(Parity s);

/// Canonical single-parameter descriptor of a non-degenerate equation:
/// family, parity, k >= 1 and (family 00 only) ell >= 1.  For family 00 the
/// parity is determined by ell: circ iff ell is even.
struct ParamEq {
  Family family = Family::f00;
  Parity parity = Parity::circ;
  int k = 1;
  int ell = 0;  // > 0 exactly when family == f00

  static ParamEq family00(int k, int ell);
  static ParamEq single(Family family, Parity parity, int k);

  /// The defining equation of the class, as a pair of words.
  std::pair<Word, Word> defining_sides() const;

  std::string to_string() const;

  auto operator<=>(const ParamEq&) const = default;
};

/// Normalizes a non-degenerate equation to its ParamEq descriptor, first
/// moving the row into the representative component {eq0..eq3} by one-sided
/// multiplication with the involution, then splitting on parity.
/// Throws DegenerateInput if detect_degenerate(e) is not NonDegenerate.
ParamEq to_param(const GenericEquation& e);

}  // namespace pim

#endif  // PIM_EQUATION_HPP_
