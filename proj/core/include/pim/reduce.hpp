#ifndef PIM_REDUCE_HPP_
#define PIM_REDUCE_HPP_

#include <compare>
#include <optional>
#include <span>
#include <string>

#include "pim/equation.hpp"

namespace pim {

/// Verdict of reducing a finite set of relations: the free strict 2-PIM,
/// a monogenic collapse, or a single classified equation.
class CanonicalPresentation {
 public:
  enum class Kind { free_monoid, monogenic, classified };

  static CanonicalPresentation free_monoid() {
    return CanonicalPresentation(Kind::free_monoid, std::nullopt, 0);
  }
  static CanonicalPresentation monogenic(int lemma_case) {
    return CanonicalPresentation(Kind::monogenic, std::nullopt, lemma_case);
  }
  static CanonicalPresentation classified(const ParamEq& p) {
    return CanonicalPresentation(Kind::classified, p, 0);
  }

  Kind kind() const { return kind_; }
  bool is_free() const { return kind_ == Kind::free_monoid; }
  bool is_monogenic() const { return kind_ == Kind::monogenic; }
  bool is_classified() const { return kind_ == Kind::classified; }

  /// The descriptor; only present when classified.
  const ParamEq& param() const;

  /// A triggering lemma item (1..7); only meaningful when monogenic.
  int lemma_case() const { return lemma_case_; }

  std::string to_string() const;

  auto operator<=>(const CanonicalPresentation&) const = default;

 private:
  CanonicalPresentation(Kind kind, std::optional<ParamEq> param,
                        int lemma_case)
      : kind_(kind), param_(param), lemma_case_(lemma_case) {}

  Kind kind_;
  std::optional<ParamEq> param_;
  int lemma_case_;
};

/// Lattice meet: the single equation equivalent to the conjunction of two
/// canonical equations.  min of the k's, gcd of the ells, bitwise or of the
/// family tags, parity absorption.
ParamEq meet(const ParamEq& a, const ParamEq& b);

/// Empty input gives the free presentation; any degenerate relation
/// short-circuits to Monogenic; otherwise folds meet over the descriptors.
CanonicalPresentation reduce_presentation(
    std::span<const GenericEquation> relations);

}  // namespace pim

#endif  // PIM_REDUCE_HPP_
