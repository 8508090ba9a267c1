#ifndef PIM_MONOID_HPP_
#define PIM_MONOID_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pim/reduce.hpp"
#include "pim/word.hpp"

namespace pim {

using ElementId = int;

/// A finite monoid with elements indexed by their normal-form words.
/// Element ids follow breadth-first product order from the identity, so
/// tables are reproducible.  Immutable after construction.
struct FiniteMonoid {
  std::vector<Word> elements;         // index = element id
  std::vector<ElementId> table;       // n * n, row-major
  ElementId identity = 0;
  std::optional<ElementId> gen_inv;   // class of D, when D generates
  std::optional<ElementId> gen_idem;  // class of B, when B generates

  std::size_t size() const { return elements.size(); }
  ElementId product(ElementId a, ElementId b) const {
    return table[static_cast<std::size_t>(a) * elements.size() +
                 static_cast<std::size_t>(b)];
  }

  /// Line-oriented text form: "n=<order>", the normal-form words (identity
  /// rendered as "e"), then the multiplication table.  Bit-exact.
  std::string to_text() const;
};

/// Coefficients of the length-graded generating polynomial; coeffs[n] counts
/// elements whose shortest representative has length n.
struct HilbertSeries {
  std::vector<long long> coeffs;

  long long sum() const;
  std::string to_string() const;  // "[1,2,2,1]"
};

/// A directed rewrite rule: every occurrence of lhs maps to rhs.
struct DirectedRule {
  Word lhs;
  Word rhs;
};

/// The rewrite system of a classified class, each rule directed from the
/// longer congruent word onto the class normal form.  Every class has a
/// single rule except family 11 bullet: its minimal relation equates the
/// two words of length 2k+1, which collapses both length-2k alternating
/// words onto the one below, so two rules are needed for confluence.
std::vector<DirectedRule> class_rules(const ParamEq& p);

/// Quasi-reduces, then applies the rules leftmost to fixpoint.
Word reduce_to_normal_form(Word w, std::span<const DirectedRule> rules);

/// Builds the finite monoid of a classified presentation from its normal
/// forms and directed rules.  Throws NotFinite on Free and Unsupported on
/// Monogenic (the congruence oracle serves those).
FiniteMonoid build(const CanonicalPresentation& c);
FiniteMonoid build(const ParamEq& p);

/// Closed-form order: 4(k+ell)-2 for family 00; 4k+2 for 01 circ and
/// 10 circ; 4k for 01 bullet, 10 bullet, 11 circ; 4k-1 for 11 bullet
/// (its defining equation implies the 11-circ and the ell=1 family-00
/// equations at the same k, which merges one further pair of classes; the
/// value is oracle-validated).
long long order(const CanonicalPresentation& c);
long long order(const ParamEq& p);

/// Closed-form Hilbert series.  Free requires max_degree (the series is
/// infinite); for classified inputs max_degree optionally truncates or
/// zero-pads the polynomial.
HilbertSeries hilbert(const CanonicalPresentation& c,
                      std::optional<std::size_t> max_degree = std::nullopt);
HilbertSeries hilbert(const ParamEq& p,
                      std::optional<std::size_t> max_degree = std::nullopt);

/// Returned by the oracle when the bound does not certify a finite monoid.
struct Undetermined {
  std::string reason;
};

using OracleResult = std::variant<FiniteMonoid, Undetermined>;

/// Independent bounded congruence closure over all words of length <= bound
/// under the given relations plus the base relations DD=Id, BB=B, computed
/// by union-find on quasi-reduced representatives (one per base-relation
/// class; the partition equals the closure over all words).  Returns the
/// monoid of classes when the closure certifies one: every class has a
/// representative of length <= bound minus the longest relation side,
/// products of representatives stay within the bound, and the induced table
/// is consistent and associative.  Otherwise returns Undetermined.
/// Throws BoundTooSmall unless bound >= 2 + twice the longest relation side.
OracleResult congruence_monoid(std::span<const std::pair<Word, Word>> relations,
                               int bound);

/// Default oracle bound for a classified input: 4 * (k + ell + 2).
int default_oracle_bound(const ParamEq& p);

/// True when some element's powers exhaust the monoid.
bool is_monogenic(const FiniteMonoid& m);

/// Multiset of normal-form lengths, as a coefficient vector (the observed
/// grading; equals the Hilbert series for class-built monoids).
std::vector<long long> length_grading(const FiniteMonoid& m);

}  // namespace pim

#endif  // PIM_MONOID_HPP_
