#include "pim/reduce.hpp"

#include <algorithm>
#include <numeric>

#include "pim/errors.hpp"

namespace pim {

const ParamEq& CanonicalPresentation::param() const {
  if (!param_) {
    throw Error("presentation is not classified");
  }
  return *param_;
}

std::string CanonicalPresentation::to_string() const {
  switch (kind_) {
    case Kind::free_monoid:
      return "Free (infinite)";
    case Kind::monogenic:
      return "Monogenic (lemma case " + std::to_string(lemma_case_) + ")";
    case Kind::classified:
      return "Classified " + param_->to_string();
  }
  return "?";
}

ParamEq meet(const ParamEq& a, const ParamEq& b) {
  const int k = std::min(a.k, b.k);
  if (a.family == Family::f00 && b.family == Family::f00) {
    return ParamEq::family00(k, std::gcd(a.ell, b.ell));
  }
  if (a.family == Family::f00 || b.family == Family::f00) {
    const ParamEq& zero = a.family == Family::f00 ? a : b;
    const ParamEq& other = a.family == Family::f00 ? b : a;
    Parity s = (zero.ell % 2 == 1 || other.parity == Parity::bullet)
                   ? Parity::bullet
                   : Parity::circ;
    return ParamEq::single(other.family, s, k);
  }
  auto merged = static_cast<Family>(static_cast<int>(a.family) |
                                    static_cast<int>(b.family));
  Parity s = (a.parity == Parity::bullet || b.parity == Parity::bullet)
                 ? Parity::bullet
                 : Parity::circ;
  return ParamEq::single(merged, s, k);
}

CanonicalPresentation reduce_presentation(
    std::span<const GenericEquation> relations) {
  if (relations.empty()) {
    return CanonicalPresentation::free_monoid();
  }
  // A degenerate relation already collapses the monoid; no attempt is made
  // to combine it with the others.
  for (const GenericEquation& e : relations) {
    DegeneracyVerdict v = detect_degenerate(e);
    if (v.monogenic()) {
      return CanonicalPresentation::monogenic(v.lemma_case);
    }
  }
  ParamEq acc = to_param(relations.front());
  for (std::size_t i = 1; i < relations.size(); ++i) {
    acc = meet(acc, to_param(relations[i]));
  }
  return CanonicalPresentation::classified(acc);
}

}  // namespace pim
