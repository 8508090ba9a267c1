#ifndef PIM_ISO_HPP_
#define PIM_ISO_HPP_

#include <vector>

#include "pim/monoid.hpp"
#include "pim/reduce.hpp"

namespace pim {

/// All m != identity with m * m = identity.
std::vector<ElementId> involutions(const FiniteMonoid& m);

/// Brute-force search for a bijective homomorphism: candidate images of D
/// (an involution) and B (an idempotent) are extended multiplicatively over
/// normal-form words and checked for bijectivity and table preservation.
/// With prune set, the image of D ranges only over the non-identity
/// involutions; the un-pruned variant also tries the identity.
bool brute_force_isomorphic(const FiniteMonoid& m, const FiniteMonoid& n,
                            bool prune = true);

/// Checks the single map sending D to n.gen_inv and B to n.gen_idem.
bool generator_preserving_isomorphic(const FiniteMonoid& m,
                                     const FiniteMonoid& n);

/// Fast path: descriptor equality decides isomorphism of canonical
/// presentations.  Throws Unsupported when either operand is Monogenic (the
/// collapsed cyclic structure is not tracked).
bool isomorphic(const CanonicalPresentation& p,
                const CanonicalPresentation& q);

}  // namespace pim

#endif  // PIM_ISO_HPP_
