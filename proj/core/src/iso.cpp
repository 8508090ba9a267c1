#include "pim/iso.hpp"

#include <algorithm>

#include "pim/errors.hpp"

namespace pim {
namespace {

ElementId eval_word(const FiniteMonoid& n, const Word& w, ElementId inv_image,
                    ElementId idem_image) {
  ElementId acc = n.identity;
  for (std::size_t i = 0; i < w.size(); ++i) {
    ElementId g = w.at(i) == Generator::inv ? inv_image : idem_image;
    acc = n.product(acc, g);
  }
  return acc;
}

bool is_isomorphism(const FiniteMonoid& m, const FiniteMonoid& n,
                    ElementId inv_image, ElementId idem_image) {
  const std::size_t size = m.size();
  std::vector<ElementId> phi(size);
  std::vector<bool> hit(size, false);
  for (std::size_t i = 0; i < size; ++i) {
    ElementId image = eval_word(n, m.elements[i], inv_image, idem_image);
    if (hit[static_cast<std::size_t>(image)]) {
      return false;  // not injective
    }
    hit[static_cast<std::size_t>(image)] = true;
    phi[i] = image;
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      ElementId lhs = phi[static_cast<std::size_t>(
          m.product(static_cast<ElementId>(i), static_cast<ElementId>(j)))];
      ElementId rhs = n.product(phi[i], phi[j]);
      if (lhs != rhs) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<ElementId> involutions(const FiniteMonoid& m) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < static_cast<ElementId>(m.size()); ++x) {
    if (x != m.identity && m.product(x, x) == m.identity) {
      out.push_back(x);
    }
  }
  return out;
}

bool brute_force_isomorphic(const FiniteMonoid& m, const FiniteMonoid& n,
                            bool prune) {
  if (m.size() != n.size()) {
    return false;
  }
  std::vector<ElementId> inv_candidates = involutions(n);
  if (!prune) {
    inv_candidates.push_back(n.identity);
  }
  std::vector<ElementId> idem_candidates;
  for (ElementId y = 0; y < static_cast<ElementId>(n.size()); ++y) {
    if (n.product(y, y) == y) {
      idem_candidates.push_back(y);
    }
  }
  for (ElementId x : inv_candidates) {
    for (ElementId y : idem_candidates) {
      if (is_isomorphism(m, n, x, y)) {
        return true;
      }
    }
  }
  return false;
}

bool generator_preserving_isomorphic(const FiniteMonoid& m,
                                     const FiniteMonoid& n) {
  if (m.size() != n.size() || !n.gen_inv || !n.gen_idem) {
    return false;
  }
  return is_isomorphism(m, n, *n.gen_inv, *n.gen_idem);
}

bool isomorphic(const CanonicalPresentation& p,
                const CanonicalPresentation& q) {
  if (p.is_monogenic() || q.is_monogenic()) {
    throw Unsupported("monogenic presentations are not comparable; the "
                      "collapsed cyclic structure is not tracked");
  }
  if (p.is_free() || q.is_free()) {
    return p.is_free() && q.is_free();
  }
  return p.param() == q.param();
}

}  // namespace pim
