#include "pim/witness.hpp"

#include <map>

#include "pim/errors.hpp"

namespace pim {

std::string Mat2::to_string() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
         std::to_string(c) + "," + std::to_string(d) + "]]";
}

std::string to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::ineq1_00: return "ineq1/00";
    case WitnessCase::ineq1_01: return "ineq1/01";
    case WitnessCase::ineq1_10: return "ineq1/10";
    case WitnessCase::ineq1_11: return "ineq1/11";
    case WitnessCase::ineq2: return "ineq2";
    case WitnessCase::ineq3: return "ineq3";
    case WitnessCase::ineq4: return "ineq4";
    case WitnessCase::ineq5: return "ineq5";
  }
  return "?";
}

MatrixPair witness_for(WitnessCase c) {
  switch (c) {
    case WitnessCase::ineq1_00:
    case WitnessCase::ineq1_10:
      // (DB)^k alternates sign, so even gaps hold and odd gaps fail; the
      // same pair separates family 10's two parities.
      return {{-1, 1, 0, 1}, {1, 0, 0, 0}};
    case WitnessCase::ineq1_01:
      return {{1, 1, 0, -1}, {0, 0, 0, 1}};
    case WitnessCase::ineq1_11:
      return {{-1, 0, 0, 1}, {1, 0, 0, 0}};
    case WitnessCase::ineq2:
    case WitnessCase::ineq5:
      // (DB)^k is constant and absorbs a trailing D, but (BD)^k collapses
      // to the idempotent, so every family-10 and family-11 form fails.
      return {{1, 0, 1, -1}, {1, 0, 0, 0}};
    case WitnessCase::ineq3:
    case WitnessCase::ineq4:
      // (DB)^k is constant while (BD)^k differs from it, so the family-01
      // and family-11 forms fail.  The involution here carries a sign on
      // the top-left entry; without it the square would be a shear of
      // infinite order.
      return {{-1, 0, 1, 1}, {0, 0, 0, 1}};
  }
  throw Error("unknown witness case");
}

Mat2 eval_matrix_word(const MatrixPair& pair, const Word& w) {
  Mat2 acc = Mat2::identity();
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc = acc * (w.at(i) == Generator::inv ? pair.inv : pair.idem);
  }
  return acc;
}

bool check_relation(const MatrixPair& pair, const Word& lhs, const Word& rhs) {
  return eval_matrix_word(pair, lhs) == eval_matrix_word(pair, rhs);
}

bool check_relation(const MatrixPair& pair, const GenericEquation& e) {
  return check_relation(pair, e.lhs_word(), e.rhs_word());
}

FiniteMonoid matrix_monoid(const MatrixPair& pair, std::size_t cap) {
  if (cap < 1) {
    throw Error("matrix_monoid needs cap >= 1");
  }
  FiniteMonoid m;
  std::vector<Mat2> mats;
  std::map<Mat2, ElementId> index;
  auto intern = [&](const Mat2& x, const Word& w) {
    auto [it, inserted] = index.emplace(x, static_cast<ElementId>(mats.size()));
    if (inserted) {
      if (mats.size() >= cap) {
        throw CapExceeded("matrix monoid exceeded cap " + std::to_string(cap));
      }
      mats.push_back(x);
      m.elements.push_back(w);
    }
    return it->second;
  };
  intern(Mat2::identity(), Word());
  for (std::size_t next = 0; next < mats.size(); ++next) {
    for (Generator g : {Generator::inv, Generator::idem}) {
      Mat2 x = mats[next] * (g == Generator::inv ? pair.inv : pair.idem);
      intern(x, m.elements[next] + g);
    }
  }
  const std::size_t n = mats.size();
  m.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.table[i * n + j] = index.at(mats[i] * mats[j]);
    }
  }
  m.identity = 0;
  m.gen_inv = index.at(pair.inv);
  m.gen_idem = index.at(pair.idem);
  return m;
}

}  // namespace pim
