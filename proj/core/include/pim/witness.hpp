#ifndef PIM_WITNESS_HPP_
#define PIM_WITNESS_HPP_

#include <array>
#include <cstdint>
#include <string>

#include "pim/equation.hpp"
#include "pim/monoid.hpp"
#include "pim/word.hpp"

namespace pim {

/// 2x2 integer matrix, row-major.
struct Mat2 {
  std::int64_t a = 0, b = 0, c = 0, d = 0;

  static Mat2 identity() { return {1, 0, 0, 1}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  bool operator==(const Mat2&) const = default;
  auto operator<=>(const Mat2&) const = default;

  std::string to_string() const;
};

/// The separation claims witnessed by explicit matrix models: one per
/// family for circ-vs-bullet, plus the four cross-family claims.
enum class WitnessCase {
  ineq1_00,  // family-00 circ without bullet
  ineq1_01,  // family-01 circ without bullet
  ineq1_10,  // family-10 circ without bullet
  ineq1_11,  // family-11 circ without bullet
  ineq2,     // satisfies family 01, violates family 11
  ineq3,     // satisfies family 10, violates family 11
  ineq4,     // satisfies family 00, violates family 01
  ineq5,     // satisfies family 00, violates family 10
};

inline constexpr std::array<WitnessCase, 8> all_witness_cases = {
    WitnessCase::ineq1_00, WitnessCase::ineq1_01, WitnessCase::ineq1_10,
    WitnessCase::ineq1_11, WitnessCase::ineq2,    WitnessCase::ineq3,
    WitnessCase::ineq4,    WitnessCase::ineq5};

std::string to_string(WitnessCase c);

struct MatrixPair {
  Mat2 inv;   // squares to the identity matrix
  Mat2 idem;  // squares to itself
};

/// The matrix model of a separation case (free parameter fixed to 1).
MatrixPair witness_for(WitnessCase c);

/// Evaluates a word as a matrix product: D maps to inv, B to idem, the
/// empty product to the identity matrix.
Mat2 eval_matrix_word(const MatrixPair& pair, const Word& w);

/// Whether the relation holds in the matrix model, entrywise and exact.
bool check_relation(const MatrixPair& pair, const Word& lhs, const Word& rhs);
bool check_relation(const MatrixPair& pair, const GenericEquation& e);

/// Breadth-first closure of {identity, inv, idem} under matrix product.
/// Throws CapExceeded past `cap` distinct matrices.
FiniteMonoid matrix_monoid(const MatrixPair& pair, std::size_t cap);

}  // namespace pim

#endif  // PIM_WITNESS_HPP_
