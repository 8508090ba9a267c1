#ifndef PIM_KURATOWSKI_HPP_
#define PIM_KURATOWSKI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pim/equation.hpp"
#include "pim/monoid.hpp"

namespace pim {

/// A topology on {0..n-1} given by its open sets as n-bit masks.
struct FiniteTopology {
  int n = 0;
  std::vector<std::uint32_t> opens;

  std::uint32_t full_mask() const {
    return n == 32 ? ~0u : (1u << n) - 1;
  }
};

struct TopologyViolation {
  std::string axiom;       // which axiom failed
  std::uint32_t a = 0;     // offending subsets
  std::uint32_t b = 0;
  std::string to_string() const;
};

/// Empty/full membership and closure under pairwise union and intersection;
/// violations are data, not errors.
std::optional<TopologyViolation> validate_topology(const FiniteTopology& t);

/// A total map on the 2^n subsets of {0..n-1}.
struct SetOperation {
  int n = 0;
  std::vector<std::uint32_t> table;  // size 2^n

  std::uint32_t apply(std::uint32_t mask) const { return table[mask]; }
  bool operator==(const SetOperation&) const = default;
};

SetOperation identity_op(int n);
SetOperation complement_op(int n);

/// Topological closure A -> smallest closed superset.  Throws
/// InvalidTopology when the open family is not a topology.
SetOperation closure_op(const FiniteTopology& t);

/// apply `first`, then `then` (matching left-to-right word order).
SetOperation compose(const SetOperation& first, const SetOperation& then);

/// Closure of {identity} and the tagged generators under composition.
/// Element words use the generators' letters; operations compare by full
/// table equality.  Throws CapExceeded past `cap` distinct operations.
FiniteMonoid operation_monoid(
    std::span<const std::pair<Generator, SetOperation>> gens,
    std::size_t cap);

/// Orbit of one subset under all words in {closure, complement}.
std::size_t orbit_size(const FiniteTopology& t, std::uint32_t subset);

struct PointOrbit {
  std::uint32_t subset = 0;
  std::size_t size = 0;
};

/// A subset of maximal orbit size (first such in mask order).
PointOrbit max_point_orbit(const FiniteTopology& t);

struct OrbitReport {
  std::size_t order = 0;              // operator monoid order
  std::optional<ParamEq> matched;     // the classified class, when one fits
  bool monogenic = false;
  std::string classification() const; // descriptor text, or monogenic/other
};

/// Builds the operator monoid of {closure, complement} (complement is the
/// involution D, closure the idempotent B; words apply left to right) and
/// matches it against the classified classes of compatible order.
OrbitReport classify_orbit(const FiniteTopology& t);

/// File format: first line "n=<int>", then one open set per line as
/// comma-separated element indices, "{}" for the empty set.
FiniteTopology parse_topology(std::istream& in);
FiniteTopology load_topology(const std::string& path);
std::string topology_to_file(const FiniteTopology& t);

std::string format_subset(std::uint32_t mask);

/// All topologies on {0..n-1}; exhaustive, intended for n <= 4.
std::vector<FiniteTopology> all_topologies(int n);

/// Uniformly seeded topology via a random preorder (up-sets of the
/// reflexive-transitive closure of random edges).
FiniteTopology random_topology(std::mt19937_64& rng, int n);

struct KuratowskiWitness {
  FiniteTopology topology;
  std::uint32_t subset = 0;
};

/// Deterministic search (exhaustive n <= 3, then seeded random topologies
/// on 4..8 points) for a topology and subset whose orbit reaches 14.
std::optional<KuratowskiWitness> find_full_orbit_witness(
    std::uint64_t seed, std::size_t max_candidates);

}  // namespace pim

#endif  // PIM_KURATOWSKI_HPP_
