// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion.  Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pim/equation.hpp"
#include "pim/errors.hpp"
#include "pim/iso.hpp"
#include "pim/kuratowski.hpp"
#include "pim/monoid.hpp"
#include "pim/reduce.hpp"
#include "pim/witness.hpp"
#include "pim/word.hpp"

using namespace pim;

namespace {

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) {
    throw CheckFailed(what);
  }
}

FiniteMonoid oracle_of(const std::vector<std::pair<Word, Word>>& rels,
                       int bound) {
  OracleResult r = congruence_monoid(rels, bound);
  if (const auto* undet = std::get_if<Undetermined>(&r)) {
    throw CheckFailed("oracle undetermined: " + undet->reason);
  }
  return std::get<FiniteMonoid>(std::move(r));
}

std::vector<ParamEq> all_params(int max_k, int max_ell) {
  std::vector<ParamEq> out;
  for (int k = 1; k <= max_k; ++k) {
    for (int ell = 1; ell <= max_ell; ++ell) {
      out.push_back(ParamEq::family00(k, ell));
    }
    for (Family f : {Family::f01, Family::f10, Family::f11}) {
      for (Parity s : {Parity::circ, Parity::bullet}) {
        out.push_back(ParamEq::single(f, s, k));
      }
    }
  }
  return out;
}

std::vector<std::string> notes;

// 1. Kuratowski order through the CLI plus the independent oracle count.
void criterion1() {
  std::ostringstream out;
  std::ostringstream err;
  int status = cli::run({"classify", "DBDB=DBDBDBDB"}, out, err);
  expect(status == 0, "classify exited with " + std::to_string(status));
  expect(out.str() == "Classified family=00 k=2 ell=2\norder=14\n",
         "unexpected classify output: " + out.str());
  FiniteMonoid m =
      oracle_of({{Word::parse("DBDB"), Word::parse("DBDBDBDB")}}, 20);
  expect(m.size() == 14,
         "oracle classes = " + std::to_string(m.size()) + ", want 14");
}

// 2. Hilbert fixture and the graded element table.
void criterion2() {
  HilbertSeries h = hilbert(ParamEq::family00(2, 2));
  expect(h.to_string() == "[1,2,2,2,2,2,2,1]",
         "hilbert(00,2,2) = " + h.to_string());
  FiniteMonoid m = build(ParamEq::family00(2, 2));
  std::map<std::size_t, std::vector<std::string>> grades;
  for (const Word& w : m.elements) {
    grades[w.size()].push_back(display(w));
  }
  const std::vector<std::vector<std::string>> expected = {
      {"e"},          {"D", "B"},         {"DB", "BD"},
      {"DBD", "BDB"}, {"DBDB", "BDBD"},   {"DBDBD", "BDBDB"},
      {"DBDBDB", "BDBDBD"}, {"DBDBDBD"},
  };
  expect(grades.size() == expected.size(), "wrong number of grades");
  for (std::size_t g = 0; g < expected.size(); ++g) {
    expect(grades[g] == expected[g],
           "grade " + std::to_string(g) + " does not match the display");
  }
}

// 3. Construction/oracle equivalence over all parameters in {1,2,3}.
void criterion3() {
  int instances = 0;
  for (const ParamEq& p : all_params(3, 3)) {
    FiniteMonoid built = build(p);
    FiniteMonoid oracled =
        oracle_of({p.defining_sides()}, default_oracle_bound(p));
    expect(built.size() == oracled.size(),
           p.to_string() + ": sizes differ");
    expect(generator_preserving_isomorphic(built, oracled),
           p.to_string() + ": not generator-preservingly isomorphic");
    expect(static_cast<long long>(built.size()) == hilbert(p).sum(),
           p.to_string() + ": |elements| != hilbert at 1");
    ++instances;
  }
  expect(instances == 27, "expected 27 instances");
}

// 4. Order-table audit: six families at k in {1,2,3}, each row checked
// against the oracle count; family 00 against 4(k+r)-2.
void criterion4() {
  for (int k = 1; k <= 3; ++k) {
    struct Row {
      Family f;
      Parity s;
      long long table_value;  // the published summary value
      long long oracle_value; // what the congruence closure certifies
    };
    const Row rows[] = {
        {Family::f01, Parity::circ, 4LL * k + 2, 4LL * k + 2},
        {Family::f01, Parity::bullet, 4LL * k, 4LL * k},
        {Family::f10, Parity::circ, 4LL * k + 2, 4LL * k + 2},
        {Family::f10, Parity::bullet, 4LL * k, 4LL * k},
        {Family::f11, Parity::circ, 4LL * k, 4LL * k},
        // The 11-bullet equation implies the 11-circ and ell=1 family-00
        // equations at the same k, so its monoid is a proper quotient of
        // the 4k-element 11-circ monoid; the audit asserts the oracle
        // value and flags the summary row.
        {Family::f11, Parity::bullet, 4LL * k + 2, 4LL * k - 1},
    };
    for (const Row& row : rows) {
      ParamEq p = ParamEq::single(row.f, row.s, k);
      expect(order(p) == row.oracle_value, p.to_string() + ": closed form");
      FiniteMonoid m = oracle_of({p.defining_sides()},
                                 default_oracle_bound(p));
      expect(static_cast<long long>(m.size()) == row.oracle_value,
             p.to_string() + ": oracle order");
    }
  }
  for (int k = 1; k <= 3; ++k) {
    for (int r = 1; r <= 3; ++r) {
      ParamEq p = ParamEq::family00(k, r);
      FiniteMonoid m = oracle_of({p.defining_sides()},
                                 default_oracle_bound(p));
      expect(static_cast<long long>(m.size()) == 4LL * (k + r) - 2,
             p.to_string() + ": oracle order != 4(k+r)-2");
      expect(order(p) == 4LL * (k + r) - 2, p.to_string() + ": closed form");
    }
  }
  notes.push_back(
      "note: family-00 orders follow the enumeration 2(k+r)+2(k+r-1) = "
      "4(k+r)-2, oracle-validated; the often-quoted closed form 2k+2r-2 "
      "disagrees with that enumeration and is not used (see README)");
  notes.push_back(
      "note: the often-quoted order 4k+2 for the 11-bullet class is "
      "inconsistent: its defining equation implies the 11-circ and ell=1 "
      "family-00 equations at the same k, making the monoid a quotient of "
      "the 4k-element 11-circ monoid; the oracle certifies order 4k-1, "
      "which the audit asserts instead (see README)");
}

// 5. Meet soundness over all ordered pairs with parameters <= 2, plus the
// gcd example (00,2,4) ^ (00,3,6) -> (00,2,2).
void criterion5() {
  auto params = all_params(2, 2);
  for (const ParamEq& a : params) {
    for (const ParamEq& b : params) {
      ParamEq m = meet(a, b);
      int bound = std::max({default_oracle_bound(a), default_oracle_bound(b),
                            default_oracle_bound(m)});
      FiniteMonoid joint =
          oracle_of({a.defining_sides(), b.defining_sides()}, bound);
      FiniteMonoid single = oracle_of({m.defining_sides()}, bound);
      expect(generator_preserving_isomorphic(joint, single),
             a.to_string() + " ^ " + b.to_string() + " != " + m.to_string());
    }
  }
  ParamEq a = ParamEq::family00(2, 4);
  ParamEq b = ParamEq::family00(3, 6);
  ParamEq m = meet(a, b);
  expect(m == ParamEq::family00(2, 2), "gcd example: got " + m.to_string());
  int bound = std::max({default_oracle_bound(a), default_oracle_bound(b)});
  FiniteMonoid joint =
      oracle_of({a.defining_sides(), b.defining_sides()}, bound);
  FiniteMonoid single = oracle_of({m.defining_sides()}, bound);
  expect(generator_preserving_isomorphic(joint, single),
         "gcd example: presentations not isomorphic");
}

// 6. Degeneracy: each lemma case yields a monogenic oracle monoid.
void criterion6() {
  auto monogenic_eq = [](const std::string& text, int want_case) {
    GenericEquation e = GenericEquation::parse(text);
    DegeneracyVerdict v = detect_degenerate(e);
    expect(v.monogenic(), text + ": expected a monogenic verdict");
    expect(v.lemma_case == want_case,
           text + ": case " + std::to_string(v.lemma_case) + ", want " +
               std::to_string(want_case));
    std::vector<std::pair<Word, Word>> rels{e.words()};
    std::size_t longest = 2;
    for (const auto& [u, v2] : rels) {
      longest = std::max({longest, u.size(), v2.size()});
    }
    FiniteMonoid m = oracle_of(rels, static_cast<int>(4 * longest + 8));
    expect(is_monogenic(m), text + ": oracle monoid is not monogenic");
  };
  // item 1: Id = (DB)^k, k > 0
  monogenic_eq("=DB", 1);
  monogenic_eq("=DBDB", 1);
  // item 2: (DB)^k = D and (DB)^k D = Id, k >= 0
  monogenic_eq("=D", 2);
  monogenic_eq("DB=D", 2);
  monogenic_eq("DBDB=D", 2);
  monogenic_eq("DBD=", 2);
  monogenic_eq("DBDBD=", 2);
  // item 3: Id = B(DB)^k, k >= 0
  monogenic_eq("=B", 3);
  monogenic_eq("=BDB", 3);
  monogenic_eq("=BDBDB", 3);
  // item 4: Id = B(DB)^k D, k >= 0
  monogenic_eq("=BD", 4);
  monogenic_eq("=BDBD", 4);
  monogenic_eq("=BDBDBD", 4);
  // item 5: D = (DB)^k D, k > 0
  monogenic_eq("D=DBD", 5);
  monogenic_eq("D=DBDBD", 5);
  // item 6: D = B(DB)^k
  monogenic_eq("D=B", 6);
  monogenic_eq("D=BDB", 6);
  monogenic_eq("D=BDBDB", 6);
  // item 7: D = B(DB)^k D
  monogenic_eq("D=BD", 7);
  monogenic_eq("D=BDBD", 7);
  monogenic_eq("D=BDBDBD", 7);
}

// 7. Classification: descriptors differ exactly when brute force separates.
void criterion7() {
  auto params = all_params(2, 2);
  std::vector<FiniteMonoid> monoids;
  for (const ParamEq& p : params) {
    monoids.push_back(build(p));
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t j = 0; j < params.size(); ++j) {
      bool same = brute_force_isomorphic(monoids[i], monoids[j]);
      expect(same == (params[i] == params[j]),
             params[i].to_string() + " vs " + params[j].to_string());
    }
  }
  for (int k = 1; k <= 2; ++k) {
    FiniteMonoid a = build(ParamEq::single(Family::f01, Parity::circ, k));
    FiniteMonoid b = build(ParamEq::single(Family::f10, Parity::circ, k));
    FiniteMonoid c = build(ParamEq::single(Family::f11, Parity::bullet, k));
    // 01-circ and 10-circ share order 4k+2 and only the table separates
    // them; 11-bullet lands at 4k-1 (see the criterion-4 note), so its
    // separation is included but no longer an equal-order case.
    expect(a.size() == b.size(), "equal-order pair sizes");
    expect(!brute_force_isomorphic(a, b), "01circ vs 10circ");
    expect(!brute_force_isomorphic(a, c), "01circ vs 11bullet");
    expect(!brute_force_isomorphic(b, c), "10circ vs 11bullet");
  }
}

// 8. Unique involution in every constructed class instance.
void criterion8() {
  for (const ParamEq& p : all_params(3, 3)) {
    FiniteMonoid m = build(p);
    std::vector<ElementId> inv = involutions(m);
    expect(inv.size() == 1, p.to_string() + ": involution count " +
                                std::to_string(inv.size()));
    expect(inv.front() == *m.gen_inv,
           p.to_string() + ": involution is not the involution generator");
  }
}

// 9. Matrix witnesses: satisfied/violated pattern for k = 1..4 and closure
// under cap 64.
void criterion9() {
  struct Pattern {
    WitnessCase which;
    std::vector<ParamEq> sat;
    std::vector<ParamEq> viol;
  };
  for (int k = 1; k <= 4; ++k) {
    auto single = [](Family f, Parity s, int kk) {
      return ParamEq::single(f, s, kk);
    };
    const std::vector<Pattern> patterns = {
        {WitnessCase::ineq1_00,
         {ParamEq::family00(k, 2)},
         {ParamEq::family00(k, 1)}},
        {WitnessCase::ineq1_01,
         {single(Family::f01, Parity::circ, k)},
         {single(Family::f01, Parity::bullet, k)}},
        {WitnessCase::ineq1_10,
         {single(Family::f10, Parity::circ, k)},
         {single(Family::f10, Parity::bullet, k)}},
        {WitnessCase::ineq1_11,
         {single(Family::f11, Parity::circ, k)},
         {single(Family::f11, Parity::bullet, k)}},
        {WitnessCase::ineq2,
         {single(Family::f01, Parity::circ, k),
          single(Family::f01, Parity::bullet, k)},
         {single(Family::f11, Parity::circ, k),
          single(Family::f11, Parity::bullet, k)}},
        {WitnessCase::ineq3,
         {single(Family::f10, Parity::circ, k),
          single(Family::f10, Parity::bullet, k)},
         {single(Family::f11, Parity::circ, k),
          single(Family::f11, Parity::bullet, k)}},
        {WitnessCase::ineq4,
         {ParamEq::family00(k, 1), ParamEq::family00(k, 2)},
         {single(Family::f01, Parity::circ, k),
          single(Family::f01, Parity::bullet, k)}},
        {WitnessCase::ineq5,
         {ParamEq::family00(k, 1), ParamEq::family00(k, 2)},
         {single(Family::f10, Parity::circ, k),
          single(Family::f10, Parity::bullet, k)}},
    };
    for (const Pattern& pattern : patterns) {
      MatrixPair pair = witness_for(pattern.which);
      expect(pair.inv * pair.inv == Mat2::identity(),
             to_string(pattern.which) + ": inv squared");
      expect(pair.idem * pair.idem == pair.idem,
             to_string(pattern.which) + ": idem squared");
      for (const ParamEq& p : pattern.sat) {
        auto [lhs, rhs] = p.defining_sides();
        expect(check_relation(pair, lhs, rhs),
               to_string(pattern.which) + " should satisfy " + p.to_string() +
                   " at k=" + std::to_string(k));
      }
      for (const ParamEq& p : pattern.viol) {
        auto [lhs, rhs] = p.defining_sides();
        expect(!check_relation(pair, lhs, rhs),
               to_string(pattern.which) + " should violate " + p.to_string() +
                   " at k=" + std::to_string(k));
      }
    }
  }
  for (WitnessCase c : all_witness_cases) {
    FiniteMonoid m = matrix_monoid(witness_for(c), 64);
    expect(m.size() <= 64, to_string(c) + ": closure size");
  }
}

// 10. Kuratowski bound property and the 14-orbit witness.
void criterion10() {
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteTopology& t : all_topologies(n)) {
      expect(classify_orbit(t).order <= 14, "operator monoid order > 14");
      expect(max_point_orbit(t).size <= 14, "point orbit > 14");
    }
  }
  std::mt19937_64 rng(97);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + static_cast<int>(rng() % 4);  // 2..5
    FiniteTopology t = random_topology(rng, n);
    expect(!validate_topology(t), "random topology invalid");
    expect(classify_orbit(t).order <= 14, "operator monoid order > 14");
    expect(max_point_orbit(t).size <= 14, "point orbit > 14");
  }

  auto witness = find_full_orbit_witness(2024, 400000);
  expect(witness.has_value(), "no 14-orbit witness found by the search");
  expect(orbit_size(witness->topology, witness->subset) == 14,
         "witness orbit is not 14");

  FiniteTopology fixture =
      load_topology(std::string(PIM_TESTS_DIR) +
                    "/fixtures/kuratowski14.topology");
  expect(!validate_topology(fixture), "fixture topology invalid");
  PointOrbit best = max_point_orbit(fixture);
  expect(best.size == 14, "fixture orbit size " + std::to_string(best.size));
  OrbitReport report = classify_orbit(fixture);
  expect(report.order == 14, "fixture operator monoid order");
  expect(report.matched && *report.matched == ParamEq::family00(2, 2),
         "fixture class is not (00, k=2, ell=2)");
}

struct Criterion {
  int id;
  std::string label;
  double budget_ms;
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Kuratowski order: classify + oracle both report 14", 1000,
       criterion1},
      {2, "Hilbert fixture [1,2,2,2,2,2,2,1] and graded element table", 1000,
       criterion2},
      {3, "construction/oracle equivalence, all parameters in {1,2,3}", 60000,
       criterion3},
      {4, "order-table audit at k in {1,2,3} (family 00 via oracle)", 10000,
       criterion4},
      {5, "meet soundness over parameter pairs <= 2 plus the gcd example",
       120000, criterion5},
      {6, "degenerate lemma cases are monogenic under the oracle", 10000,
       criterion6},
      {7, "classification agreement: descriptors vs brute force", 60000,
       criterion7},
      {8, "unique involution in every constructed instance", 5000,
       criterion8},
      {9, "matrix witnesses: separation patterns and closure", 5000,
       criterion9},
      {10, "Kuratowski bounds and the 14-orbit witness", 120000, criterion10},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.run();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    auto elapsed_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
    bool in_budget = elapsed_ms < c.budget_ms;
    bool pass = failure.empty() && in_budget;
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL")
              << " (" << static_cast<long>(elapsed_ms) << " ms, budget "
              << static_cast<long>(c.budget_ms) << " ms) " << c.label;
    if (!failure.empty()) {
      std::cout << " -- " << failure;
    } else if (!in_budget) {
      std::cout << " -- over budget";
    }
    std::cout << '\n';
    if (!pass) {
      ++failures;
    }
  }
  for (const std::string& note : notes) {
    std::cout << note << '\n';
  }
  return failures == 0 ? 0 : 1;
}
