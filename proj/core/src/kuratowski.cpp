#include "pim/kuratowski.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "pim/errors.hpp"
#include "pim/iso.hpp"

namespace pim {

std::string TopologyViolation::to_string() const {
  std::string out = axiom;
  out += " (offending subsets " + format_subset(a);
  if (a != b) {
    out += ", " + format_subset(b);
  }
  out += ")";
  return out;
}

std::optional<TopologyViolation> validate_topology(const FiniteTopology& t) {
  if (t.n < 1 || t.n > 16) {
    return TopologyViolation{"ground-set size must be between 1 and 16"};
  }
  const std::uint32_t full = t.full_mask();
  for (std::uint32_t o : t.opens) {
    if ((o & ~full) != 0) {
      return TopologyViolation{"open set outside the ground set", o, o};
    }
  }
  auto contains = [&](std::uint32_t m) {
    return std::find(t.opens.begin(), t.opens.end(), m) != t.opens.end();
  };
  if (!contains(0)) {
    return TopologyViolation{"empty set missing", 0, 0};
  }
  if (!contains(full)) {
    return TopologyViolation{"full set missing", full, full};
  }
  for (std::uint32_t x : t.opens) {
    for (std::uint32_t y : t.opens) {
      if (!contains(x | y)) {
        return TopologyViolation{"not closed under union", x, y};
      }
      if (!contains(x & y)) {
        return TopologyViolation{"not closed under intersection", x, y};
      }
    }
  }
  return std::nullopt;
}

SetOperation identity_op(int n) {
  SetOperation op{n, {}};
  op.table.resize(1u << n);
  for (std::uint32_t m = 0; m < op.table.size(); ++m) {
    op.table[m] = m;
  }
  return op;
}

SetOperation complement_op(int n) {
  if (n < 1 || n > 16) {
    throw Error("ground-set size must be between 1 and 16");
  }
  SetOperation op{n, {}};
  const std::uint32_t full = (1u << n) - 1;
  op.table.resize(1u << n);
  for (std::uint32_t m = 0; m <= full; ++m) {
    op.table[m] = full ^ m;
  }
  return op;
}

SetOperation closure_op(const FiniteTopology& t) {
  if (auto v = validate_topology(t)) {
    throw InvalidTopology(v->to_string());
  }
  const std::uint32_t full = t.full_mask();
  // Finite closure is additive, so point closures determine everything.
  std::vector<std::uint32_t> point_closure(static_cast<std::size_t>(t.n));
  for (int x = 0; x < t.n; ++x) {
    std::uint32_t c = full;
    for (std::uint32_t o : t.opens) {
      if ((o & (1u << x)) == 0) {
        c &= full ^ o;  // intersect with every closed set containing x
      }
    }
    point_closure[static_cast<std::size_t>(x)] = c;
  }
  SetOperation op{t.n, {}};
  op.table.resize(1u << t.n);
  for (std::uint32_t m = 0; m <= full; ++m) {
    std::uint32_t c = 0;
    for (int x = 0; x < t.n; ++x) {
      if (m & (1u << x)) {
        c |= point_closure[static_cast<std::size_t>(x)];
      }
    }
    op.table[m] = c;
  }
  return op;
}

SetOperation compose(const SetOperation& first, const SetOperation& then) {
  SetOperation op{first.n, {}};
  op.table.resize(first.table.size());
  for (std::uint32_t m = 0; m < first.table.size(); ++m) {
    op.table[m] = then.table[first.table[m]];
  }
  return op;
}

FiniteMonoid operation_monoid(
    std::span<const std::pair<Generator, SetOperation>> gens,
    std::size_t cap) {
  if (cap < 1) {
    throw Error("operation_monoid needs cap >= 1");
  }
  const int n = gens.empty() ? 1 : gens.front().second.n;
  for (const auto& [g, op] : gens) {
    if (op.n != n) {
      throw Error("operation generators live on different ground sets");
    }
  }
  FiniteMonoid m;
  std::vector<SetOperation> ops;
  std::map<std::vector<std::uint32_t>, ElementId> index;
  auto intern = [&](const SetOperation& op, const Word& w) {
    auto [it, inserted] =
        index.emplace(op.table, static_cast<ElementId>(ops.size()));
    if (inserted) {
      if (ops.size() >= cap) {
        throw CapExceeded("operation monoid exceeded cap " +
                          std::to_string(cap));
      }
      ops.push_back(op);
      m.elements.push_back(w);
    }
    return it->second;
  };
  intern(identity_op(n), Word());
  for (std::size_t next = 0; next < ops.size(); ++next) {
    for (const auto& [g, op] : gens) {
      intern(compose(ops[next], op), m.elements[next] + g);
    }
  }
  const std::size_t count = ops.size();
  m.table.resize(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      m.table[i * count + j] = index.at(compose(ops[i], ops[j]).table);
    }
  }
  m.identity = 0;
  for (const auto& [g, op] : gens) {
    auto id = index.at(op.table);
    if (g == Generator::inv) {
      m.gen_inv = id;
    } else {
      m.gen_idem = id;
    }
  }
  return m;
}

std::size_t orbit_size(const FiniteTopology& t, std::uint32_t subset) {
  SetOperation close = closure_op(t);
  SetOperation comp = complement_op(t.n);
  std::vector<bool> seen(close.table.size(), false);
  std::vector<std::uint32_t> queue{subset};
  seen[subset] = true;
  std::size_t count = 0;
  while (!queue.empty()) {
    std::uint32_t a = queue.back();
    queue.pop_back();
    ++count;
    for (const SetOperation* op : {&close, &comp}) {
      std::uint32_t b = op->apply(a);
      if (!seen[b]) {
        seen[b] = true;
        queue.push_back(b);
      }
    }
  }
  return count;
}

namespace {

std::size_t orbit_size_with(const SetOperation& close, const SetOperation& comp,
                            std::uint32_t subset) {
  std::vector<bool> seen(close.table.size(), false);
  std::vector<std::uint32_t> queue{subset};
  seen[subset] = true;
  std::size_t count = 0;
  while (!queue.empty()) {
    std::uint32_t a = queue.back();
    queue.pop_back();
    ++count;
    std::uint32_t c = close.apply(a);
    if (!seen[c]) {
      seen[c] = true;
      queue.push_back(c);
    }
    std::uint32_t k = comp.apply(a);
    if (!seen[k]) {
      seen[k] = true;
      queue.push_back(k);
    }
  }
  return count;
}

}  // namespace

PointOrbit max_point_orbit(const FiniteTopology& t) {
  SetOperation close = closure_op(t);
  SetOperation comp = complement_op(t.n);
  PointOrbit best;
  for (std::uint32_t a = 0; a < close.table.size(); ++a) {
    std::size_t s = orbit_size_with(close, comp, a);
    if (s > best.size) {
      best = {a, s};
    }
  }
  return best;
}

std::string OrbitReport::classification() const {
  if (matched) {
    return "Classified " + matched->to_string();
  }
  return monogenic ? "monogenic" : "other";
}

OrbitReport classify_orbit(const FiniteTopology& t) {
  std::vector<std::pair<Generator, SetOperation>> gens;
  gens.emplace_back(Generator::inv, complement_op(t.n));
  gens.emplace_back(Generator::idem, closure_op(t));
  FiniteMonoid m = operation_monoid(gens, 64);

  OrbitReport report;
  report.order = m.size();

  std::vector<ParamEq> candidates;
  const long long target = static_cast<long long>(m.size());
  if ((target + 2) % 4 == 0) {
    int s = static_cast<int>((target + 2) / 4);
    for (int k = 1; k < s; ++k) {
      candidates.push_back(ParamEq::family00(k, s - k));
    }
    // 4k + 2 classes share this residue
    if (target >= 6 && (target - 2) % 4 == 0) {
      int k = static_cast<int>((target - 2) / 4);
      candidates.push_back(ParamEq::single(Family::f01, Parity::circ, k));
      candidates.push_back(ParamEq::single(Family::f10, Parity::circ, k));
      candidates.push_back(ParamEq::single(Family::f11, Parity::bullet, k));
    }
  }
  if (target >= 4 && target % 4 == 0) {
    int k = static_cast<int>(target / 4);
    candidates.push_back(ParamEq::single(Family::f01, Parity::bullet, k));
    candidates.push_back(ParamEq::single(Family::f10, Parity::bullet, k));
    candidates.push_back(ParamEq::single(Family::f11, Parity::circ, k));
  }
  if (target >= 3 && (target + 1) % 4 == 0) {
    candidates.push_back(ParamEq::single(Family::f11, Parity::bullet,
                                         static_cast<int>((target + 1) / 4)));
  }
  for (const ParamEq& p : candidates) {
    if (brute_force_isomorphic(build(p), m)) {
      report.matched = p;
      return report;
    }
  }
  report.monogenic = is_monogenic(m);
  return report;
}

FiniteTopology parse_topology(std::istream& in) {
  std::string line;
  FiniteTopology t;
  bool have_n = false;
  while (std::getline(in, line)) {
    // strip whitespace
    std::string s;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        s.push_back(c);
      }
    }
    if (s.empty()) {
      continue;
    }
    if (!have_n) {
      if (s.rfind("n=", 0) != 0) {
        throw SyntaxError("topology file must start with n=<int>");
      }
      t.n = std::stoi(s.substr(2));
      if (t.n < 1 || t.n > 16) {
        throw SyntaxError("topology ground-set size must be in 1..16");
      }
      have_n = true;
      continue;
    }
    std::uint32_t mask = 0;
    if (s != "{}") {
      if (s.front() == '{' && s.back() == '}') {
        s = s.substr(1, s.size() - 2);
      }
      std::stringstream fields(s);
      std::string field;
      while (std::getline(fields, field, ',')) {
        if (field.empty()) {
          throw SyntaxError("empty element index in open set: " + line);
        }
        int x = std::stoi(field);
        if (x < 0 || x >= t.n) {
          throw SyntaxError("element index " + std::to_string(x) +
                            " outside the ground set");
        }
        mask |= 1u << x;
      }
    }
    t.opens.push_back(mask);
  }
  if (!have_n) {
    throw SyntaxError("empty topology file");
  }
  return t;
}

FiniteTopology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open topology file " + path);
  }
  return parse_topology(in);
}

std::string topology_to_file(const FiniteTopology& t) {
  std::string out = "n=" + std::to_string(t.n) + "\n";
  for (std::uint32_t o : t.opens) {
    if (o == 0) {
      out += "{}\n";
      continue;
    }
    bool first = true;
    for (int x = 0; x < t.n; ++x) {
      if (o & (1u << x)) {
        out += (first ? "" : ",") + std::to_string(x);
        first = false;
      }
    }
    out += "\n";
  }
  return out;
}

std::string format_subset(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < 32; ++x) {
    if (mask & (1u << x)) {
      out += (first ? "" : ",") + std::to_string(x);
      first = false;
    }
  }
  return out + "}";
}

std::vector<FiniteTopology> all_topologies(int n) {
  if (n < 1 || n > 4) {
    throw Error("exhaustive enumeration is limited to 1 <= n <= 4");
  }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> proper;  // subsets other than {} and full
  for (std::uint32_t m = 1; m < full; ++m) {
    proper.push_back(m);
  }
  std::vector<FiniteTopology> out;
  const std::uint64_t families = 1ull << proper.size();
  for (std::uint64_t pick = 0; pick < families; ++pick) {
    FiniteTopology t{n, {0}};
    for (std::size_t i = 0; i < proper.size(); ++i) {
      if (pick & (1ull << i)) {
        t.opens.push_back(proper[i]);
      }
    }
    t.opens.push_back(full);
    if (!validate_topology(t)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

FiniteTopology random_topology(std::mt19937_64& rng, int n) {
  // Random preorder; its up-sets form a topology (and every finite topology
  // arises this way).
  std::vector<std::uint32_t> up(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    up[static_cast<std::size_t>(i)] = 1u << i;
  }
  std::uniform_int_distribution<int> denom(3, 8);
  const int p = denom(rng);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && std::uniform_int_distribution<int>(0, p - 1)(rng) == 0) {
        up[static_cast<std::size_t>(i)] |= 1u << j;
      }
    }
  }
  // transitive closure
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      std::uint32_t acc = up[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j) {
        if (acc & (1u << j)) {
          acc |= up[static_cast<std::size_t>(j)];
        }
      }
      if (acc != up[static_cast<std::size_t>(i)]) {
        up[static_cast<std::size_t>(i)] = acc;
        changed = true;
      }
    }
  }
  FiniteTopology t{n, {}};
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t m = 0; m <= full; ++m) {
    bool up_closed = true;
    for (int i = 0; i < n && up_closed; ++i) {
      if ((m & (1u << i)) && (up[static_cast<std::size_t>(i)] & ~m) != 0) {
        up_closed = false;
      }
    }
    if (up_closed) {
      t.opens.push_back(m);
    }
  }
  return t;
}

std::optional<KuratowskiWitness> find_full_orbit_witness(
    std::uint64_t seed, std::size_t max_candidates) {
  std::size_t tried = 0;
  auto check = [&](const FiniteTopology& t) -> std::optional<KuratowskiWitness> {
    ++tried;
    PointOrbit orbit = max_point_orbit(t);
    if (orbit.size == 14) {
      return KuratowskiWitness{t, orbit.subset};
    }
    return std::nullopt;
  };
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteTopology& t : all_topologies(n)) {
      if (auto w = check(t)) {
        return w;
      }
      if (tried >= max_candidates) {
        return std::nullopt;
      }
    }
  }
  std::mt19937_64 rng(seed);
  while (tried < max_candidates) {
    for (int n = 4; n <= 8 && tried < max_candidates; ++n) {
      FiniteTopology t = random_topology(rng, n);
      if (auto w = check(t)) {
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace pim
