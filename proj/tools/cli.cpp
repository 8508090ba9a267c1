#include "cli.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "pim/equation.hpp"
#include "pim/errors.hpp"
#include "pim/iso.hpp"
#include "pim/kuratowski.hpp"
#include "pim/monoid.hpp"
#include "pim/reduce.hpp"
#include "pim/word.hpp"

namespace pim::cli {
namespace {

using nlohmann::json;

constexpr const char* kUsage = R"(usage: pim <command> [args]

commands:
  classify <eq>...                 reduce relations to the canonical verdict
  order <eq>...                    order of the classified monoid
  hilbert <eq>... [--max-degree N] length-graded series
  table <eq>...                    serialized multiplication table
  iso <eq>... -- <eq>...           isomorphism of two presentations
  oracle <eq>... --bound L         bounded congruence-closure monoid
  kuratowski <topology-file>       closure/complement orbit report

equations are quoted words over {D,B} joined by '=', e.g. "DBDB=DBDBDBDB";
an empty side denotes the identity.  Add --json for structured output.
)";

struct Args {
  std::string command;
  std::vector<std::string> positional;
  std::vector<std::string> positional_rhs;  // after "--" (iso only)
  bool json = false;
  std::optional<int> bound;
  std::optional<int> max_degree;
};

struct UsageError : Error {
  using Error::Error;
};

Args parse_args(const std::vector<std::string>& argv) {
  if (argv.empty()) {
    throw UsageError("missing command");
  }
  Args a;
  a.command = argv[0];
  bool after_separator = false;
  for (std::size_t i = 1; i < argv.size(); ++i) {
    const std::string& arg = argv[i];
    auto take_int = [&](const char* name) {
      if (++i >= argv.size()) {
        throw UsageError(std::string(name) + " expects a value");
      }
      try {
        return std::stoi(argv[i]);
      } catch (const std::exception&) {
        throw UsageError(std::string(name) + " expects an integer, got '" +
                         argv[i] + "'");
      }
    };
    if (arg == "--json") {
      a.json = true;
    } else if (arg == "--bound") {
      a.bound = take_int("--bound");
    } else if (arg == "--max-degree") {
      a.max_degree = take_int("--max-degree");
    } else if (arg == "--") {
      if (after_separator) {
        throw UsageError("at most one '--' separator is allowed");
      }
      after_separator = true;
    } else if (arg.rfind("--", 0) == 0) {
      throw UsageError("unknown option '" + arg + "'");
    } else {
      (after_separator ? a.positional_rhs : a.positional).push_back(arg);
    }
  }
  return a;
}

std::vector<GenericEquation> parse_equations(
    const std::vector<std::string>& texts) {
  std::vector<GenericEquation> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) {
    out.push_back(GenericEquation::parse(t));
  }
  return out;
}

std::pair<Word, Word> parse_raw_relation(const std::string& text) {
  auto pos = text.find('=');
  if (pos == std::string::npos || text.find('=', pos + 1) != std::string::npos) {
    throw SyntaxError("relation must contain exactly one '=': " + text);
  }
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  return {Word::parse(trim(text.substr(0, pos))),
          Word::parse(trim(text.substr(pos + 1)))};
}

json param_json(const ParamEq& p) {
  json j;
  j["family"] = to_string(p.family);
  j["k"] = p.k;
  if (p.family == Family::f00) {
    j["ell"] = p.ell;
  } else {
    j["parity"] = to_string(p.parity);
  }
  return j;
}

json presentation_json(const CanonicalPresentation& c) {
  json j;
  switch (c.kind()) {
    case CanonicalPresentation::Kind::free_monoid:
      j["verdict"] = "free";
      break;
    case CanonicalPresentation::Kind::monogenic:
      j["verdict"] = "monogenic";
      j["lemma_case"] = c.lemma_case();
      break;
    case CanonicalPresentation::Kind::classified:
      j["verdict"] = "classified";
      j.update(param_json(c.param()));
      break;
  }
  return j;
}

json monoid_json(const FiniteMonoid& m) {
  json j;
  j["n"] = m.size();
  json elements = json::array();
  for (const Word& w : m.elements) {
    elements.push_back(display(w));
  }
  j["elements"] = std::move(elements);
  json table = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.size(); ++k) {
      row.push_back(m.table[i * m.size() + k]);
    }
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

int cmd_classify(const Args& a, std::ostream& out) {
  auto relations = parse_equations(a.positional);
  CanonicalPresentation c = reduce_presentation(relations);
  if (a.json) {
    json j = presentation_json(c);
    if (c.is_classified()) {
      j["order"] = order(c);
    }
    out << j.dump() << '\n';
    return 0;
  }
  out << c.to_string() << '\n';
  if (c.is_classified()) {
    out << "order=" << order(c) << '\n';
  }
  return 0;
}

int cmd_order(const Args& a, std::ostream& out) {
  CanonicalPresentation c = reduce_presentation(parse_equations(a.positional));
  long long n = order(c);
  if (a.json) {
    out << json{{"order", n}}.dump() << '\n';
  } else {
    out << "order=" << n << '\n';
  }
  return 0;
}

int cmd_hilbert(const Args& a, std::ostream& out) {
  CanonicalPresentation c = reduce_presentation(parse_equations(a.positional));
  std::optional<std::size_t> degree;
  if (a.max_degree) {
    if (*a.max_degree < 0) {
      throw UsageError("--max-degree must be >= 0");
    }
    degree = static_cast<std::size_t>(*a.max_degree);
  }
  HilbertSeries h = hilbert(c, degree);
  if (a.json) {
    out << json{{"hilbert", h.coeffs}, {"sum", h.sum()}}.dump() << '\n';
  } else {
    out << "hilbert=" << h.to_string() << '\n';
  }
  return 0;
}

int cmd_table(const Args& a, std::ostream& out) {
  FiniteMonoid m = build(reduce_presentation(parse_equations(a.positional)));
  if (a.json) {
    out << monoid_json(m).dump() << '\n';
  } else {
    out << m.to_text();
  }
  return 0;
}

int cmd_iso(const Args& a, std::ostream& out) {
  CanonicalPresentation p = reduce_presentation(parse_equations(a.positional));
  CanonicalPresentation q =
      reduce_presentation(parse_equations(a.positional_rhs));
  bool result = isomorphic(p, q);
  if (a.json) {
    out << json{{"isomorphic", result}}.dump() << '\n';
  } else {
    out << (result ? "true" : "false") << '\n';
  }
  return 0;
}

int cmd_oracle(const Args& a, std::ostream& out) {
  if (!a.bound) {
    throw UsageError("oracle requires --bound L");
  }
  std::vector<std::pair<Word, Word>> relations;
  relations.reserve(a.positional.size());
  for (const std::string& t : a.positional) {
    relations.push_back(parse_raw_relation(t));
  }
  OracleResult r = congruence_monoid(relations, *a.bound);
  if (const auto* undet = std::get_if<Undetermined>(&r)) {
    if (a.json) {
      out << json{{"undetermined", undet->reason}}.dump() << '\n';
    } else {
      out << "Undetermined (" << undet->reason << ")\n";
    }
    return 0;
  }
  const FiniteMonoid& m = std::get<FiniteMonoid>(r);
  if (a.json) {
    out << monoid_json(m).dump() << '\n';
  } else {
    out << m.to_text();
  }
  return 0;
}

int cmd_kuratowski(const Args& a, std::ostream& out) {
  if (a.positional.size() != 1) {
    throw UsageError("kuratowski expects exactly one topology file");
  }
  FiniteTopology t = load_topology(a.positional[0]);
  if (auto violation = validate_topology(t)) {
    throw InvalidTopology(violation->to_string());
  }
  OrbitReport report = classify_orbit(t);
  PointOrbit orbit = max_point_orbit(t);
  if (a.json) {
    json j;
    j["n"] = t.n;
    j["opens"] = t.opens.size();
    j["order"] = report.order;
    j["class"] = report.matched ? param_json(*report.matched)
                                : json(report.classification());
    j["max_orbit_subset"] = format_subset(orbit.subset);
    j["max_orbit_size"] = orbit.size;
    out << j.dump() << '\n';
    return 0;
  }
  out << "n=" << t.n << " opens=" << t.opens.size() << '\n';
  out << "order=" << report.order << '\n';
  out << "class: " << report.classification() << '\n';
  out << "max-orbit subset=" << format_subset(orbit.subset)
      << " size=" << orbit.size << '\n';
  out << "convention: in operator words D is complement, B is closure; "
         "letters apply left to right\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err) {
  try {
    Args a = parse_args(argv);
    if (a.command == "classify") return cmd_classify(a, out);
    if (a.command == "order") return cmd_order(a, out);
    if (a.command == "hilbert") return cmd_hilbert(a, out);
    if (a.command == "table") return cmd_table(a, out);
    if (a.command == "iso") return cmd_iso(a, out);
    if (a.command == "oracle") return cmd_oracle(a, out);
    if (a.command == "kuratowski") return cmd_kuratowski(a, out);
    if (a.command == "--help" || a.command == "-h" || a.command == "help") {
      out << kUsage;
      return 0;
    }
    throw UsageError("unknown command '" + a.command + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << kUsage;
    return 1;
  } catch (const SyntaxError& e) {
    err << "error: syntax: " << e.what() << '\n';
    return 1;
  } catch (const TrivialEquation& e) {
    err << "error: trivial equation: " << e.what() << '\n';
    return 1;
  } catch (const DegenerateInput& e) {
    err << "error: degenerate input: " << e.what() << '\n';
    return 2;
  } catch (const NotFinite& e) {
    err << "error: not finite: " << e.what() << '\n';
    return 2;
  } catch (const Unsupported& e) {
    err << "error: unsupported: " << e.what() << '\n';
    return 2;
  } catch (const BoundTooSmall& e) {
    err << "error: bound too small: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: cap exceeded: " << e.what() << '\n';
    return 2;
  } catch (const InvalidTopology& e) {
    err << "error: invalid topology: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace pim::cli
