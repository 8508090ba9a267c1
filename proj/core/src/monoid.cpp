#include "pim/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "pim/errors.hpp"

namespace pim {

std::string FiniteMonoid::to_text() const {
  std::ostringstream out;
  out << "n=" << elements.size() << '\n';
  for (std::size_t i = 0; i < elements.size(); ++i) {
    out << (i ? " " : "") << display(elements[i]);
  }
  out << '\n';
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      out << (j ? " " : "") << table[i * elements.size() + j];
    }
    out << '\n';
  }
  return out.str();
}

long long HilbertSeries::sum() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0LL);
}

std::string HilbertSeries::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coeffs[i]);
  }
  return out + "]";
}

std::vector<DirectedRule> class_rules(const ParamEq& p) {
  const int k = p.k;
  switch (p.family) {
    case Family::f00:
      // B(DB)^(k+ell-1) -> B(DB)^(k-1), the minimal form of the defining
      // relation (a left D lowers both exponents by one).
      return {{Generator::idem + db_power(k + p.ell - 1),
               Generator::idem + db_power(k - 1)}};
    case Family::f01:
      return p.parity == Parity::circ
                 ? std::vector<DirectedRule>{{Generator::idem + db_power(k),
                                              bd_power(k)}}
                 : std::vector<DirectedRule>{
                       {bd_power(k), bd_power(k - 1) + Generator::idem}};
    case Family::f10:
      return p.parity == Parity::circ
                 ? std::vector<DirectedRule>{{Generator::idem + db_power(k),
                                              db_power(k)}}
                 : std::vector<DirectedRule>{
                       {db_power(k), Generator::idem + db_power(k - 1)}};
    case Family::f11:
      if (p.parity == Parity::circ) {
        return {{bd_power(k), db_power(k)}};
      }
      // The defining equation implies (DB)^k = (BD)^k and
      // (DB)^k = (DB)^(k+1), which together send both length-2k words to
      // B(DB)^(k-1); a single orientation of the minimal relation is not
      // confluent here.
      return {{db_power(k), Generator::idem + db_power(k - 1)},
              {bd_power(k), Generator::idem + db_power(k - 1)}};
  }
  throw Error("unreachable");
}

namespace {

Word splice(const Word& w, std::size_t pos, std::size_t len,
            const Word& replacement) {
  std::string s = w.str();
  s.replace(pos, len, replacement.str());
  return Word(std::move(s));
}

}  // namespace

Word reduce_to_normal_form(Word w, std::span<const DirectedRule> rules) {
  w = quasi_reduce(w);
  // Every replacement either shortens the word (possibly after the next
  // quasi-reduction) or rewrites the whole word once, so the loop is bounded.
  std::size_t guard = 2 * w.size() + 2;
  while (guard-- > 0) {
    std::size_t pos = std::string::npos;
    const DirectedRule* hit = nullptr;
    for (const DirectedRule& rule : rules) {
      auto at = w.str().find(rule.lhs.str());
      if (at < pos) {
        pos = at;
        hit = &rule;
      }
    }
    if (!hit) {
      return w;
    }
    w = quasi_reduce(splice(w, pos, hit->lhs.size(), hit->rhs));
  }
  throw Error("rewrite loop failed to terminate");
}

FiniteMonoid build(const CanonicalPresentation& c) {
  if (c.is_free()) {
    throw NotFinite("the free strict 2-PIM is infinite; build needs a "
                    "classified presentation");
  }
  if (c.is_monogenic()) {
    throw Unsupported("no normal forms for monogenic collapses; use the "
                      "congruence oracle instead");
  }
  return build(c.param());
}

FiniteMonoid build(const ParamEq& p) {
  const std::vector<DirectedRule> rules = class_rules(p);
  auto normal = [&rules](Word w) {
    return reduce_to_normal_form(std::move(w), rules);
  };

  FiniteMonoid m;
  std::map<Word, ElementId> index;
  m.elements.push_back(Word());
  index.emplace(Word(), 0);
  for (std::size_t next = 0; next < m.elements.size(); ++next) {
    for (Generator g : {Generator::inv, Generator::idem}) {
      Word w = normal(m.elements[next] + g);
      if (index.emplace(w, static_cast<ElementId>(m.elements.size())).second) {
        m.elements.push_back(std::move(w));
      }
    }
  }

  const std::size_t n = m.elements.size();
  m.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Word w = normal(m.elements[i] + m.elements[j]);
      auto it = index.find(w);
      if (it == index.end()) {
        throw Error("product fell outside the normal-form set: " +
                    display(w));
      }
      m.table[i * n + j] = it->second;
    }
  }
  m.identity = 0;
  m.gen_inv = index.at(normal(Word::of({Generator::inv})));
  m.gen_idem = index.at(normal(Word::of({Generator::idem})));
  return m;
}

long long order(const ParamEq& p) {
  if (p.family == Family::f00) {
    return 4LL * (p.k + p.ell) - 2;
  }
  if (p.family == Family::f11) {
    return p.parity == Parity::circ ? 4LL * p.k : 4LL * p.k - 1;
  }
  return p.parity == Parity::circ ? 4LL * p.k + 2 : 4LL * p.k;
}

long long order(const CanonicalPresentation& c) {
  if (c.is_free()) {
    throw NotFinite("the free strict 2-PIM is infinite");
  }
  if (c.is_monogenic()) {
    throw Unsupported("order of a monogenic collapse is not tracked; use "
                      "the congruence oracle");
  }
  return order(c.param());
}

HilbertSeries hilbert(const ParamEq& p,
                      std::optional<std::size_t> max_degree) {
  // Even-order classes grade as 1, 2, ..., 2, 1 with a single element of
  // maximal length; 11-bullet (odd order 4k-1) has every length up to
  // 2k-1 fully populated and nothing above.
  const long long n = order(p);
  const bool odd = n % 2 != 0;
  const std::size_t top =
      static_cast<std::size_t>(odd ? (n - 1) / 2 : n / 2);
  HilbertSeries h;
  h.coeffs.assign(max_degree ? *max_degree + 1 : top + 1, 0);
  for (std::size_t d = 0; d < h.coeffs.size() && d <= top; ++d) {
    if (d == 0) {
      h.coeffs[d] = 1;
    } else if (d < top || odd) {
      h.coeffs[d] = 2;
    } else {
      h.coeffs[d] = 1;
    }
  }
  return h;
}

HilbertSeries hilbert(const CanonicalPresentation& c,
                      std::optional<std::size_t> max_degree) {
  if (c.is_monogenic()) {
    throw Unsupported("no Hilbert series for monogenic collapses");
  }
  if (c.is_free()) {
    if (!max_degree) {
      throw NotFinite("the free series is infinite; supply a max degree");
    }
    HilbertSeries h;
    h.coeffs.assign(*max_degree + 1, 2);
    h.coeffs[0] = 1;
    return h;
  }
  return hilbert(c.param(), max_degree);
}

int default_oracle_bound(const ParamEq& p) {
  return 4 * (p.k + p.ell + 2);
}

bool is_monogenic(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  for (ElementId g = 0; g < static_cast<ElementId>(n); ++g) {
    std::vector<bool> seen(n, false);
    seen[m.identity] = true;
    std::size_t count = 1;
    ElementId x = g;
    while (!seen[x]) {
      seen[x] = true;
      ++count;
      x = m.product(x, g);
    }
    if (count == n) {
      return true;
    }
  }
  return false;
}

std::vector<long long> length_grading(const FiniteMonoid& m) {
  std::size_t top = 0;
  for (const Word& w : m.elements) {
    top = std::max(top, w.size());
  }
  std::vector<long long> grading(top + 1, 0);
  for (const Word& w : m.elements) {
    ++grading[w.size()];
  }
  return grading;
}

}  // namespace pim
