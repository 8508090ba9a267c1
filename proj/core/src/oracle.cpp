#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "pim/errors.hpp"
#include "pim/monoid.hpp"

namespace pim {
namespace {

// Union-find with path halving.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
};

// Quasi-reduced words of length <= L, indexed 0..2L: the empty word is 0,
// and the two alternating words of length n >= 1 are 2n-1 (leading D) and
// 2n (leading B).
int qr_index(const Word& w) {
  if (w.empty()) {
    return 0;
  }
  return 2 * static_cast<int>(w.size()) - 1 +
         (w.str().front() == 'B' ? 1 : 0);
}

Word qr_word(int index) {
  if (index == 0) {
    return Word();
  }
  int n = (index + 1) / 2;
  bool leading_idem = index % 2 == 0;
  std::string s;
  s.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    s.push_back((i % 2 == 0) == leading_idem ? 'B' : 'D');
  }
  return Word(std::move(s));
}

}  // namespace

OracleResult congruence_monoid(
    std::span<const std::pair<Word, Word>> relations, int bound) {
  std::size_t longest_side = 2;  // the base relation DD = Id
  for (const auto& [u, v] : relations) {
    longest_side = std::max({longest_side, u.size(), v.size()});
  }
  if (bound < 2 + 2 * static_cast<int>(longest_side)) {
    throw BoundTooSmall("oracle bound " + std::to_string(bound) +
                        " is below 2 + 2 * " + std::to_string(longest_side));
  }

  const int L = bound;
  const int vertex_count = 2 * L + 1;
  Dsu dsu(static_cast<std::size_t>(vertex_count));

  // Merge the quasi-reduced forms of a.u.b and a.v.b for every relation
  // (u, v) and every pair of quasi-reduced context words a, b keeping
  // a.u.b within the bound.  With u the longer side this realizes exactly
  // the single-step closure over all words of length <= bound: any word
  // containing a relation side factors as a.side.b, and quasi-reduction of
  // the contexts never grows the word.
  for (const auto& rel : relations) {
    Word u = rel.first;
    Word v = rel.second;
    if (u.size() < v.size()) {
      std::swap(u, v);
    }
    const int room = L - static_cast<int>(u.size());
    if (room < 0) {
      continue;  // side longer than the bound: no in-bound occurrence
    }
    for (int ai = 0; ai < vertex_count; ++ai) {
      Word a = qr_word(ai);
      if (static_cast<int>(a.size()) > room) {
        continue;
      }
      for (int bi = 0; bi < vertex_count; ++bi) {
        Word b = qr_word(bi);
        if (static_cast<int>(a.size() + b.size()) > room) {
          continue;
        }
        dsu.unite(qr_index(quasi_reduce(a + u + b)),
                  qr_index(quasi_reduce(a + v + b)));
      }
    }
  }

  // Shortest representative per class (vertex order is length order).
  std::vector<int> rep_of_root(static_cast<std::size_t>(vertex_count), -1);
  std::vector<int> roots;
  for (int i = 0; i < vertex_count; ++i) {
    int r = dsu.find(i);
    if (rep_of_root[static_cast<std::size_t>(r)] == -1) {
      rep_of_root[static_cast<std::size_t>(r)] = i;
      roots.push_back(r);
    }
  }

  std::size_t max_rep_len = 0;
  for (int r : roots) {
    max_rep_len =
        std::max(max_rep_len, qr_word(rep_of_root[static_cast<std::size_t>(r)]).size());
  }
  if (max_rep_len > static_cast<std::size_t>(L) - longest_side) {
    return Undetermined{
        "a class representative of length " + std::to_string(max_rep_len) +
        " exceeds bound - longest side = " +
        std::to_string(L - static_cast<int>(longest_side)) +
        " (bound too small or monoid infinite at this bound)"};
  }
  if (2 * max_rep_len > static_cast<std::size_t>(L)) {
    return Undetermined{"products of class representatives exceed the bound"};
  }

  // Dense class ids in representative (length) order.
  std::vector<int> class_of_vertex(static_cast<std::size_t>(vertex_count));
  std::vector<Word> reps;
  {
    std::vector<int> class_of_root(static_cast<std::size_t>(vertex_count), -1);
    for (int r : roots) {
      class_of_root[static_cast<std::size_t>(r)] =
          static_cast<int>(reps.size());
      reps.push_back(qr_word(rep_of_root[static_cast<std::size_t>(r)]));
    }
    for (int i = 0; i < vertex_count; ++i) {
      class_of_vertex[static_cast<std::size_t>(i)] =
          class_of_root[static_cast<std::size_t>(dsu.find(i))];
    }
  }
  auto class_of = [&](const Word& w) {
    return class_of_vertex[static_cast<std::size_t>(qr_index(quasi_reduce(w)))];
  };

  const std::size_t n = reps.size();
  std::vector<ElementId> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = class_of(reps[i] + reps[j]);
    }
  }

  // The bounded closure under-approximates the congruence, so certify that
  // the table is representative-independent and associative before trusting
  // it as a monoid.
  for (int xi = 0; xi < vertex_count; ++xi) {
    Word x = qr_word(xi);
    for (int yi = 0; yi < vertex_count; ++yi) {
      Word y = qr_word(yi);
      if (static_cast<int>(x.size() + y.size()) > L) {
        continue;
      }
      std::size_t cx = static_cast<std::size_t>(class_of(x));
      std::size_t cy = static_cast<std::size_t>(class_of(y));
      if (class_of(x + y) != table[cx * n + cy]) {
        return Undetermined{"class multiplication is not well defined at "
                            "this bound"};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t ij = static_cast<std::size_t>(table[i * n + j]);
        std::size_t jk = static_cast<std::size_t>(table[j * n + k]);
        if (table[ij * n + k] != table[i * n + jk]) {
          return Undetermined{"class multiplication is not associative at "
                              "this bound"};
        }
      }
    }
  }

  // Re-index in breadth-first product order from the identity class so the
  // result lines up with build().
  std::vector<int> bfs_id(n, -1);
  std::vector<int> bfs_order;
  const int id_class = class_of(Word());
  bfs_id[static_cast<std::size_t>(id_class)] = 0;
  bfs_order.push_back(id_class);
  const int inv_class = class_of(Word::of({Generator::inv}));
  const int idem_class = class_of(Word::of({Generator::idem}));
  for (std::size_t next = 0; next < bfs_order.size(); ++next) {
    for (int g : {inv_class, idem_class}) {
      int to = table[static_cast<std::size_t>(bfs_order[next]) * n +
                     static_cast<std::size_t>(g)];
      if (bfs_id[static_cast<std::size_t>(to)] == -1) {
        bfs_id[static_cast<std::size_t>(to)] =
            static_cast<int>(bfs_order.size());
        bfs_order.push_back(to);
      }
    }
  }
  if (bfs_order.size() != n) {
    return Undetermined{"some classes are not generated by D and B at this "
                        "bound"};
  }

  FiniteMonoid m;
  m.elements.resize(n);
  m.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    m.elements[static_cast<std::size_t>(bfs_id[i])] = reps[i];
    for (std::size_t j = 0; j < n; ++j) {
      m.table[static_cast<std::size_t>(bfs_id[i]) * n +
              static_cast<std::size_t>(bfs_id[j])] =
          bfs_id[static_cast<std::size_t>(table[i * n + j])];
    }
  }
  m.identity = 0;
  m.gen_inv = bfs_id[static_cast<std::size_t>(inv_class)];
  m.gen_idem = bfs_id[static_cast<std::size_t>(idem_class)];
  return m;
}

}  // namespace pim
