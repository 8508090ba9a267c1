#include "pim/word.hpp"

#include "pim/errors.hpp"

namespace pim {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (c != 'D' && c != 'B') {
      throw SyntaxError("invalid letter '" + std::string(1, c) +
                        "' in word (expected 'D' or 'B')");
    }
  }
}

Word Word::parse(std::string_view text) {
  return Word(std::string(text));
}

Word Word::of(std::initializer_list<Generator> gens) {
  std::string s;
  s.reserve(gens.size());
  for (Generator g : gens) {
    s.push_back(letter(g));
  }
  return Word(unchecked_t{}, std::move(s));
}

Word quasi_reduce(const Word& w) {
  // Single left-to-right scan with a stack; cancellation of DD can expose a
  // new redex with the previous letter, which the stack handles.
  std::string out;
  out.reserve(w.size());
  for (char c : w.str()) {
    if (!out.empty() && out.back() == c) {
      if (c == 'D') {
        out.pop_back();  // DD -> Id
      }
      continue;  // BB -> B
    }
    out.push_back(c);
  }
  return Word(Word::unchecked_t{}, std::move(out));
}

CanonicalShape shape_of(const Word& w) {
  Word q = quasi_reduce(w);
  CanonicalShape s;
  if (q.empty()) {
    return s;
  }
  s.d = q.str().front() == 'B' ? 1 : 0;
  s.f = q.str().back() == 'D' ? 1 : 0;
  s.k = static_cast<int>(q.size() - s.d - s.f) / 2;
  return s;
}

Word to_word(const CanonicalShape& s) {
  if ((s.d != 0 && s.d != 1) || (s.f != 0 && s.f != 1) || s.k < 0) {
    throw Error("malformed canonical shape");
  }
  std::string out;
  out.reserve(s.d + 2 * s.k + s.f);
  if (s.d) {
    out.push_back('B');
  }
  for (int i = 0; i < s.k; ++i) {
    out += "DB";
  }
  if (s.f) {
    out.push_back('D');
  }
  return Word(std::move(out));
}

Word repeated(const Word& w, int times) {
  std::string out;
  out.reserve(w.size() * static_cast<std::size_t>(times > 0 ? times : 0));
  for (int i = 0; i < times; ++i) {
    out += w.str();
  }
  return Word(Word::unchecked_t{}, std::move(out));
}

Word db_power(int k) {
  return to_word({0, k, 0});
}

Word bd_power(int k) {
  return k == 0 ? Word() : to_word({1, k - 1, 1});
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a.str() < b.str();
}

std::string display(const Word& w) {
  return w.empty() ? "e" : w.str();
}

}  // namespace pim
