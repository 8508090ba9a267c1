#ifndef PIM_WORD_HPP_
#define PIM_WORD_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>

namespace pim {

/// The two generators of a strict 2-PIM: the involution (letter 'D', with
/// D * D = Id) and the idempotent (letter 'B', with B * B = B).
enum class Generator : char { inv = 'D', idem = 'B' };

constexpr char letter(Generator g) {
  return static_cast<char>(g);
}

/// A word over {D, B}.  The empty word is the identity.  Words are immutable
/// values; all operations on them are pure.
class Word {
 public:
  Word() = default;

  /// Validating constructor; accepts only 'D' and 'B'.
  explicit Word(std::string letters);

  /// Parses the CLI text form: a (possibly empty) string over {D, B}.
  static Word parse(std::string_view text);

  static Word of(std::initializer_list<Generator> gens);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  Generator at(std::size_t i) const {
    return static_cast<Generator>(letters_[i]);
  }
  const std::string& str() const { return letters_; }

  friend Word operator+(const Word& u, const Word& v) {
    return Word(unchecked_t{}, u.letters_ + v.letters_);
  }
  friend Word operator+(const Word& u, Generator g) {
    return Word(unchecked_t{}, u.letters_ + letter(g));
  }
  friend Word operator+(Generator g, const Word& u) {
    return Word(unchecked_t{}, letter(g) + u.letters_);
  }

  auto operator<=>(const Word&) const = default;

 private:
  struct unchecked_t {};
  Word(unchecked_t, std::string letters) : letters_(std::move(letters)) {}

  std::string letters_;

  friend Word quasi_reduce(const Word&);
  friend Word repeated(const Word&, int);
};

/// The canonical shape B^d (DB)^k D^f of a quasi-reduced word, with
/// d, f in {0, 1} and k >= 0.
struct CanonicalShape {
  int d = 0;
  int k = 0;
  int f = 0;
  auto operator<=>(const CanonicalShape&) const = default;
};

/// Exhaustively applies DD -> Id and BB -> B; the result is the unique
/// quasi-reduced word equivalent to `w` under the base relations.
Word quasi_reduce(const Word& w);

/// Shape of quasi_reduce(w); inverse of to_word on quasi-reduced words.
CanonicalShape shape_of(const Word& w);

/// Literal expansion of B^d (DB)^k D^f.
Word to_word(const CanonicalShape& s);

/// w concatenated with itself `times` times (0 gives the empty word).
Word repeated(const Word& w, int times);

/// (DB)^k and (BD)^k.
Word db_power(int k);
Word bd_power(int k);

/// Length-then-lexicographic order, used for deterministic representatives.
bool shortlex_less(const Word& a, const Word& b);

/// Display form: "e" for the empty word, the letter string otherwise.
std::string display(const Word& w);

}  // namespace pim

#endif  // PIM_WORD_HPP_
