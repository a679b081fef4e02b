#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace hnnkit::pres {

/// A signed generator: generator g (0-based) is +(g+1), its inverse -(g+1).
using Letter = int;

inline Letter letter(int generator, bool inverse = false) { return inverse ? -(generator + 1) : generator + 1; }
inline int generator_of(Letter l) { return (l > 0 ? l : -l) - 1; }

/// Free reduction of an arbitrary letter sequence.
std::vector<Letter> free_reduce(std::span<const Letter> letters);

/// A freely reduced word in the free group on the generators.
class Word {
 public:
  Word() = default;
  /// Freely reduces the given letters.
  explicit Word(std::span<const Letter> letters) : letters_(free_reduce(letters)) {}
  Word(std::initializer_list<Letter> letters) : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

  static Word generator(int g, int power = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word power(int n) const;
  /// The cyclically reduced core (drops a conjugating prefix/suffix pair).
  Word cyclically_reduced() const;
  /// Rotation starting at position k (only meaningful for cyclically reduced words).
  Word rotated(std::size_t k) const;
  /// Least rotation of this word or of its inverse; canonical for a
  /// cyclically reduced relator up to conjugation and inversion.
  Word cyclic_canonical() const;

  /// Replaces every generator g by images[g].
  Word substitute(std::span<const Word> images) const;
  int exponent_sum(int g) const;
  std::size_t occurrences(int g) const;
  /// Largest generator index used plus one.
  int generator_bound() const;

  friend Word operator*(const Word& a, const Word& b);
  friend auto operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const Word& a, const Word& b) = default;

 private:
  std::vector<Letter> letters_;
};

}  // namespace hnnkit::pres
