#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hnnkit/abelian_invariants.hpp"
#include "hnnkit/presentations/word.hpp"

namespace hnnkit::pres {

/// A finite presentation. Relators are kept cyclically reduced and nonempty.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);
  /// Generators named x0, x1, ...
  Presentation(int generators, std::vector<Word> relators);

  int generator_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t total_length() const;

  /// Index of a named generator, or -1.
  int generator_index(std::string_view name) const;
  /// Parses a word in this presentation's generators ("a^2*t*a^-1").
  Word word(std::string_view text) const;
  std::string format_word(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// Reads `< a, t | a^8, a^-2*t*a*t*a^2*t^-2 >`. Relators may be written as
/// relations `u = v` (or chains `u = v = w`), products may use `*` or
/// juxtaposition, and `(..)^n`, `[x, y]` and `1` are accepted.
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);

/// Smith normal form of the exponent-sum matrix.
AbelianInvariants abelian_invariants(const Presentation& p);

/// Decides whether a word over the target generators is the identity.
using WordOracle = std::function<bool(const Word&)>;

struct HomCheck {
  bool ok = false;
  std::optional<std::size_t> failing_relator;
};

/// Passes iff every relator of `source`, rewritten through `images`,
/// is declared trivial by `is_identity`.
HomCheck verify_hom(const Presentation& source, const std::vector<Word>& images, const WordOracle& is_identity);

/// Oracle for the free group: a word is trivial iff it freely reduces to nothing.
inline bool free_group_identity(const Word& w) { return w.empty(); }

}  // namespace hnnkit::pres
