#include "hnnkit/presentations/word.hpp"

#include <algorithm>

namespace hnnkit::pres {

std::vector<Letter> free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word Word::generator(int g, int power) {
  Word w;
  const Letter l = letter(g, power < 0);
  w.letters_.assign(static_cast<std::size_t>(power < 0 ? -power : power), l);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::power(int n) const {
  const Word base = n < 0 ? inverse() : *this;
  std::vector<Letter> out;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return Word(out);
}

Word Word::cyclically_reduced() const {
  std::size_t i = 0, j = letters_.size();
  while (j - i >= 2 && letters_[i] == -letters_[j - 1]) {
    ++i;
    --j;
  }
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(i), letters_.begin() + static_cast<std::ptrdiff_t>(j));
  return w;
}

Word Word::rotated(std::size_t k) const {
  Word w;
  if (letters_.empty()) return w;
  k %= letters_.size();
  w.letters_.reserve(letters_.size());
  w.letters_.insert(w.letters_.end(), letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end());
  w.letters_.insert(w.letters_.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k));
  return w;
}

Word Word::cyclic_canonical() const {
  const Word core = cyclically_reduced();
  if (core.empty()) return core;
  Word best = core;
  const Word inv = core.inverse();
  for (std::size_t k = 0; k < core.size(); ++k) {
    best = std::min(best, core.rotated(k));
    best = std::min(best, inv.rotated(k));
  }
  return best;
}

Word Word::substitute(std::span<const Word> images) const {
  std::vector<Letter> out;
  for (Letter l : letters_) {
    const Word& img = images[static_cast<std::size_t>(generator_of(l))];
    if (l > 0) {
      out.insert(out.end(), img.letters_.begin(), img.letters_.end());
    } else {
      for (auto it = img.letters_.rbegin(); it != img.letters_.rend(); ++it) out.push_back(-*it);
    }
  }
  return Word(out);
}

int Word::exponent_sum(int g) const {
  int s = 0;
  for (Letter l : letters_)
    if (generator_of(l) == g) s += l > 0 ? 1 : -1;
  return s;
}

std::size_t Word::occurrences(int g) const {
  return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(),
                                                [g](Letter l) { return generator_of(l) == g; }));
}

int Word::generator_bound() const {
  int b = 0;
  for (Letter l : letters_) b = std::max(b, generator_of(l) + 1);
  return b;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  for (Letter l : b.letters_) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  Word w;
  w.letters_ = std::move(out);
  return w;
}

}  // namespace hnnkit::pres
