#include "hnnkit/presentations/presentation.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "hnnkit/error.hpp"
#include "hnnkit/grphom/smith.hpp"

namespace hnnkit::pres {

namespace {

std::vector<Word> normalize_relators(const std::vector<Word>& in) {
  std::vector<Word> out;
  for (const auto& r : in) {
    Word c = r.cyclically_reduced();
    if (!c.empty()) out.push_back(std::move(c));
  }
  return out;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

// Recursive-descent reader shared by presentation and word parsing.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected generator name");
    std::string s;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      s += text_[pos_];
      advance();
    }
    return s;
  }
  int integer() {
    skip_space();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      advance();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer exponent");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) fail("exponent too large");
      advance();
    }
    return static_cast<int>(neg ? -v : v);
  }

  // product := factor (('*')? factor)*
  Word product(const std::vector<std::string>& names) {
    Word w = factor(names);
    for (;;) {
      char c = peek();
      if (c == '*') {
        advance();
        w = w * factor(names);
      } else if (is_ident_start(c) || c == '(' || c == '[' || c == '1') {
        w = w * factor(names);
      } else {
        return w;
      }
    }
  }

  Word factor(const std::vector<std::string>& names) {
    Word base;
    char c = peek();
    if (c == '(') {
      advance();
      base = product(names);
      expect(')');
    } else if (c == '[') {
      advance();
      Word x = product(names);
      expect(',');
      Word y = product(names);
      expect(']');
      base = x.inverse() * y.inverse() * x * y;
    } else if (c == '1') {
      advance();
    } else {
      const int col = column_;
      const int line = line_;
      std::string name = identifier();
      int idx = -1;
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) idx = static_cast<int>(i);
      if (idx < 0) throw ParseError("unknown generator '" + name + "'", line, col);
      base = Word::generator(idx);
    }
    if (accept('^')) base = base.power(integer());
    return base;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, line_, column_); }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)), relators_(normalize_relators(relators)) {
  for (const auto& r : relators_)
    if (r.generator_bound() > generator_count())
      throw std::invalid_argument("Presentation: relator uses an undeclared generator");
}

Presentation::Presentation(int generators, std::vector<Word> relators) {
  for (int i = 0; i < generators; ++i) names_.push_back("x" + std::to_string(i));
  *this = Presentation(names_, std::move(relators));
}

std::size_t Presentation::total_length() const {
  std::size_t n = 0;
  for (const auto& r : relators_) n += r.size();
  return n;
}

int Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Word Presentation::word(std::string_view text) const {
  Reader reader(text);
  if (reader.at_end()) return {};
  Word w = reader.product(names_);
  if (!reader.at_end()) reader.fail("trailing characters in word");
  return w;
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const int run = static_cast<int>(j - i);
    const int g = generator_of(w[i]);
    const int exponent = w[i] > 0 ? run : -run;
    if (!first) os << '*';
    first = false;
    os << (g < generator_count() ? names_[static_cast<std::size_t>(g)] : "x" + std::to_string(g));
    if (exponent != 1) os << '^' << exponent;
    i = j;
  }
  return os.str();
}

Presentation parse_presentation(std::string_view text) {
  Reader reader(text);
  reader.expect('<');
  std::vector<std::string> names;
  if (reader.peek() != '|') {
    names.push_back(reader.identifier());
    while (reader.accept(',')) names.push_back(reader.identifier());
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) reader.fail("duplicate generator '" + names[i] + "'");
  reader.expect('|');
  std::vector<Word> relators;
  if (reader.peek() != '>') {
    do {
      Word lhs = reader.product(names);
      bool relation = false;
      while (reader.accept('=')) {
        Word rhs = reader.product(names);
        relators.push_back(lhs * rhs.inverse());
        lhs = rhs;
        relation = true;
      }
      if (!relation) relators.push_back(lhs);
    } while (reader.accept(','));
  }
  reader.expect('>');
  if (!reader.at_end()) reader.fail("trailing characters after presentation");
  return Presentation(std::move(names), std::move(relators));
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "< ";
  for (int i = 0; i < p.generator_count(); ++i) os << (i ? ", " : "") << p.generator_names()[static_cast<std::size_t>(i)];
  os << " | ";
  for (std::size_t i = 0; i < p.relators().size(); ++i) os << (i ? ", " : "") << p.format_word(p.relators()[i]);
  os << " >";
  return os.str();
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  const auto n = static_cast<std::size_t>(p.generator_count());
  const std::size_t m = p.relators().size();
  grphom::IntMatrix a(n, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t g = 0; g < n; ++g) a(g, j) = p.relators()[j].exponent_sum(static_cast<int>(g));
  auto s = grphom::smith_normal_form(std::move(a));
  return AbelianInvariants::from_diagonal(s.diagonal, n - s.diagonal.size());
}

HomCheck verify_hom(const Presentation& source, const std::vector<Word>& images, const WordOracle& is_identity) {
  if (images.size() != static_cast<std::size_t>(source.generator_count()))
    throw std::invalid_argument("verify_hom: image count differs from generator count");
  for (std::size_t i = 0; i < source.relators().size(); ++i) {
    if (!is_identity(source.relators()[i].substitute(images))) return HomCheck{false, i};
  }
  return HomCheck{true, std::nullopt};
}

}  // namespace hnnkit::pres
