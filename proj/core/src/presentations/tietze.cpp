#include "hnnkit/presentations/tietze.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace hnnkit::pres {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = w.size();
    for (Letter l : w.letters()) h = h * 1000003u ^ static_cast<std::size_t>(l + 4096);
    return h;
  }
};

Word suffix(const Word& w, std::size_t k) {
  return Word(std::span<const Letter>(w.letters().data() + k, w.size() - k));
}

std::size_t common_prefix(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

// A rotation of a relator or its inverse: word = d^-1 * r^sign * d.
struct CyclicForm {
  Word word;
  std::size_t relator;
  int sign;
  Word d;
};

std::vector<CyclicForm> cyclic_forms(const std::vector<Word>& relators) {
  std::set<Word> seen;
  std::vector<CyclicForm> out;
  for (std::size_t i = 0; i < relators.size(); ++i) {
    const Word& r = relators[i];
    const Word core = r.cyclically_reduced();
    // r = e * core * e^-1
    const Word e(std::span<const Letter>(r.letters().data(), (r.size() - core.size()) / 2));
    for (int sign : {1, -1}) {
      const Word base = sign > 0 ? core : core.inverse();
      for (std::size_t k = 0; k < base.size(); ++k) {
        Word rot = base.rotated(k);
        if (!seen.insert(rot).second) continue;
        const Word x(std::span<const Letter>(base.letters().data(), k));
        out.push_back(CyclicForm{std::move(rot), i, sign, e * x});
      }
    }
  }
  return out;
}

// A product of conjugates c * atom^sign * c^-1, where atom is either the
// word under test (relator == npos) or a relator.
constexpr std::size_t kTarget = static_cast<std::size_t>(-1);
using Expression = std::vector<ConjugateFactor>;

void conjugate_expression(Expression& e, const Word& c) {  // S -> c^-1 S c
  const Word ci = c.inverse();
  for (auto& f : e) f.conjugator = ci * f.conjugator;
}

void invert_expression(Expression& e) {
  std::reverse(e.begin(), e.end());
  for (auto& f : e) f.sign = -f.sign;
}

// Cyclic reduction followed by the least rotation of the word or its
// inverse, mirroring Word::cyclic_canonical while updating `e`.
Word normalize(const Word& y, Expression* e) {
  const Word z = y.cyclically_reduced();
  if (e) conjugate_expression(*e, Word(std::span<const Letter>(y.letters().data(), (y.size() - z.size()) / 2)));
  if (z.empty()) return z;
  Word best = z;
  bool best_inverted = false;
  std::size_t best_k = 0;
  const Word zi = z.inverse();
  for (std::size_t k = 0; k < z.size(); ++k) {
    for (bool inverted : {false, true}) {
      Word cand = (inverted ? zi : z).rotated(k);
      if (cand < best) {
        best = std::move(cand);
        best_inverted = inverted;
        best_k = k;
      }
    }
  }
  if (e) {
    if (best_inverted) invert_expression(*e);
    const Word& base = best_inverted ? zi : z;
    conjugate_expression(*e, Word(std::span<const Letter>(base.letters().data(), best_k)));
  }
  return best;
}

std::vector<Word> renumber_images(int generators, int eliminated, const Word& definition) {
  std::vector<Word> images;
  for (int h = 0; h < generators; ++h) {
    if (h < eliminated)
      images.push_back(Word::generator(h));
    else if (h == eliminated)
      images.push_back(Word());  // placeholder
    else
      images.push_back(Word::generator(h - 1));
  }
  images[static_cast<std::size_t>(eliminated)] = definition.substitute(images);
  return images;
}

// Records moves and keeps the generator images in step with them.
class Simplifier {
 public:
  Simplifier(const Presentation& p, SimplifyOptions options) : options_(options) {
    trace_.start = p;
    current_ = p;
    for (int g = 0; g < p.generator_count(); ++g) {
      trace_.forward.push_back(Word::generator(g));
      trace_.backward.push_back(Word::generator(g));
    }
  }

  SimplifyResult run() {
    for (;;) {
      if (remove_duplicates()) continue;
      if (eliminate_generator()) continue;
      if (shorten_by_substitution()) continue;
      if (options_.remove_consequences && remove_consequence()) continue;
      break;
    }
    trace_.end = current_;
    return SimplifyResult{current_, trace_};
  }

 private:
  void apply(TietzeMove move) {
    if (move.kind == MoveKind::EliminateGenerator) {
      const int n = current_.generator_count();
      auto images = renumber_images(n, move.generator, move.word);
      for (auto& w : trace_.forward) w = w.substitute(images);
      trace_.backward.erase(trace_.backward.begin() + move.generator);
    }
    current_ = apply_move(current_, move);
    trace_.moves.push_back(std::move(move));
  }

  bool remove_duplicates() {
    std::set<Word> seen;
    const auto& rels = current_.relators();
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (!seen.insert(rels[i].cyclic_canonical()).second) {
        apply(TietzeMove{MoveKind::RemoveRelator, i, -1, {}, "duplicate"});
        return true;
      }
    }
    return false;
  }

  bool eliminate_generator() {
    const auto& rels = current_.relators();
    const int n = current_.generator_count();
    bool found = false;
    std::tuple<long, std::size_t, std::size_t, int> best{};
    for (std::size_t i = 0; i < rels.size(); ++i) {
      for (int g = 0; g < n; ++g) {
        if (rels[i].occurrences(g) != 1) continue;
        long elsewhere = 0;
        for (std::size_t j = 0; j < rels.size(); ++j)
          if (j != i) elsewhere += static_cast<long>(rels[j].occurrences(g));
        const long growth = elsewhere * (static_cast<long>(rels[i].size()) - 2) - static_cast<long>(rels[i].size());
        auto key = std::make_tuple(growth, rels[i].size(), i, -g);  // later generators go first
        if (!found || key < best) {
          best = key;
          found = true;
        }
      }
    }
    if (!found) return false;
    const auto [growth, len, i, neg_g] = best;
    const int g = -neg_g;
    const Word& r = rels[i];
    std::size_t pos = 0;
    while (generator_of(r[pos]) != g) ++pos;
    const Word rot = r.rotated(pos);
    const Word rest = suffix(rot, 1);
    // g^e * rest = 1
    const Word definition = rot[0] > 0 ? rest.inverse() : rest;
    apply(TietzeMove{MoveKind::EliminateGenerator, i, g, definition, "generator occurs once"});
    return true;
  }

  bool shorten_by_substitution() {
    const auto& rels = current_.relators();
    std::size_t best_gain = 0;
    std::size_t best_i = 0;
    Word best_word;
    for (std::size_t j = 0; j < rels.size(); ++j) {
      const auto forms = cyclic_forms({rels[j]});
      for (std::size_t i = 0; i < rels.size(); ++i) {
        if (i == j) continue;
        const Word& r = rels[i];
        for (std::size_t p = 0; p < r.size(); ++p) {
          const Word rot = r.rotated(p);
          for (const auto& cyclic : forms) {
            const Word& form = cyclic.word;
            const std::size_t l = common_prefix(rot, form);
            if (2 * l <= form.size()) continue;
            // u = form[0:l] equals v^{-1} with v = form[l:]
            Word candidate = (suffix(form, l).inverse() * suffix(rot, l)).cyclically_reduced();
            if (candidate.size() >= r.size()) continue;
            const std::size_t gain = r.size() - candidate.size();
            if (gain > best_gain) {
              best_gain = gain;
              best_i = i;
              best_word = std::move(candidate);
            }
          }
        }
      }
    }
    if (best_gain == 0) return false;
    if (best_word.empty())
      apply(TietzeMove{MoveKind::RemoveRelator, best_i, -1, {}, "reduces to the identity by substitution"});
    else
      apply(TietzeMove{MoveKind::ReplaceRelator, best_i, -1, best_word, "shortened by substitution"});
    return true;
  }

  bool remove_consequence() {
    const auto& rels = current_.relators();
    for (std::size_t k = rels.size(); k-- > 0;) {
      if (spent_ >= options_.total_budget) {
        trace_.budget_exhausted = true;
        return false;
      }
      std::vector<Word> others;
      for (std::size_t j = 0; j < rels.size(); ++j)
        if (j != k) others.push_back(rels[j]);
      const std::size_t budget = std::min(options_.consequence_budget, options_.total_budget - spent_);
      auto search = prove_consequence(others, rels[k], budget);
      spent_ += search.states;
      if (search.proven) {
        for (auto& f : search.certificate)
          if (f.relator >= k) ++f.relator;
        apply(TietzeMove{MoveKind::RemoveRelator, k, -1, {}, "consequence of the remaining relators",
                         std::move(search.certificate)});
        return true;
      }
      if (search.states >= budget) trace_.budget_exhausted = true;
    }
    return false;
  }

  SimplifyOptions options_;
  Presentation current_;
  TietzeTrace trace_;
  std::size_t spent_ = 0;
};

}  // namespace

Presentation apply_move(const Presentation& p, const TietzeMove& move) {
  std::vector<Word> rels = p.relators();
  std::vector<std::string> names = p.generator_names();
  switch (move.kind) {
    case MoveKind::RemoveRelator:
      rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(move.relator));
      break;
    case MoveKind::AddRelator:
      rels.push_back(move.word);
      break;
    case MoveKind::ReplaceRelator:
      rels[move.relator] = move.word;
      break;
    case MoveKind::EliminateGenerator: {
      if (move.word.occurrences(move.generator) != 0)
        throw std::invalid_argument("apply_move: definition uses the eliminated generator");
      rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(move.relator));
      auto images = renumber_images(p.generator_count(), move.generator, move.word);
      for (auto& r : rels) r = r.substitute(images);
      names.erase(names.begin() + move.generator);
      break;
    }
  }
  return Presentation(std::move(names), std::move(rels));
}

Presentation replay(const Presentation& start, const std::vector<TietzeMove>& moves) {
  Presentation p = start;
  for (const auto& m : moves) p = apply_move(p, m);
  return p;
}

bool trace_is_consistent(const TietzeTrace& trace) {
  Presentation p = trace.start;
  for (const auto& m : trace.moves) {
    if (!m.certificate.empty()) {
      const auto& rels = p.relators();
      if (m.kind != MoveKind::RemoveRelator || m.relator >= rels.size()) return false;
      for (const auto& f : m.certificate)
        if (f.relator == m.relator) return false;
      if (!verify_consequence(rels, rels[m.relator], m.certificate)) return false;
    }
    p = apply_move(p, m);
  }
  if (!(p == trace.end)) return false;
  if (trace.forward.size() != static_cast<std::size_t>(trace.start.generator_count())) return false;
  if (trace.backward.size() != static_cast<std::size_t>(trace.end.generator_count())) return false;
  for (int j = 0; j < trace.end.generator_count(); ++j) {
    Word round = trace.backward[static_cast<std::size_t>(j)].substitute(trace.forward);
    if (!(round == Word::generator(j))) return false;
  }
  return true;
}

SimplifyResult tietze_simplify(const Presentation& p, SimplifyOptions options) {
  return Simplifier(p, options).run();
}

ConsequenceSearch prove_consequence(const std::vector<Word>& relators, const Word& w, std::size_t budget,
                                    std::size_t extra_length) {
  ConsequenceSearch result;
  const auto forms = cyclic_forms(relators);
  std::size_t longest = 0;
  for (const auto& f : forms) longest = std::max(longest, f.word.size());

  struct Node {
    Word word;
    std::int64_t parent;
    std::size_t rotation;
    std::size_t form;
  };
  std::vector<Node> nodes;
  std::unordered_map<Word, std::size_t, WordHash> seen;

  // Replays the path to `leaf`, turning each rewrite into relator factors.
  auto certificate = [&](std::size_t leaf) {
    std::vector<std::size_t> path;
    for (std::int64_t n = static_cast<std::int64_t>(leaf); n >= 0; n = nodes[static_cast<std::size_t>(n)].parent)
      path.push_back(static_cast<std::size_t>(n));
    std::reverse(path.begin(), path.end());
    Expression e{ConjugateFactor{kTarget, 1, Word()}};
    normalize(w, &e);
    for (std::size_t i = 1; i < path.size(); ++i) {
      const Node& parent = nodes[path[i - 1]];
      const Node& node = nodes[path[i]];
      conjugate_expression(e, Word(std::span<const Letter>(parent.word.letters().data(), node.rotation)));
      const CyclicForm& f = forms[node.form];
      e.insert(e.begin(), ConjugateFactor{f.relator, -f.sign, f.d.inverse()});
      const Word rot = parent.word.rotated(node.rotation);
      normalize(f.word.inverse() * rot, &e);
    }
    // Now 1 = A * (c w^s c^-1) * B; solve for w.
    auto it = std::find_if(e.begin(), e.end(), [](const ConjugateFactor& f) { return f.relator == kTarget; });
    const Word c = it->conjugator;
    const int s = it->sign;
    Expression a(e.begin(), it), b(it + 1, e.end());
    Expression out;
    if (s > 0) {  // w = c^-1 A^-1 B^-1 c
      invert_expression(a);
      invert_expression(b);
      out = a;
      out.insert(out.end(), b.begin(), b.end());
    } else {  // w = c^-1 B A c
      out = b;
      out.insert(out.end(), a.begin(), a.end());
    }
    conjugate_expression(out, c);
    return out;
  };

  const Word start = normalize(w, nullptr);
  nodes.push_back(Node{start, -1, 0, 0});
  seen.emplace(start, 0);
  if (start.empty()) {
    result.proven = true;
    result.certificate = certificate(0);
    return result;
  }
  const std::size_t cap = start.size() + (extra_length ? extra_length : longest);

  using Item = std::pair<std::size_t, std::size_t>;  // (length, node)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  open.emplace(start.size(), 0);
  while (!open.empty() && result.states < budget) {
    const std::size_t id = open.top().second;
    open.pop();
    ++result.states;
    const Word cur = nodes[id].word;
    for (std::size_t p = 0; p < cur.size(); ++p) {
      const Word rot = cur.rotated(p);
      for (std::size_t fi = 0; fi < forms.size(); ++fi) {
        const Word& form = forms[fi].word;
        if (form.empty() || form[0] != rot[0]) continue;
        const std::size_t l = common_prefix(rot, form);
        for (std::size_t k = 1; k <= l; ++k) {
          Word next = normalize(suffix(form, k).inverse() * suffix(rot, k), nullptr);
          if (next.size() > cap) continue;
          auto [pos, inserted] = seen.emplace(next, nodes.size());
          if (!inserted) continue;
          nodes.push_back(Node{next, static_cast<std::int64_t>(id), p, fi});
          if (next.empty()) {
            result.proven = true;
            result.certificate = certificate(nodes.size() - 1);
            return result;
          }
          open.emplace(next.size(), nodes.size() - 1);
        }
      }
    }
  }
  return result;
}

bool verify_consequence(const std::vector<Word>& relators, const Word& w, const std::vector<ConjugateFactor>& certificate) {
  Word product;
  for (const auto& f : certificate) {
    if (f.relator >= relators.size()) return false;
    product = product * f.conjugator * relators[f.relator].power(f.sign) * f.conjugator.inverse();
  }
  return product == w;
}

}  // namespace hnnkit::pres
