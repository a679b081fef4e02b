#include "hnnkit/fingrp/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "hnnkit/error.hpp"

namespace hnnkit::fingrp {

namespace {

std::vector<bool> membership(int n, const Subgroup& h) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (Element e : h.elements) in[static_cast<std::size_t>(e)] = true;
  return in;
}

Subgroup from_flags(const std::vector<bool>& in) {
  Subgroup h;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) h.elements.push_back(static_cast<Element>(i));
  return h;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<Element> table, std::vector<Element> generators,
                         std::vector<std::string> generator_names, std::optional<pres::Presentation> source)
    : table_(std::move(table)),
      generators_(std::move(generators)),
      names_(std::move(generator_names)),
      source_(std::move(source)) {
  std::size_t size = table_.size();
  n_ = 0;
  while (static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) < size) ++n_;
  if (n_ == 0 || static_cast<std::size_t>(n_ * n_) != size) throw Error("group table is not square");
  if (names_.size() != generators_.size()) throw Error("generator names do not match generators");
  for (Element g : generators_)
    if (g < 0 || g >= n_) throw Error("generator out of range");
  for (int a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw Error("element 0 is not the identity");
    std::vector<bool> row(static_cast<std::size_t>(n_)), col(static_cast<std::size_t>(n_));
    for (int b = 0; b < n_; ++b) {
      Element r = mul(a, b), c = mul(b, a);
      if (r < 0 || r >= n_ || c < 0 || c >= n_ || row[static_cast<std::size_t>(r)] || col[static_cast<std::size_t>(c)])
        throw Error("group table is not a latin square");
      row[static_cast<std::size_t>(r)] = col[static_cast<std::size_t>(c)] = true;
    }
  }
  inverse_.assign(static_cast<std::size_t>(n_), 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) inverse_[static_cast<std::size_t>(a)] = b;
  orders_.assign(static_cast<std::size_t>(n_), 1);
  for (int a = 1; a < n_; ++a) {
    Element x = a;
    int k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    orders_[static_cast<std::size_t>(a)] = k;
  }

  words_.assign(static_cast<std::size_t>(n_), pres::Word());
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  seen[0] = true;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    Element e = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < generators_.size(); ++g) {
      for (bool inverse : {false, true}) {
        Element s = inverse ? inv(generators_[g]) : generators_[g];
        Element f = mul(e, s);
        if (seen[static_cast<std::size_t>(f)]) continue;
        seen[static_cast<std::size_t>(f)] = true;
        words_[static_cast<std::size_t>(f)] =
            words_[static_cast<std::size_t>(e)] * pres::Word{pres::letter(static_cast<int>(g), inverse)};
        queue.push_back(f);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw Error("generators do not generate the group");
}

Element FiniteGroup::power(Element a, long k) const {
  int m = element_order(a);
  long r = ((k % m) + m) % m;
  Element x = 0;
  for (long i = 0; i < r; ++i) x = mul(x, a);
  return x;
}

Element FiniteGroup::evaluate(const pres::Word& w) const {
  Element x = 0;
  for (pres::Letter l : w.letters()) {
    int g = pres::generator_of(l);
    if (g >= static_cast<int>(generators_.size())) throw Error("word uses an unknown generator");
    Element s = generators_[static_cast<std::size_t>(g)];
    x = mul(x, l > 0 ? s : inv(s));
  }
  return x;
}

Element FiniteGroup::element(std::string_view text) const {
  pres::Presentation names(names_, {});
  return evaluate(names.word(text));
}

std::string FiniteGroup::name_of(Element e) const {
  pres::Presentation names(names_, {});
  return names.format_word(word_of(e));
}

bool Subgroup::contains(Element e) const { return std::binary_search(elements.begin(), elements.end(), e); }

bool FiniteHom::is_injective() const {
  std::vector<bool> hit(static_cast<std::size_t>(target->order()), false);
  for (Element e : map) {
    if (hit[static_cast<std::size_t>(e)]) return false;
    hit[static_cast<std::size_t>(e)] = true;
  }
  return true;
}

bool FiniteHom::is_identity() const {
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] != static_cast<Element>(i)) return false;
  return true;
}

Subgroup FiniteHom::image() const {
  Subgroup h{map};
  std::sort(h.elements.begin(), h.elements.end());
  h.elements.erase(std::unique(h.elements.begin(), h.elements.end()), h.elements.end());
  return h;
}

bool FiniteHom::is_homomorphism() const {
  int n = source->order();
  if (static_cast<int>(map.size()) != n) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (map[static_cast<std::size_t>(source->mul(a, b))] != target->mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

FiniteHom compose(const FiniteHom& g, const FiniteHom& f) {
  if (f.target->table() != g.source->table()) throw Error("composition of incompatible homomorphisms");
  FiniteHom h{f.source, g.target, {}};
  h.map.reserve(f.map.size());
  for (Element e : f.map) h.map.push_back(g(e));
  return h;
}

FiniteHom inverse(const FiniteHom& f) {
  if (f.source->order() != f.target->order() || !f.is_injective()) throw Error("homomorphism is not invertible");
  FiniteHom h{f.target, f.source, std::vector<Element>(f.map.size())};
  for (std::size_t i = 0; i < f.map.size(); ++i) h.map[static_cast<std::size_t>(f.map[i])] = static_cast<Element>(i);
  return h;
}

FiniteHom identity_hom(GroupPtr g) {
  std::vector<Element> map(static_cast<std::size_t>(g->order()));
  std::iota(map.begin(), map.end(), 0);
  return {g, g, std::move(map)};
}

FiniteHom inner_automorphism(GroupPtr group, Element g) {
  FiniteHom h{group, group, std::vector<Element>(static_cast<std::size_t>(group->order()))};
  for (int x = 0; x < group->order(); ++x) h.map[static_cast<std::size_t>(x)] = group->conj(g, x);
  return h;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> generators) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  in[0] = true;
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : generators) {
      Element x = g.mul(queue[i], s);
      if (!in[static_cast<std::size_t>(x)]) {
        in[static_cast<std::size_t>(x)] = true;
        queue.push_back(x);
      }
    }
  }
  return from_flags(in);
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup h;
  h.elements.resize(static_cast<std::size_t>(g.order()));
  std::iota(h.elements.begin(), h.elements.end(), 0);
  return h;
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> elements) {
  std::vector<Element> conjugates;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Element e : elements)
    for (int x = 0; x < g.order(); ++x) {
      Element c = g.conj(x, e);
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = true;
        conjugates.push_back(c);
      }
    }
  return generated_subgroup(g, conjugates);
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<Element> commutators;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      Element c = g.commutator(a, b);
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = true;
        commutators.push_back(c);
      }
    }
  return generated_subgroup(g, commutators);
}

Subgroup center(const FiniteGroup& g) {
  Subgroup z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element s : g.generators())
      if (g.mul(a, s) != g.mul(s, a)) {
        central = false;
        break;
      }
    if (central) z.elements.push_back(a);
  }
  return z;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  auto in = membership(g.order(), h);
  for (Element s : g.generators())
    for (Element e : h.elements)
      if (!in[static_cast<std::size_t>(g.conj(s, e))]) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g) {
  const auto& gens = g.generators();
  for (Element a : gens)
    for (Element b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_solvable(const FiniteGroup& g) {
  FiniteGroup current = g;
  while (current.order() > 1) {
    Subgroup d = commutator_subgroup(current);
    if (static_cast<int>(d.order()) == current.order()) return false;
    current = subgroup_as_group(current, d);
  }
  return true;
}

std::vector<Element> small_generating_set(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Element> gens;
  Subgroup current = trivial_subgroup();
  while (current.order() < h.order()) {
    Element best = -1;
    std::size_t best_size = 0;
    for (Element e : h.elements) {
      if (current.contains(e)) continue;
      std::vector<Element> trial = gens;
      trial.push_back(e);
      std::size_t size = generated_subgroup(g, trial).order();
      if (size > best_size) {
        best = e;
        best_size = size;
      }
    }
    gens.push_back(best);
    current = generated_subgroup(g, gens);
  }
  return gens;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int max_order) {
  if (g.order() > max_order) throw BudgetExceeded("subgroup lattice requested for a group of order " + std::to_string(g.order()));
  std::set<Subgroup> found;
  std::vector<Subgroup> cyclic;
  for (int a = 0; a < g.order(); ++a) {
    Element e = a;
    auto c = generated_subgroup(g, std::span<const Element>(&e, 1));
    if (found.insert(c).second) cyclic.push_back(c);
  }
  std::vector<Subgroup> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier) {
      auto gens = small_generating_set(g, h);
      for (const auto& c : cyclic) {
        if (std::includes(h.elements.begin(), h.elements.end(), c.elements.begin(), c.elements.end())) continue;
        auto trial = gens;
        for (Element e : c.elements)
          if (g.element_order(e) == static_cast<int>(c.order())) {
            trial.push_back(e);
            break;
          }
        auto joined = generated_subgroup(g, trial);
        if (found.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
  return out;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  std::size_t n = h.order();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < n; ++i) index[static_cast<std::size_t>(h.elements[i])] = static_cast<int>(i);
  if (h.elements.empty() || h.elements[0] != 0) throw Error("subgroup must contain the identity");
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int k = index[static_cast<std::size_t>(g.mul(h.elements[i], h.elements[j]))];
      if (k < 0) throw Error("element list is not closed under multiplication");
      table[i * n + j] = k;
    }
  std::vector<Element> gens;
  std::vector<std::string> names;
  for (Element e : small_generating_set(g, h)) {
    gens.push_back(index[static_cast<std::size_t>(e)]);
    names.push_back(g.name_of(e));
  }
  return FiniteGroup(std::move(table), std::move(gens), std::move(names));
}

FiniteHom inclusion(GroupPtr parent, GroupPtr sub, const Subgroup& h) {
  if (static_cast<int>(h.order()) != sub->order()) throw Error("subgroup size mismatch");
  return FiniteHom{std::move(sub), std::move(parent), h.elements};
}

AbelianInvariants abelianization(const FiniteGroup& g) {
  Subgroup d = commutator_subgroup(g);
  // Label cosets of G' and count, for each prime power q, the cosets whose
  // q-th power lies in G'.
  std::vector<int> coset(static_cast<std::size_t>(g.order()), -1);
  std::vector<Element> reps;
  for (int a = 0; a < g.order(); ++a) {
    if (coset[static_cast<std::size_t>(a)] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (Element x : d.elements) coset[static_cast<std::size_t>(g.mul(a, x))] = id;
  }
  int quotient = static_cast<int>(reps.size());
  auto in_d = membership(g.order(), d);
  auto count_torsion = [&](long q) {
    int count = 0;
    for (Element r : reps)
      if (in_d[static_cast<std::size_t>(g.power(r, q))]) ++count;
    return count;
  };
  std::vector<Integer> factors;
  int m = quotient;
  for (int p = 2; m > 1; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    // log_p |A[p^k]| for k = 0, 1, ...
    std::vector<int> logs{0};
    long q = 1;
    while (true) {
      q *= p;
      int c = count_torsion(q);
      int l = 0;
      while (c > 1) {
        c /= p;
        ++l;
      }
      if (l == logs.back()) break;
      logs.push_back(l);
    }
    // Factors of order >= p^k number logs[k] - logs[k-1].
    int kmax = static_cast<int>(logs.size()) - 1;
    for (int k = 1; k <= kmax; ++k) {
      int at_least_k = logs[static_cast<std::size_t>(k)] - logs[static_cast<std::size_t>(k - 1)];
      int at_least_next = k < kmax ? logs[static_cast<std::size_t>(k + 1)] - logs[static_cast<std::size_t>(k)] : 0;
      Integer pk = 1;
      for (int i = 0; i < k; ++i) pk *= p;
      for (int i = 0; i < at_least_k - at_least_next; ++i) factors.push_back(pk);
    }
  }
  return AbelianInvariants::from_diagonal(factors);
}

std::optional<std::vector<Element>> extend_to_hom(const FiniteGroup& source, std::span<const Element> generators,
                                                  std::span<const Element> images, const FiniteGroup& target) {
  if (generators.size() != images.size()) throw Error("generator and image counts differ");
  std::vector<Element> map(static_cast<std::size_t>(source.order()), -1);
  map[0] = 0;
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element x = queue[i];
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Element y = source.mul(x, generators[k]);
      Element fy = target.mul(map[static_cast<std::size_t>(x)], images[k]);
      Element& slot = map[static_cast<std::size_t>(y)];
      if (slot < 0) {
        slot = fy;
        queue.push_back(y);
      } else if (slot != fy) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != source.order()) throw Error("elements do not generate the source group");
  return map;
}

std::vector<FiniteHom> homomorphisms(GroupPtr source, GroupPtr target, HomSearchOptions options) {
  auto gens = small_generating_set(*source, whole_group(*source));
  std::vector<std::vector<Element>> candidates;
  std::size_t total = 1;
  for (Element s : gens) {
    std::vector<Element> c;
    int k = source->element_order(s);
    for (int x = 0; x < target->order(); ++x) {
      int m = target->element_order(x);
      if (options.injective_only ? m == k : k % m == 0) c.push_back(x);
    }
    total *= std::max<std::size_t>(c.size(), 1);
    if (total > options.max_candidates) throw BudgetExceeded("homomorphism search exceeds candidate budget");
    candidates.push_back(std::move(c));
  }
  std::vector<FiniteHom> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  std::vector<Element> images(gens.size());
  for (const auto& c : candidates)
    if (c.empty()) return out;
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][pick[i]];
    if (auto map = extend_to_hom(*source, gens, images, *target)) {
      FiniteHom h{source, target, std::move(*map)};
      if (!options.injective_only || h.is_injective()) out.push_back(std::move(h));
    }
    std::size_t i = gens.size();
    while (i > 0) {
      --i;
      if (++pick[i] < candidates[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (gens.empty()) return out;
  }
}

std::vector<FiniteHom> automorphisms(GroupPtr g, int max_order) {
  if (g->order() > max_order) throw BudgetExceeded("automorphism group requested for a group of order " + std::to_string(g->order()));
  HomSearchOptions options;
  options.injective_only = true;
  auto out = homomorphisms(g, g, options);
  std::stable_partition(out.begin(), out.end(), [](const FiniteHom& h) { return h.is_identity(); });
  return out;
}

MeridianalResult has_meridianal_automorphism(GroupPtr g) {
  for (auto& a : automorphisms(g)) {
    std::vector<Element> values;
    for (int x = 0; x < g->order(); ++x) values.push_back(g->mul(g->inv(x), a(x)));
    if (static_cast<int>(normal_closure(*g, values).order()) == g->order()) return {true, std::move(a)};
  }
  return {};
}

GroupProfile profile(const FiniteGroup& g) {
  GroupProfile p;
  p.order = g.order();
  p.abelianization = abelianization(g);
  for (int a = 0; a < g.order(); ++a) ++p.order_histogram[g.element_order(a)];
  p.center_order = static_cast<int>(center(g).order());
  return p;
}

}  // namespace hnnkit::fingrp
