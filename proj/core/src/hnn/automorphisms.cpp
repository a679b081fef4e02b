#include "hnnkit/hnn/automorphisms.hpp"

#include <map>

#include "hnnkit/error.hpp"

namespace hnnkit::hnn {

namespace {

HnnWord t_word() { return stable_letter(1); }

// Splits a reduced word of the form u t^e v.
struct TShape {
  Element u, v;
  int e;
};
std::optional<TShape> t_shape(const HnnWord& w) {
  if (w.t.size() != 1) return std::nullopt;
  return TShape{w.b[0], w.b[1], w.t[0]};
}

// Group element of B represented by a t-free word, if any.
std::optional<Element> as_base(const HnnData& d, const HnnWord& w) {
  HnnWord r = reduce(d, w);
  if (!r.t.empty()) return std::nullopt;
  return r.b[0];
}

}  // namespace

HnnWord apply(const HnnData& d, const EndoSpec& f, const HnnWord& w) {
  const auto& g = d.base();
  // Build the image letter by letter: each base entry as its generator word.
  HnnWord out;
  auto push = [&](const HnnWord& x) { out = multiply(d, out, x); };
  auto push_base = [&](Element b) {
    for (pres::Letter l : g.word_of(b).letters()) {
      const auto& img = f.base_images[static_cast<std::size_t>(pres::generator_of(l))];
      push(l > 0 ? img : inverse(d, img));
    }
  };
  push_base(w.b[0]);
  for (std::size_t i = 0; i < w.t.size(); ++i) {
    push(w.t[i] > 0 ? f.t_image : inverse(d, f.t_image));
    push_base(w.b[i + 1]);
  }
  return out;
}

EndoSpec compose(const HnnData& d, const EndoSpec& f, const EndoSpec& g) {
  EndoSpec out;
  out.name = f.name + g.name;
  for (const auto& x : g.base_images) out.base_images.push_back(apply(d, f, x));
  out.t_image = apply(d, f, g.t_image);
  return out;
}

EndoSpec identity_endo(const HnnData& d) {
  EndoSpec out{"id", {}, t_word()};
  for (Element x : d.base().generators()) out.base_images.push_back(base_element(x));
  return out;
}

EndoSpec conjugation(const HnnData& d, const HnnWord& u, std::string name) {
  EndoSpec id = identity_endo(d);
  HnnWord ui = inverse(d, u);
  EndoSpec out{std::move(name), {}, {}};
  for (const auto& x : id.base_images) out.base_images.push_back(multiply(d, multiply(d, u, x), ui));
  out.t_image = multiply(d, multiply(d, u, id.t_image), ui);
  return out;
}

bool same_map(const HnnData& d, const EndoSpec& f, const EndoSpec& g) {
  if (f.base_images.size() != g.base_images.size()) return false;
  for (std::size_t i = 0; i < f.base_images.size(); ++i)
    if (reduce(d, f.base_images[i]) != reduce(d, g.base_images[i])) return false;
  return reduce(d, f.t_image) == reduce(d, g.t_image);
}

std::optional<EndoSpec> base_preserving_inverse(const HnnData& d, const EndoSpec& f) {
  const auto& g = d.base();
  std::vector<Element> images;
  for (const auto& x : f.base_images) {
    auto b = as_base(d, x);
    if (!b) return std::nullopt;
    images.push_back(*b);
  }
  auto beta = fingrp::extend_to_hom(g, g.generators(), images, g);
  if (!beta) return std::nullopt;
  std::vector<Element> inv(beta->size(), -1);
  for (std::size_t i = 0; i < beta->size(); ++i) {
    Element y = (*beta)[i];
    if (inv[static_cast<std::size_t>(y)] >= 0) return std::nullopt;
    inv[static_cast<std::size_t>(y)] = static_cast<Element>(i);
  }
  auto shape = t_shape(reduce(d, f.t_image));
  if (!shape) return std::nullopt;
  auto binv = [&](Element x) { return inv[static_cast<std::size_t>(x)]; };

  EndoSpec out{f.name.empty() ? std::string{} : f.name + "^-1", {}, {}};
  for (Element x : g.generators()) out.base_images.push_back(base_element(binv(x)));
  if (shape->e == 1) {  // t -> u t v  inverts to  t -> b(u)^-1 t b(v)^-1
    out.t_image = HnnWord{{g.inv(binv(shape->u)), g.inv(binv(shape->v))}, {1}};
  } else {  // t -> u t^-1 v  inverts to  t -> b(v) t^-1 b(u)
    out.t_image = HnnWord{{binv(shape->v), binv(shape->u)}, {-1}};
  }
  out.t_image = reduce(d, out.t_image);
  return out;
}

AutomorphismCheck verify_automorphism(const HnnData& d, const EndoSpec& f, const std::optional<EndoSpec>& inverse) {
  AutomorphismCheck check;
  if (f.base_images.size() != d.base().generators().size()) throw Error("automorphism: wrong number of base images");
  std::vector<pres::Word> images;
  for (const auto& x : f.base_images) images.push_back(to_word(d, reduce(d, x)));
  images.push_back(to_word(d, reduce(d, f.t_image)));
  auto hc = pres::verify_hom(d.presentation(), images, word_oracle(d));
  check.relators_hold = hc.ok;
  check.failing_relator = hc.failing_relator;
  if (!hc.ok) return check;

  check.inverse = inverse ? inverse : base_preserving_inverse(d, f);
  if (!check.inverse) return check;
  const EndoSpec id = identity_endo(d);
  check.inverse_ok = same_map(d, compose(d, f, *check.inverse), id) && same_map(d, compose(d, *check.inverse, f), id);
  return check;
}

std::optional<Element> inner_by_base(const HnnData& d, const EndoSpec& f) {
  for (Element u = 0; u < d.base().order(); ++u)
    if (same_map(d, f, conjugation(d, base_element(u)))) return u;
  return std::nullopt;
}

std::vector<EndoSpec> quaternion_automorphisms(const HnnData& d) {
  auto w = [&](std::string_view s) { return parse_word(d, s); };
  return {
      EndoSpec{"f", {w("a"), w("b")}, w("a^4*t")},
      EndoSpec{"g", {w("a^-1"), w("a^-2*b")}, w("a*t")},
      EndoSpec{"h", {w("a"), w("a*b")}, w("t^-1*a^-1")},
  };
}

int OutGroup::exponent() const {
  int best = 1;
  for (int x = 0; x < order(); ++x) {
    int k = 1, y = x;
    while (y != 0) {
      y = table[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
      ++k;
    }
    best = std::max(best, k);
  }
  return best;
}

bool OutGroup::is_abelian() const {
  for (int x = 0; x < order(); ++x)
    for (int y = 0; y < order(); ++y)
      if (table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] !=
          table[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)])
        return false;
  return true;
}

OutGroup out_group(const HnnData& d, const std::vector<EndoSpec>& generators, int max_elements) {
  OutGroup out;
  out.generators = generators;
  std::vector<EndoSpec> inner;
  for (Element u = 0; u < d.base().order(); ++u) inner.push_back(conjugation(d, base_element(u)));

  // Canonical key of a coset: the least image tuple over all base conjugates.
  auto key = [&](const EndoSpec& f) {
    std::vector<HnnWord> best;
    for (const auto& c : inner) {
      EndoSpec m = compose(d, c, f);
      std::vector<HnnWord> k = m.base_images;
      k.push_back(m.t_image);
      if (best.empty() || k < best) best = std::move(k);
    }
    return best;
  };

  std::map<std::vector<HnnWord>, int> index;
  auto add = [&](const EndoSpec& f) {
    auto k = key(f);
    auto [it, fresh] = index.emplace(std::move(k), static_cast<int>(out.elements.size()));
    if (fresh) {
      if (static_cast<int>(out.elements.size()) >= max_elements) throw BudgetExceeded("out_group: too many elements");
      out.elements.push_back(f);
    }
    return it->second;
  };
  add(identity_endo(d));
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    for (const auto& g : generators) add(compose(d, out.elements[i], g));

  const int n = out.order();
  out.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto it = index.find(key(compose(d, out.elements[static_cast<std::size_t>(x)], out.elements[static_cast<std::size_t>(y)])));
      if (it == index.end()) throw Error("out_group: generators do not close");
      out.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = it->second;
    }
  return out;
}

std::vector<StableCandidate> stable_letter_candidates(const HnnData& d) {
  const auto& g = d.base();
  Element a = g.element("a"), b = g.element("b");
  std::vector<StableCandidate> out;
  for (Element w = 0; w < g.order(); ++w) {
    StableCandidate cand;
    cand.w = w;
    for (int i : {1, -1})
      for (int j = 0; j < g.element_order(a); ++j) {
        EndoSpec f{"", {base_element(g.power(a, i)), base_element(g.mul(g.power(a, j), b))},
                   HnnWord{{w, 0}, {1}}};
        if (!verify_automorphism(d, f).ok()) continue;
        cand.exponents.emplace_back(i, j);
        if (!cand.map) cand.map = f;
      }
    if (cand.map) cand.inner_by = inner_by_base(d, *cand.map);
    out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace hnnkit::hnn
