#include "hnnkit/hnn/hnn.hpp"

#include <algorithm>

#include "hnnkit/error.hpp"
#include "hnnkit/fingrp/catalog.hpp"

namespace hnnkit::hnn {

namespace {

std::vector<Element> least_coset_reps(const fingrp::FiniteGroup& g, const fingrp::Subgroup& h) {
  std::vector<Element> rep(static_cast<std::size_t>(g.order()), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (rep[static_cast<std::size_t>(x)] >= 0) continue;
    for (Element c : h.elements) rep[static_cast<std::size_t>(g.mul(x, c))] = x;
  }
  return rep;
}

}  // namespace

HnnData::HnnData(fingrp::GroupPtr base, std::string base_name, std::vector<Element> c_generators,
                 std::vector<Element> images)
    : base_(std::move(base)),
      base_name_(std::move(base_name)),
      c_gens_(std::move(c_generators)),
      c_images_(std::move(images)) {
  const auto& g = *base_;
  if (c_gens_.size() != c_images_.size()) throw Error("HNN data: generator and image counts differ");
  c_ = fingrp::generated_subgroup(g, c_gens_);
  c_group_ = std::make_shared<const fingrp::FiniteGroup>(fingrp::subgroup_as_group(g, c_));
  j_ = fingrp::inclusion(base_, c_group_, c_);

  // Map the given generators into C's own numbering and extend.
  std::vector<Element> local;
  for (Element x : c_gens_) local.push_back(static_cast<Element>(std::lower_bound(c_.elements.begin(), c_.elements.end(), x) - c_.elements.begin()));
  auto map = fingrp::extend_to_hom(*c_group_, local, c_images_, g);
  if (!map) throw Error("HNN data: the images do not define a homomorphism on C");
  phi_ = fingrp::FiniteHom{c_group_, base_, std::move(*map)};
  if (!phi_.is_injective()) throw Error("HNN data: phi is not injective");
  phi_c_ = phi_.image();

  const auto n = static_cast<std::size_t>(g.order());
  phi_of_.assign(n, -1);
  phi_inv_of_.assign(n, -1);
  for (std::size_t i = 0; i < c_.elements.size(); ++i) {
    phi_of_[static_cast<std::size_t>(c_.elements[i])] = phi_.map[i];
    phi_inv_of_[static_cast<std::size_t>(phi_.map[i])] = c_.elements[i];
  }
  c_rep_ = least_coset_reps(g, c_);
  image_rep_ = least_coset_reps(g, phi_c_);
}

std::vector<std::string> HnnData::generator_names() const {
  auto names = base_->generator_names();
  names.push_back("t");
  return names;
}

pres::Presentation HnnData::presentation() const {
  const auto names = generator_names();
  const int t = static_cast<int>(names.size()) - 1;
  std::vector<pres::Word> rels;
  if (base_->presentation()) {
    for (const auto& r : base_->presentation()->relators()) rels.push_back(r);
  } else {
    throw Error("HNN data: base group has no presentation");
  }
  for (std::size_t i = 0; i < c_gens_.size(); ++i) {
    pres::Word c = base_->word_of(c_gens_[i]), pc = base_->word_of(c_images_[i]);
    rels.push_back(pres::Word::generator(t) * c * pres::Word::generator(t, -1) * pc.inverse());
  }
  return pres::Presentation(names, rels);
}

HnnWord base_element(Element g) { return HnnWord{{g}, {}}; }

HnnWord stable_letter(int exponent) {
  HnnWord w;
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
    w.t.push_back(exponent < 0 ? -1 : 1);
    w.b.push_back(0);
  }
  return w;
}

namespace {

// Incremental normal form: `out` holds a reduced prefix whose last base
// entry is unrestricted.
class Reducer {
 public:
  explicit Reducer(const HnnData& d) : d_(d) {}

  void push_base(Element g) { out_.b.back() = d_.base().mul(out_.b.back(), g); }

  void push_t(int e) {
    const auto& g = d_.base();
    Element tail = out_.b.back();
    if (!out_.t.empty() && out_.t.back() == -e) {
      // t c t^-1 with c in C -> phi(c);  t^-1 c' t with c' in phi(C) -> phi^-1(c').
      if (e == -1 && d_.in_c(tail)) {
        pinch(d_.phi_of(tail));
        return;
      }
      if (e == 1 && d_.in_image(tail)) {
        pinch(d_.phi_inverse_of(tail));
        return;
      }
    }
    if (e == 1) {  // r h t = r t phi^-1(h), h in phi(C)
      Element r = d_.image_rep(tail);
      Element h = g.mul(g.inv(r), tail);
      out_.b.back() = r;
      out_.t.push_back(1);
      out_.b.push_back(d_.phi_inverse_of(h));
    } else {  // r c t^-1 = r t^-1 phi(c), c in C
      Element r = d_.c_rep(tail);
      Element c = g.mul(g.inv(r), tail);
      out_.b.back() = r;
      out_.t.push_back(-1);
      out_.b.push_back(d_.phi_of(c));
    }
  }

  HnnWord take() { return std::move(out_); }

 private:
  void pinch(Element replacement) {
    out_.t.pop_back();
    out_.b.pop_back();
    out_.b.back() = d_.base().mul(out_.b.back(), replacement);
  }

  const HnnData& d_;
  HnnWord out_;
};

void feed(Reducer& r, const HnnWord& w) {
  r.push_base(w.b[0]);
  for (std::size_t i = 0; i < w.t.size(); ++i) {
    r.push_t(w.t[i]);
    r.push_base(w.b[i + 1]);
  }
}

}  // namespace

HnnWord reduce(const HnnData& d, const HnnWord& w) {
  Reducer r(d);
  feed(r, w);
  return r.take();
}

HnnWord multiply(const HnnData& d, const HnnWord& x, const HnnWord& y) {
  Reducer r(d);
  feed(r, x);
  feed(r, y);
  return r.take();
}

HnnWord inverse(const HnnData& d, const HnnWord& x) {
  const auto& g = d.base();
  HnnWord w;
  w.b.clear();
  for (auto it = x.b.rbegin(); it != x.b.rend(); ++it) w.b.push_back(g.inv(*it));
  for (auto it = x.t.rbegin(); it != x.t.rend(); ++it) w.t.push_back(-*it);
  return reduce(d, w);
}

HnnWord power(const HnnData& d, const HnnWord& x, int n) {
  HnnWord base = n < 0 ? inverse(d, x) : reduce(d, x);
  HnnWord out;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) out = multiply(d, out, base);
  return out;
}

bool is_identity(const HnnData& d, const HnnWord& x) { return reduce(d, x).is_identity(); }

HnnWord from_word(const HnnData& d, const pres::Word& w) {
  const int t = static_cast<int>(d.base().generators().size());
  const auto& g = d.base();
  HnnWord out;
  for (pres::Letter l : w.letters()) {
    int gen = pres::generator_of(l);
    if (gen == t) {
      out.t.push_back(l > 0 ? 1 : -1);
      out.b.push_back(0);
    } else if (gen < t) {
      Element x = g.generators()[static_cast<std::size_t>(gen)];
      out.b.back() = g.mul(out.b.back(), l > 0 ? x : g.inv(x));
    } else {
      throw Error("HNN word: generator index out of range");
    }
  }
  return out;
}

HnnWord parse_word(const HnnData& d, std::string_view text) {
  pres::Presentation p(d.generator_names(), {});
  return from_word(d, p.word(text));
}

pres::Word to_word(const HnnData& d, const HnnWord& w) {
  const int t = static_cast<int>(d.base().generators().size());
  pres::Word out = d.base().word_of(w.b[0]);
  for (std::size_t i = 0; i < w.t.size(); ++i) {
    out = out * pres::Word::generator(t, w.t[i]) * d.base().word_of(w.b[i + 1]);
  }
  return out;
}

std::string to_string(const HnnData& d, const HnnWord& w) {
  pres::Presentation p(d.generator_names(), {});
  return p.format_word(to_word(d, w));
}

pres::WordOracle word_oracle(const HnnData& d) {
  return [&d](const pres::Word& w) { return is_identity(d, from_word(d, w)); };
}

HnnData quaternion_extension() {
  auto q16 = fingrp::catalog_group("Q(16)");
  const auto& g = *q16;
  return HnnData(q16, "Q(16)", {g.element("a^2"), g.element("a*b")}, {g.element("b"), g.element("a^2")});
}

}  // namespace hnnkit::hnn
