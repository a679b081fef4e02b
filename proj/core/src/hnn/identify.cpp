#include "hnnkit/hnn/identify.hpp"

#include <map>

#include "hnnkit/error.hpp"

namespace hnnkit::hnn {

std::string to_string(IdentificationStatus s) {
  switch (s) {
    case IdentificationStatus::isomorphism:
      return "isomorphism certified";
    case IdentificationStatus::epimorphism_only:
      return "epimorphism only";
    case IdentificationStatus::no_epimorphism:
      return "no epimorphism found";
  }
  return "?";
}

namespace {

// Elements b, b t c and b t^-1 c, each in reduced form, without repeats.
std::vector<HnnWord> short_elements(const HnnData& d) {
  const auto n = static_cast<Element>(d.base().order());
  std::vector<HnnWord> out;
  for (Element b = 0; b < n; ++b) out.push_back(base_element(b));
  for (int e : {1, -1})
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        HnnWord w = multiply(d, multiply(d, base_element(b), stable_letter(e)), base_element(c));
        out.push_back(w);
      }
  std::sort(out.begin(), out.end(), [](const HnnWord& x, const HnnWord& y) {
    return std::pair(x.t_length(), x) < std::pair(y.t_length(), y);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HnnWord evaluate(const HnnData& d, const std::vector<HnnWord>& images, const pres::Word& w) {
  HnnWord x;
  for (pres::Letter l : w.letters()) {
    const auto& g = images[static_cast<std::size_t>(pres::generator_of(l))];
    x = multiply(d, x, l > 0 ? g : inverse(d, g));
  }
  return x;
}

bool respects(const HnnData& d, const pres::Presentation& p, const std::vector<HnnWord>& images) {
  for (const auto& r : p.relators())
    if (!is_identity(d, evaluate(d, images, r))) return false;
  return true;
}

// Shortest source words (breadth first, then lexicographic) whose images
// are the model generators.
std::optional<std::vector<pres::Word>> preimages(const HnnData& d, const pres::Presentation& p,
                                                 const std::vector<HnnWord>& images, std::size_t max_length) {
  std::vector<HnnWord> targets;
  for (Element g : d.base().generators()) targets.push_back(base_element(g));
  targets.push_back(stable_letter(1));
  std::vector<std::optional<pres::Word>> found(targets.size());
  std::size_t missing = targets.size();
  auto record = [&](const pres::Word& w, const HnnWord& x) {
    for (std::size_t i = 0; i < targets.size(); ++i)
      if (!found[i] && targets[i] == x) {
        found[i] = w;
        --missing;
      }
  };
  std::vector<std::pair<pres::Word, HnnWord>> layer{{pres::Word(), HnnWord()}};
  const int gens = p.generator_count();
  for (std::size_t len = 1; len <= max_length && missing > 0; ++len) {
    std::vector<std::pair<pres::Word, HnnWord>> next;
    for (const auto& [w, x] : layer)
      for (int g = 0; g < gens; ++g)
        for (bool inv : {false, true}) {
          const pres::Letter l = pres::letter(g, inv);
          if (!w.letters().empty() && w.letters().back() == -l) continue;
          std::vector<pres::Letter> letters = w.letters();
          letters.push_back(l);
          pres::Word w2(letters);
          HnnWord x2 = multiply(d, x, inv ? inverse(d, images[static_cast<std::size_t>(g)]) : images[static_cast<std::size_t>(g)]);
          record(w2, x2);
          next.emplace_back(std::move(w2), std::move(x2));
        }
    layer = std::move(next);
  }
  if (missing > 0) return std::nullopt;
  std::vector<pres::Word> out;
  for (auto& w : found) out.push_back(*w);
  return out;
}

bool prove(const std::vector<pres::Word>& relators, const pres::Word& w, std::size_t budget) {
  if (w.empty()) return true;
  auto search = pres::prove_consequence(relators, w, budget);
  if (!search.proven) search = pres::prove_consequence(relators, w, budget, 4);
  return search.proven && pres::verify_consequence(relators, w, search.certificate);
}

}  // namespace

Identification identify(const HnnData& d, const pres::Presentation& source, IdentifyOptions options) {
  Identification best;
  const int gens = source.generator_count();
  if (gens > 3) throw BudgetExceeded("identify: too many generators for the forward search");
  const auto pool = short_elements(d);
  const auto model = d.presentation();

  std::vector<std::size_t> choice(static_cast<std::size_t>(gens), 0);
  auto advance = [&]() {
    for (std::size_t i = choice.size(); i-- > 0;) {
      if (++choice[i] < pool.size()) return true;
      choice[i] = 0;
    }
    return false;
  };
  bool more = gens > 0;
  while (more) {
    std::vector<HnnWord> images;
    for (std::size_t c : choice) images.push_back(pool[c]);
    more = advance();
    if (!respects(d, source, images)) continue;
    auto back = preimages(d, source, images, options.preimage_length);
    if (!back) continue;

    ++best.candidates_tried;
    Identification r;
    r.forward = images;
    r.backward = *back;
    r.forward_is_hom = true;
    r.forward_onto = true;
    r.status = IdentificationStatus::epimorphism_only;
    r.candidates_tried = best.candidates_tried;

    r.backward_is_hom = true;
    for (const auto& rel : model.relators())
      if (!prove(source.relators(), rel.substitute(r.backward), options.consequence_budget)) {
        r.backward_is_hom = false;
        r.note = "could not certify model relator " + model.format_word(rel) + " in the source";
        break;
      }
    if (r.backward_is_hom) {
      r.round_trip_source = true;
      for (int g = 0; g < gens; ++g) {
        const pres::Word there = to_word(d, r.forward[static_cast<std::size_t>(g)]);
        const pres::Word loop = there.substitute(r.backward) * pres::Word::generator(g, -1);
        if (!prove(source.relators(), loop, options.consequence_budget)) {
          r.round_trip_source = false;
          r.note = "could not certify the round trip on generator " + source.generator_names()[static_cast<std::size_t>(g)];
          break;
        }
      }
    }
    if (r.backward_is_hom && r.round_trip_source) {
      r.status = IdentificationStatus::isomorphism;
      return r;
    }
    if (best.status == IdentificationStatus::no_epimorphism) {
      const auto tried = best.candidates_tried;
      best = r;
      best.candidates_tried = tried;
    }
    if (best.candidates_tried >= options.max_candidates) break;
  }
  if (best.status == IdentificationStatus::no_epimorphism) best.note = "no onto map found among elements of t-length at most one";
  return best;
}

}  // namespace hnnkit::hnn
