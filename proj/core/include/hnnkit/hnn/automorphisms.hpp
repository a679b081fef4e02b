#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hnnkit/hnn/hnn.hpp"

namespace hnnkit::hnn {

/// An endomorphism given by the images of the base generators and of t.
struct EndoSpec {
  std::string name;
  std::vector<HnnWord> base_images;  ///< one per base generator
  HnnWord t_image;
};

/// Image of an element (reduced).
HnnWord apply(const HnnData& d, const EndoSpec& f, const HnnWord& w);
/// f after g, with images reduced.
EndoSpec compose(const HnnData& d, const EndoSpec& f, const EndoSpec& g);
EndoSpec identity_endo(const HnnData& d);
/// x -> u x u^-1.
EndoSpec conjugation(const HnnData& d, const HnnWord& u, std::string name = {});
/// Images of all generators agree.
bool same_map(const HnnData& d, const EndoSpec& f, const EndoSpec& g);

/// For maps that send B onto B and t to u t^e v with u, v in B, e = +-1,
/// the inverse in the same form; nullopt when f is not of that shape or
/// not bijective on B.
std::optional<EndoSpec> base_preserving_inverse(const HnnData& d, const EndoSpec& f);

struct AutomorphismCheck {
  bool relators_hold = false;  ///< f is a well-defined endomorphism
  bool inverse_ok = false;     ///< f.inverse and inverse.f are the identity
  std::optional<std::size_t> failing_relator;
  std::optional<EndoSpec> inverse;
  bool ok() const { return relators_hold && inverse_ok; }
};

/// Checks every defining relator under f, then both composites with the
/// supplied (or computed) inverse.
AutomorphismCheck verify_automorphism(const HnnData& d, const EndoSpec& f,
                                      const std::optional<EndoSpec>& inverse = std::nullopt);

/// Whether f is conjugation by some base element.
std::optional<Element> inner_by_base(const HnnData& d, const EndoSpec& f);

/// The three generators of the outer automorphism group of the quaternion
/// extension: f(a,b,t) = (a, b, a^4 t), g = (a^-1, a^-2 b, a t),
/// h = (a, ab, (at)^-1).
std::vector<EndoSpec> quaternion_automorphisms(const HnnData& d);

struct OutGroup {
  std::vector<EndoSpec> generators;
  /// Representatives of the cosets of the base-conjugation subgroup in the
  /// group generated by `generators`; the identity first.
  std::vector<EndoSpec> elements;
  /// Products recorded as indices into `elements`.
  std::vector<std::vector<int>> table;
  int order() const { return static_cast<int>(elements.size()); }
  /// Largest order of an element.
  int exponent() const;
  bool is_abelian() const;
};

/// Closure of the generators modulo conjugation by base elements. Two maps
/// are identified when they differ by such a conjugation; throws
/// BudgetExceeded past `max_elements`.
OutGroup out_group(const HnnData& d, const std::vector<EndoSpec>& generators, int max_elements = 256);

/// Maps a -> a^i, b -> a^j b, t -> w t with (i, j) chosen to be an
/// automorphism; one entry per w in B.
struct StableCandidate {
  Element w = 0;
  std::vector<std::pair<int, int>> exponents;  ///< all valid (i, j)
  std::optional<EndoSpec> map;                 ///< first valid choice
  std::optional<Element> inner_by;             ///< set when map is inner by a base element
};
std::vector<StableCandidate> stable_letter_candidates(const HnnData& d);

}  // namespace hnnkit::hnn
