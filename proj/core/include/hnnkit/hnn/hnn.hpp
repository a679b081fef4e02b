#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hnnkit/fingrp/finite_group.hpp"
#include "hnnkit/presentations/presentation.hpp"

namespace hnnkit::hnn {

using fingrp::Element;

/// B *_C phi with stable letter t acting by t c t^-1 = phi(c).
class HnnData {
 public:
  /// `c_generators` generate C in B and `images` are their images under phi.
  HnnData(fingrp::GroupPtr base, std::string base_name, std::vector<Element> c_generators, std::vector<Element> images);

  const fingrp::FiniteGroup& base() const { return *base_; }
  const fingrp::GroupPtr& base_ptr() const { return base_; }
  const std::string& base_name() const { return base_name_; }
  const fingrp::Subgroup& associated() const { return c_; }          ///< C
  const fingrp::Subgroup& image() const { return phi_c_; }           ///< phi(C)
  const std::vector<Element>& c_generators() const { return c_gens_; }
  const std::vector<Element>& c_images() const { return c_images_; }

  /// C as an abstract group, the inclusion j and the embedding phi.
  const fingrp::GroupPtr& c_group() const { return c_group_; }
  const fingrp::FiniteHom& j() const { return j_; }
  const fingrp::FiniteHom& phi() const { return phi_; }

  bool in_c(Element g) const { return phi_of_[static_cast<std::size_t>(g)] >= 0; }
  bool in_image(Element g) const { return phi_inv_of_[static_cast<std::size_t>(g)] >= 0; }
  Element phi_of(Element c) const { return phi_of_[static_cast<std::size_t>(c)]; }
  Element phi_inverse_of(Element c) const { return phi_inv_of_[static_cast<std::size_t>(c)]; }
  /// Least element of g C and of g phi(C).
  Element c_rep(Element g) const { return c_rep_[static_cast<std::size_t>(g)]; }
  Element image_rep(Element g) const { return image_rep_[static_cast<std::size_t>(g)]; }

  /// Generator names of the extension: base generators followed by "t".
  std::vector<std::string> generator_names() const;
  /// The defining presentation: base relators plus t c t^-1 phi(c)^-1 for
  /// each generator c of C.
  pres::Presentation presentation() const;

 private:
  fingrp::GroupPtr base_;
  std::string base_name_;
  std::vector<Element> c_gens_, c_images_;
  fingrp::Subgroup c_, phi_c_;
  fingrp::GroupPtr c_group_;
  fingrp::FiniteHom j_, phi_;
  std::vector<Element> phi_of_, phi_inv_of_, c_rep_, image_rep_;
};

/// b_0 t^e_1 b_1 ... t^e_n b_n with b_i in the base and e_i = +-1.
struct HnnWord {
  std::vector<Element> b{0};
  std::vector<int> t;

  std::size_t t_length() const { return t.size(); }
  bool is_identity() const { return t.empty() && b.size() == 1 && b[0] == 0; }
  friend bool operator==(const HnnWord&, const HnnWord&) = default;
  friend auto operator<=>(const HnnWord&, const HnnWord&) = default;
};

HnnWord base_element(Element g);
HnnWord stable_letter(int exponent = 1);

/// Britton normal form: pinches removed and every b_i before a stable
/// letter replaced by its coset representative (phi(C) before t, C before
/// t^-1). Equal group elements give identical results.
HnnWord reduce(const HnnData& d, const HnnWord& w);
HnnWord multiply(const HnnData& d, const HnnWord& x, const HnnWord& y);
HnnWord inverse(const HnnData& d, const HnnWord& x);
HnnWord power(const HnnData& d, const HnnWord& x, int n);
bool is_identity(const HnnData& d, const HnnWord& x);

/// Word over generator_names() to an extension element (unreduced).
HnnWord from_word(const HnnData& d, const pres::Word& w);
/// Parses text such as "t*a^2*t^-1*b^-1".
HnnWord parse_word(const HnnData& d, std::string_view text);
/// Text form with base elements written as shortest generator words.
std::string to_string(const HnnData& d, const HnnWord& w);
/// A word over generator_names() representing w.
pres::Word to_word(const HnnData& d, const HnnWord& w);

/// Word-problem oracle for words over generator_names().
pres::WordOracle word_oracle(const HnnData& d);

/// The extension used throughout: B = Q(16) = <a,b | a^4 = b^2 = (ab)^2>,
/// C = <a^2, ab>, phi(a^2) = b, phi(ab) = a^2.
HnnData quaternion_extension();

}  // namespace hnnkit::hnn
