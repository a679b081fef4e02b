#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hnnkit/hnn/hnn.hpp"
#include "hnnkit/presentations/tietze.hpp"

namespace hnnkit::hnn {

enum class IdentificationStatus { isomorphism, epimorphism_only, no_epimorphism };
std::string to_string(IdentificationStatus s);

struct IdentifyOptions {
  /// Longest source word tried as a preimage of a target generator.
  std::size_t preimage_length = 8;
  /// Forward candidates tried before giving up on the backward map.
  std::size_t max_candidates = 64;
  /// States per consequence proof.
  std::size_t consequence_budget = 200000;
};

/// Outcome of comparing a finite presentation with an HNN model. The
/// forward map sends source generators to elements of the extension; the
/// backward map sends the model's generators (base generators, then t) to
/// source words.
struct Identification {
  IdentificationStatus status = IdentificationStatus::no_epimorphism;
  std::vector<HnnWord> forward;
  std::vector<pres::Word> backward;
  /// forward respects the source relators (checked by Britton reduction)
  bool forward_is_hom = false;
  /// forward(backward(g)) = g for each model generator, so forward is onto
  bool forward_onto = false;
  /// every model relator, sent through backward, has a verified
  /// product-of-conjugates certificate over the source relators
  bool backward_is_hom = false;
  /// backward(forward(x)) x^-1 has a verified certificate for each source generator
  bool round_trip_source = false;
  std::size_t candidates_tried = 0;
  std::string note;
};

/// Searches forward images among elements of t-length at most one, then
/// tries to build and certify an inverse. Deterministic.
Identification identify(const HnnData& d, const pres::Presentation& source, IdentifyOptions options = {});

}  // namespace hnnkit::hnn
