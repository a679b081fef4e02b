#pragma once

#include <string>
#include <vector>

#include "hnnkit/fingrp/finite_group.hpp"
#include "hnnkit/grphom/homology.hpp"
#include "hnnkit/hnn/certificate.hpp"

namespace hnnkit::census {

/// A triple (B, C, phi) whose HNN extension passes the knot-group certificate.
struct CensusHit {
  std::string base;
  fingrp::Subgroup c;
  /// phi as a map on the elements of c (phi[i] is the image of c.elements[i]).
  std::vector<fingrp::Element> phi;
  hnn::KnotGroupCertificate certificate;
  std::vector<int> encoding;  ///< serialized (C, phi); see encode()
};

struct EquivalenceClass {
  CensusHit representative;  ///< member with the least encoding
  std::size_t orbit_size = 0;
};

/// Serialization: |C|, the elements of C, then their images.
std::vector<int> encode(const fingrp::Subgroup& c, const std::vector<fingrp::Element>& phi);

struct CensusOptions {
  int jobs = 1;
  grphom::HomologyOptions homology;
  /// Skip the C/C' = B/B' filter; used to cross-check the filter.
  bool unfiltered = false;
};

/// Per-base bookkeeping of the enumeration.
struct BaseReport {
  std::string base;
  int order = 0;
  bool abelian = false;
  std::string abelianization;
  std::size_t proper_subgroups = 0;
  std::size_t subgroup_candidates = 0;  ///< proper C passing the abelianization filter
  std::size_t phi_total = 0;            ///< injective phi over all candidates
  std::size_t phi_h1 = 0;               ///< ... with the H1 condition
  std::size_t phi_h2 = 0;               ///< ... with H1 and H2
  std::size_t phi_h2_any = 0;           ///< H2 condition alone
  std::size_t phi_normal_any = 0;       ///< N = B alone
  std::size_t phi_budget_failures = 0;
  std::vector<std::string> failures;    ///< budget messages per candidate
  std::vector<CensusHit> hits;
  std::vector<EquivalenceClass> classes;
  /// Every condition that fails for all phi, joined by "; "; empty when
  /// there are hits.
  std::string exclusion;
};

/// All passing triples (C, j, phi) for a base of order at most 16.
BaseReport enumerate_base(const std::string& name, const fingrp::GroupPtr& base, const CensusOptions& options = {});

/// Orbits of hits under post-composition of phi with inner automorphisms,
/// transport by automorphisms of B, and (C, phi) -> (phi(C), phi^-1).
/// Hits must all belong to `base`.
std::vector<EquivalenceClass> canonicalize(const fingrp::GroupPtr& base, const std::vector<CensusHit>& hits);

struct CensusReport {
  std::vector<BaseReport> bases;
  std::vector<std::string> imported_facts;
  std::vector<std::string> open_questions;
};

/// Every catalog group of order at most 16.
CensusReport run_catalog(const CensusOptions& options = {});

}  // namespace hnnkit::census
