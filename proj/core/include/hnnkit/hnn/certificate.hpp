#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hnnkit/grphom/homology.hpp"
#include "hnnkit/hnn/hnn.hpp"

namespace hnnkit::hnn {

using Rational = boost::rational<long long>;

enum class Verdict { pass, fail, unknown };
std::string to_string(Verdict v);

/// Conditions under which B *_C phi is a (high-dimensional) knot group with
/// t as meridian.
struct KnotGroupCertificate {
  Verdict h1 = Verdict::unknown;  ///< H1(j) - H1(phi) is an isomorphism
  Verdict h2 = Verdict::unknown;  ///< H2(j) - H2(phi) is onto
  Verdict normal_closure = Verdict::unknown;  ///< N = B
  Rational euler{0};  ///< virtual Euler characteristic 1/|B| - 1/|C|
  Verdict overall = Verdict::unknown;
  std::vector<std::string> imported_facts;
  std::string note;  ///< why a verdict is unknown, if one is
};

/// Homology of B and C in degrees 1 and 2, computed once and shared.
struct BaseHomology {
  grphom::HomologyGroup b1, b2, c1, c2;
};
BaseHomology base_homology(const HnnData& d, grphom::HomologyOptions options = {});

KnotGroupCertificate knot_group_certificate(const HnnData& d, grphom::HomologyOptions options = {});
/// Same, reusing homology already computed for this base and associated subgroup.
KnotGroupCertificate knot_group_certificate(const HnnData& d, const BaseHomology& h);

/// The map H_k(C) -> H_k(B) given by H_k(j) - H_k(phi).
grphom::AbelianHom difference_map(const HnnData& d, const grphom::HomologyGroup& c, const grphom::HomologyGroup& b);

struct MayerVietoris {
  int degree = 0;
  /// coker(H_k(C) -> H_k(B)) injects into H_k, with quotient
  /// ker(H_{k-1}(C) -> H_{k-1}(B)).
  AbelianInvariants cokernel;
  AbelianInvariants kernel;
  std::optional<AbelianInvariants> exact;  ///< set when the extension splits or is trivial
  std::string summary;
  std::vector<std::string> imported_facts;
};

/// Assembles H_k of the extension from the Mayer-Vietoris sequence. Degrees
/// whose base homology is beyond `options.max_cells` fall back on imported
/// facts when they are the only missing piece.
MayerVietoris mayer_vietoris(const HnnData& d, int k, grphom::HomologyOptions options = {});

struct SatelliteCase {
  int q = 0;                 ///< order of the amalgamating cyclic subgroup
  std::string h_label;       ///< candidate finite vertex group
  int h_order = 0;
  Rational bound{0};         ///< lower bound 1/q - 1/|B| on chi(H)
  bool survives = false;
  std::string reason;
};

struct SatelliteReport {
  bool central_involution = false;
  std::vector<int> element_orders;
  std::vector<SatelliteCase> cases;
  /// Groups tested for a meridianal automorphism in surviving cases.
  std::vector<std::pair<std::string, bool>> meridianal_tests;
  bool obstruction_complete = false;
  std::string conclusion;
};

/// Runs the case analysis against splittings G *_{Z/q} H with H finite and
/// non-cyclic, every finite subgroup being conjugate into B.
SatelliteReport satellite_obstruction(const HnnData& d);

}  // namespace hnnkit::hnn
