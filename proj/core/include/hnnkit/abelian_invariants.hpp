#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "hnnkit/grphom/integer.hpp"

namespace hnnkit {

/// A finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k with
/// d_1 | d_2 | ... | d_k and every d_i >= 2.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> divisors;

  static AbelianInvariants from_diagonal(const std::vector<Integer>& entries, std::size_t extra_free = 0);

  bool is_trivial() const { return free_rank == 0 && divisors.empty(); }
  bool is_finite() const { return free_rank == 0; }
  /// Order of the torsion subgroup.
  Integer torsion_order() const;
  /// Compact notation, e.g. "Z", "0", "Z/2 + Z/2", "Z + Z/8".
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

std::ostream& operator<<(std::ostream& os, const AbelianInvariants& inv);

/// Parse the notation produced by AbelianInvariants::to_string, e.g. "Z/2 + Z/2".
AbelianInvariants parse_abelian_invariants(const std::string& text);

}  // namespace hnnkit
