#pragma once

#include <vector>

#include "hnnkit/abelian_invariants.hpp"
#include "hnnkit/grphom/int_matrix.hpp"

namespace hnnkit::grphom {

/// A homomorphism between finitely generated abelian groups presented as
/// Z^n / diag(source_orders) -> Z^m / diag(target_orders). An order of 0
/// marks an infinite cyclic generator. Column j of `matrix` is the image of
/// source generator j.
struct AbelianHom {
  std::vector<Integer> source_orders;
  std::vector<Integer> target_orders;
  IntMatrix matrix;

  std::size_t source_rank() const { return source_orders.size(); }
  std::size_t target_rank() const { return target_orders.size(); }

  /// Reduces every entry into [0, d) for target generators of finite order d.
  AbelianHom normalized() const;
  /// Checks that relations of the source are sent into relations of the target.
  bool is_well_defined() const;
};

AbelianHom operator-(const AbelianHom& f, const AbelianHom& g);
/// g after f.
AbelianHom compose(const AbelianHom& g, const AbelianHom& f);
bool equal_as_maps(const AbelianHom& f, const AbelianHom& g);

AbelianInvariants cokernel(const AbelianHom& f);
AbelianInvariants kernel(const AbelianHom& f);
AbelianInvariants source_group(const AbelianHom& f);
AbelianInvariants target_group(const AbelianHom& f);

inline bool is_surjective(const AbelianHom& f) { return cokernel(f).is_trivial(); }
inline bool is_injective(const AbelianHom& f) { return kernel(f).is_trivial(); }
inline bool is_isomorphism(const AbelianHom& f) { return is_surjective(f) && is_injective(f); }

}  // namespace hnnkit::grphom
