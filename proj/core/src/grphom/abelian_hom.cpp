#include "hnnkit/grphom/abelian_hom.hpp"

#include <stdexcept>

#include "hnnkit/grphom/smith.hpp"

namespace hnnkit::grphom {

namespace {

void require_compatible(const AbelianHom& f, const AbelianHom& g) {
  if (f.source_orders != g.source_orders || f.target_orders != g.target_orders)
    throw std::invalid_argument("AbelianHom: incompatible domains");
}

}  // namespace

AbelianHom AbelianHom::normalized() const {
  AbelianHom out = *this;
  for (std::size_t r = 0; r < target_orders.size(); ++r) {
    if (target_orders[r] == 0) continue;
    for (std::size_t c = 0; c < source_orders.size(); ++c)
      out.matrix(r, c) = mod_floor(matrix(r, c), target_orders[r]);
  }
  return out;
}

bool AbelianHom::is_well_defined() const {
  // d_j * f(e_j) must vanish in the target.
  for (std::size_t c = 0; c < source_orders.size(); ++c)
    for (std::size_t r = 0; r < target_orders.size(); ++r) {
      Integer v = source_orders[c] * matrix(r, c);
      if (target_orders[r] == 0) {
        if (v != 0) return false;
      } else if (v % target_orders[r] != 0) {
        return false;
      }
    }
  return true;
}

AbelianHom operator-(const AbelianHom& f, const AbelianHom& g) {
  require_compatible(f, g);
  AbelianHom out = f;
  for (std::size_t r = 0; r < f.matrix.rows(); ++r)
    for (std::size_t c = 0; c < f.matrix.cols(); ++c) out.matrix(r, c) -= g.matrix(r, c);
  return out.normalized();
}

AbelianHom compose(const AbelianHom& g, const AbelianHom& f) {
  if (f.target_orders != g.source_orders) throw std::invalid_argument("AbelianHom: cannot compose");
  return AbelianHom{f.source_orders, g.target_orders, g.matrix * f.matrix}.normalized();
}

bool equal_as_maps(const AbelianHom& f, const AbelianHom& g) {
  require_compatible(f, g);
  return (f - g).matrix.is_zero();
}

AbelianInvariants source_group(const AbelianHom& f) { return AbelianInvariants::from_diagonal(f.source_orders); }
AbelianInvariants target_group(const AbelianHom& f) { return AbelianInvariants::from_diagonal(f.target_orders); }

AbelianInvariants cokernel(const AbelianHom& f) {
  const std::size_t m = f.target_rank();
  const std::size_t n = f.source_rank();
  if (m == 0) return {};
  IntMatrix a(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = f.matrix(r, c);
    a(r, n + r) = f.target_orders[r];
  }
  return AbelianInvariants::from_diagonal(smith_normal_form(std::move(a)).diagonal);
}

AbelianInvariants kernel(const AbelianHom& f) {
  const std::size_t m = f.target_rank();
  const std::size_t n = f.source_rank();
  if (n == 0) return {};
  // L = { x in Z^n : M x in D Z^m } is the projection of ker [M | -D].
  IntMatrix a(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = f.matrix(r, c);
    a(r, n + r) = -f.target_orders[r];
  }
  SmithForm sa = smith_normal_form(std::move(a), SmithOptions{false, true});
  const IntMatrix& v = *sa.right;
  const std::size_t kernel_dim = n + m - sa.rank;
  IntMatrix gens(n, kernel_dim);
  for (std::size_t k = 0; k < kernel_dim; ++k)
    for (std::size_t r = 0; r < n; ++r) gens(r, k) = v(r, sa.rank + k);

  // Basis of L from the Smith form of its generators.
  SmithForm sg = smith_normal_form(gens, SmithOptions{true, false});
  const IntMatrix& u = *sg.left;
  const std::size_t rho = sg.rank;

  // Coordinates of the source relations d_j e_j in that basis.
  IntMatrix coords(rho, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Integer& d = f.source_orders[j];
    if (d == 0) continue;
    for (std::size_t i = 0; i < u.rows(); ++i) {
      Integer y = u(i, j) * d;
      if (i < rho) {
        if (y % sg.diagonal[i] != 0) throw std::logic_error("kernel: relation outside lattice");
        coords(i, j) = y / sg.diagonal[i];
      } else if (y != 0) {
        throw std::logic_error("kernel: relation outside lattice");
      }
    }
  }
  if (rho == 0) return {};
  SmithForm sc = smith_normal_form(std::move(coords));
  std::vector<Integer> diag = sc.diagonal;
  diag.resize(rho, 0);
  return AbelianInvariants::from_diagonal(diag);
}

}  // namespace hnnkit::grphom
