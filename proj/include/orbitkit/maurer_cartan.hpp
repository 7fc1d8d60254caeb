#pragma once

#include <span>
#include <vector>

#include "orbitkit/flag_atlas.hpp"

namespace orbitkit {

/// C[b][a] = coefficient of E_b in u_z^{-1} du_z/dz^a, for a, b in delta_u.
///
/// Derivatives come from jets pushed through exp_nilpotent, so T may itself
/// be a jet (the result then carries derivatives of C). In delta_u order C
/// is lower unitriangular: C[a][a] = 1 and C[b][a] = 0 unless b has larger
/// height than a.
template <typename T>
Matrix<T> maurer_cartan_coeffs(const ParabolicData& p, const std::vector<T>& z) {
  const std::size_t m = p.dim();
  if (z.size() != m) throw Error(ErrorCode::kDimensionMismatch, "coordinate count != |delta(u)|");
  std::vector<Jet<T>> seeded;
  seeded.reserve(m);
  for (std::size_t k = 0; k < m; ++k) seeded.push_back(Jet<T>::variable(z[k], k, m));

  Matrix<Jet<T>> u = u_from_z<Jet<T>>(p, seeded);
  Matrix<T> u_inv = exp_nilpotent(-nilpotent_u(p, z));

  Matrix<T> c(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    Matrix<T> theta = u_inv * partial_matrix(u, a);
    for (std::size_t b = 0; b < m; ++b) {
      c(b, a) = theta(static_cast<std::size_t>(p.delta_u[b].i), static_cast<std::size_t>(p.delta_u[b].j));
    }
  }
  return c;
}

}  // namespace orbitkit
