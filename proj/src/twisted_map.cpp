#include "orbitkit/twisted_map.hpp"

namespace orbitkit {

OrbitPoint mu_local(const ParabolicData& p, const ChartPoint& cp) {
  LocalImage<GaussianRational> image = mu_local(p, cp.sigma, cp.z, cp.xi);
  return {std::move(image.f), std::move(image.witness)};
}

OrbitPoint mu_global(const ParabolicData& p, const ChartPoint& cp) { return mu_local(p, cp); }

ChartPoint psi_affine(const ParabolicData& p, const QMatrix& g, const ChartPoint& cp, const WeylCoset& tau) {
  AffineImage<GaussianRational> image = psi_affine(p, g, cp.sigma, cp.z, cp.xi, tau);
  return {tau, std::move(image.z), std::move(image.xi)};
}

bool psi_cocycle_check(const ParabolicData& p, const QMatrix& g, const QMatrix& h, const ChartPoint& cp) {
  ChartPoint step = psi_affine(p, h, cp, cp.sigma);
  ChartPoint lhs = psi_affine(p, g, step, cp.sigma);
  ChartPoint rhs = psi_affine(p, g * h, cp, cp.sigma);
  return lhs == rhs;
}

ChartPoint transition(const ParabolicData& p, const ChartPoint& cp, const WeylCoset& tau) {
  try {
    return psi_affine(p, QMatrix::identity(p.n()), cp, tau);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kOutsideChart) throw;
    throw Error(ErrorCode::kOutsideOverlap, "base point is not in the overlap of the two charts");
  }
}

ChartPoint psi_global(const ParabolicData& p, std::span<const WeylCoset> atlas, const QMatrix& g,
                      const ChartPoint& cp) {
  QMatrix base = g * cp.sigma.representative() * u_from_z(p, cp.z);
  ChartLocation loc = locate_chart(base, atlas, p);
  return psi_affine(p, g, cp, atlas[loc.coset_index]);
}

ChartPoint mu_inverse(const ParabolicData& p, std::span<const WeylCoset> atlas, const OrbitPoint& f) {
  if (!f.witness) throw Error(ErrorCode::kInvalidWitness, "mu_inverse needs a witness group element");
  const QMatrix& g = *f.witness;
  if (!(coadjoint(g, p.lambda_vee()) == f.f)) {
    throw Error(ErrorCode::kInvalidWitness, "witness does not conjugate lambda to F");
  }
  ChartLocation loc = locate_chart(g, atlas, p);
  std::vector<GaussianRational> z = z_from_u(p, loc.factors.u);
  std::vector<GaussianRational> w = w_from_u_minus(p, loc.factors.u_minus);
  std::vector<GaussianRational> xi = xi_from_w(p, z, w);
  return {atlas[loc.coset_index], std::move(z), std::move(xi)};
}

std::vector<GaussianRational> psi_inhomogeneous_part(const ParabolicData& p, const QMatrix& g,
                                                     const ChartPoint& cp, const WeylCoset& tau) {
  const std::size_t m = p.dim();
  std::vector<GaussianRational> xi_image = psi_affine(p, g, cp, tau).xi;

  std::vector<Jet<>> seeded;
  seeded.reserve(m);
  for (std::size_t k = 0; k < m; ++k) seeded.push_back(Jet<>::variable(cp.z[k], k, m));
  Matrix<Jet<>> h = lift_matrix<Jet<>>(tau.representative_inverse() * g * cp.sigma.representative()) *
                    u_from_z<Jet<>>(p, seeded);
  std::vector<Jet<>> z_image = z_from_u(p, factor_uul(h, p).u);

  std::vector<GaussianRational> out(m);
  for (std::size_t b = 0; b < m; ++b) {
    GaussianRational acc = -cp.xi[b];
    for (std::size_t a = 0; a < m; ++a) acc += xi_image[a] * z_image[a].partial(b);
    out[b] = acc;
  }
  return out;
}

}  // namespace orbitkit
