#pragma once

#include <cstddef>
#include <vector>

#include "orbitkit/twisted_map.hpp"

namespace orbitkit {

/// A tangent vector of T^*U_sigma in chart coordinates.
struct ChartTangent {
  std::vector<GaussianRational> dz;
  std::vector<GaussianRational> dxi;

  /// Basis vector k of the 2m-dimensional tangent space: dz first, then dxi.
  static ChartTangent basis(std::size_t m, std::size_t k);
};

/// A tangent vector V = -[X, F] of the orbit at F.
struct OrbitTangent {
  QMatrix v;
};

/// omega = sum_a dz^a ^ dxi_a.
GaussianRational omega_chart(const ChartTangent& t1, const ChartTangent& t2);

/// Tangent of the generator X at F under the exp(-tX) convention.
OrbitTangent orbit_tangent(const QMatrix& x, const QMatrix& f);

/// Some X with -[X, F] = V. Throws NotTangent when none exists.
QMatrix solve_generator(const QMatrix& f, const OrbitTangent& v);

/// -tr(F [X1, X2]) for generators X1, X2.
GaussianRational omega_generators(const QMatrix& f, const QMatrix& x1, const QMatrix& x2);

/// KKS form at F; throws NotTangent.
GaussianRational omega_orbit(const QMatrix& f, const OrbitTangent& v1, const OrbitTangent& v2);

/// F together with dF along each of the 2m basis directions (dz, then dxi).
struct MuJacobian {
  QMatrix f;
  std::vector<QMatrix> columns;
};

MuJacobian mu_jacobian(const ParabolicData& p, const ChartPoint& cp);

OrbitTangent pushforward_mu(const ParabolicData& p, const ChartPoint& cp, const ChartTangent& t);

struct PullbackFailure {
  std::size_t a;
  std::size_t b;
  GaussianRational lhs;  // omega_chart(e_a, e_b)
  GaussianRational rhs;  // omega_orbit(dmu e_a, dmu e_b)
};

struct PullbackReport {
  std::size_t pairs_checked = 0;
  std::vector<PullbackFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Compares omega with the pulled-back KKS form on every basis pair a < b.
PullbackReport verify_pullback(const ParabolicData& p, const ChartPoint& cp);

/// Chart components of the vector field generated by X at z: d/dt of the
/// chart coordinates of exp(-tX) sigma u_z at t = 0.
std::vector<GaussianRational> vector_field_chart(const QMatrix& x, const ParabolicData& p, const WeylCoset& sigma,
                                                 const std::vector<GaussianRational>& z);

/// Untwisted moment map: the M with tr(M X) = xi(X_M) for every X.
QMatrix classical_moment(const ParabolicData& p, const ChartPoint& cp);

/// d(z', xi')/d(z, xi) of the chart transition sigma -> tau; column k is the
/// image of basis vector k.
std::vector<ChartTangent> transition_jacobian(const ParabolicData& p, const ChartPoint& cp, const WeylCoset& tau);

/// Whether the transition sigma -> tau pulls omega back to omega on all
/// basis pairs.
bool transition_preserves_omega(const ParabolicData& p, const ChartPoint& cp, const WeylCoset& tau);

/// D(b, c) = d a_b / dz^c for the affine correction a of psi(g) from sigma
/// to tau. The correction is closed iff D is symmetric.
QMatrix correction_derivative(const ParabolicData& p, const QMatrix& g, const WeylCoset& sigma, const WeylCoset& tau,
                              const std::vector<GaussianRational>& z);

}  // namespace orbitkit
