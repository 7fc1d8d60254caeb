#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orbitkit/maurer_cartan.hpp"

namespace orbitkit {

/// A point (z_sigma, xi_sigma) of T^*U_sigma. z and xi are indexed like delta_u.
struct ChartPoint {
  WeylCoset sigma;
  std::vector<GaussianRational> z;
  std::vector<GaussianRational> xi;

  friend bool operator==(const ChartPoint& a, const ChartPoint& b) {
    return a.sigma.perm() == b.sigma.perm() && a.z == b.z && a.xi == b.xi;
  }
};

/// F = g lambda^vee g^{-1}, optionally with the group element g.
struct OrbitPoint {
  QMatrix f;
  std::optional<QMatrix> witness;
};

// ---------------------------------------------------------------------------
// Key relation: xi = -< Ad*(u^-_w) lambda, u_z^{-1} du_z >.

namespace detail {

/// y_b = coefficient of E_{-b} in the u^- part of A, i.e. A(j_b, i_b).
template <typename T>
std::vector<T> u_minus_part(const ParabolicData& p, const Matrix<T>& a) {
  std::vector<T> y;
  y.reserve(p.dim());
  for (const Root& r : p.delta_u) y.push_back(a(static_cast<std::size_t>(r.j), static_cast<std::size_t>(r.i)));
  return y;
}

}  // namespace detail

/// The unique w with xi = -<Ad*(u^-_w) lambda, u_z^{-1} du_z>.
///
/// Stage one solves C(z)^T y = -xi by back substitution (C is unitriangular
/// in height order). Stage two solves u^- lambda^vee = (lambda^vee + Y) u^-
/// entry by entry in increasing height; the divisor lambda_c - lambda_r is
/// nonzero for every root of delta_u.
template <typename T>
std::vector<T> solve_w(const ParabolicData& p, const std::vector<T>& z, const std::vector<T>& xi) {
  const std::size_t m = p.dim();
  const std::size_t n = p.n();
  if (xi.size() != m) throw Error(ErrorCode::kDimensionMismatch, "xi count != |delta(u)|");
  Matrix<T> c = maurer_cartan_coeffs(p, z);

  std::vector<T> y(m, T(0));
  for (std::size_t a = m; a-- > 0;) {
    T acc = -xi[a];
    for (std::size_t b = a + 1; b < m; ++b) {
      if (!is_zero(c(b, a)) && !is_zero(y[b])) acc -= c(b, a) * y[b];
    }
    y[a] = acc;
  }

  Matrix<T> ym(n, n);
  for (std::size_t b = 0; b < m; ++b) {
    ym(static_cast<std::size_t>(p.delta_u[b].j), static_cast<std::size_t>(p.delta_u[b].i)) = y[b];
  }

  Matrix<T> um = Matrix<T>::identity(n);
  for (const Root& a : p.delta_u) {
    const auto col = static_cast<std::size_t>(a.i);
    const auto row = static_cast<std::size_t>(a.j);
    T acc(0);
    for (std::size_t k = col; k < row; ++k) {
      if (!is_zero(ym(row, k)) && !is_zero(um(k, col))) acc += ym(row, k) * um(k, col);
    }
    um(row, col) = acc / lift<T>(p.lambda[col] - p.lambda[row]);
  }
  return w_from_u_minus(p, um);
}

/// xi_a = -tr(Ad(u^-_w) lambda^vee * u_z^{-1} du_z/dz^a); inverse of solve_w.
template <typename T>
std::vector<T> xi_from_w(const ParabolicData& p, const std::vector<T>& z, const std::vector<T>& w) {
  const std::size_t m = p.dim();
  Matrix<T> nm = nilpotent_u_minus(p, w);
  Matrix<T> ad = exp_nilpotent(nm) * lift_matrix<T>(p.lambda_vee()) * exp_nilpotent(-nm);
  std::vector<T> y = detail::u_minus_part(p, ad);
  Matrix<T> c = maurer_cartan_coeffs(p, z);
  std::vector<T> xi(m, T(0));
  for (std::size_t a = 0; a < m; ++a) {
    T acc(0);
    for (std::size_t b = a; b < m; ++b) {
      if (!is_zero(c(b, a)) && !is_zero(y[b])) acc += c(b, a) * y[b];
    }
    xi[a] = -acc;
  }
  return xi;
}

// ---------------------------------------------------------------------------
// Local twisted moment map.

template <typename T>
struct LocalImage {
  Matrix<T> f;        // sigma u_z u^-_w lambda^vee (...)^{-1}
  Matrix<T> witness;  // sigma u_z u^-_w
  std::vector<T> w;
};

/// mu_{lambda;sigma}(z, xi) = Ad*(sigma u_z u^-_w) lambda with w = solve_w(z, xi).
template <typename T>
LocalImage<T> mu_local(const ParabolicData& p, const WeylCoset& sigma, const std::vector<T>& z,
                       const std::vector<T>& xi) {
  std::vector<T> w = solve_w(p, z, xi);
  Matrix<T> nz = nilpotent_u(p, z);
  Matrix<T> nw = nilpotent_u_minus(p, w);
  Matrix<T> a = lift_matrix<T>(sigma.representative()) * exp_nilpotent(nz) * exp_nilpotent(nw);
  Matrix<T> a_inv = exp_nilpotent(-nw) * exp_nilpotent(-nz) * lift_matrix<T>(sigma.representative_inverse());
  Matrix<T> f = a * lift_matrix<T>(p.lambda_vee()) * a_inv;
  return {std::move(f), std::move(a), std::move(w)};
}

OrbitPoint mu_local(const ParabolicData& p, const ChartPoint& cp);

/// mu_lambda on the twisted bundle: mu_local on the point's own chart.
OrbitPoint mu_global(const ParabolicData& p, const ChartPoint& cp);

// ---------------------------------------------------------------------------
// Affine action psi_lambda and chart transitions.

template <typename T>
struct AffineImage {
  std::vector<T> z;
  std::vector<T> xi;
  std::vector<T> w;
  UULFactorization<T> factors;  // of tau^{-1} g sigma u_z u^-_w
};

/// Factors tau^{-1} g sigma u_z u^-_w = u' u^-' t' and returns
/// (z', xi') = (z(u'), xi_from_w(z', w(u^-'))). Throws OutsideChart when the
/// image of the base point leaves U_tau.
template <typename T>
AffineImage<T> psi_affine(const ParabolicData& p, const Matrix<T>& g, const WeylCoset& sigma,
                          const std::vector<T>& z, const std::vector<T>& xi, const WeylCoset& tau) {
  std::vector<T> w = solve_w(p, z, xi);
  Matrix<T> h = lift_matrix<T>(tau.representative_inverse()) * g * lift_matrix<T>(sigma.representative()) *
                u_from_z(p, z) * u_minus_from_w(p, w);
  UULFactorization<T> f;
  try {
    f = factor_uul(h, p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kOutsideBigCell) throw;
    throw Error(ErrorCode::kOutsideChart, "g.z leaves the target chart");
  }
  AffineImage<T> out;
  out.z = z_from_u(p, f.u);
  out.w = w_from_u_minus(p, f.u_minus);
  out.xi = xi_from_w(p, out.z, out.w);
  out.factors = std::move(f);
  return out;
}

/// psi_lambda(tau^{-1} g sigma) applied to cp, landing in chart tau.
ChartPoint psi_affine(const ParabolicData& p, const QMatrix& g, const ChartPoint& cp, const WeylCoset& tau);

/// Whether psi(g) psi(h) xi = psi(gh) xi with every step kept in cp's chart.
/// Throws OutsideChart when h.z or gh.z leaves it.
bool psi_cocycle_check(const ParabolicData& p, const QMatrix& g, const QMatrix& h, const ChartPoint& cp);

/// The same point of the twisted bundle in chart tau; throws OutsideOverlap.
ChartPoint transition(const ParabolicData& p, const ChartPoint& cp, const WeylCoset& tau);

/// Psi_lambda(g): moves the point by g, choosing the first atlas chart that
/// contains g.x.
ChartPoint psi_global(const ParabolicData& p, std::span<const WeylCoset> atlas, const QMatrix& g,
                      const ChartPoint& cp);

/// Recovers the chart point from a witnessed orbit point F = Ad*(g) lambda.
/// Throws InvalidWitness when the witness is missing or does not map to F.
ChartPoint mu_inverse(const ParabolicData& p, std::span<const WeylCoset> atlas, const OrbitPoint& f);

// ---------------------------------------------------------------------------
// Pieces of the affine transformation law.

/// a_b(z) = tr(lambda^vee * (d t/dz^b) t^{-1}), where t is the L-component of
/// tau^{-1} g sigma u_z. This is the inhomogeneous term <lambda, dt t^{-1}>.
template <typename T>
std::vector<T> affine_correction(const ParabolicData& p, const QMatrix& g, const WeylCoset& sigma,
                                 const WeylCoset& tau, const std::vector<T>& z) {
  const std::size_t m = p.dim();
  std::vector<Jet<T>> seeded;
  seeded.reserve(m);
  for (std::size_t k = 0; k < m; ++k) seeded.push_back(Jet<T>::variable(z[k], k, m));
  Matrix<Jet<T>> h = lift_matrix<Jet<T>>(tau.representative_inverse() * g * sigma.representative()) *
                     u_from_z<Jet<T>>(p, seeded);
  UULFactorization<Jet<T>> f;
  try {
    f = factor_uul(h, p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kOutsideBigCell) throw;
    throw Error(ErrorCode::kOutsideChart, "g.z leaves the target chart");
  }
  Matrix<T> t_inv_lambda = inverse(value_matrix(f.t)) * lift_matrix<T>(p.lambda_vee());
  std::vector<T> out;
  out.reserve(m);
  for (std::size_t b = 0; b < m; ++b) out.push_back(trace_form(partial_matrix(f.t, b), t_inv_lambda));
  return out;
}

/// r_b = sum_a xi'_a d(z'^a)/dz^b - xi_b: the pull-back of psi(g) xi along
/// z -> g.z minus the linear part (g^{-1})^* xi.
std::vector<GaussianRational> psi_inhomogeneous_part(const ParabolicData& p, const QMatrix& g,
                                                     const ChartPoint& cp, const WeylCoset& tau);

}  // namespace orbitkit
