#include "orbitkit/symplectic.hpp"

namespace orbitkit {

namespace {

using Jet1 = Jet<>;

struct Seeded {
  std::vector<Jet1> z;
  std::vector<Jet1> xi;
};

Seeded seed_chart(const ChartPoint& cp) {
  const std::size_t m = cp.z.size();
  Seeded s;
  s.z.reserve(m);
  s.xi.reserve(m);
  for (std::size_t k = 0; k < m; ++k) s.z.push_back(Jet1::variable(cp.z[k], k, 2 * m));
  for (std::size_t k = 0; k < m; ++k) s.xi.push_back(Jet1::variable(cp.xi[k], m + k, 2 * m));
  return s;
}

}  // namespace

ChartTangent ChartTangent::basis(std::size_t m, std::size_t k) {
  if (k >= 2 * m) throw Error(ErrorCode::kIndexOutOfRange, "tangent basis index out of range");
  ChartTangent t{std::vector<GaussianRational>(m), std::vector<GaussianRational>(m)};
  if (k < m) {
    t.dz[k] = GaussianRational(1);
  } else {
    t.dxi[k - m] = GaussianRational(1);
  }
  return t;
}

GaussianRational omega_chart(const ChartTangent& t1, const ChartTangent& t2) {
  const std::size_t m = t1.dz.size();
  if (t1.dxi.size() != m || t2.dz.size() != m || t2.dxi.size() != m) {
    throw Error(ErrorCode::kDimensionMismatch, "chart tangents have different index sets");
  }
  GaussianRational acc;
  for (std::size_t a = 0; a < m; ++a) acc += t1.dz[a] * t2.dxi[a] - t2.dz[a] * t1.dxi[a];
  return acc;
}

OrbitTangent orbit_tangent(const QMatrix& x, const QMatrix& f) { return {-bracket(x, f)}; }

QMatrix solve_generator(const QMatrix& f, const OrbitTangent& v) {
  const std::size_t n = f.rows();
  if (!f.is_square() || v.v.rows() != n || v.v.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "solve_generator shapes");
  }
  // Unknown X(k, c) sits at column k*n + c; equation (r, c) is (FX - XF)(r, c) = V(r, c).
  QMatrix a(n * n, n * n);
  std::vector<GaussianRational> rhs(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t row = r * n + c;
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(f(r, k))) a(row, k * n + c) += f(r, k);
        if (!is_zero(f(k, c))) a(row, r * n + k) -= f(k, c);
      }
      rhs[row] = v.v(r, c);
    }
  }
  auto sol = solve_linear(a, rhs);
  if (!sol) throw Error(ErrorCode::kNotTangent, "V is not in the image of ad at F");
  return QMatrix(n, n, std::move(*sol));
}

GaussianRational omega_generators(const QMatrix& f, const QMatrix& x1, const QMatrix& x2) {
  return -trace_form(f, bracket(x1, x2));
}

GaussianRational omega_orbit(const QMatrix& f, const OrbitTangent& v1, const OrbitTangent& v2) {
  return omega_generators(f, solve_generator(f, v1), solve_generator(f, v2));
}

MuJacobian mu_jacobian(const ParabolicData& p, const ChartPoint& cp) {
  const std::size_t m = p.dim();
  if (cp.z.size() != m || cp.xi.size() != m) throw Error(ErrorCode::kDimensionMismatch, "chart point size");
  Seeded s = seed_chart(cp);
  Matrix<Jet1> f = mu_local(p, cp.sigma, s.z, s.xi).f;
  MuJacobian out{value_matrix(f), {}};
  out.columns.reserve(2 * m);
  for (std::size_t k = 0; k < 2 * m; ++k) out.columns.push_back(partial_matrix(f, k));
  return out;
}

OrbitTangent pushforward_mu(const ParabolicData& p, const ChartPoint& cp, const ChartTangent& t) {
  const std::size_t m = p.dim();
  if (t.dz.size() != m || t.dxi.size() != m) throw Error(ErrorCode::kDimensionMismatch, "tangent size");
  MuJacobian jac = mu_jacobian(p, cp);
  QMatrix v(p.n(), p.n());
  for (std::size_t k = 0; k < m; ++k) {
    if (!is_zero(t.dz[k])) v += jac.columns[k] * t.dz[k];
    if (!is_zero(t.dxi[k])) v += jac.columns[m + k] * t.dxi[k];
  }
  return {std::move(v)};
}

PullbackReport verify_pullback(const ParabolicData& p, const ChartPoint& cp) {
  const std::size_t m = p.dim();
  MuJacobian jac = mu_jacobian(p, cp);
  std::vector<QMatrix> gens;
  gens.reserve(2 * m);
  for (const QMatrix& col : jac.columns) gens.push_back(solve_generator(jac.f, {col}));

  PullbackReport report;
  for (std::size_t a = 0; a < 2 * m; ++a) {
    for (std::size_t b = a + 1; b < 2 * m; ++b) {
      GaussianRational lhs = omega_chart(ChartTangent::basis(m, a), ChartTangent::basis(m, b));
      GaussianRational rhs = omega_generators(jac.f, gens[a], gens[b]);
      ++report.pairs_checked;
      if (!(lhs == rhs)) report.failures.push_back({a, b, std::move(lhs), std::move(rhs)});
    }
  }
  return report;
}

std::vector<GaussianRational> vector_field_chart(const QMatrix& x, const ParabolicData& p, const WeylCoset& sigma,
                                                 const std::vector<GaussianRational>& z) {
  const std::size_t n = p.n();
  Matrix<Jet1> flow = Matrix<Jet1>::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(x(i, j))) flow(i, j) -= Jet1(GaussianRational(0), {x(i, j)});
  Matrix<Jet1> h = lift_matrix<Jet1>(sigma.representative_inverse()) * flow *
                   lift_matrix<Jet1>(sigma.representative() * u_from_z(p, z));
  UULFactorization<Jet1> f;
  try {
    f = factor_uul(h, p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kOutsideBigCell) throw;
    throw Error(ErrorCode::kOutsideChart, "base point outside the chart");
  }
  std::vector<Jet1> moved = z_from_u(p, f.u);
  std::vector<GaussianRational> out;
  out.reserve(moved.size());
  for (const Jet1& c : moved) out.push_back(c.partial(0));
  return out;
}

QMatrix classical_moment(const ParabolicData& p, const ChartPoint& cp) {
  const std::size_t n = p.n();
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<GaussianRational> field = vector_field_chart(QMatrix::unit(n, i, j), p, cp.sigma, cp.z);
      GaussianRational acc;
      for (std::size_t a = 0; a < field.size(); ++a) {
        if (!is_zero(field[a])) acc += cp.xi[a] * field[a];
      }
      // The trace-form dual of e_ij is e_ji.
      m(j, i) = acc;
    }
  }
  return m;
}

std::vector<ChartTangent> transition_jacobian(const ParabolicData& p, const ChartPoint& cp, const WeylCoset& tau) {
  const std::size_t m = p.dim();
  Seeded s = seed_chart(cp);
  AffineImage<Jet1> image;
  try {
    image = psi_affine(p, Matrix<Jet1>::identity(p.n()), cp.sigma, s.z, s.xi, tau);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kOutsideChart) throw;
    throw Error(ErrorCode::kOutsideOverlap, "base point is not in the overlap of the two charts");
  }
  std::vector<ChartTangent> cols;
  cols.reserve(2 * m);
  for (std::size_t k = 0; k < 2 * m; ++k) {
    ChartTangent t{std::vector<GaussianRational>(m), std::vector<GaussianRational>(m)};
    for (std::size_t a = 0; a < m; ++a) {
      t.dz[a] = image.z[a].partial(k);
      t.dxi[a] = image.xi[a].partial(k);
    }
    cols.push_back(std::move(t));
  }
  return cols;
}

bool transition_preserves_omega(const ParabolicData& p, const ChartPoint& cp, const WeylCoset& tau) {
  const std::size_t m = p.dim();
  std::vector<ChartTangent> jac = transition_jacobian(p, cp, tau);
  for (std::size_t a = 0; a < 2 * m; ++a) {
    for (std::size_t b = a + 1; b < 2 * m; ++b) {
      if (!(omega_chart(jac[a], jac[b]) == omega_chart(ChartTangent::basis(m, a), ChartTangent::basis(m, b)))) {
        return false;
      }
    }
  }
  return true;
}

QMatrix correction_derivative(const ParabolicData& p, const QMatrix& g, const WeylCoset& sigma, const WeylCoset& tau,
                              const std::vector<GaussianRational>& z) {
  const std::size_t m = p.dim();
  std::vector<Jet1> seeded;
  seeded.reserve(m);
  for (std::size_t k = 0; k < m; ++k) seeded.push_back(Jet1::variable(z[k], k, m));
  std::vector<Jet1> a = affine_correction(p, g, sigma, tau, seeded);
  QMatrix d(m, m);
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c = 0; c < m; ++c) d(b, c) = a[b].partial(c);
  return d;
}

}  // namespace orbitkit
