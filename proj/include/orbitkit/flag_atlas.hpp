#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orbitkit/parabolic.hpp"

namespace orbitkit {

/// A coset of W/W_lambda with its fixed representative.
///
/// `perm[j]` is the image of j; the default representative is the
/// permutation matrix sum_j e_{perm[j], j}. A different monomial
/// representative with the same pattern may be installed with
/// with_representative().
class WeylCoset {
 public:
  WeylCoset(std::vector<int> perm, std::size_t id);

  const std::vector<int>& perm() const noexcept { return perm_; }
  std::size_t id() const noexcept { return id_; }
  const QMatrix& representative() const noexcept { return rep_; }
  const QMatrix& representative_inverse() const noexcept { return rep_inv_; }
  bool is_identity() const;

  /// Throws InvalidRepresentative unless `rep` is monomial with nonzero
  /// entries exactly at (perm[j], j).
  WeylCoset with_representative(const QMatrix& rep) const;

  friend bool operator==(const WeylCoset& a, const WeylCoset& b) {
    return a.perm_ == b.perm_ && a.rep_ == b.rep_;
  }

 private:
  std::vector<int> perm_;
  std::size_t id_;
  QMatrix rep_;
  QMatrix rep_inv_;
};

/// Minimal-length representatives of W/W_lambda (increasing on every block),
/// in lexicographic order of perm; the identity comes first.
std::vector<WeylCoset> weyl_cosets(const ParabolicData& p);

/// Finds the coset with the given permutation; throws IndexOutOfRange.
const WeylCoset& find_coset(std::span<const WeylCoset> atlas, const std::vector<int>& perm);

/// g = u * u_minus * t with u in U, u_minus in U^-, t in L.
template <typename T>
struct UULFactorization {
  Matrix<T> u;
  Matrix<T> u_minus;
  Matrix<T> t;
};

// ---------------------------------------------------------------------------
// Chart coordinates on U and U^-.

template <typename T>
Matrix<T> nilpotent_u(const ParabolicData& p, const std::vector<T>& z) {
  if (z.size() != p.dim()) throw Error(ErrorCode::kDimensionMismatch, "coordinate count != |delta(u)|");
  Matrix<T> x(p.n(), p.n());
  for (std::size_t k = 0; k < p.dim(); ++k) {
    x(static_cast<std::size_t>(p.delta_u[k].i), static_cast<std::size_t>(p.delta_u[k].j)) = z[k];
  }
  return x;
}

template <typename T>
Matrix<T> nilpotent_u_minus(const ParabolicData& p, const std::vector<T>& w) {
  if (w.size() != p.dim()) throw Error(ErrorCode::kDimensionMismatch, "coordinate count != |delta(u)|");
  Matrix<T> x(p.n(), p.n());
  for (std::size_t k = 0; k < p.dim(); ++k) {
    x(static_cast<std::size_t>(p.delta_u[k].j), static_cast<std::size_t>(p.delta_u[k].i)) = w[k];
  }
  return x;
}

/// u_z = exp(sum z^a E_a).
template <typename T>
Matrix<T> u_from_z(const ParabolicData& p, const std::vector<T>& z) {
  return exp_nilpotent(nilpotent_u(p, z));
}

/// u^-_w = exp(sum w_a E_{-a}).
template <typename T>
Matrix<T> u_minus_from_w(const ParabolicData& p, const std::vector<T>& w) {
  return exp_nilpotent(nilpotent_u_minus(p, w));
}

namespace detail {

template <typename T>
std::vector<T> read_coordinates(const ParabolicData& p, const Matrix<T>& log, bool upper) {
  const std::size_t n = p.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool allowed = upper ? p.in_u(i, j) : p.in_u_minus(i, j);
      if (!allowed && !is_zero(log(i, j))) {
        throw Error(ErrorCode::kWrongSupport, upper ? "element is not in U" : "element is not in U^-");
      }
    }
  }
  std::vector<T> coords;
  coords.reserve(p.dim());
  for (const Root& a : p.delta_u) {
    auto i = static_cast<std::size_t>(a.i);
    auto j = static_cast<std::size_t>(a.j);
    coords.push_back(upper ? log(i, j) : log(j, i));
  }
  return coords;
}

}  // namespace detail

/// Inverse of u_from_z; throws WrongSupport (or NotUnipotent) for u outside U.
template <typename T>
std::vector<T> z_from_u(const ParabolicData& p, const Matrix<T>& u) {
  return detail::read_coordinates(p, log_unipotent(u), true);
}

/// Inverse of u_minus_from_w; throws WrongSupport for elements outside U^-.
template <typename T>
std::vector<T> w_from_u_minus(const ParabolicData& p, const Matrix<T>& u_minus) {
  return detail::read_coordinates(p, log_unipotent(u_minus), false);
}

// ---------------------------------------------------------------------------
// Big-cell factorization.

/// Factors g = u u^- t by block elimination from the last block upward.
///
/// Writing g = u q with q = u^- t block lower triangular, the last block row
/// of q equals that of g; each step needs the trailing diagonal block of the
/// remaining Schur complement to be invertible. Throws OutsideBigCell
/// otherwise (g is not in U U^- L).
template <typename T>
UULFactorization<T> factor_uul(const Matrix<T>& g, const ParabolicData& p) {
  const std::size_t n = p.n();
  if (g.rows() != n || g.cols() != n) throw Error(ErrorCode::kDimensionMismatch, "factor_uul input size");
  Matrix<T> rest = g;
  Matrix<T> u = Matrix<T>::identity(n);
  Matrix<T> q(n, n);
  std::vector<Matrix<T>> diag_inv(p.num_blocks());

  for (std::size_t kb = p.num_blocks(); kb-- > 0;) {
    const std::size_t s = p.block_start[kb];
    const std::size_t b = p.block_sizes[kb];
    // Last block row of the remaining leading part belongs to q.
    for (std::size_t r = s; r < s + b; ++r)
      for (std::size_t c = 0; c < s + b; ++c) q(r, c) = rest(r, c);
    Matrix<T> pivot = rest.block(s, s, b, b);
    try {
      diag_inv[kb] = inverse(pivot);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSingularMatrix) throw;
      throw Error(ErrorCode::kOutsideBigCell, "trailing block minor is singular");
    }
    if (s == 0) break;
    // u_{i,kb} = rest_{i,kb} * pivot^{-1} for rows above the block.
    Matrix<T> col = rest.block(0, s, s, b) * diag_inv[kb];
    u.set_block(0, s, col);
    Matrix<T> update = col * rest.block(s, 0, b, s);
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t c = 0; c < s; ++c)
        if (!is_zero(update(r, c))) rest(r, c) -= update(r, c);
  }

  Matrix<T> t(n, n);
  Matrix<T> u_minus = Matrix<T>::identity(n);
  for (std::size_t kb = 0; kb < p.num_blocks(); ++kb) {
    const std::size_t s = p.block_start[kb];
    const std::size_t b = p.block_sizes[kb];
    t.set_block(s, s, q.block(s, s, b, b));
    for (std::size_t jb = 0; jb < kb; ++jb) {
      const std::size_t sj = p.block_start[jb];
      const std::size_t bj = p.block_sizes[jb];
      u_minus.set_block(s, sj, q.block(s, sj, b, bj) * diag_inv[jb]);
    }
  }
  return {std::move(u), std::move(u_minus), std::move(t)};
}

/// Result of a chart search: the first coset sigma with sigma^{-1} g in U U^- L.
struct ChartLocation {
  std::size_t coset_index = 0;
  UULFactorization<GaussianRational> factors;
};

/// Always succeeds for invertible g (the charts cover G/Q); throws
/// SingularMatrix for singular g.
ChartLocation locate_chart(const QMatrix& g, std::span<const WeylCoset> atlas, const ParabolicData& p);

/// Whether the base point g.e_Q lies in U_sigma.
bool in_chart(const QMatrix& g, const WeylCoset& sigma, const ParabolicData& p);

}  // namespace orbitkit
