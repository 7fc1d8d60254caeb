#include "orbitkit/flag_atlas.hpp"

#include <algorithm>
#include <numeric>

namespace orbitkit {

namespace {

QMatrix permutation_matrix(const std::vector<int>& perm) {
  const std::size_t n = perm.size();
  QMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m(static_cast<std::size_t>(perm[j]), j) = GaussianRational(1);
  return m;
}

}  // namespace

WeylCoset::WeylCoset(std::vector<int> perm, std::size_t id)
    : perm_(std::move(perm)), id_(id), rep_(permutation_matrix(perm_)), rep_inv_(rep_.transpose()) {
  std::vector<int> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != static_cast<int>(k)) throw Error(ErrorCode::kInvalidRepresentative, "not a permutation");
  }
}

bool WeylCoset::is_identity() const {
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    if (perm_[k] != static_cast<int>(k)) return false;
  }
  return true;
}

WeylCoset WeylCoset::with_representative(const QMatrix& rep) const {
  const std::size_t n = perm_.size();
  if (rep.rows() != n || rep.cols() != n) {
    throw Error(ErrorCode::kInvalidRepresentative, "representative has the wrong size");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool expected = static_cast<std::size_t>(perm_[j]) == i;
      if (expected == rep(i, j).is_zero()) {
        throw Error(ErrorCode::kInvalidRepresentative, "representative does not match the permutation pattern");
      }
    }
  }
  WeylCoset out = *this;
  out.rep_ = rep;
  out.rep_inv_ = inverse(rep);
  return out;
}

std::vector<WeylCoset> weyl_cosets(const ParabolicData& p) {
  const std::size_t n = p.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<WeylCoset> atlas;
  do {
    bool minimal = true;
    for (std::size_t k = 0; k + 1 < n && minimal; ++k) {
      if (p.block_of[k] == p.block_of[k + 1] && perm[k] > perm[k + 1]) minimal = false;
    }
    if (minimal) atlas.emplace_back(perm, atlas.size());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return atlas;
}

const WeylCoset& find_coset(std::span<const WeylCoset> atlas, const std::vector<int>& perm) {
  for (const auto& c : atlas) {
    if (c.perm() == perm) return c;
  }
  throw Error(ErrorCode::kIndexOutOfRange, "permutation is not a coset representative of this atlas");
}

bool in_chart(const QMatrix& g, const WeylCoset& sigma, const ParabolicData& p) {
  try {
    factor_uul(sigma.representative_inverse() * g, p);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kOutsideBigCell) throw;
    return false;
  }
}

ChartLocation locate_chart(const QMatrix& g, std::span<const WeylCoset> atlas, const ParabolicData& p) {
  // Surface singular input up front rather than reporting "no chart".
  if (determinant(g).is_zero()) throw Error(ErrorCode::kSingularMatrix, "locate_chart needs an invertible g");
  for (std::size_t k = 0; k < atlas.size(); ++k) {
    try {
      return {k, factor_uul(atlas[k].representative_inverse() * g, p)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kOutsideBigCell) throw;
    }
  }
  throw Error(ErrorCode::kOutsideChart, "no chart of the atlas contains the point");
}

}  // namespace orbitkit
