#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orbitkit/lie.hpp"

namespace orbitkit {

/// lambda^vee = diag(values). Must be non-constant and block-sorted (equal
/// values contiguous) before a ParabolicData can be built from it.
struct WeightLambda {
  std::vector<GaussianRational> values;

  std::size_t n() const noexcept { return values.size(); }
};

/// Result of block_sort: the sorted weight and the permutation applied,
/// sorted.values[k] = original.values[permutation[k]].
struct BlockSorted {
  WeightLambda lambda;
  std::vector<int> permutation;
  bool changed = false;
};

/// Groups equal entries contiguously, keeping groups in order of first appearance.
BlockSorted block_sort(const WeightLambda& lambda);

/// Block data of the parabolic q = l + u^- attached to lambda.
///
/// U is block upper unitriangular, U^- block lower unitriangular, L block
/// diagonal. delta_u lists the roots e_i - e_j with block(i) < block(j), in
/// the height order used by the key-relation solver: (j - i, then i).
struct ParabolicData {
  std::vector<GaussianRational> lambda;
  std::vector<std::size_t> block_sizes;
  std::vector<std::size_t> block_start;
  std::vector<std::size_t> block_of;
  std::vector<Root> delta_u;

  std::size_t n() const noexcept { return lambda.size(); }
  /// dim G/Q = |delta_u|.
  std::size_t dim() const noexcept { return delta_u.size(); }
  std::size_t num_blocks() const noexcept { return block_sizes.size(); }

  /// Position of a positive root in delta_u, or nullopt when it belongs to l.
  std::optional<std::size_t> index_of(const Root& a) const;
  /// lambda_i - lambda_j.
  GaussianRational pairing(const Root& a) const;
  QMatrix lambda_vee() const { return QMatrix::diagonal(lambda); }
  bool in_u(std::size_t i, std::size_t j) const { return block_of[i] < block_of[j]; }
  bool in_u_minus(std::size_t i, std::size_t j) const { return block_of[i] > block_of[j]; }
  bool in_levi(std::size_t i, std::size_t j) const { return block_of[i] == block_of[j]; }

 private:
  friend ParabolicData build_parabolic(const WeightLambda&);
  std::vector<int> index_table_;
};

/// Throws ConstantLambda (isotropy is all of g) or NotBlockSorted.
ParabolicData build_parabolic(const WeightLambda& lambda);

/// Number of cosets of W/W_lambda: n! / prod b_k!.
std::size_t coset_count(const ParabolicData& p);

}  // namespace orbitkit
