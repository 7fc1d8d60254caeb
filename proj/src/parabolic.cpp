#include "orbitkit/parabolic.hpp"

#include <algorithm>

namespace orbitkit {

BlockSorted block_sort(const WeightLambda& lambda) {
  BlockSorted out;
  std::vector<bool> taken(lambda.n(), false);
  for (std::size_t i = 0; i < lambda.n(); ++i) {
    if (taken[i]) continue;
    for (std::size_t j = i; j < lambda.n(); ++j) {
      if (!taken[j] && lambda.values[j] == lambda.values[i]) {
        taken[j] = true;
        out.permutation.push_back(static_cast<int>(j));
        out.lambda.values.push_back(lambda.values[j]);
      }
    }
  }
  for (std::size_t k = 0; k < out.permutation.size(); ++k) {
    if (out.permutation[k] != static_cast<int>(k)) out.changed = true;
  }
  return out;
}

std::optional<std::size_t> ParabolicData::index_of(const Root& a) const {
  if (a.i < 0 || a.j < 0 || static_cast<std::size_t>(a.i) >= n() || static_cast<std::size_t>(a.j) >= n()) {
    throw Error(ErrorCode::kIndexOutOfRange, "root index outside 0..n-1");
  }
  int k = index_table_[static_cast<std::size_t>(a.i) * n() + static_cast<std::size_t>(a.j)];
  if (k < 0) return std::nullopt;
  return static_cast<std::size_t>(k);
}

GaussianRational ParabolicData::pairing(const Root& a) const {
  return lambda[static_cast<std::size_t>(a.i)] - lambda[static_cast<std::size_t>(a.j)];
}

ParabolicData build_parabolic(const WeightLambda& lambda) {
  const std::size_t n = lambda.n();
  if (n < 2 || std::all_of(lambda.values.begin(), lambda.values.end(),
                           [&](const GaussianRational& v) { return v == lambda.values[0]; })) {
    throw Error(ErrorCode::kConstantLambda, "lambda must have at least two distinct entries");
  }

  ParabolicData p;
  p.lambda = lambda.values;
  p.block_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || !(lambda.values[i] == lambda.values[i - 1])) {
      p.block_start.push_back(i);
      p.block_sizes.push_back(0);
    }
    p.block_sizes.back() += 1;
    p.block_of[i] = p.block_sizes.size() - 1;
  }
  for (std::size_t a = 0; a < p.block_sizes.size(); ++a) {
    for (std::size_t b = a + 1; b < p.block_sizes.size(); ++b) {
      if (lambda.values[p.block_start[a]] == lambda.values[p.block_start[b]]) {
        throw Error(ErrorCode::kNotBlockSorted, "equal lambda entries must be contiguous");
      }
    }
  }

  for (int h = 1; h < static_cast<int>(n); ++h) {
    for (int i = 0; i + h < static_cast<int>(n); ++i) {
      if (p.in_u(static_cast<std::size_t>(i), static_cast<std::size_t>(i + h))) p.delta_u.push_back({i, i + h});
    }
  }
  p.index_table_.assign(n * n, -1);
  for (std::size_t k = 0; k < p.delta_u.size(); ++k) {
    const Root& a = p.delta_u[k];
    p.index_table_[static_cast<std::size_t>(a.i) * n + static_cast<std::size_t>(a.j)] = static_cast<int>(k);
  }
  return p;
}

std::size_t coset_count(const ParabolicData& p) {
  auto factorial = [](std::size_t k) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  std::size_t count = factorial(p.n());
  for (auto b : p.block_sizes) count /= factorial(b);
  return count;
}

}  // namespace orbitkit
