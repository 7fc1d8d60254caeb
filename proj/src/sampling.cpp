#include "orbitkit/sampling.hpp"

namespace orbitkit {

namespace {

std::mt19937_64 seeded_engine(std::initializer_list<std::uint64_t> words) {
  std::vector<std::uint32_t> parts;
  for (std::uint64_t w : words) {
    parts.push_back(static_cast<std::uint32_t>(w));
    parts.push_back(static_cast<std::uint32_t>(w >> 32));
  }
  std::seed_seq seq(parts.begin(), parts.end());
  return std::mt19937_64(seq);
}

void check_range(const SampleRange& r) {
  if (r.num_max < 1 || r.den_max < 1) throw Error(ErrorCode::kConfigError, "sample range bounds must be >= 1");
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed, SampleRange range) : engine_(seeded_engine({seed})), range_(range) {
  check_range(range_);
}

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t sample, std::uint64_t stream, SampleRange range)
    : engine_(seeded_engine({seed, sample, stream})), range_(range) {
  check_range(range_);
}

GaussianRational RandomSource::rational() {
  std::uniform_int_distribution<long> num(-range_.num_max, range_.num_max);
  std::uniform_int_distribution<long> den(1, range_.den_max);
  long a = num(engine_);
  long b = den(engine_);
  return GaussianRational(mpq_class(a, b));  // canonicalized by the constructor
}

GaussianRational RandomSource::nonzero_rational() {
  for (;;) {
    GaussianRational q = rational();
    if (!q.is_zero()) return q;
  }
}

GaussianRational RandomSource::gaussian() {
  GaussianRational re = rational();
  GaussianRational im = rational();
  return GaussianRational(re.re(), im.re());
}

std::vector<GaussianRational> RandomSource::rationals(std::size_t count) {
  std::vector<GaussianRational> v;
  v.reserve(count);
  for (std::size_t k = 0; k < count; ++k) v.push_back(rational());
  return v;
}

std::size_t RandomSource::index(std::size_t bound) {
  std::uniform_int_distribution<std::size_t> d(0, bound - 1);
  return d(engine_);
}

QMatrix RandomSource::matrix(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rational();
  return m;
}

QMatrix RandomSource::invertible(std::size_t n) {
  for (;;) {
    QMatrix m = matrix(n);
    if (!determinant(m).is_zero()) return m;
  }
}

ChartPoint RandomSource::chart_point(const ParabolicData& p, const WeylCoset& sigma) {
  std::vector<GaussianRational> z = rationals(p.dim());
  std::vector<GaussianRational> xi = rationals(p.dim());
  return {sigma, std::move(z), std::move(xi)};
}

}  // namespace orbitkit
