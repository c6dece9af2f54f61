#include "riskfield/rng.hpp"

#include <cmath>

namespace riskfield {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t base, uint64_t stream_index) {
  return splitmix64(base ^ splitmix64(stream_index + 1));
}

double GaussianSampler::next_uniform() {
  // 53 random bits mapped to (0, 1]; never 0, so log() below stays finite.
  const uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

double GaussianSampler::next_standard() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  cached_ = r * std::sin(angle);
  has_cached_ = true;
  return r * std::cos(angle);
}

double GaussianSampler::next(double mean, double stddev) {
  return mean + stddev * next_standard();
}

std::vector<double> sample_accelerations(const AccelSampler& sampler) {
  GaussianSampler rng(sampler.seed);
  const double stddev = std::sqrt(sampler.variance);
  std::vector<double> samples(static_cast<size_t>(sampler.num));
  for (double& s : samples) s = rng.next(sampler.mean, stddev);
  return samples;
}

}  // namespace riskfield
