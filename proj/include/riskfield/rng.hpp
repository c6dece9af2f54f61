// Deterministic, platform-independent Gaussian sampling.
//
// std::normal_distribution's output sequence is implementation-defined, so
// byte-identical outputs across standard libraries require rolling the
// transform ourselves: mt19937_64 for uniform bits plus Box-Muller.
#ifndef RISKFIELD_RNG_HPP_
#define RISKFIELD_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace riskfield {

// SplitMix64 finalizer; used to decorrelate derived seeds.
uint64_t splitmix64(uint64_t x);

// Stable per-stream seed so parallel evaluation order can never change what
// any stream produces.
uint64_t derive_seed(uint64_t base, uint64_t stream_index);

class GaussianSampler {
 public:
  explicit GaussianSampler(uint64_t seed) : engine_(seed) {}

  // One draw from Normal(mean, stddev^2).
  double next(double mean, double stddev);

 private:
  double next_standard();
  double next_uniform();  // uniform in (0, 1]

  std::mt19937_64 engine_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

struct AccelSampler {
  double mean = 0.0;      // m/s^2, obstacle acceleration at the current frame
  double variance = 0.0;  // (m/s^2)^2, dataset-calibrated
  int num = 20;           // sample count
  uint64_t seed = 0;
};

// `num` independent draws from Normal(mean, variance); deterministic for a
// fixed seed, and exactly constant when variance is zero.
std::vector<double> sample_accelerations(const AccelSampler& sampler);

}  // namespace riskfield

#endif  // RISKFIELD_RNG_HPP_
