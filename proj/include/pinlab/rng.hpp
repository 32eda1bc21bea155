#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace pinlab {

// Deterministic random source. Distributions are implemented on top of the
// raw mt19937_64 stream (std:: distributions are implementation-defined and
// would break seed-pinned expected values).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // standard normal (Box-Muller, cached spare)
  double gauss();

  std::complex<double> cgauss() {
    double re = gauss();
    double im = gauss();
    return {re, im};
  }

  // uniform integer in [0, n)
  int uniform_int(int n);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Derives independent per-task seeds from a base seed (splitmix64 step).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace pinlab
