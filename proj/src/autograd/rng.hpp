#ifndef PROTOREC_AUTOGRAD_RNG_HPP
#define PROTOREC_AUTOGRAD_RNG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace protorec::ag {

// xoshiro256** seeded through splitmix64. Every stochastic component in the
// toolkit draws from an Rng constructed via derive_seed so that a run is a
// pure function of its seeds.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();

  // Uniform in [0, 1), 53-bit mantissa.
  double next_double();

  double uniform(double lo, double hi);

  // Uniform integer in [0, n). n must be positive.
  int next_int(int n);

  // Fisher-Yates in-place shuffle.
  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (int i = static_cast<int>(xs.size()) - 1; i > 0; --i) {
      int j = next_int(i + 1);
      std::swap(xs[i], xs[j]);
    }
  }

 private:
  uint64_t s_[4];
};

// Stable 64-bit seed for a named substream (e.g. "init/d2p.enc.w",
// "dropout/epoch3/item17"). Streams with distinct tags are independent, so
// adding a consumer never perturbs the draws seen by existing ones.
uint64_t derive_seed(uint64_t root, std::string_view tag);

uint64_t fnv1a64(std::string_view s);

}  // namespace protorec::ag

#endif
