#ifndef PHONDUR_RNG_HPP
#define PHONDUR_RNG_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace phondur {

// Deterministic random source. The mt19937_64 engine is bit-exact across
// platforms per the standard; the std:: distributions are not, so all
// transforms are implemented here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Marsaglia polar method; one spare kept between calls.
  double normal();

  double normal(double mean, double sd) { return mean + sd * normal(); }

  // Unbiased integer in [0, n) by rejection.
  uint64_t below(uint64_t n);

  // Index sampled from an (unnormalized) nonnegative weight vector.
  int categorical(const std::vector<double>& weights);

  template <class T>
  void shuffle(std::vector<T>& v) {
    // Fisher-Yates
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Stable derived seed for a named sub-stream (per doculect, per epoch, ...).
  static uint64_t derive(uint64_t seed, const std::string& name);
  static uint64_t derive(uint64_t seed, uint64_t salt);

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// FNV-1a, used for content digests and seed derivation.
uint64_t fnv1a(const void* data, size_t len, uint64_t basis = 0xcbf29ce484222325ull);
uint64_t fnv1a(const std::string& s);

}  // namespace phondur

#endif  // PHONDUR_RNG_HPP
