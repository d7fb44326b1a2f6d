#ifndef RIBBONS_RNG_HPP
#define RIBBONS_RNG_HPP

#include <cstdint>

#include "ribbons/field.hpp"

namespace ribbons {

// Stateless counter-based generator: value(i) depends only on (seed, i),
// so partitioned runs reproduce bit-for-bit at any thread count.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed) : seed_(seed) {}

  uint64_t seed() const { return seed_; }

  uint64_t at(uint64_t counter) const {
    uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t counter, uint64_t bound) const { return at(counter) % bound; }

  long long int_in(uint64_t counter, long long lo, long long hi) const {
    return lo + static_cast<long long>(below(counter, static_cast<uint64_t>(hi - lo + 1)));
  }

  // Field sampling: uniform residue over F_p, small integer over Q.
  Scalar scalar(uint64_t counter, const Field& f) const {
    if (f.is_finite()) return Scalar::residue(at(counter), f);
    return Scalar::from_int(int_in(counter, -9, 9), f);
  }

  Scalar nonzero_scalar(uint64_t counter, const Field& f) const {
    if (f.is_finite()) {
      const uint64_t p = f.characteristic();
      return Scalar::residue(1 + below(counter, p - 1), f);
    }
    const long long v = int_in(counter, -9, 8);
    return Scalar::from_int(v >= 0 ? v + 1 : v, f);
  }

 private:
  uint64_t seed_;
};

}  // namespace ribbons

#endif
