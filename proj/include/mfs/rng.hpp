#ifndef MFS_RNG_HPP
#define MFS_RNG_HPP

#include <cstdint>

namespace mfs {

// Counter-based generator: output i is a pure function of (key, i), so
// streams are splittable and seeds are portable across platforms.
// Draw order is part of the file-format contract; do not reorder calls.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64();

  // uniform in [0, 1)
  double next_double();

  // uniform in [a, b)
  double next_uniform(double a, double b);

  // standard normal via Box-Muller, pairs cached
  double next_normal();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Stateless mixing of a 64-bit word (splitmix64 finalizer).
std::uint64_t mix64(std::uint64_t x);

// Child stream key for (master seed, cell index, trial index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t cell, std::uint64_t trial);

}  // namespace mfs

#endif
