#pragma once

#include <cstdint>
#include <vector>

#include "liepencil/cyclotomic.hpp"

namespace liepencil {

/// splitmix64. Used instead of <random> engines so that seeded runs are
/// byte-identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [-box, box].
  long uniform_box(int box) {
    std::uint64_t span = 2 * static_cast<std::uint64_t>(box) + 1;
    return static_cast<long>(next() % span) - box;
  }

  /// Integer point of the given dimension with coordinates in [-box, box].
  std::vector<Cyc> point(int dim, int box) {
    std::vector<Cyc> p(dim);
    for (int i = 0; i < dim; ++i) p[i] = Cyc(uniform_box(box));
    return p;
  }

 private:
  std::uint64_t state_;
};

}  // namespace liepencil
