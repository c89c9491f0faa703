#ifndef CVGEO_GENERATORS_HPP
#define CVGEO_GENERATORS_HPP

#include <cstdint>
#include <cstddef>

#include "cvgeo/polytope.hpp"
#include "cvgeo/rational.hpp"

namespace cvgeo {

// Deterministic 64-bit stream (SplitMix64); identical seeds give identical
// sequences on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi], inclusive.
  int next_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
  }

private:
  std::uint64_t state_;
};

// Random rational with numerator in [-max_num, max_num] and denominator in
// [1, max_den]; may be zero.
Rational random_rational(Rng& rng, int max_num, int max_den);
// Same, but never zero.
Rational random_nonzero_rational(Rng& rng, int max_num, int max_den);
// Same, but strictly positive.
Rational random_positive_rational(Rng& rng, int max_num, int max_den);

// Random full-dimensional polytope with the origin strictly interior:
// a randomly scaled cross-polytope frame guarantees interiority, plus
// `extra_points` additional random points stretch the hull.
Polytope random_origin_polytope(Rng& rng, std::size_t dim,
                                std::size_t extra_points);

// Product of `shear_count` random elementary shears; always det = 1.
LinearMap random_unimodular(Rng& rng, std::size_t dim, int shear_count = 4);

// Random invertible matrix with small integer entries (det != 0, any sign).
LinearMap random_invertible(Rng& rng, std::size_t dim);

} // namespace cvgeo

#endif
