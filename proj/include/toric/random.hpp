#ifndef TORIC_RANDOM_HPP
#define TORIC_RANDOM_HPP

// Reproducible pseudo-randomness for property suites. The generator is
// std::minstd_rand (Park-Miller LCG: x <- 48271 x mod 2^31 - 1); the seed is
// kDefaultSeed unless the TORIC_SEED environment variable holds an integer.

#include <toric/fan.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace toric {

inline constexpr std::uint32_t kDefaultSeed = 20061018u;

using Rng = std::minstd_rand;

inline std::uint32_t property_seed() {
  if (const char* env = std::getenv("TORIC_SEED")) {
    try {
      return static_cast<std::uint32_t>(std::stoul(env));
    } catch (...) {
    }
  }
  return kDefaultSeed;
}

inline long long uniform_int(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline LatticeVector random_lattice_vector(Rng& rng, std::size_t dim, long long bound) {
  LatticeVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = uniform_int(rng, -bound, bound);
  return v;
}

/// Numerators in [-bound, bound], denominators in [1, 7].
inline RationalVector random_rational_point(Rng& rng, std::size_t dim, long long bound = 20) {
  RationalVector x(dim);
  for (std::size_t i = 0; i < dim; ++i) x[i] = Rational(uniform_int(rng, -bound, bound), uniform_int(rng, 1, 7));
  return x;
}

/// Faces (ray subsets of size >= 2) of maximal cones, excluding faces that
/// lie in any of the avoided cones.
inline std::vector<RaySet> subdivision_candidates(const Fan& f, const std::vector<RaySet>& avoid) {
  std::set<RaySet> out;
  for (const auto& c : f.max_cones()) {
    const std::size_t n = c.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      RaySet t;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) t.push_back(c[i]);
      if (t.size() < 2) continue;
      bool inside = false;
      for (const auto& a : avoid) inside = inside || std::includes(a.begin(), a.end(), t.begin(), t.end());
      if (!inside) out.insert(std::move(t));
    }
  }
  return {out.begin(), out.end()};
}

/// Applies `steps` stellar subdivisions at the primitive sums of randomly
/// chosen faces, never touching the avoided cones (given as ray index sets,
/// which stay valid because new rays are appended).
inline Fan random_refinement(Fan f, std::size_t steps, Rng& rng, const std::vector<RaySet>& avoid = {}) {
  for (std::size_t s = 0; s < steps; ++s) {
    auto candidates = subdivision_candidates(f, avoid);
    if (candidates.empty()) break;
    const RaySet& face = candidates[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(candidates.size()) - 1))];
    LatticeVector sum(f.dim());
    for (std::size_t i : face) sum = sum + f.ray(i);
    f = stellar_subdivide(f, make_primitive(sum));
  }
  return f;
}

}  // namespace toric

#endif  // TORIC_RANDOM_HPP
