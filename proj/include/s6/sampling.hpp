#ifndef S6_SAMPLING_HPP
#define S6_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "s6/calibration.hpp"
#include "s6/g2.hpp"
#include "s6/octonion.hpp"

namespace s6 {

inline constexpr std::uint64_t kDefaultSeed = 12648430;

/// Seeded source for every randomized check. Draws are a deterministic
/// function of the seed and the call sequence.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  double normal() { return gauss_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  Octonion octonion();
  ImOctonion gaussian7();
  ImOctonion unit7();
  /// Unit vector orthogonal to every column of `basis` (columns orthonormal).
  ImOctonion unit_orthogonal_to(const Eigen::Matrix<double, 7, Eigen::Dynamic>& basis);
  /// Three mutually orthogonal unit imaginary octonions.
  std::array<ImOctonion, 3> orthonormal_triple();
  Plane3 plane();
  /// Rotation-invariant random orthonormal frame of the same subspace.
  Plane3 reframe(const Plane3& p);
  std::array<ImOctonion, 3> basic_triple();
  /// Product of `factors` automorphisms built from random basic triples.
  G2Automorphism automorphism(int factors = 2);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
};

}  // namespace s6

#endif  // S6_SAMPLING_HPP
