#pragma once

// Seeded, portable instance generation.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. Bounded integers are drawn by rejection from raw 64-bit outputs
// (no std::uniform_int_distribution, which is implementation-defined).
// A rational of height H is num/den with num uniform in [-H, H] and den
// uniform in [1, H]; over GF(p) scalars are uniform residues.

#include <array>
#include <cstdint>
#include <random>

#include "harmonia/projective.hpp"

namespace harmonia {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Independent stream for instance `index` of a run seeded with `seed`.
  static Rng for_instance(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

class Sampler {
 public:
  Sampler(Rng rng, Field field, long height = 6) : rng_(rng), field_(field), height_(height) {}

  Field field() const { return field_; }
  Rng& rng() { return rng_; }

  Scalar scalar();
  Scalar nonzero();
  /// Small integer in [-height, height] as a field element.
  Scalar integer();

  HPoint2 point2();
  HLine2 line2();
  HPoint3 point3();
  HPlane3 plane3();
  PluckerLine line3();
  Collineation2 collineation2();
  Collineation3 collineation3();

  /// Random point on l.
  HPoint2 point_on(const HLine2& l);
  HPoint3 point_on(const PluckerLine& l);
  HPoint2 point_off(const HLine2& l);
  HPoint3 point_off(const HPlane3& pi);

  /// Three distinct collinear points.
  std::array<HPoint2, 3> collinear_triple();
  /// Four points, no three collinear.
  std::array<HPoint2, 4> quadrangle();
  /// Three points, not collinear.
  std::array<HPoint2, 3> triangle();
  /// Three pairwise skew lines.
  std::array<PluckerLine, 3> skew_triple();

 private:
  Rng rng_;
  Field field_;
  long height_;
};

}  // namespace harmonia
