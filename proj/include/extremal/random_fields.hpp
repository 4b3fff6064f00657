#pragma once

#include "extremal/disk.hpp"
#include "extremal/extension.hpp"
#include "extremal/grid.hpp"

#include <cstdint>
#include <memory>

namespace extremal {

// Deterministic uniform draws in [-1, 1]; the mapping from the engine state
// is fixed by hand so identical seeds give byte-identical streams.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    double uniform(); // [-1, 1]

  private:
    std::uint64_t next();
    std::uint64_t state_;
};

// Band-limited field with coefficients uniform in [-1,1] per mode, degree <= L.
BoundaryField random_band_limited(std::shared_ptr<const SphereGrid> grid, int L, Rng& rng);

// 1 + amplitude * g / max|g| with g band-limited; strictly positive.
BoundaryField random_positive_field(std::shared_ptr<const SphereGrid> grid, int L, double amplitude,
                                    Rng& rng);

// Ball sample with a low-order random radial profile per boundary mode.
BallSample random_ball_sample(std::shared_ptr<const SphereGrid> grid,
                              std::shared_ptr<const RadialRule> rule, int L, Rng& rng);

CarlemanSeries random_carleman_series(int order, Rng& rng);

} // namespace extremal
