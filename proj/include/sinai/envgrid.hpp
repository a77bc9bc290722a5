#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace sinai::envgrid {

enum class Direction : std::int8_t { up, down };

inline Direction opposite(Direction d) {
    return d == Direction::up ? Direction::down : Direction::up;
}

// A two-sided environment sampled on a uniform grid. The origin sits at
// values[origin_index] and is anchored to 0 by construction; position of
// grid point i is (i - origin_index) * step.
struct Path {
    double step = 0.0;
    std::int64_t origin_index = 0;
    std::vector<double> values;
    std::uint64_t seed = 0;

    double position(std::int64_t i) const {
        return static_cast<double>(i - origin_index) * step;
    }
};

// One excursion between consecutive extrema of the environment at some
// threshold level: endpoints in space units, height in environment units.
struct Slope {
    double left = 0.0;
    double right = 0.0;
    double height = 0.0;
    Direction direction = Direction::up;

    double length() const { return right - left; }
};

// Alternating slope decomposition at a threshold level, with the slope
// containing the origin marked. The optional part-slope heights record the
// visible rise/fall beyond the outermost extrema; they certify those
// extrema's outward witnesses as the level increases and make level
// advancement exact on finite domains.
struct SlopeChain {
    double level = 0.0;
    std::vector<Slope> slopes;
    std::size_t central_index = 0;
    std::optional<double> left_partial;
    std::optional<double> right_partial;

    // Throws DomainError if contiguity, alternation, centrality, or the
    // height floor is violated.
    void validate() const;
};

struct CentralStats {
    double excess = 0.0;
    double length = 0.0;
    Direction direction = Direction::up;
    double rel_origin = 0.0;  // position of the origin inside the slope
    double b = 0.0;           // location of the central extremum-to-be
};

// Samples a two-sided environment on [-half_length, half_length] with the
// given grid step. Increments are independent centered Gaussians of
// variance step; the two sides use independent streams derived from seed.
Path sample_path(double half_length, double step, std::uint64_t seed);

// Decomposes the path into its slope chain at the given level. Endpoints
// are exactly the grid points that are level-extrema of the piecewise
// linear interpolant, each witnessed inside the sampled domain; ties keep
// the leftmost point. Throws InsufficientDomain when fewer than two
// extrema lie on either closed side of the origin.
SlopeChain extract_slopes(const Path& path, double level);

CentralStats central_stats(const SlopeChain& chain);

// Returns the path t -> w(c t) / a on the same grid index range; step
// becomes step / c, values are divided by a. Exact for every positive a, c.
Path rescale_path(const Path& path, double a, double c);

}  // namespace sinai::envgrid
