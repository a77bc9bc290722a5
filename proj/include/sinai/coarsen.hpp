#pragma once

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "sinai/envgrid.hpp"
#include "sinai/rng.hpp"

namespace sinai::coarsen {

// Levels at which the central slope was absorbed and the tracked extremum
// changed sign, in increasing order, complete up to x_max.
struct SignChangeLog {
    int initial_sign = +1;  // +1 or -1
    std::vector<double> levels;
    double x_max = 1.0;
};

// Event-driven renormalization engine. Pops the minimum-height slope,
// merges it with its two neighbors into one slope of height
// H_left + H_right - H_mid, and tracks the slope containing the origin.
//
// Grid mode (from_chain): endpoints tracked, no randomness, boundary
// part-slopes advance exactly; running past the certified window throws
// WindowExhausted.
//
// Synthetic mode (synthetic): heights only. When a merge reaches the chain
// boundary, a fresh slope with excess ~ Exp(level) is appended
// (replenishment); when the live population falls below refresh_floor, the
// window is rebuilt around the exactly-preserved central slope with fresh
// Exp(level) excesses. Both counters are reported so boundary-dominated
// runs can be detected.
class Engine {
  public:
    static Engine from_chain(const envgrid::SlopeChain& chain);
    static Engine synthetic(std::int64_t n_slopes, std::uint64_t seed);

    // Advances the level, processing every event with height <= x_max, and
    // returns a copy of the completed flip log.
    SignChangeLog advance_to(double x_max);

    // Snapshot of the live chain (grid mode only).
    envgrid::SlopeChain chain_at() const;

    double level() const { return level_; }
    std::int64_t live_slopes() const { return live_; }
    bool synthetic_mode() const { return synthetic_; }
    std::int64_t replenish_count() const { return replenish_count_; }
    std::int64_t refresh_count() const { return refresh_count_; }
    const SignChangeLog& log() const { return log_; }

    // Population floor triggering a synthetic window rebuild. Must be at
    // least 3; raising it tightens boundary fidelity at some cost.
    void set_refresh_floor(std::int64_t floor);

  private:
    struct Node {
        double height = 0.0;
        double left = 0.0;   // grid mode only
        double right = 0.0;  // grid mode only
        envgrid::Direction direction = envgrid::Direction::up;
        std::int64_t prev = -1;
        std::int64_t next = -1;
        bool alive = false;
        bool partial = false;  // boundary part-slope (grid mode)
    };

    Engine() = default;

    std::int64_t append_node(const Node& n);
    void push_event(double height, std::int64_t id);
    void handle_merge(std::int64_t id);
    void handle_trim(std::int64_t id);
    std::int64_t replenish(std::int64_t inner, bool left_end);
    void refresh_window();
    void set_sign_from_central();

    using Event = std::pair<double, std::int64_t>;
    std::vector<Node> nodes_;
    std::priority_queue<Event, std::vector<Event>, std::greater<Event>> queue_;
    std::int64_t central_ = -1;
    double level_ = 1.0;
    std::int64_t live_ = 0;
    bool synthetic_ = false;
    std::int64_t window_ = 0;        // synthetic population target
    std::int64_t refresh_floor_ = 64;
    rng::Stream stream_;
    SignChangeLog log_;
    std::int64_t replenish_count_ = 0;
    std::int64_t refresh_count_ = 0;
};

}  // namespace sinai::coarsen
