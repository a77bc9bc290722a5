#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sinai::accept {

struct SubCheck {
    std::string name;
    double measured = 0.0;
    double target = 0.0;
    double tolerance = 0.0;  // |measured - target| <= tolerance passes
    bool pass = false;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::vector<SubCheck> checks;
    double seconds = 0.0;
};

// Pinned desk-scale run parameters. The defaults are the acceptance
// configuration; tests and the report command use them as-is.
struct Profile {
    std::uint64_t seed = 20240801;

    std::int64_t survival_replicas = 100000;
    std::int64_t window_large = 10001;  // nominal 10^4, rounded up to odd
    std::int64_t window_small = 1001;   // nominal 10^3

    std::int64_t ratio_replicas = 2500;
    double ratio_x_max = 1e21;
    double ratio_guard = 1e12;  // pairs start below this level

    std::int64_t growth_runs = 10000;

    std::int64_t grid_paths = 5000;
    double grid_step = 1e-3;
    double grid_half_length = 100.0;
    std::int64_t commute_paths = 100;

    std::int64_t ldp_runs_t15 = 1000000;
    std::int64_t ldp_runs_t20 = 30000000;

    std::int64_t sampler_draws = 1000000;
};

// Runs acceptance criteria, caching the heavy simulation batches that
// several criteria share (one batch serves 1, 2, 3, and 12).
class Context {
  public:
    explicit Context(Profile profile = Profile{});
    ~Context();

    CriterionResult run(int id);
    std::vector<CriterionResult> run_all();

    const Profile& profile() const { return profile_; }

    static constexpr int criterion_count = 12;
    static std::string title(int id);

  private:
    struct Cache;
    Profile profile_;
    std::unique_ptr<Cache> cache_;
};

}  // namespace sinai::accept
