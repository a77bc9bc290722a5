#include "sinai/envgrid.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "sinai/errors.hpp"
#include "sinai/rng.hpp"

namespace sinai::envgrid {

void SlopeChain::validate() const {
    if (slopes.empty()) throw DomainError("empty slope chain");
    if (central_index >= slopes.size()) throw DomainError("central index out of range");
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        const Slope& s = slopes[i];
        if (!(s.left < s.right)) throw DomainError("slope endpoints out of order");
        if (!(s.height >= level)) throw DomainError("slope height below level");
        if (i + 1 < slopes.size()) {
            if (s.right != slopes[i + 1].left) throw DomainError("chain not contiguous");
            if (s.direction == slopes[i + 1].direction)
                throw DomainError("chain directions do not alternate");
        }
    }
    const Slope& c = slopes[central_index];
    if (!(c.left <= 0.0 && 0.0 < c.right)) throw DomainError("central slope misses origin");
    if (left_partial && !(*left_partial >= level))
        throw DomainError("left part-slope below level");
    if (right_partial && !(*right_partial >= level))
        throw DomainError("right part-slope below level");
}

Path sample_path(double half_length, double step, std::uint64_t seed) {
    if (!std::isfinite(half_length) || !std::isfinite(step) || step <= 0.0 ||
        half_length < step) {
        throw NonFiniteInput("sample_path requires half_length >= step > 0");
    }
    const double side_f = std::ceil(half_length / step - 1e-9);
    if (!(side_f < 1e9)) throw NonFiniteInput("grid would overflow index range");
    const std::int64_t side = static_cast<std::int64_t>(side_f);

    Path p;
    p.step = step;
    p.origin_index = side;
    p.seed = seed;
    p.values.assign(2 * side + 1, 0.0);
    const double sd = std::sqrt(step);

    rng::Stream right(seed, rng::purpose::path_right, 0);
    for (std::int64_t i = 1; i <= side; ++i) {
        p.values[side + i] = p.values[side + i - 1] + sd * right.gaussian();
    }
    rng::Stream left(seed, rng::purpose::path_left, 0);
    for (std::int64_t i = 1; i <= side; ++i) {
        p.values[side - i] = p.values[side - i + 1] + sd * left.gaussian();
    }
    return p;
}

namespace {

// Forward drawdown scan: confirmed alternating extrema of the piecewise
// linear interpolant at threshold x. Strict comparisons keep the leftmost
// point of any exact tie. The first emitted extremum may lack an in-domain
// outward witness; the caller repairs it.
void scan_extrema(const std::vector<double>& v, double x,
                  std::vector<std::int64_t>& idx, std::vector<std::int8_t>& typ) {
    idx.clear();
    typ.clear();
    const std::int64_t n = static_cast<std::int64_t>(v.size());
    int mode = 0;  // 0 unknown, +1 tracking a max, -1 tracking a min
    double mnv = v[0], mxv = v[0];
    std::int64_t mni = 0, mxi = 0;
    for (std::int64_t i = 1; i < n; ++i) {
        const double val = v[i];
        if (mode == 0) {
            if (val < mnv) { mnv = val; mni = i; }
            if (val > mxv) { mxv = val; mxi = i; }
            const bool min_trig = val >= mnv + x;
            const bool max_trig = val <= mxv - x;
            if (min_trig && max_trig) {
                // Both witnessed at once; the earlier candidate came first.
                if (mni < mxi) {
                    idx.push_back(mni); typ.push_back(-1);
                    idx.push_back(mxi); typ.push_back(+1);
                    mode = -1; mnv = val; mni = i;
                } else {
                    idx.push_back(mxi); typ.push_back(+1);
                    idx.push_back(mni); typ.push_back(-1);
                    mode = +1; mxv = val; mxi = i;
                }
            } else if (min_trig) {
                idx.push_back(mni); typ.push_back(-1);
                mode = +1; mxv = val; mxi = i;
            } else if (max_trig) {
                idx.push_back(mxi); typ.push_back(+1);
                mode = -1; mnv = val; mni = i;
            }
        } else if (mode == +1) {
            if (val > mxv) {
                mxv = val; mxi = i;
            } else if (val <= mxv - x) {
                idx.push_back(mxi); typ.push_back(+1);
                mode = -1; mnv = val; mni = i;
            }
        } else {
            if (val < mnv) {
                mnv = val; mni = i;
            } else if (val >= mnv + x) {
                idx.push_back(mni); typ.push_back(-1);
                mode = +1; mxv = val; mxi = i;
            }
        }
    }
}

// Visible counter-move beyond an outermost extremum, toward the domain end.
double outward_reach(const std::vector<double>& v, std::int64_t j,
                     std::int8_t type, bool leftward) {
    const std::int64_t n = static_cast<std::int64_t>(v.size());
    double extreme = v[j];
    if (leftward) {
        for (std::int64_t k = 0; k < j; ++k) {
            if (type == -1 ? v[k] > extreme : v[k] < extreme) extreme = v[k];
        }
    } else {
        for (std::int64_t k = j + 1; k < n; ++k) {
            if (type == -1 ? v[k] > extreme : v[k] < extreme) extreme = v[k];
        }
    }
    return std::abs(extreme - v[j]);
}

}  // namespace

SlopeChain extract_slopes(const Path& path, double level) {
    if (!(level > 0.0) || !std::isfinite(level))
        throw NonFiniteInput("level must be positive and finite");
    if (path.values.size() < 3) throw InsufficientDomain("path too short");
    if (!(path.step > 0.0)) throw NonFiniteInput("path step must be positive");
    for (double v : path.values) {
        if (!std::isfinite(v)) throw NonFiniteInput("path values must be finite");
    }

    std::vector<std::int64_t> idx;
    std::vector<std::int8_t> typ;
    scan_extrema(path.values, level, idx, typ);

    // The scan confirms each extremum by its inward counter-move; the first
    // one still needs an outward witness inside the domain.
    if (!idx.empty() &&
        outward_reach(path.values, idx.front(), typ.front(), true) < level) {
        idx.erase(idx.begin());
        typ.erase(typ.begin());
    }

    std::size_t n_left = 0, n_right = 0;
    for (std::int64_t j : idx) {
        const double pos = path.position(j);
        if (pos <= 0.0) ++n_left;
        if (pos >= 0.0) ++n_right;
    }
    if (n_left < 2 || n_right < 2) {
        throw InsufficientDomain("need two interior extrema on each side of 0");
    }

    SlopeChain chain;
    chain.level = level;
    chain.slopes.reserve(idx.size() - 1);
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
        Slope s;
        s.left = path.position(idx[i]);
        s.right = path.position(idx[i + 1]);
        s.height = std::abs(path.values[idx[i + 1]] - path.values[idx[i]]);
        s.direction = typ[i] == -1 ? Direction::up : Direction::down;
        if (s.left <= 0.0 && 0.0 < s.right) chain.central_index = chain.slopes.size();
        chain.slopes.push_back(s);
    }
    chain.left_partial = outward_reach(path.values, idx.front(), typ.front(), true);
    chain.right_partial = outward_reach(path.values, idx.back(), typ.back(), false);
    chain.validate();
    return chain;
}

CentralStats central_stats(const SlopeChain& chain) {
    chain.validate();
    const Slope& c = chain.slopes[chain.central_index];
    CentralStats st;
    st.excess = c.height - chain.level;
    st.length = c.length();
    st.direction = c.direction;
    st.rel_origin = (0.0 - c.left) / c.length();
    st.b = c.direction == Direction::up ? c.left : c.right;
    return st;
}

Path rescale_path(const Path& path, double a, double c) {
    if (!std::isfinite(a) || !std::isfinite(c) || a <= 0.0 || c <= 0.0) {
        throw NonFiniteInput("rescale factors must be positive and finite");
    }
    Path out;
    out.step = path.step / c;
    out.origin_index = path.origin_index;
    out.seed = path.seed;
    out.values.reserve(path.values.size());
    for (double v : path.values) out.values.push_back(v / a);
    return out;
}

}  // namespace sinai::envgrid
