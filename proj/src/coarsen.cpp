#include "sinai/coarsen.hpp"

#include <algorithm>
#include <cmath>

#include "sinai/errors.hpp"
#include "sinai/laws.hpp"

namespace sinai::coarsen {

using envgrid::Direction;

Engine Engine::from_chain(const envgrid::SlopeChain& chain) {
    chain.validate();
    Engine e;
    e.synthetic_ = false;
    e.level_ = chain.level;
    e.log_.x_max = chain.level;
    e.nodes_.reserve(2 * chain.slopes.size() + 8);

    std::int64_t prev = -1;
    if (chain.left_partial) {
        Node p;
        p.height = *chain.left_partial;
        p.partial = true;
        p.alive = true;
        p.right = chain.slopes.front().left;
        prev = e.append_node(p);
    }
    for (std::size_t i = 0; i < chain.slopes.size(); ++i) {
        const envgrid::Slope& s = chain.slopes[i];
        Node n;
        n.height = s.height;
        n.left = s.left;
        n.right = s.right;
        n.direction = s.direction;
        n.alive = true;
        n.prev = prev;
        const std::int64_t id = e.append_node(n);
        if (prev != -1) e.nodes_[prev].next = id;
        if (i == chain.central_index) e.central_ = id;
        prev = id;
    }
    if (chain.right_partial) {
        Node p;
        p.height = *chain.right_partial;
        p.partial = true;
        p.alive = true;
        p.left = chain.slopes.back().right;
        p.prev = prev;
        const std::int64_t id = e.append_node(p);
        e.nodes_[prev].next = id;
    }
    e.set_sign_from_central();
    return e;
}

Engine Engine::synthetic(std::int64_t n_slopes, std::uint64_t seed) {
    if (n_slopes < 3 || n_slopes % 2 == 0) {
        throw DomainError("synthetic window must be odd and >= 3");
    }
    Engine e;
    e.synthetic_ = true;
    e.window_ = n_slopes;
    e.level_ = 1.0;
    e.log_.x_max = 1.0;
    e.stream_ = rng::Stream(seed, rng::purpose::engine, 0);
    e.nodes_.reserve(2 * n_slopes + 8);

    const std::int64_t mid = n_slopes / 2;
    const Direction central_dir =
        e.stream_.coin() ? Direction::up : Direction::down;
    for (std::int64_t i = 0; i < n_slopes; ++i) {
        Node n;
        const double excess = i == mid
                                  ? laws::sample_central_excess(e.stream_)
                                  : e.stream_.exponential(1.0);
        n.height = 1.0 + excess;
        n.direction = ((i - mid) % 2 == 0) ? central_dir : opposite(central_dir);
        n.alive = true;
        n.prev = i == 0 ? -1 : i - 1;
        n.next = i == n_slopes - 1 ? -1 : i + 1;
        e.append_node(n);
    }
    e.central_ = mid;
    e.set_sign_from_central();
    return e;
}

void Engine::set_refresh_floor(std::int64_t floor) {
    if (floor < 3) throw DomainError("refresh floor must be >= 3");
    refresh_floor_ = floor;
}

void Engine::set_sign_from_central() {
    // Upward central slope: the pending extremum is its left endpoint, so
    // the tracked location is <= 0.
    log_.initial_sign =
        nodes_[central_].direction == Direction::up ? -1 : +1;
}

std::int64_t Engine::append_node(const Node& n) {
    const std::int64_t id = static_cast<std::int64_t>(nodes_.size());
    nodes_.push_back(n);
    if (n.alive) {
        ++live_;
        push_event(n.height, id);
    }
    return id;
}

void Engine::push_event(double height, std::int64_t id) {
    queue_.emplace(height, id);
}

SignChangeLog Engine::advance_to(double x_max) {
    if (!(x_max >= level_) || !std::isfinite(x_max)) {
        throw DomainError("advance_to needs x_max >= current level");
    }
    while (!queue_.empty()) {
        const auto [h, id] = queue_.top();
        if (!nodes_[id].alive || nodes_[id].height != h) {
            queue_.pop();  // tombstone
            continue;
        }
        if (h > x_max) break;
        queue_.pop();
        if (h < level_) throw NonMonotoneEvent("event below current level");
        level_ = h;
        if (nodes_[id].partial) {
            handle_trim(id);
        } else {
            handle_merge(id);
        }
        if (synthetic_ && live_ < std::min(refresh_floor_, window_ - 2)) {
            refresh_window();
        }
    }
    level_ = x_max;
    log_.x_max = x_max;
    return log_;
}

void Engine::handle_merge(std::int64_t id) {
    std::int64_t left = nodes_[id].prev;
    std::int64_t right = nodes_[id].next;
    if (left == -1) {
        if (!synthetic_) throw WindowExhausted("chain end reached at level " +
                                               std::to_string(level_));
        left = replenish(id, true);
    }
    if (right == -1) {
        if (!synthetic_) throw WindowExhausted("chain end reached at level " +
                                               std::to_string(level_));
        right = replenish(id, false);
    }

    const double merged_height =
        nodes_[left].height + nodes_[right].height - nodes_[id].height;
    if (!(merged_height >= nodes_[left].height) ||
        !(merged_height >= nodes_[right].height)) {
        throw NonMonotoneEvent("merged slope below a neighbor");
    }

    Node m;
    m.height = merged_height;
    m.alive = true;
    m.partial = nodes_[left].partial || nodes_[right].partial;
    if (nodes_[left].partial && nodes_[right].partial) {
        // Nothing certified remains around the origin.
        throw WindowExhausted("window collapsed to part-slopes");
    }
    m.direction =
        nodes_[left].partial ? nodes_[right].direction : nodes_[left].direction;
    m.left = nodes_[left].left;
    m.right = nodes_[right].right;
    m.prev = nodes_[left].prev;
    m.next = nodes_[right].next;

    nodes_[left].alive = false;
    nodes_[id].alive = false;
    nodes_[right].alive = false;
    live_ -= 3;

    const bool was_central = id == central_;
    const bool absorbed_central = left == central_ || right == central_;
    const std::int64_t merged = append_node(m);
    if (m.prev != -1) nodes_[m.prev].next = merged;
    if (m.next != -1) nodes_[m.next].prev = merged;

    if (was_central) {
        log_.levels.push_back(level_);
        central_ = merged;
    } else if (absorbed_central) {
        central_ = merged;
    }
    if (nodes_[merged].partial && central_ == merged) {
        throw WindowExhausted("central slope lost its certified endpoint");
    }
}

void Engine::handle_trim(std::int64_t id) {
    // A boundary part-slope popped: the outermost extremum loses its
    // outward witness. The adjacent full slope becomes the new part-slope,
    // keeping its height (its queue entry stays valid).
    const bool left_end = nodes_[id].prev == -1;
    const std::int64_t inner = left_end ? nodes_[id].next : nodes_[id].prev;
    if (inner == -1) throw WindowExhausted("part-slopes only");
    if (inner == central_) {
        throw WindowExhausted("central slope lost its certified endpoint");
    }
    nodes_[id].alive = false;
    --live_;
    nodes_[inner].partial = true;
    if (left_end) {
        nodes_[inner].prev = -1;
    } else {
        nodes_[inner].next = -1;
    }
}

std::int64_t Engine::replenish(std::int64_t inner, bool left_end) {
    Node n;
    n.height = level_ * (1.0 + stream_.exponential(1.0));
    n.direction = opposite(nodes_[inner].direction);
    n.alive = true;
    if (left_end) {
        n.next = inner;
    } else {
        n.prev = inner;
    }
    const std::int64_t id = append_node(n);
    if (left_end) {
        nodes_[inner].prev = id;
    } else {
        nodes_[inner].next = id;
    }
    ++replenish_count_;
    return id;
}

void Engine::refresh_window() {
    // Rebuild the far field around the exactly-preserved central slope:
    // fresh excesses ~ Exp(level) on both sides, alternating directions.
    const double central_height = nodes_[central_].height;
    const Direction central_dir = nodes_[central_].direction;

    nodes_.clear();
    queue_ = decltype(queue_)();
    live_ = 0;
    const std::int64_t mid = window_ / 2;
    for (std::int64_t i = 0; i < window_; ++i) {
        Node n;
        n.height = i == mid ? central_height
                            : level_ * (1.0 + stream_.exponential(1.0));
        n.direction = ((i - mid) % 2 == 0) ? central_dir : opposite(central_dir);
        n.alive = true;
        n.prev = i == 0 ? -1 : i - 1;
        n.next = i == window_ - 1 ? -1 : i + 1;
        append_node(n);
    }
    central_ = mid;
    ++refresh_count_;
}

envgrid::SlopeChain Engine::chain_at() const {
    if (synthetic_) throw DomainError("chain snapshot needs tracked lengths");
    std::int64_t head = central_;
    while (nodes_[head].prev != -1) head = nodes_[head].prev;

    envgrid::SlopeChain chain;
    chain.level = level_;
    for (std::int64_t id = head; id != -1; id = nodes_[id].next) {
        const Node& n = nodes_[id];
        if (n.partial) {
            (id == head ? chain.left_partial : chain.right_partial) = n.height;
            continue;
        }
        if (id == central_) chain.central_index = chain.slopes.size();
        envgrid::Slope s;
        s.left = n.left;
        s.right = n.right;
        s.height = n.height;
        s.direction = n.direction;
        chain.slopes.push_back(s);
    }
    chain.validate();
    return chain;
}

}  // namespace sinai::coarsen
