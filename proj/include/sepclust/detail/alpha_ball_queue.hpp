#pragma once

#include "sepclust/geometry.hpp"

#include <functional>
#include <queue>
#include <utility>
#include <vector>

namespace sepclust::detail {

/**
 * Repeated alpha-ball queries over a shrinking subset of a point set.
 *
 * Removing points can only grow a center's alpha-th neighbour distance, so a cached
 * distance is a lower bound on the current one. The heap is keyed on (cached radius, index):
 * an entry is recomputed when it reaches the top and accepted once the recomputed value
 * matches the key. The answer is identical, bit for bit, to approx_min_ball_alpha on the
 * current active set.
 */
class AlphaBallQueue {
  public:
    AlphaBallQueue(const PointSet& points, std::vector<std::size_t> active, std::size_t alpha)
      : points_(&points)
      , alive_(points.size(), 0)
      , active_(std::move(active))
      , alpha_(alpha) {
        for (auto i : active_) {
            alive_[i] = 1;
        }
        if (alpha_ == 0) {
            throw InvalidArgument("alpha must be >= 1");
        }
        if (active_.size() >= alpha_) {
            seed_heap();
        }
    }

    std::size_t alpha() const noexcept { return alpha_; }
    std::size_t active_count() const noexcept { return active_.size(); }
    const std::vector<std::size_t>& active() const noexcept { return active_; }
    bool is_active(std::size_t i) const noexcept { return alive_[i] != 0; }

    /// Current best ball; requires active_count() >= alpha().
    AlphaBall top() {
        if (active_.size() < alpha_) {
            throw InsufficientPoints(0, alpha_);
        }
        for (;;) {
            auto [radius, center] = heap_.top();
            heap_.pop();
            if (!alive_[center]) {
                continue;
            }
            const double fresh = kth_distance(*points_, active_, center, alpha_, scratch_);
            heap_.emplace(fresh, center);
            if (fresh == radius) {
                return AlphaBall{Ball(points_->point(center), fresh), center};
            }
        }
    }

    void remove(std::span<const std::size_t> indices) {
        bool changed = false;
        for (auto i : indices) {
            if (alive_[i]) {
                alive_[i] = 0;
                changed = true;
            }
        }
        if (changed) {
            std::erase_if(active_, [this](std::size_t i) { return alive_[i] == 0; });
        }
    }

    /// Removes every active point within `ball` (tolerant containment); returns them.
    std::vector<std::size_t> remove_within(const Ball& ball) {
        std::vector<std::size_t> gone;
        for (auto i : active_) {
            if (ball.contains((*points_)[i])) {
                gone.push_back(i);
            }
        }
        remove(gone);
        return gone;
    }

  private:
    using Entry = std::pair<double, std::size_t>;

    void seed_heap() {
        std::vector<Entry> entries;
        entries.reserve(active_.size());
        for (auto c : active_) {
            entries.emplace_back(kth_distance(*points_, active_, c, alpha_, scratch_), c);
        }
        heap_ = decltype(heap_)(std::greater<Entry>{}, std::move(entries));
    }

    const PointSet* points_;
    std::vector<char> alive_;
    std::vector<std::size_t> active_;
    std::size_t alpha_;
    std::vector<double> scratch_;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap_;
};

}  // namespace sepclust::detail
