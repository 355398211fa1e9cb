// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "finance.hpp"

namespace capex {

/// Modelled years [0 .. end] with a sorted milestone subset and per-milestone
/// integer weights. Weights partition the horizon: milestone m represents the
/// block [m, next milestone - 1], the last milestone represents through `end`.
class Horizon {
public:
    static Horizon make(int end, std::vector<int> milestones,
                        std::optional<std::vector<int>> weight_overrides = {});

    /// Convenience: every year in [0, end] is a milestone with weight 1.
    static Horizon yearly(int end);

    int end() const { return end_; }
    int year_count() const { return end_ + 1; }
    const std::vector<int>& milestones() const { return milestones_; }
    const std::vector<int>& weights() const { return weights_; }

    bool is_yearly() const;
    bool is_milestone(int year) const;
    /// Index into milestones() or -1.
    int milestone_index(int year) const;
    int weight_of(int milestone) const;
    /// Last year represented by the milestone at `index`.
    int block_end(int index) const;

private:
    int end_ = 0;
    std::vector<int> milestones_;
    std::vector<int> weights_;
};

/// Forward-gap weights: each milestone's weight is the distance to the next
/// milestone, the last covers itself through horizon_end.
std::vector<int> derive_milestone_weights(const std::vector<int>& milestones,
                                          int horizon_end);

/// Years an investment provides capacity, plus the milestones falling inside
/// (clipped to the horizon; the year range itself is kept unclipped so the
/// salvage arithmetic can see the full lifetime).
struct LifetimeWindow {
    int invest_year = 0;
    int first_year = 0;
    int last_year = 0;  // invest_year + lifetime - 1, unclipped
    std::vector<int> active_milestones;
};

LifetimeWindow capacity_window(int invest_year, int lifetime, const Horizon& horizon);

/// Mismatch between an asset's end of life and the milestone blocks that
/// charge for it. `overcounted_years` is the number of represented years
/// past end of life; the interval is empty (first > last) when zero.
struct LifetimeGap {
    int overcounted_years = 0;
    int first_year = 0;
    int last_year = -1;
};

LifetimeGap detect_lifetime_gap(int invest_year, int lifetime, const Horizon& horizon);

}  // namespace capex
