// SPDX-License-Identifier: Apache-2.0
#include "horizon.hpp"

#include <algorithm>
#include <numeric>

namespace capex {

std::vector<int> derive_milestone_weights(const std::vector<int>& milestones,
                                          int horizon_end) {
    if (milestones.empty()) {
        throw ValidationError("milestones must be non-empty");
    }
    if (milestones.front() != 0) {
        throw ValidationError("first milestone must be year 0");
    }
    for (size_t i = 0; i < milestones.size(); ++i) {
        if (milestones[i] < 0 || milestones[i] > horizon_end) {
            throw ValidationError("milestone outside [0, horizon end]");
        }
        if (i > 0 && milestones[i] <= milestones[i - 1]) {
            throw ValidationError("milestones must be strictly increasing");
        }
    }
    std::vector<int> weights(milestones.size());
    for (size_t i = 0; i + 1 < milestones.size(); ++i) {
        weights[i] = milestones[i + 1] - milestones[i];
    }
    weights.back() = horizon_end - milestones.back() + 1;
    return weights;
}

Horizon Horizon::make(int end, std::vector<int> milestones,
                      std::optional<std::vector<int>> weight_overrides) {
    if (end < 0) throw ValidationError("horizon end must be >= 0");
    auto derived = derive_milestone_weights(milestones, end);
    Horizon h;
    h.end_ = end;
    h.milestones_ = std::move(milestones);
    if (weight_overrides) {
        if (weight_overrides->size() != h.milestones_.size()) {
            throw ValidationError("weight override count must match milestone count");
        }
        int total = std::accumulate(weight_overrides->begin(), weight_overrides->end(), 0);
        for (int w : *weight_overrides) {
            if (w <= 0) throw ValidationError("milestone weights must be positive");
        }
        if (total != end + 1) {
            throw ValidationError("milestone weights must sum to the number of years");
        }
        h.weights_ = std::move(*weight_overrides);
    } else {
        h.weights_ = std::move(derived);
    }
    return h;
}

Horizon Horizon::yearly(int end) {
    std::vector<int> all(end + 1);
    std::iota(all.begin(), all.end(), 0);
    return make(end, std::move(all));
}

bool Horizon::is_yearly() const {
    return static_cast<int>(milestones_.size()) == end_ + 1;
}

bool Horizon::is_milestone(int year) const { return milestone_index(year) >= 0; }

int Horizon::milestone_index(int year) const {
    auto it = std::lower_bound(milestones_.begin(), milestones_.end(), year);
    if (it == milestones_.end() || *it != year) return -1;
    return static_cast<int>(it - milestones_.begin());
}

int Horizon::weight_of(int milestone) const {
    int idx = milestone_index(milestone);
    if (idx < 0) throw ValidationError("year is not a milestone");
    return weights_[idx];
}

int Horizon::block_end(int index) const {
    // With derived weights this is next milestone - 1 (or end). With
    // overridden weights the block is the weight-sized span instead.
    int start = milestones_[index];
    return start + weights_[index] - 1;
}

LifetimeWindow capacity_window(int invest_year, int lifetime, const Horizon& horizon) {
    if (!horizon.is_milestone(invest_year)) {
        throw ValidationError("investments are only allowed at milestone years");
    }
    if (lifetime < 1) throw ValidationError("lifetime must be >= 1");
    LifetimeWindow w;
    w.invest_year = invest_year;
    w.first_year = invest_year;
    w.last_year = invest_year + lifetime - 1;
    int clipped_last = std::min(w.last_year, horizon.end());
    for (int m : horizon.milestones()) {
        if (m >= invest_year && m <= clipped_last) w.active_milestones.push_back(m);
    }
    return w;
}

LifetimeGap detect_lifetime_gap(int invest_year, int lifetime, const Horizon& horizon) {
    auto window = capacity_window(invest_year, lifetime, horizon);
    int eol = window.last_year;
    LifetimeGap gap;
    gap.first_year = eol + 1;
    gap.last_year = eol;
    // Year-by-year membership: milestone weighting charges every year in the
    // blocks of the active milestones; count the charged years past end of life.
    for (int m : window.active_milestones) {
        int idx = horizon.milestone_index(m);
        for (int year = m; year <= horizon.block_end(idx); ++year) {
            if (year > eol) {
                ++gap.overcounted_years;
                gap.last_year = std::max(gap.last_year, year);
            }
        }
    }
    return gap;
}

}  // namespace capex
