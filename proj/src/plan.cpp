// Copyright 2026 The pqsvt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pqsvt/plan.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "pqsvt/chebyshev.hpp"

namespace pqsvt {

bool is_power_of_two(std::int64_t v) { return v > 0 && std::has_single_bit(static_cast<std::uint64_t>(v)); }

int floor_log2(std::int64_t v) {
    if (v <= 0) throw std::invalid_argument("floor_log2: argument must be positive");
    return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(v))) - 1;
}

int Segment::level() const { return floor_log2(length); }

int SegmentPlan::l_max() const {
    int best = 0;
    for (const auto& s : segments) best = std::max(best, s.level());
    return best;
}

int SegmentPlan::max_degree() const {
    int best = 0;
    for (const auto& s : segments) best = std::max(best, s.degree);
    return best;
}

std::size_t SegmentPlan::unique_sizes() const {
    std::set<std::int64_t> sizes;
    for (const auto& s : segments) sizes.insert(s.length);
    return sizes.size();
}

std::size_t SegmentPlan::segment_of(std::int64_t x) const {
    if (x < 0 || x >= size()) throw std::out_of_range("SegmentPlan::segment_of: index outside [0, N)");
    auto it = std::upper_bound(segments.begin(), segments.end(), x,
                               [](std::int64_t v, const Segment& s) { return v < s.start; });
    return static_cast<std::size_t>(std::distance(segments.begin(), it)) - 1;
}

void SegmentPlan::validate() const {
    if (n < 1 || n > 40) throw std::invalid_argument("SegmentPlan: n must be in [1, 40]");
    if (segments.empty()) throw std::invalid_argument("SegmentPlan: no segments");
    std::int64_t cursor = 0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const Segment& s = segments[i];
        const std::string where = "SegmentPlan: segment " + std::to_string(i);
        if (s.start != cursor) throw std::invalid_argument(where + " does not start where the previous one ended");
        if (!is_power_of_two(s.length)) throw std::invalid_argument(where + " length is not a power of two");
        if (s.start % s.length != 0) throw std::invalid_argument(where + " start is not aligned to its length");
        if (s.degree < 0 || s.coeffs.size() != static_cast<std::size_t>(s.degree) + 1) {
            throw std::invalid_argument(where + " coefficient count does not match degree");
        }
        cursor += s.length;
    }
    if (cursor != size()) throw std::invalid_argument("SegmentPlan: segments do not cover [0, N)");
}

std::vector<double> SegmentPlan::implemented_coeffs(std::size_t s) const {
    if (!(pmax > 0.0)) throw std::invalid_argument("SegmentPlan: pmax must be positive to rescale");
    std::vector<double> out = segments.at(s).coeffs;
    for (double& c : out) c *= kQsvtHeadroom / pmax;
    return out;
}

SegmentPlan plan_from_levels(int n, std::span<const int> levels) {
    SegmentPlan plan;
    plan.n = n;
    std::int64_t cursor = 0;
    for (int level : levels) {
        if (level < 0 || level > n) throw std::invalid_argument("plan_from_levels: level out of range");
        Segment s;
        s.start = cursor;
        s.length = std::int64_t{1} << level;
        s.degree = 0;
        s.coeffs = {1.0};
        cursor += s.length;
        plan.segments.push_back(std::move(s));
    }
    plan.pmax = 1.0;
    plan.validate();
    return plan;
}

std::vector<double> evaluate_fitted(const SegmentPlan& plan) {
    std::vector<double> out(static_cast<std::size_t>(plan.size()));
    std::vector<double> t;
    for (const auto& s : plan.segments) {
        t.resize(static_cast<std::size_t>(s.length));
        for (std::int64_t j = 0; j < s.length; ++j) t[static_cast<std::size_t>(j)] = segment_argument(j, s.length);
        const auto vals = chebyshev_values(s.coeffs, t);
        std::copy(vals.begin(), vals.end(), out.begin() + s.start);
    }
    return out;
}

}  // namespace pqsvt
