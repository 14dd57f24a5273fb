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

#include "pqsvt/cost.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace pqsvt {

std::string BeVariant::name() const {
    switch (kind) {
        case BeVariantKind::kGeneral:
            return "general";
        case BeVariantKind::kUniformSizes:
            return "uniform_sizes";
        case BeVariantKind::kKUnique:
            return "k_unique(" + std::to_string(k) + ")";
    }
    return "unknown";
}

std::int64_t be_toffoli(std::int64_t S, std::int64_t l_max, BeVariant variant) {
    if (S < 1) throw std::invalid_argument("be_toffoli: S must be at least 1");
    if (l_max < 1) throw std::invalid_argument("be_toffoli: l_max must be at least 1");
    if (S == 1) return l_max + 1;
    switch (variant.kind) {
        case BeVariantKind::kGeneral:
            return l_max + 2 * S - 1;
        case BeVariantKind::kUniformSizes:
            return l_max + 1;
        case BeVariantKind::kKUnique:
            if (variant.k < 1) throw std::invalid_argument("be_toffoli: k must be at least 1");
            if (variant.k > S) throw std::invalid_argument("be_toffoli: k cannot exceed S");
            return l_max + 2 * variant.k - 1;
    }
    throw std::invalid_argument("be_toffoli: unknown variant");
}

std::int64_t qsvt_toffoli(std::int64_t d, std::int64_t S, std::int64_t l_max, std::int64_t log_inv_eps,
                          BeVariant variant) {
    if (d < 1) throw std::invalid_argument("qsvt_toffoli: d must be at least 1");
    if (log_inv_eps < 2) throw std::invalid_argument("qsvt_toffoli: log_inv_eps must be at least 2");
    const std::int64_t rotations = (2 * d + 1) * (log_inv_eps - 1);
    const std::int64_t unary = 2 * std::max<std::int64_t>(S - 2, 0);
    const std::int64_t reflections = 2 * d * (l_max + 1);
    return rotations + unary + reflections + 2 * d * be_toffoli(S, l_max, variant);
}

std::int64_t total_qubits(std::int64_t n, std::int64_t d, std::int64_t l_max, std::int64_t log_inv_eps) {
    if (n < 1 || d < 1 || l_max < 1 || log_inv_eps < 1) throw std::invalid_argument("total_qubits: arguments must be >= 1");
    return 2 * n + 2 * l_max + (2 * d + 1) * log_inv_eps + 5;
}

std::int64_t multi_controlled_z_toffoli(std::int64_t controls) {
    if (controls < 1) throw std::invalid_argument("multi_controlled_z_toffoli: need at least one control");
    return controls - 1;
}

std::int64_t prep_total_toffoli(const ResourceEstimate& estimate, std::int64_t aa_rounds, std::int64_t n) {
    if (aa_rounds < 0) throw std::invalid_argument("prep_total_toffoli: aa_rounds must be nonnegative");
    if (aa_rounds == 0) return estimate.toffoli_qsvt;
    return 2 * aa_rounds * estimate.toffoli_qsvt + aa_rounds * multi_controlled_z_toffoli(estimate.l_max + 2) +
           aa_rounds * multi_controlled_z_toffoli(n + estimate.l_max + 2);
}

ResourceEstimate estimate_resources(std::int64_t n, std::int64_t d, std::int64_t S, std::int64_t l_max,
                                    std::int64_t log_inv_eps, std::int64_t aa_rounds, BeVariant variant) {
    ResourceEstimate e;
    e.n = n;
    e.d = d;
    e.S = S;
    e.l_max = l_max;
    e.log_inv_eps = log_inv_eps;
    e.aa_rounds = aa_rounds;
    e.variant = variant;
    e.unique_sizes = variant.kind == BeVariantKind::kKUnique ? variant.k
                     : variant.kind == BeVariantKind::kUniformSizes ? 1
                                                                    : S;
    e.toffoli_per_be = be_toffoli(S, l_max, variant);
    e.toffoli_qsvt = qsvt_toffoli(d, S, l_max, log_inv_eps, variant);
    e.qubits_total = total_qubits(n, d, l_max, log_inv_eps);
    e.toffoli_total_with_aa = prep_total_toffoli(e, aa_rounds, n);
    return e;
}

BeVariant cheapest_variant(const SegmentPlan& plan) {
    const auto S = static_cast<std::int64_t>(plan.segment_count());
    const auto k = static_cast<std::int64_t>(plan.unique_sizes());
    if (S == 1 || k == 1) return BeVariant::uniform_sizes();
    if (k < S) return BeVariant::k_unique(static_cast<int>(k));
    return BeVariant::general();
}

ResourceEstimate estimate_for_plan(const SegmentPlan& plan, int d, std::int64_t log_inv_eps, std::int64_t aa_rounds) {
    plan.validate();
    const BeVariant variant = cheapest_variant(plan);
    ResourceEstimate e = estimate_resources(plan.n, std::max(d, 1), static_cast<std::int64_t>(plan.segment_count()),
                                            std::max(plan.l_max(), 1), log_inv_eps, aa_rounds, variant);
    e.unique_sizes = static_cast<std::int64_t>(plan.unique_sizes());
    return e;
}

void write_cost_csv_header(std::ostream& os) { os << "n,d,S,l_max,log_inv_eps,variant,toffoli,qubits\n"; }

void write_cost_csv_row(std::ostream& os, const ResourceEstimate& e) {
    os << e.n << ',' << e.d << ',' << e.S << ',' << e.l_max << ',' << e.log_inv_eps << ',' << e.variant.name() << ','
       << e.toffoli_total_with_aa << ',' << e.qubits_total << '\n';
}

}  // namespace pqsvt
