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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pqsvt/plan.hpp"

namespace pqsvt {

// Toffoli counts exclude uncomputation.

enum class BeVariantKind { kGeneral, kUniformSizes, kKUnique };

struct BeVariant {
    BeVariantKind kind = BeVariantKind::kGeneral;
    int k = 0;  // distinct segment sizes, kKUnique only

    static BeVariant general() { return {}; }
    static BeVariant uniform_sizes() { return {BeVariantKind::kUniformSizes, 0}; }
    static BeVariant k_unique(int k) { return {BeVariantKind::kKUnique, k}; }
    std::string name() const;
};

// general: l_max + 2S - 1; uniform sizes or S = 1: l_max + 1; k unique sizes:
// l_max + 2k - 1.
std::int64_t be_toffoli(std::int64_t S, std::int64_t l_max, BeVariant variant = BeVariant::general());

// (2d+1)(log 1/eps - 1) + 2 max(S - 2, 0) + 2d(l_max + 1) + 2d * be_toffoli.
std::int64_t qsvt_toffoli(std::int64_t d, std::int64_t S, std::int64_t l_max, std::int64_t log_inv_eps,
                          BeVariant variant = BeVariant::general());

// 2n + 2 l_max + (2d+1) log 1/eps + 5.
std::int64_t total_qubits(std::int64_t n, std::int64_t d, std::int64_t l_max, std::int64_t log_inv_eps);

// An m-controlled Z as a ladder of m - 1 Toffolis.
std::int64_t multi_controlled_z_toffoli(std::int64_t controls);

struct ResourceEstimate {
    std::int64_t n = 1;
    std::int64_t d = 1;
    std::int64_t S = 1;
    std::int64_t l_max = 1;
    std::int64_t log_inv_eps = 2;
    std::int64_t aa_rounds = 0;
    std::int64_t unique_sizes = 1;
    BeVariant variant;

    std::int64_t toffoli_per_be = 0;
    std::int64_t toffoli_qsvt = 0;
    std::int64_t toffoli_total_with_aa = 0;
    std::int64_t qubits_total = 0;
};

// A = 0: one application. Otherwise 2A applications plus A reflections about
// the flags ((l_max + 2)-controlled Z) and A about the start state
// ((n + l_max + 2)-controlled Z).
std::int64_t prep_total_toffoli(const ResourceEstimate& estimate, std::int64_t aa_rounds, std::int64_t n);

ResourceEstimate estimate_resources(std::int64_t n, std::int64_t d, std::int64_t S, std::int64_t l_max,
                                    std::int64_t log_inv_eps, std::int64_t aa_rounds, BeVariant variant);

// Cheapest block-encoding variant valid for the plan's segment sizes.
BeVariant cheapest_variant(const SegmentPlan& plan);

ResourceEstimate estimate_for_plan(const SegmentPlan& plan, int d, std::int64_t log_inv_eps, std::int64_t aa_rounds);

// Columns: n,d,S,l_max,log_inv_eps,variant,toffoli,qubits
void write_cost_csv_header(std::ostream& os);
void write_cost_csv_row(std::ostream& os, const ResourceEstimate& estimate);

}  // namespace pqsvt
