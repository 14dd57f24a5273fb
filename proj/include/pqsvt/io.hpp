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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pqsvt/amplitudes.hpp"
#include "pqsvt/cost.hpp"
#include "pqsvt/plan.hpp"
#include "pqsvt/prep.hpp"
#include "pqsvt/qsvt.hpp"

namespace pqsvt::io {

// Target specs: "power:<alpha>", "log", "bspline:<m>", "kaiser:<beta>",
// "custom:<path>". Custom files hold one sample per line; with several
// comma-separated fields the last one is the sample. Blank lines, lines
// starting with '#', and a non-numeric first line are skipped.
// Throws std::invalid_argument on a malformed spec and std::runtime_error if
// a file cannot be read.
TargetSpec parse_target(std::string_view text, int n);

std::vector<double> read_samples_csv(const std::filesystem::path& path);

std::string to_json(const TargetSpec& spec);
std::string to_json(const SegmentPlan& plan);
std::string to_json(const PhaseFactorSet& phases);
std::string to_json(const PrepReport& report);
std::string to_json(const ResourceEstimate& estimate);

SegmentPlan plan_from_json(std::string_view text);
PhaseFactorSet phases_from_json(std::string_view text);
PrepReport report_from_json(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

// Column header and one row per experiment for prep sweeps.
void write_prep_csv_header(std::ostream& os);
void write_prep_csv_row(std::ostream& os, const TargetSpec& spec, int degree, const SegmentPlan& plan,
                        const PrepReport& report);

}  // namespace pqsvt::io
