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

#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pqsvt/amplitudes.hpp"
#include "pqsvt/cost.hpp"
#include "pqsvt/errors.hpp"
#include "pqsvt/io.hpp"
#include "pqsvt/prep.hpp"
#include "pqsvt/qsvt.hpp"
#include "pqsvt/segmentation.hpp"
#include "pqsvt/window.hpp"

namespace pqsvt::cli {

namespace {

struct PlanArgs {
    std::string target;
    int n = 0;
    int degree = 4;
    double eps = 1e-6;
    std::string method = "auto";
    std::string plan_in;
};

void add_plan_options(CLI::App* cmd, PlanArgs& a, bool target_required) {
    auto* target = cmd->add_option("--target", a.target,
                                   "power:<alpha> | log | bspline:<m> | kaiser:<beta> | custom:<file.csv>");
    if (target_required) target->required();
    cmd->add_option("--n", a.n, "Number of qubits (N = 2^n)")->check(CLI::Range(1, 26));
    cmd->add_option("--degree", a.degree, "Polynomial degree per segment")->check(CLI::Range(0, 64));
    cmd->add_option("--eps", a.eps, "Max absolute fit error on normalized amplitudes")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--plan", a.method, "Segmentation: auto | optimal | dyadic | bspline")
        ->check(CLI::IsMember({"auto", "optimal", "dyadic", "bspline"}));
}

SegmentPlan build_plan(const TargetSpec& spec, const PlanArgs& a) {
    const bool is_bspline = std::holds_alternative<BsplineTarget>(spec.kind);
    std::string method = a.method;
    if (method == "auto") method = is_bspline ? "bspline" : "optimal";
    if (method == "bspline") {
        if (!is_bspline) throw std::invalid_argument("--plan bspline needs a bspline target");
        return bspline_piecewise_coefficients(std::get<BsplineTarget>(spec.kind).m, spec.n);
    }
    if (method == "dyadic") return dyadic_cascade_plan(spec, a.degree);
    const AmplitudeVector target = sample_target(spec);
    return optimal_cuts(target.values, a.degree, a.eps);
}

TargetSpec require_spec(const PlanArgs& a) {
    if (a.target.empty()) throw std::invalid_argument("--target is required");
    if (a.n < 1) throw std::invalid_argument("--n is required");
    return io::parse_target(a.target, a.n);
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
    if (path.empty()) {
        out << contents;
    } else {
        io::write_text_file(path, contents);
    }
}

void print_plan_summary(const SegmentPlan& plan, std::ostream& os) {
    os << fmt::format("S = {}\nl_max = {}\npmax = {:.17g}\n", plan.segment_count(), plan.l_max(), plan.pmax);
    for (std::size_t s = 0; s < plan.segments.size(); ++s) {
        const Segment& seg = plan.segments[s];
        os << fmt::format("segment {} [{}, {}) degree {} fit_error {:.6e}\n", s, seg.start, seg.end(), seg.degree,
                          seg.fit_error);
    }
}

int cmd_segment(const PlanArgs& a, const std::string& out_path, std::ostream& out, std::ostream& err) {
    const TargetSpec spec = require_spec(a);
    const SegmentPlan plan = build_plan(spec, a);
    const std::string json = io::to_json(plan) + "\n";
    if (out_path.empty()) {
        print_plan_summary(plan, err);
        out << json;
    } else {
        io::write_text_file(out_path, json);
        print_plan_summary(plan, out);
    }
    return kOk;
}

struct PrepareArgs {
    std::string out;
    std::string phases_out;
    std::uint64_t seed = 0x5eed;
    double tau = kDefaultPhaseTolerance;
};

int cmd_prepare(const PlanArgs& a, const PrepareArgs& p, std::ostream& out) {
    const TargetSpec spec = require_spec(a);
    const SegmentPlan plan = a.plan_in.empty() ? build_plan(spec, a) : io::plan_from_json(io::read_text_file(a.plan_in));
    if (plan.n != spec.n) throw std::invalid_argument("plan and target disagree on n");
    PhaseSolveOptions options;
    options.seed = p.seed;
    const PhaseFactorSet phases = solve_plan_phases(plan, -1, p.tau, options);
    if (!p.phases_out.empty()) io::write_text_file(p.phases_out, io::to_json(phases) + "\n");
    const PrepReport report = prepare_report(plan, phases, sample_target(spec));
    emit(p.out, io::to_json(report) + "\n", out);
    return kOk;
}

struct CostArgs {
    std::int64_t d = 0;
    std::int64_t S = 0;
    std::int64_t lmax = 0;
    std::int64_t logeps = 0;
    std::int64_t n = 0;
    std::int64_t aa = 0;
    std::string variant = "general";
    bool json = false;
    bool table = false;
    std::string out;
};

BeVariant parse_variant(const std::string& text) {
    if (text == "general") return BeVariant::general();
    if (text == "uniform") return BeVariant::uniform_sizes();
    if (text.rfind("k:", 0) == 0) {
        try {
            return BeVariant::k_unique(std::stoi(text.substr(2)));
        } catch (const std::logic_error&) {
        }
    }
    throw std::invalid_argument("--variant must be general, uniform, or k:<count>");
}

// Measured counterparts of the asymptotic cost table: for each target and n,
// the plan's S, l_max, and AA rounds feed the cost model.
void write_cost_table(std::ostream& os, std::int64_t log_inv_eps) {
    os << "target,n,d,S,l_max,log_inv_eps,variant,aa_rounds,toffoli,qubits\n";
    struct Row {
        std::string label;
        TargetSpec spec;
        int degree;
    };
    for (int n = 6; n <= 16; n += 2) {
        const std::vector<Row> rows = {
            {"power:0.5", TargetSpec{PowerTarget{0.5}, n}, 4},
            {"log", TargetSpec{LogTarget{}, n}, 4},
            {"bspline:4", TargetSpec{BsplineTarget{4}, n}, 3},
        };
        for (const auto& row : rows) {
            const SegmentPlan plan = std::holds_alternative<BsplineTarget>(row.spec.kind)
                                         ? bspline_piecewise_coefficients(4, n)
                                         : dyadic_cascade_plan(row.spec, row.degree);
            const std::vector<double> values = reference_transformed_diagonal(plan);
            double sum_sq = 0.0;
            for (double v : values) sum_sq += v * v;
            const double a = std::sqrt(sum_sq / static_cast<double>(plan.size()));
            const int rounds = aa_rounds_estimate(plan.pmax, plan.size(), a).rounds;
            const ResourceEstimate e = estimate_for_plan(plan, plan.max_degree(), log_inv_eps, rounds);
            os << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", row.label, e.n, e.d, e.S, e.l_max, e.log_inv_eps,
                              e.variant.name(), e.aa_rounds, e.toffoli_total_with_aa, e.qubits_total);
        }
    }
}

int cmd_cost(const CostArgs& c, std::ostream& out) {
    if (c.table) {
        std::ostringstream ss;
        write_cost_table(ss, c.logeps > 0 ? c.logeps : 20);
        emit(c.out, ss.str(), out);
        return kOk;
    }
    if (c.d < 1 || c.S < 1 || c.lmax < 1 || c.logeps < 2) {
        throw std::invalid_argument("cost needs --d >= 1, --S >= 1, --lmax >= 1, --logeps >= 2");
    }
    const BeVariant variant = parse_variant(c.variant);
    if (!c.json) {
        emit(c.out, fmt::format("{}\n", qsvt_toffoli(c.d, c.S, c.lmax, c.logeps, variant)), out);
        return kOk;
    }
    const std::int64_t n = c.n > 0 ? c.n : c.lmax;
    const ResourceEstimate e = estimate_resources(n, c.d, c.S, c.lmax, c.logeps, c.aa, variant);
    emit(c.out, io::to_json(e) + "\n", out);
    return kOk;
}

struct WindowArgs {
    int fig = 6;
    int base_qubits = 0;
    std::string out;
};

int cmd_window(const WindowArgs& w, std::ostream& out) {
    std::ostringstream ss;
    if (w.fig == 6) {
        const int base = w.base_qubits > 0 ? w.base_qubits : kFig6BaseQubits;
        std::vector<double> deltas;
        for (int i = 0; i <= 18; ++i) deltas.push_back(std::pow(10.0, -3.0 - 0.5 * i));
        write_fig6_csv(ss, deltas, base);
    } else if (w.fig == 7) {
        const int base = w.base_qubits > 0 ? w.base_qubits : kFig7BaseQubits;
        const std::vector<int> extras = {0, 1, 2, 3, 4, 5, 6};
        write_fig7_csv(ss, extras, base);
    } else {
        throw std::invalid_argument("--fig must be 6 or 7");
    }
    emit(w.out, ss.str(), out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Piecewise QSVT state preparation toolkit", "pqsvt"};
    app.require_subcommand(1);

    PlanArgs plan_args;
    std::string segment_out;
    auto* segment = app.add_subcommand("segment", "Fit a piecewise polynomial plan to a target");
    add_plan_options(segment, plan_args, true);
    segment->add_option("--out", segment_out, "Plan JSON path (default: stdout)");

    PrepareArgs prepare_args;
    auto* prepare = app.add_subcommand("prepare", "Solve phases, apply piecewise QSVT, report fidelity");
    add_plan_options(prepare, plan_args, true);
    prepare->add_option("--plan-in", plan_args.plan_in, "Read the plan from JSON instead of fitting");
    prepare->add_option("--out", prepare_args.out, "Report JSON path (default: stdout)");
    prepare->add_option("--phases-out", prepare_args.phases_out, "Also write the phase factors as JSON");
    prepare->add_option("--seed", prepare_args.seed, "Seed for solver restarts");
    prepare->add_option("--tau", prepare_args.tau, "Phase solver tolerance")->check(CLI::PositiveNumber);

    CostArgs cost_args;
    auto* cost = app.add_subcommand("cost", "Toffoli and qubit counts");
    cost->add_option("--d", cost_args.d, "Polynomial degree");
    cost->add_option("--S", cost_args.S, "Number of segments");
    cost->add_option("--lmax", cost_args.lmax, "log2 of the largest segment");
    cost->add_option("--logeps", cost_args.logeps, "Rotation precision log2(1/eps)");
    cost->add_option("--n", cost_args.n, "Qubits (for the qubit count)");
    cost->add_option("--aa", cost_args.aa, "Amplitude amplification rounds");
    cost->add_option("--variant", cost_args.variant, "general | uniform | k:<count>");
    cost->add_flag("--json", cost_args.json, "Print the full estimate as JSON");
    cost->add_flag("--table", cost_args.table, "Emit the measured cost table CSV");
    cost->add_option("--out", cost_args.out, "Output path (default: stdout)");

    WindowArgs window_args;
    auto* window = app.add_subcommand("window", "Windowed phase estimation sweeps");
    window->add_option("--fig", window_args.fig, "6: extra ancillas vs delta; 7: preparation cost")->required();
    window->add_option("--base-qubits", window_args.base_qubits, "Base register qubits");
    window->add_option("--out", window_args.out, "CSV path (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "pqsvt: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*segment) return cmd_segment(plan_args, segment_out, out, err);
        if (*prepare) return cmd_prepare(plan_args, prepare_args, out);
        if (*cost) return cmd_cost(cost_args, out);
        if (*window) return cmd_window(window_args, out);
    } catch (const NumericError& e) {
        err << "pqsvt: numeric failure: " << e.what() << " (residual " << e.residual() << ")\n";
        return kNumeric;
    } catch (const InfeasibleError& e) {
        err << "pqsvt: infeasible: " << e.what() << "\n";
        return kNumeric;
    } catch (const std::exception& e) {
        err << "pqsvt: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace pqsvt::cli
