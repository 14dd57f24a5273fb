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

#include "pqsvt/qsvt.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "pqsvt/chebyshev.hpp"
#include "pqsvt/errors.hpp"
#include "pqsvt/parallel.hpp"
#include "pqsvt/simd/kernels.hpp"

namespace pqsvt {

namespace {

using Mat2 = Eigen::Matrix2cd;
using Row2 = Eigen::RowVector2cd;
using Col2 = Eigen::Vector2cd;

Mat2 rx(double phi) {
    const double c = std::cos(0.5 * phi);
    const double s = std::sin(0.5 * phi);
    Mat2 m;
    m << c, std::complex<double>(0.0, -s), std::complex<double>(0.0, -s), c;
    return m;
}

// dR_X/dphi = (-i/2) X R_X(phi).
Mat2 rx_derivative(double phi) {
    const double c = std::cos(0.5 * phi);
    const double s = std::sin(0.5 * phi);
    Mat2 m;
    m << -0.5 * s, std::complex<double>(0.0, -0.5 * c), std::complex<double>(0.0, -0.5 * c), -0.5 * s;
    return m;
}

Mat2 signal(std::size_t j, double theta) {
    Mat2 m = Mat2::Identity();
    if (j & 1) {
        m(0, 0) = std::polar(1.0, theta);
    } else {
        m(1, 1) = std::polar(1.0, -theta);
    }
    return m;
}

// Values at nodes and the Jacobian with respect to every phase.
void evaluate_with_jacobian(std::span<const double> phases, std::span<const double> thetas, Eigen::VectorXd& values,
                            Eigen::MatrixXd& jacobian) {
    const std::size_t len = phases.size();
    const auto rows = static_cast<Eigen::Index>(thetas.size());
    values.resize(rows);
    jacobian.resize(rows, static_cast<Eigen::Index>(len));
    std::vector<Mat2> rot(len);
    std::vector<Mat2> drot(len);
    for (std::size_t j = 0; j < len; ++j) {
        rot[j] = rx(phases[j]);
        drot[j] = rx_derivative(phases[j]);
    }
    std::vector<Row2> left(len);
    std::vector<Col2> right(len);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const double theta = thetas[static_cast<std::size_t>(i)];
        // left[j] = <0| R_0 A_1 ... R_{j-1} A_j
        left[0] = Row2(1.0, 0.0);
        for (std::size_t j = 1; j < len; ++j) left[j] = left[j - 1] * rot[j - 1] * signal(j, theta);
        // right[j] = A_{j+1} R_{j+1} ... R_{2d} |0>
        right[len - 1] = Col2(1.0, 0.0);
        for (std::size_t j = len - 1; j-- > 0;) right[j] = signal(j + 1, theta) * rot[j + 1] * right[j + 1];
        values(i) = (left[0] * rot[0] * right[0]).value().real();
        for (std::size_t j = 0; j < len; ++j) {
            jacobian(i, static_cast<Eigen::Index>(j)) = (left[j] * drot[j] * right[j]).value().real();
        }
    }
}

struct Attempt {
    std::vector<double> phases;
    double residual = 0.0;
};

Attempt levenberg_marquardt(std::vector<double> phases, std::span<const double> thetas, const Eigen::VectorXd& target,
                            double tau, int max_iterations) {
    const auto p = static_cast<Eigen::Index>(phases.size());
    Eigen::VectorXd values;
    Eigen::MatrixXd jac;
    evaluate_with_jacobian(phases, thetas, values, jac);
    Eigen::VectorXd r = values - target;
    double cost = r.squaredNorm();
    double lambda = 1e-3;
    for (int it = 0; it < max_iterations && r.cwiseAbs().maxCoeff() > tau; ++it) {
        const Eigen::MatrixXd jtj = jac.transpose() * jac;
        const Eigen::VectorXd jtr = jac.transpose() * r;
        bool accepted = false;
        while (!accepted && lambda < 1e12) {
            Eigen::MatrixXd a = jtj;
            a.diagonal().array() += lambda * (1.0 + jtj.diagonal().array());
            const Eigen::VectorXd step = a.ldlt().solve(-jtr);
            std::vector<double> trial(phases);
            for (Eigen::Index j = 0; j < p; ++j) trial[static_cast<std::size_t>(j)] += step(j);
            Eigen::VectorXd trial_values;
            Eigen::MatrixXd trial_jac;
            evaluate_with_jacobian(trial, thetas, trial_values, trial_jac);
            const Eigen::VectorXd trial_r = trial_values - target;
            const double trial_cost = trial_r.squaredNorm();
            if (trial_cost < cost) {
                phases = std::move(trial);
                r = trial_r;
                jac = std::move(trial_jac);
                cost = trial_cost;
                lambda = std::max(lambda * 0.3, 1e-15);
                accepted = true;
            } else {
                lambda *= 4.0;
            }
        }
        if (!accepted) break;
    }
    return Attempt{std::move(phases), r.cwiseAbs().maxCoeff()};
}

double max_abs_on_grid(std::span<const double> coeffs) {
    const std::size_t count = std::max<std::size_t>(64, 16 * coeffs.size());
    std::vector<double> t(count + 1);
    for (std::size_t i = 0; i <= count; ++i) {
        t[i] = std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(count));
    }
    const std::vector<double> v = chebyshev_values(coeffs, t);
    double worst = 0.0;
    for (double x : v) worst = std::max(worst, std::abs(x));
    return worst;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

std::complex<double> qsvt_sequence_element(std::span<const double> phases, double theta) {
    if (phases.empty()) throw std::invalid_argument("qsvt_sequence_element: need at least one phase");
    Row2 row(1.0, 0.0);
    row = row * rx(phases[0]);
    for (std::size_t j = 1; j < phases.size(); ++j) row = row * signal(j, theta) * rx(phases[j]);
    return row(0);
}

double qsvt_scalar(std::span<const double> phases, double t) {
    if (phases.empty() || phases.size() % 2 == 0) {
        throw std::invalid_argument("qsvt_scalar: phase vector length must be odd (2d + 1)");
    }
    if (!(std::abs(t) <= 1.0)) throw std::invalid_argument("qsvt_scalar: |t| must be at most 1");
    double out = 0.0;
    simd::qsvt_block_values(phases, std::span<const double>(&t, 1), std::span<double>(&out, 1));
    return out;
}

PhaseSolution solve_phase_factors(std::span<const double> coeffs, int d, double tau, const PhaseSolveOptions& options) {
    if (d < 0) throw std::invalid_argument("solve_phase_factors: d must be nonnegative");
    if (coeffs.empty()) throw std::invalid_argument("solve_phase_factors: empty polynomial");
    if (!(tau > 0.0)) throw std::invalid_argument("solve_phase_factors: tau must be positive");
    const int degree = effective_degree(coeffs, 1e-13);
    if (degree > d) {
        throw std::invalid_argument("solve_phase_factors: polynomial degree " + std::to_string(degree) +
                                    " exceeds capacity d = " + std::to_string(d));
    }
    const double peak = max_abs_on_grid(coeffs);
    if (peak > 1.0 - options.margin) {
        throw std::invalid_argument("solve_phase_factors: max |p| = " + std::to_string(peak) + " exceeds 1 - margin");
    }

    const std::size_t len = 2 * static_cast<std::size_t>(d) + 1;
    const std::size_t nodes = 4 * static_cast<std::size_t>(d) + 1;
    const std::vector<double> t = chebyshev_nodes(nodes);
    std::vector<double> thetas(nodes);
    for (std::size_t i = 0; i < nodes; ++i) thetas[i] = std::acos(t[i]);
    const std::vector<double> p = chebyshev_values(coeffs, t);
    const Eigen::VectorXd target = Eigen::Map<const Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(nodes));

    if (d == 0) {
        PhaseSolution sol;
        sol.phases = {2.0 * std::acos(p[0])};
        sol.residual = std::abs(std::cos(0.5 * sol.phases[0]) - p[0]);
        sol.attempts = 1;
        return sol;
    }

    std::vector<double> start(len, 0.0);
    start.front() = std::numbers::pi / 4;
    start.back() = std::numbers::pi / 4;

    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> jitter(0.0, 0.6);
    Attempt best{start, std::numeric_limits<double>::infinity()};
    int attempts = 0;
    for (int a = 0; a <= options.restarts; ++a) {
        std::vector<double> init = start;
        if (a > 0) {
            for (double& phi : init) phi += jitter(rng);
        }
        ++attempts;
        Attempt result = levenberg_marquardt(std::move(init), thetas, target, tau, options.max_iterations);
        if (result.residual < best.residual) best = std::move(result);
        if (best.residual <= tau) break;
    }
    if (!(best.residual <= tau)) {
        throw NumericError("solve_phase_factors: no convergence, residual " + std::to_string(best.residual) +
                               " above tolerance " + std::to_string(tau),
                           best.residual);
    }
    // Report the tolerance on the scalar path actually used for application.
    std::vector<double> applied(nodes);
    simd::qsvt_block_values(best.phases, t, applied);
    double residual = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) residual = std::max(residual, std::abs(applied[i] - p[i]));
    return PhaseSolution{std::move(best.phases), residual, attempts};
}

PhaseFactorSet solve_plan_phases(const SegmentPlan& plan, int d, double tau, const PhaseSolveOptions& options) {
    plan.validate();
    if (d < 0) d = plan.max_degree();
    if (d < plan.max_degree()) throw std::invalid_argument("solve_plan_phases: d below the plan's max degree");
    PhaseFactorSet set;
    set.d = d;
    set.phases.resize(plan.segments.size());
    parallel_for(plan.segments.size(), [&](std::size_t s) {
        PhaseSolveOptions local = options;
        local.seed = mix_seed(options.seed, s);
        set.phases[s] = solve_phase_factors(plan.implemented_coeffs(s), d, tau, local).phases;
    });
    return set;
}

std::vector<double> apply_piecewise_qsvt(const DiagonalBlockEncoding& be, const PhaseFactorSet& phases) {
    const SegmentPlan& plan = be.plan;
    if (phases.phases.size() != plan.segments.size()) {
        throw std::invalid_argument("apply_piecewise_qsvt: need one phase vector per segment");
    }
    const std::size_t len = 2 * static_cast<std::size_t>(phases.d) + 1;
    std::vector<double> out(be.diag.size());
    for (std::size_t s = 0; s < plan.segments.size(); ++s) {
        if (phases.phases[s].size() != len) {
            throw std::invalid_argument("apply_piecewise_qsvt: phase vector length must be 2d + 1");
        }
        const Segment& seg = plan.segments[s];
        const auto start = static_cast<std::size_t>(seg.start);
        const auto length = static_cast<std::size_t>(seg.length);
        simd::qsvt_block_values(phases.phases[s], std::span<const double>(be.diag).subspan(start, length),
                                std::span<double>(out).subspan(start, length));
    }
    return out;
}

std::vector<double> reference_transformed_diagonal(const SegmentPlan& plan, EncodingRange range) {
    const DiagonalBlockEncoding be = reference_diagonal(plan, range);
    std::vector<double> out(be.diag.size());
    for (std::size_t s = 0; s < plan.segments.size(); ++s) {
        const Segment& seg = plan.segments[s];
        const std::vector<double> coeffs = plan.implemented_coeffs(s);
        const auto start = static_cast<std::size_t>(seg.start);
        const auto length = static_cast<std::size_t>(seg.length);
        simd::chebyshev_eval(coeffs, std::span<const double>(be.diag).subspan(start, length),
                             std::span<double>(out).subspan(start, length));
    }
    return out;
}

}  // namespace pqsvt
