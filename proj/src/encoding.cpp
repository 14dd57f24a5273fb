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

#include "pqsvt/encoding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "pqsvt/errors.hpp"
#include "pqsvt/parallel.hpp"

namespace pqsvt {

double DyadicRational::value() const { return std::ldexp(static_cast<double>(numerator), -level); }

DiagonalBlockEncoding reference_diagonal(const SegmentPlan& plan, EncodingRange range) {
    plan.validate();
    DiagonalBlockEncoding be;
    be.plan = plan;
    be.range = range;
    be.flag_qubits = plan.l_max() + 1;
    const auto N = static_cast<std::size_t>(plan.size());
    be.exact.resize(N);
    be.diag.resize(N);
    be.segment_index.resize(N);
    for (std::size_t s = 0; s < plan.segments.size(); ++s) {
        const Segment& seg = plan.segments[s];
        const int level = seg.level();
        for (std::int64_t r = 0; r < seg.length; ++r) {
            const auto x = static_cast<std::size_t>(seg.start + r);
            const std::int64_t num = range == EncodingRange::kSigned ? seg.length - 2 * r : seg.length - r;
            be.exact[x] = DyadicRational{num, level};
            be.diag[x] = be.exact[x].value();
            be.segment_index[x] = static_cast<std::uint32_t>(s);
        }
    }
    return be;
}

bool carry_bit(std::uint64_t x, std::uint64_t k, int l) {
    if (l < 0 || l > 62) throw std::invalid_argument("carry_bit: l must be in [0, 62]");
    const std::uint64_t mask = (std::uint64_t{1} << l) - 1;
    return (x & mask) + (k & mask) >= (std::uint64_t{1} << l);
}

CarryLadderState run_carry_ladder(std::uint64_t x, std::uint64_t k, int l_max) {
    if (l_max < 1 || l_max > 62) throw std::invalid_argument("run_carry_ladder: l_max must be in [1, 62]");
    auto bit = [](std::uint64_t v, int i) -> std::uint8_t { return static_cast<std::uint8_t>((v >> i) & 1u); };
    std::vector<std::uint8_t> xs(static_cast<std::size_t>(l_max));
    std::vector<std::uint8_t> ks(static_cast<std::size_t>(l_max));
    for (int i = 0; i < l_max; ++i) {
        xs[static_cast<std::size_t>(i)] = bit(x, i);
        ks[static_cast<std::size_t>(i)] = bit(k, i);
    }
    // c[i] is carry_{i+1}.
    std::vector<std::uint8_t> c(static_cast<std::size_t>(l_max), 0);
    c[0] ^= xs[0] & ks[0];
    for (int l = 1; l < l_max; ++l) {
        const auto i = static_cast<std::size_t>(l);
        ks[i] ^= c[i - 1];
        c[i - 1] ^= xs[i];
        c[i] ^= c[i - 1] & ks[i];
        c[i - 1] ^= xs[i];
        c[i] ^= c[i - 1];
    }
    CarryLadderState state;
    state.carries = c;
    const std::uint64_t low_mask = (std::uint64_t{1} << l_max) - 1;
    state.x = x;
    for (int i = 0; i < l_max; ++i) {
        state.x = (state.x & ~(std::uint64_t{1} << i)) | (std::uint64_t{xs[static_cast<std::size_t>(i)]} << i);
    }
    std::uint64_t k_low = 0;
    for (int i = 0; i < l_max; ++i) k_low |= std::uint64_t{ks[static_cast<std::size_t>(i)]} << i;
    state.k = (k & ~low_mask) | k_low;
    return state;
}

std::vector<std::uint8_t> ripple_carry_reference(std::uint64_t x, std::uint64_t k, int l_max) {
    return run_carry_ladder(x, k, l_max).carries;
}

ExplicitUnitary::ExplicitUnitary(int n, int l_max, EncodingRange range, std::vector<Eigen::MatrixXcd> blocks)
    : n_(n), l_max_(l_max), range_(range), blocks_(std::move(blocks)) {
    if (blocks_.size() != (std::size_t{1} << n_)) throw std::invalid_argument("ExplicitUnitary: one block per x required");
}

std::size_t ExplicitUnitary::dim() const { return local_dim() << n_; }

std::complex<double> ExplicitUnitary::entry(std::size_t row, std::size_t col) const {
    const std::size_t N = std::size_t{1} << n_;
    if (row >= dim() || col >= dim()) throw std::out_of_range("ExplicitUnitary::entry: index out of range");
    const std::size_t xr = row % N;
    const std::size_t xc = col % N;
    if (xr != xc) return {0.0, 0.0};
    return blocks_[xr](static_cast<Eigen::Index>(row / N), static_cast<Eigen::Index>(col / N));
}

Eigen::MatrixXcd ExplicitUnitary::dense() const {
    if (dim() > 4096) throw std::invalid_argument("ExplicitUnitary::dense: dimension too large to materialize");
    const std::size_t N = std::size_t{1} << n_;
    const auto local = static_cast<Eigen::Index>(local_dim());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
    for (std::size_t x = 0; x < N; ++x) {
        for (Eigen::Index r = 0; r < local; ++r) {
            for (Eigen::Index c = 0; c < local; ++c) {
                out(r * static_cast<Eigen::Index>(N) + static_cast<Eigen::Index>(x),
                    c * static_cast<Eigen::Index>(N) + static_cast<Eigen::Index>(x)) = blocks_[x](r, c);
            }
        }
    }
    return out;
}

double ExplicitUnitary::hermiticity_defect() const {
    double worst = 0.0;
    for (const auto& b : blocks_) worst = std::max(worst, (b - b.adjoint()).cwiseAbs().maxCoeff());
    return worst;
}

double ExplicitUnitary::unitarity_defect() const {
    double worst = 0.0;
    for (const auto& b : blocks_) {
        const Eigen::MatrixXcd prod = b.adjoint() * b;
        worst = std::max(worst, (prod - Eigen::MatrixXcd::Identity(b.rows(), b.cols())).cwiseAbs().maxCoeff());
    }
    return worst;
}

ExplicitUnitary build_explicit_unitary(const SegmentPlan& plan, EncodingRange range) {
    plan.validate();
    const int n = plan.n;
    const int l_max = plan.l_max();
    if (n + l_max + 1 > kMaxExplicitQubits) {
        throw std::invalid_argument("build_explicit_unitary: n + l_max + 1 = " + std::to_string(n + l_max + 1) +
                                    " exceeds " + std::to_string(kMaxExplicitQubits));
    }
    const Eigen::Index L = Eigen::Index{1} << l_max;
    const Eigen::Index local = 2 * L;

    // Walsh-Hadamard on the l_max flag qubits.
    Eigen::MatrixXd hadamard_k(L, L);
    const double inv_sqrt_l = 1.0 / std::sqrt(static_cast<double>(L));
    for (Eigen::Index r = 0; r < L; ++r) {
        for (Eigen::Index c = 0; c < L; ++c) {
            hadamard_k(r, c) = (std::popcount(static_cast<std::uint64_t>(r & c)) & 1) ? -inv_sqrt_l : inv_sqrt_l;
        }
    }
    // Single flag qubit: H X on the way in, X H on the way out.
    Eigen::Matrix2d flag_in = Eigen::Matrix2d::Identity();
    if (range == EncodingRange::kSigned) {
        const double h = 1.0 / std::sqrt(2.0);
        Eigen::Matrix2d H;
        H << h, h, h, -h;
        Eigen::Matrix2d X;
        X << 0, 1, 1, 0;
        flag_in = H * X;
    }
    const Eigen::Matrix2d flag_out = flag_in.transpose();

    auto kron = [](const Eigen::Matrix2d& a, const Eigen::MatrixXd& b) {
        Eigen::MatrixXd out(2 * b.rows(), 2 * b.cols());
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
        return out;
    };
    const Eigen::MatrixXd v_in = kron(flag_in, hadamard_k);
    const Eigen::MatrixXd v_out = kron(flag_out, hadamard_k);

    const std::size_t N = static_cast<std::size_t>(plan.size());
    std::vector<Eigen::MatrixXcd> blocks(N);
    parallel_for(N, [&](std::size_t x) {
        const int level = plan.segments[plan.segment_of(static_cast<std::int64_t>(x))].level();
        // Rows of C V_in: row (a', k) of C V_in is row (a' xor carry_k, k) of V_in.
        Eigen::MatrixXd permuted(local, local);
        for (Eigen::Index k = 0; k < L; ++k) {
            const Eigen::Index carry = carry_bit(x, static_cast<std::uint64_t>(k), level) ? 1 : 0;
            for (Eigen::Index a = 0; a < 2; ++a) {
                permuted.row(a * L + k) = v_in.row((a ^ carry) * L + k);
            }
        }
        blocks[x] = (v_out * permuted).cast<std::complex<double>>();
    });
    return ExplicitUnitary(n, l_max, range, std::move(blocks));
}

std::vector<double> block_of(const ExplicitUnitary& unitary, const SegmentPlan& plan) {
    if (unitary.n() != plan.n || unitary.l_max() != plan.l_max()) {
        throw std::invalid_argument("block_of: unitary does not match the plan's register sizes");
    }
    const auto N = static_cast<std::size_t>(plan.size());
    std::vector<double> out(N);
    for (std::size_t x = 0; x < N; ++x) {
        const std::complex<double> v = unitary.block(static_cast<std::int64_t>(x))(0, 0);
        if (std::abs(v.imag()) > 1e-12) {
            throw NumericError("block_of: flag-zero entry has a non-negligible imaginary part at x = " + std::to_string(x),
                               std::abs(v.imag()));
        }
        out[x] = v.real();
    }
    return out;
}

void write_diagonal_csv(std::ostream& os, const DiagonalBlockEncoding& encoding) {
    os << "x,t_x,segment_index\n";
    for (std::size_t x = 0; x < encoding.diag.size(); ++x) {
        os << x << ',' << encoding.diag[x] << ',' << encoding.segment_index[x] << '\n';
    }
}

}  // namespace pqsvt
