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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pqsvt/plan.hpp"

namespace pqsvt {

// Which diagonal the block encoding realizes.
enum class EncodingRange {
    kSigned,    // t_x = 1 - 2 (x mod L) / L, in (-1, 1]
    kUnsigned,  // 1 - (x mod L) / L, in (0, 1]; the flag Hadamards and X are dropped
};

// numerator / 2^level, exact.
struct DyadicRational {
    std::int64_t numerator = 0;
    int level = 0;

    double value() const;
    friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
};

struct DiagonalBlockEncoding {
    SegmentPlan plan;
    EncodingRange range = EncodingRange::kSigned;
    std::vector<DyadicRational> exact;       // per x
    std::vector<double> diag;                // exact[x].value()
    std::vector<std::uint32_t> segment_index;  // s_x
    int flag_qubits = 1;                     // l_max + 1
};

DiagonalBlockEncoding reference_diagonal(const SegmentPlan& plan, EncodingRange range = EncodingRange::kSigned);

// 1 iff (x mod 2^l) + (k mod 2^l) >= 2^l.
bool carry_bit(std::uint64_t x, std::uint64_t k, int l);

// Classical bit-level run of the compute-carries ladder: a Toffoli into
// carry_1, then per rung l the sequence
//   k_l ^= c_l; c_l ^= x_l; c_{l+1} ^= c_l k_l; c_l ^= x_l; c_{l+1} ^= c_l
// which leaves c_{l+1} = MAJ(x_l, k_l, c_l).
struct CarryLadderState {
    std::vector<std::uint8_t> carries;  // carries[l - 1] = carry_l, l = 1..l_max
    std::uint64_t x = 0;                // x register after the ladder
    std::uint64_t k = 0;                // k register after the ladder (rungs toggle k_l)
};

CarryLadderState run_carry_ladder(std::uint64_t x, std::uint64_t k, int l_max);

// run_carry_ladder(x, k, l_max).carries.
std::vector<std::uint8_t> ripple_carry_reference(std::uint64_t x, std::uint64_t k, int l_max);

// Full unitary of the controlled-off block encoding circuit on
// (flag a) x (l_max flag qubits k) x (n qubits x). The x register is never
// modified, so U is stored as one (2 L_max) x (2 L_max) block per x.
// Full-space basis index: (a * L_max + k) * N + x.
class ExplicitUnitary {
  public:
    ExplicitUnitary(int n, int l_max, EncodingRange range, std::vector<Eigen::MatrixXcd> blocks);

    int n() const { return n_; }
    int l_max() const { return l_max_; }
    EncodingRange range() const { return range_; }
    std::size_t dim() const;
    std::size_t local_dim() const { return std::size_t{2} << l_max_; }

    // Block acting on |a, k> for fixed x; local index a * L_max + k.
    const Eigen::MatrixXcd& block(std::int64_t x) const { return blocks_.at(static_cast<std::size_t>(x)); }

    std::complex<double> entry(std::size_t row, std::size_t col) const;

    // Materialized matrix; only for dim() <= 4096.
    Eigen::MatrixXcd dense() const;

    double hermiticity_defect() const;  // max |U - U^dagger|
    double unitarity_defect() const;    // max |U^dagger U - I|

  private:
    int n_;
    int l_max_;
    EncodingRange range_;
    std::vector<Eigen::MatrixXcd> blocks_;
};

inline constexpr int kMaxExplicitQubits = 14;

// U = V_out C V_in with V_in = (H X) (x) H^{(x) l_max} (x) I, V_out = V_in^dagger,
// and C |a, k, x> = |a xor carry(x, k, l_{s_x}), k, x>. Throws if
// n + l_max + 1 > kMaxExplicitQubits.
ExplicitUnitary build_explicit_unitary(const SegmentPlan& plan, EncodingRange range = EncodingRange::kSigned);

// <0, 0^{l_max}, x| U |0, 0^{l_max}, x> for every x. Throws NumericError if an
// entry has imaginary part above 1e-12.
std::vector<double> block_of(const ExplicitUnitary& unitary, const SegmentPlan& plan);

// CSV with header "x,t_x,segment_index".
void write_diagonal_csv(std::ostream& os, const DiagonalBlockEncoding& encoding);

}  // namespace pqsvt
