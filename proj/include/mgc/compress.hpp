// Copyright 2026 The mgc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Compiles a standardized matchgate circuit of width n (a power of two)
 * into a general circuit on log2(n) + 3 lines whose line-1 Z expectation
 * equals the matchgate circuit's <Z_1>.
 *
 * Register layout of the output:
 *   line 1             Hadamard-test control (measured)
 *   lines 2..mu+1      data rebits, mu = log2(2n); dimension j is the basis
 *                      state gray(j-1), most significant bit on line 2
 *   line mu+2          clean ancilla for multiply-controlled gates
 *
 * The circuit is H(1), controlled R^-1 (reverse pass over the gates),
 * controlled S, controlled R (forward pass), controlled S^-1, H(1). The
 * input circuit is read twice and output gates are handed to a sink one by
 * one; working memory does not grow with the gate count.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mgc/circuit.hpp"
#include "mgc/matchgate.hpp"
#include "mgc/mg_sim.hpp"
#include "mgc/standardize.hpp"

#include <Eigen/Eigenvalues>

namespace mgc {

using GateSink = std::function<void(const GateApp &)>;

// ---------------------------------------------------------------- Gray code

inline std::uint64_t gray_code(std::uint64_t i) { return i ^ (i >> 1); }

inline std::uint64_t gray_decode(std::uint64_t g) {
    std::uint64_t b = g;
    for (std::uint64_t shift = 1; shift < 64; shift <<= 1) {
        b ^= b >> shift;
    }
    return b;
}

/// gray(i) as mu bits, most significant first.
inline Bitstring gray(std::uint64_t i, int mu) {
    if (mu < 1 || mu > 63 || i >= (std::uint64_t{1} << mu)) {
        throw ValidationError("gray: index out of range");
    }
    const std::uint64_t g = gray_code(i);
    Bitstring out(static_cast<std::size_t>(mu));
    for (int b = 0; b < mu; ++b) {
        out[static_cast<std::size_t>(b)] =
            static_cast<std::uint8_t>((g >> (mu - 1 - b)) & 1U);
    }
    return out;
}

/// mu-1 CNOTs taking |binary(i)> to |gray(i)> on lines first..first+mu-1.
inline std::vector<GateApp> gray_converter_circuit(int mu, int first_line = 1) {
    if (mu < 1) {
        throw ValidationError("gray_converter_circuit: mu must be positive");
    }
    std::vector<GateApp> out;
    for (int bit = mu; bit >= 2; --bit) {
        out.push_back(gates::cx(first_line + bit - 2, first_line + bit - 1));
    }
    return out;
}

/// |gray(i)> -> |binary(i)>: the converter reversed.
inline std::vector<GateApp> gray_to_binary_circuit(int mu, int first_line = 1) {
    auto out = gray_converter_circuit(mu, first_line);
    std::reverse(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- alignment

enum class ControlValue : std::uint8_t { Free, Zero, One };

/// Per-bit requirement (1-based bits); exactly one bit is the target.
struct ControlPattern {
    std::vector<ControlValue> bits;
    int target{1};

    bool operator==(const ControlPattern &) const = default;
};

struct Alignment {
    /// X / CNOT gates P with P|a> and P|b> at Hamming distance 1.
    std::vector<GateApp> gates;
    ControlPattern pattern;
    /// True when the image of label_a has a 1 on the target bit.
    bool a_is_one{false};
};

/**
 * Pivot = first differing bit. For every other differing bit d: X_d if the
 * label with a 0 on the pivot has a 1 on d, then CNOT(pivot -> d). Both
 * images then agree everywhere except the pivot.
 */
inline Alignment align_conjugation(const Bitstring &label_a,
                                   const Bitstring &label_b,
                                   int first_line = 1) {
    if (label_a.size() != label_b.size() || label_a.empty()) {
        throw ValidationError("align_conjugation: label length mismatch");
    }
    if (label_a == label_b) {
        throw ValidationError("align_conjugation: identical labels");
    }
    const auto mu = label_a.size();
    std::vector<std::size_t> diff;
    for (std::size_t i = 0; i < mu; ++i) {
        if (label_a[i] != label_b[i]) {
            diff.push_back(i);
        }
    }
    const std::size_t pivot = diff.front();
    const Bitstring &zero_side = label_a[pivot] == 0 ? label_a : label_b;

    Alignment out;
    out.a_is_one = label_a[pivot] == 1;
    for (std::size_t k = 1; k < diff.size(); ++k) {
        if (zero_side[diff[k]] == 1) {
            out.gates.push_back(gates::x(first_line + static_cast<int>(diff[k])));
        }
    }
    for (std::size_t k = 1; k < diff.size(); ++k) {
        out.gates.push_back(gates::cx(first_line + static_cast<int>(pivot),
                                      first_line + static_cast<int>(diff[k])));
    }
    out.pattern.target = static_cast<int>(pivot) + 1;
    out.pattern.bits.assign(mu, ControlValue::Free);
    for (std::size_t i = 0; i < mu; ++i) {
        if (i == pivot) {
            continue;
        }
        // Differing bits other than the pivot end up 0 on both sides.
        const bool is_diff =
            std::find(diff.begin(), diff.end(), i) != diff.end();
        const bool one = !is_diff && label_a[i] == 1;
        out.pattern.bits[i] = one ? ControlValue::One : ControlValue::Zero;
    }
    return out;
}

// ------------------------------------------------ multiply-controlled gates

struct LineControl {
    int line{1};
    bool value{true};
};

/// Principal square root of a 2x2 unitary.
inline Mat2c unitary_sqrt(const Mat2c &u) {
    Eigen::ComplexEigenSolver<Mat2c> es(u);
    const Mat2c q = es.eigenvectors();
    Mat2c d = Mat2c::Zero();
    d(0, 0) = std::sqrt(es.eigenvalues()(0));
    d(1, 1) = std::sqrt(es.eigenvalues()(1));
    return q * d * q.inverse();
}

namespace detail {

inline const Mat2c &sqrt_x() {
    static const Mat2c v = unitary_sqrt(pauli::X());
    return v;
}

/// Doubly-controlled U from five two-qubit gates, with v*v = U.
inline void emit_doubly_controlled(int c1, int c2, int t, const Mat2c &v,
                                   const GateSink &sink) {
    sink(gates::cu1(c2, t, v));
    sink(gates::cx(c1, c2));
    sink(gates::cu1(c2, t, v.adjoint()));
    sink(gates::cx(c1, c2));
    sink(gates::cu1(c1, t, v));
}

inline void emit_toffoli(int c1, int c2, int t, const GateSink &sink) {
    emit_doubly_controlled(c1, c2, t, sqrt_x(), sink);
}

/**
 * Multiply-controlled NOT. `dirty` lines may hold any state and are
 * restored. Uses the linear ladder when there are m-2 dirty lines, else
 * splits the controls in two halves around one borrowed line.
 */
inline void emit_mcx(std::span<const int> controls, int target,
                     std::span<const int> dirty, const GateSink &sink) {
    const auto m = controls.size();
    if (m == 0) {
        sink(gates::x(target));
        return;
    }
    if (m == 1) {
        sink(gates::cx(controls[0], target));
        return;
    }
    if (m == 2) {
        emit_toffoli(controls[0], controls[1], target, sink);
        return;
    }
    if (dirty.size() >= m - 2) {
        // x_i = controls[i-1], a_j = dirty[j-1]; the chain for i = m..3 is
        // T(x_i, a_{i-2} -> a_{i-1}) with a_{m-1} standing for the target.
        auto chain = [&](std::size_t i) {
            const int into = (i == m) ? target : dirty[i - 2];
            emit_toffoli(controls[i - 1], dirty[i - 3], into, sink);
        };
        auto half = [&](std::size_t top) {
            for (std::size_t i = top; i >= 3; --i) {
                chain(i);
            }
            emit_toffoli(controls[0], controls[1], dirty[0], sink);
            for (std::size_t i = 3; i <= top; ++i) {
                chain(i);
            }
        };
        half(m);
        half(m - 1);
        return;
    }
    if (dirty.empty()) {
        throw ValidationError("emit_mcx: needs at least one borrowed line");
    }
    const std::size_t m1 = (m + 1) / 2;
    const int borrowed = dirty[0];
    std::vector<int> first(controls.begin(), controls.begin() + m1);
    std::vector<int> second(controls.begin() + m1, controls.end());
    std::vector<int> first_dirty(second);
    first_dirty.push_back(target);
    first_dirty.insert(first_dirty.end(), dirty.begin() + 1, dirty.end());
    std::vector<int> second_controls(second);
    second_controls.push_back(borrowed);
    std::vector<int> second_dirty(first);
    second_dirty.insert(second_dirty.end(), dirty.begin() + 1, dirty.end());
    for (int rep = 0; rep < 2; ++rep) {
        emit_mcx(first, borrowed, first_dirty, sink);
        emit_mcx(second_controls, target, second_dirty, sink);
    }
}

} // namespace detail

/**
 * Emits Lambda^r(t): t on `target` when every control line holds its
 * value. For r >= 3 the AND of the controls is computed into the clean
 * `ancilla` (borrowing `target`) and uncomputed afterwards.
 */
inline void emit_lambda_r(std::span<const LineControl> controls, int target,
                          const Mat2c &t, int ancilla, const GateSink &sink) {
    for (const auto &c : controls) {
        if (c.line == target || c.line == ancilla) {
            throw ValidationError("lambda_r_decompose: line collision");
        }
    }
    if (target == ancilla) {
        throw ValidationError("lambda_r_decompose: line collision");
    }
    for (std::size_t i = 0; i < controls.size(); ++i) {
        for (std::size_t j = i + 1; j < controls.size(); ++j) {
            if (controls[i].line == controls[j].line) {
                throw ValidationError("lambda_r_decompose: repeated control");
            }
        }
    }
    for (const auto &c : controls) {
        if (!c.value) {
            sink(gates::x(c.line));
        }
    }
    std::vector<int> lines;
    lines.reserve(controls.size());
    for (const auto &c : controls) {
        lines.push_back(c.line);
    }
    switch (lines.size()) {
    case 0:
        sink(gates::u1(target, t));
        break;
    case 1:
        sink(gates::cu1(lines[0], target, t));
        break;
    case 2:
        detail::emit_doubly_controlled(lines[0], lines[1], target,
                                       unitary_sqrt(t), sink);
        break;
    default: {
        const int borrowed[] = {target};
        detail::emit_mcx(lines, ancilla, borrowed, sink);
        sink(gates::cu1(ancilla, target, t));
        detail::emit_mcx(lines, ancilla, borrowed, sink);
        break;
    }
    }
    for (const auto &c : controls) {
        if (!c.value) {
            sink(gates::x(c.line));
        }
    }
}

inline std::vector<GateApp> lambda_r_decompose(
    std::span<const LineControl> controls, int target, const Mat2c &t,
    int ancilla) {
    std::vector<GateApp> out;
    emit_lambda_r(controls, target, t, ancilla,
                  [&](const GateApp &g) { out.push_back(g); });
    return out;
}

// ------------------------------------------------------------- compilation

struct CompressStats {
    int source_width{0};
    std::size_t source_gates{0};
    int width{0};
    std::size_t gates{0};
    int max_label_distance{0};
};

inline int ceil_log2(std::uint64_t v) {
    int b = 0;
    while ((std::uint64_t{1} << b) < v) {
        ++b;
    }
    return b;
}

inline bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

/// Adds idle lines (input 0) up to the next power of two.
inline MatchgateCircuit pad_to_power_of_two(const MatchgateCircuit &c) {
    MatchgateCircuit out = c;
    const int target = 1 << ceil_log2(static_cast<std::uint64_t>(c.width));
    out.input.resize(static_cast<std::size_t>(target), 0);
    out.width = target;
    out.allow_idle = out.allow_idle || target != c.width;
    return out;
}

inline int compressed_width(int n) { return ceil_log2(n) + 3; }

namespace detail {

class CompressEmitter {
  public:
    CompressEmitter(int n, const GateSink &sink)
        : mu_(ceil_log2(2 * static_cast<std::uint64_t>(n))),
          ancilla_(mu_ + 2), sink_(sink) {}

    [[nodiscard]] int mu() const { return mu_; }
    [[nodiscard]] int width() const { return mu_ + 2; }
    [[nodiscard]] std::size_t emitted() const { return count_; }
    [[nodiscard]] int max_distance() const { return max_distance_; }

    void emit(const GateApp &g) {
        ++count_;
        sink_(g);
    }

    static int data_line(int bit) { return 1 + bit; }

    /// Controlled two-level rotation in the dimension plane (a, b).
    void controlled_rotation(int a, int b, double theta) {
        const Bitstring la = gray(static_cast<std::uint64_t>(a - 1), mu_);
        const Bitstring lb = gray(static_cast<std::uint64_t>(b - 1), mu_);
        int dist = 0;
        for (std::size_t i = 0; i < la.size(); ++i) {
            dist += la[i] != lb[i];
        }
        if (dist > 3) {
            throw ConsistencyError("two-level rotation between Gray labels "
                                   "at distance > 3");
        }
        max_distance_ = std::max(max_distance_, dist);

        const Alignment al = align_conjugation(la, lb, data_line(1));
        // |a> -> cos|a> + sin|b>; with |a> on target value 1 the angle flips.
        const double angle = al.a_is_one ? -theta : theta;
        Mat2c t;
        t << std::cos(angle), -std::sin(angle), std::sin(angle),
            std::cos(angle);

        controls_.clear();
        controls_.push_back({1, true});
        for (std::size_t i = 0; i < al.pattern.bits.size(); ++i) {
            const auto v = al.pattern.bits[i];
            if (v == ControlValue::Free) {
                continue;
            }
            controls_.push_back(
                {data_line(static_cast<int>(i) + 1), v == ControlValue::One});
        }
        for (const auto &g : al.gates) {
            emit(g);
        }
        emit_lambda_r(controls_, data_line(al.pattern.target), t, ancilla_,
                      [this](const GateApp &g) { emit(g); });
        for (auto it = al.gates.rbegin(); it != al.gates.rend(); ++it) {
            emit(*it);
        }
    }

    /// Controlled S (or S^-1): Gray -> binary, controlled Ytilde on the
    /// least significant data rebit, binary -> Gray.
    void controlled_s(bool inverse) {
        for (const auto &g : gray_to_binary_circuit(mu_, data_line(1))) {
            emit(g);
        }
        const Mat2c y = inverse ? Mat2c(pauli::Ytilde().transpose())
                                : pauli::Ytilde();
        emit(gates::cu1(1, data_line(mu_), y));
        for (const auto &g : gray_converter_circuit(mu_, data_line(1))) {
            emit(g);
        }
    }

  private:
    int mu_;
    int ancilla_;
    const GateSink &sink_;
    std::size_t count_{0};
    int max_distance_{0};
    std::vector<LineControl> controls_;
};

} // namespace detail

/**
 * Streams the compiled circuit into `sink`. The input must already be
 * standardized and have a power-of-two width.
 */
inline CompressStats compress_circuit(const MatchgateCircuit &c,
                                      const GateSink &sink) {
    require_valid(c);
    if (!is_standardized(c)) {
        throw ValidationError(
            "compress: circuit is not standardized (input 0...0, measure 1)");
    }
    if (!is_power_of_two(c.width)) {
        throw ValidationError("compress: width is not a power of two");
    }
    detail::CompressEmitter em(c.width, sink);
    em.emit(gates::h(1));

    // R^-1 = R_1^T ... R_N^T: R_N^T acts first.
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        const int base = 2 * it->lines[0] - 2;
        const auto seq = givens_factor(MatXd(gate_rotation(*it)));
        // R_t^T = seq[p-1]^T ... seq[0]^T, so seq[0]^T comes first.
        for (const auto &g : seq) {
            em.controlled_rotation(base + g.a, base + g.b, -g.theta);
        }
    }
    em.controlled_s(false);
    for (const auto &gate : c.gates) {
        const int base = 2 * gate.lines[0] - 2;
        const auto seq = givens_factor(MatXd(gate_rotation(gate)));
        for (auto g = seq.rbegin(); g != seq.rend(); ++g) {
            em.controlled_rotation(base + g->a, base + g->b, g->theta);
        }
    }
    em.controlled_s(true);
    em.emit(gates::h(1));

    return {c.width, c.gates.size(), em.width(), em.emitted(),
            em.max_distance()};
}

struct CompressResult {
    GeneralCircuit circuit;
    CompressStats stats;
    /// Width and size after standardization and padding.
    int prepared_width{0};
    std::size_t prepared_gates{0};
};

/**
 * Full pipeline. Unless `strict`, standardizes and pads first; with
 * `strict` the input must already be in that form.
 */
inline CompressResult compress(const MatchgateCircuit &c, bool strict = false) {
    MatchgateCircuit prepared =
        strict ? c : pad_to_power_of_two(standardize(c));
    CompressResult out;
    out.prepared_width = prepared.width;
    out.prepared_gates = prepared.gates.size();
    auto &qc = out.circuit;
    out.stats = compress_circuit(
        prepared, [&](const GateApp &g) { qc.gates.push_back(g); });
    qc.width = out.stats.width;
    qc.input.assign(static_cast<std::size_t>(qc.width), 0);
    return out;
}

} // namespace mgc
