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
 * Compiles a general circuit of width m into a matchgate circuit of width
 * n = 2^(m+1) with input 0...0 measured on line 1.
 *
 * Pipeline: X prefix for the input, an X on line 1 (see below), the w
 * gadget onto a fresh ancilla A = m+1, real-ification with one more rebit
 * B, then every real gate (taken in reverse order and transposed, since
 * the matchgate rotation must equal the transpose of the real circuit) is
 * Givens-factored, lifted to two-level rotations of the 2n-dimensional
 * space and realised by matchgates plus fermionic-swap ladders.
 *
 * Dimension labelling: j - 1 = (b_1 ... b_m b_B b_A) in binary, A least
 * significant, so dimensions (2k-1, 2k) belong to matchgate line k and
 * Ytilde_A is exactly S(0...0).
 *
 * With that labelling the matchgate circuit measures (R S R^T)[1,2], which
 * is minus the gadget's matrix element; the extra X on line 1 flips <Z_1>
 * back.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "mgc/circuit.hpp"
#include "mgc/compress.hpp"
#include "mgc/matchgate.hpp"

namespace mgc {

/// v = |+><+| (x) I + |-><-| (x) Ytilde.
inline Mat4c v_gadget() {
    Mat2c plus;
    plus << 0.5, 0.5, 0.5, 0.5;
    Mat2c minus;
    minus << 0.5, -0.5, -0.5, 0.5;
    return kron(MatXc(plus), MatXc(pauli::I())) +
           kron(MatXc(minus), MatXc(pauli::Ytilde()));
}

inline Mat4c swap_gate() {
    Mat4c s = Mat4c::Zero();
    s(0, 0) = 1;
    s(1, 2) = 1;
    s(2, 1) = 1;
    s(3, 3) = 1;
    return s;
}

/// w = SWAP v.
inline Mat4c w_gadget() { return swap_gate() * v_gadget(); }

/// Appends w on (1, A) with A = m+1 a fresh line in |0>. Input must be 0...0.
inline GeneralCircuit append_w_gadget(const GeneralCircuit &c) {
    require_valid(c);
    if (hamming_weight(c.input) != 0) {
        throw ValidationError(
            "append_w_gadget: absorb the input into X gates first");
    }
    GeneralCircuit out = c;
    out.width = c.width + 1;
    out.input.push_back(0);
    out.gates.push_back(gates::u2(1, out.width, w_gadget()));
    return out;
}

/// Replaces input bits by X gates.
inline GeneralCircuit absorb_input(const GeneralCircuit &c) {
    GeneralCircuit out;
    out.width = c.width;
    out.input.assign(c.input.size(), 0);
    for (std::size_t i = 0; i < c.input.size(); ++i) {
        if (c.input[i]) {
            out.gates.push_back(gates::x(static_cast<int>(i) + 1));
        }
    }
    out.gates.insert(out.gates.end(), c.gates.begin(), c.gates.end());
    return out;
}

struct RealGate {
    /// Rebit lines, first most significant; the last one is B.
    std::vector<int> lines;
    MatXd matrix;
};

/// U^ = Re(U) (x) I_B - Im(U) (x) Ytilde_B on lines + {b_line}.
inline RealGate realify_gate(const MatXc &u, std::vector<int> lines,
                             int b_line) {
    if (!is_unitary(u)) {
        throw ValidationError("realify_gate: non-unitary input");
    }
    Eigen::Matrix2d ytilde;
    ytilde << 0, 1, -1, 0;
    RealGate g;
    g.matrix = kron(MatXd(u.real()), MatXd(Eigen::Matrix2d::Identity())) -
               kron(MatXd(u.imag()), MatXd(ytilde));
    g.lines = std::move(lines);
    g.lines.push_back(b_line);
    return g;
}

/// Real state Re|psi> (x) |0>_B + Im|psi> (x) |1>_B.
inline VecXd realify_state(const std::vector<Complex> &psi) {
    VecXd out(2 * static_cast<Eigen::Index>(psi.size()));
    for (std::size_t i = 0; i < psi.size(); ++i) {
        out(2 * static_cast<Eigen::Index>(i)) = psi[i].real();
        out(2 * static_cast<Eigen::Index>(i) + 1) = psi[i].imag();
    }
    return out;
}

/**
 * Matchgates whose composed rotation is the plane rotation (a, b) by theta
 * in 2n dimensions. When b sits more than one line pair below a, a W
 * ladder carries b's pair next to a's pair and back again.
 */
inline void emit_two_level(int a, int b, double theta, int n,
                           const GateSink &sink) {
    if (a < 1 || b > 2 * n || a >= b) {
        throw ValidationError("two_level_to_matchgates: need 1 <= a < b <= 2n");
    }
    if (n < 2) {
        throw ValidationError("two_level_to_matchgates: width must be >= 2");
    }
    const int pair_a = (a + 1) / 2;
    const int pair_b = (b + 1) / 2;
    int window = std::min(pair_a, n - 1);
    int b_moved = b;
    std::vector<int> ladder;
    if (pair_b > window + 1) {
        for (int k = pair_b - 1; k > pair_a; --k) {
            ladder.push_back(k);
        }
        b_moved = b - 2 * (pair_b - pair_a - 1);
        window = pair_a;
    }
    for (int k : ladder) {
        sink(gates::w(k));
    }
    const int base = 2 * window - 2;
    // rot's image is the plane rotation by -theta_param.
    sink(gates::rot(window, plane_index(a - base, b_moved - base), -theta));
    for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) {
        sink(gates::w(*it));
    }
}

inline std::vector<GateApp> two_level_to_matchgates(int a, int b,
                                                    double theta, int n) {
    std::vector<GateApp> out;
    emit_two_level(a, b, theta, n, [&](const GateApp &g) { out.push_back(g); });
    return out;
}

inline constexpr int kExpandDefaultGuard = 4;

struct ExpandStats {
    int source_width{0};
    std::size_t source_gates{0};
    int width{0};
    std::size_t gates{0};
};

namespace detail {

/// Source gates after input absorption, sign flip and the w gadget.
inline GeneralCircuit expansion_source(const GeneralCircuit &c) {
    GeneralCircuit v = absorb_input(c);
    v.gates.push_back(gates::x(1));
    return append_w_gadget(v);
}

} // namespace detail

/// Streams the expanded matchgate gates into `sink`.
inline ExpandStats expand_circuit(const GeneralCircuit &c, const GateSink &sink,
                                  int guard = kExpandDefaultGuard) {
    require_valid(c);
    if (c.width > guard) {
        throw GuardError("expand: width " + std::to_string(c.width) +
                         " exceeds guard " + std::to_string(guard));
    }
    const int m = c.width;
    const int rebits = m + 2; // lines 1..m, B, A
    const int n = 1 << (m + 1);
    const int line_a = m + 1;
    const int line_b = m + 2;
    // bit position of each rebit line, 0 = most significant
    auto position = [&](int line) {
        if (line == line_a) {
            return rebits - 1;
        }
        if (line == line_b) {
            return rebits - 2;
        }
        return line - 1;
    };

    const GeneralCircuit source = detail::expansion_source(c);
    std::size_t emitted = 0;
    auto counted = [&](const GateApp &g) {
        ++emitted;
        sink(g);
    };

    for (auto it = source.gates.rbegin(); it != source.gates.rend(); ++it) {
        const RealGate real =
            realify_gate(gate_matrix(*it), acting_lines(*it), line_b);
        if (std::abs(real.matrix.determinant() - 1.0) > kTolerance) {
            throw ConsistencyError("expand: real-ified gate is not in SO");
        }
        const auto k = static_cast<int>(real.lines.size());
        std::uint64_t gate_mask = 0;
        std::vector<std::uint64_t> local_bit(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            local_bit[static_cast<std::size_t>(i)] =
                std::uint64_t{1}
                << (rebits - 1 - position(real.lines[static_cast<std::size_t>(i)]));
            gate_mask |= local_bit[static_cast<std::size_t>(i)];
        }
        auto embed = [&](int local, std::uint64_t spectators) {
            std::uint64_t idx = spectators;
            for (int i = 0; i < k; ++i) {
                if (local & (1 << (k - 1 - i))) {
                    idx |= local_bit[static_cast<std::size_t>(i)];
                }
            }
            return static_cast<int>(idx) + 1;
        };
        // This gate contributes G^T = seq[0] ... seq[p-1]; seq.back() first.
        const auto seq = givens_factor(MatXd(real.matrix.transpose()));
        const std::uint64_t total = std::uint64_t{1} << rebits;
        for (auto g = seq.rbegin(); g != seq.rend(); ++g) {
            for (std::uint64_t s = 0; s < total; ++s) {
                if (s & gate_mask) {
                    continue;
                }
                int a = embed(g->a - 1, s);
                int b = embed(g->b - 1, s);
                double theta = g->theta;
                if (a > b) {
                    std::swap(a, b);
                    theta = -theta;
                }
                emit_two_level(a, b, theta, n, counted);
            }
        }
    }
    return {m, c.gates.size(), n, emitted};
}

struct ExpandResult {
    MatchgateCircuit circuit;
    ExpandStats stats;
};

inline ExpandResult expand(const GeneralCircuit &c,
                           int guard = kExpandDefaultGuard) {
    ExpandResult out;
    auto &mg = out.circuit;
    out.stats = expand_circuit(
        c, [&](const GateApp &g) { mg.gates.push_back(g); }, guard);
    mg.width = out.stats.width;
    mg.input.assign(static_cast<std::size_t>(mg.width), 0);
    mg.measure_line = 1;
    return out;
}

} // namespace mgc
