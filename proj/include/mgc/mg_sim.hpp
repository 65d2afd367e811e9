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
 * Polynomial-time simulation of nearest-neighbour matchgate circuits with a
 * computational basis input and a single-line Z measurement.
 *
 * With R the 2n x 2n rotation of the whole circuit (U^dag c_j U =
 * sum_l R[j,l] c_l) and S(x)[j,l] = <x| -i c_j c_l |x> for j != l,
 *
 *     <Z_k> = (R S(x) R^T)[2k-1, 2k] = u_{2k-1}^T S(x) u_{2k},  u_j = R^T e_j.
 */
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "mgc/circuit.hpp"
#include "mgc/matchgate.hpp"

namespace mgc {

/// S(x) = sum_j (-1)^(j + x_ceil(j/2)) |j - (-1)^j><j|.
inline MatXd s_matrix(const Bitstring &x) {
    const auto n = static_cast<int>(x.size());
    if (n < 1) {
        throw ValidationError("s_matrix: empty input");
    }
    MatXd s = MatXd::Zero(2 * n, 2 * n);
    for (int j = 1; j <= 2 * n; ++j) {
        const int sign_exp = j + x[static_cast<std::size_t>((j + 1) / 2 - 1)];
        const double sign = (sign_exp % 2 == 0) ? 1.0 : -1.0;
        const int row = (j % 2 == 0) ? j - 1 : j + 1;
        s(row - 1, j - 1) = sign;
    }
    return s;
}

/// SO(4) block of a matchgate-flavour gate, acting on dims 2k-1..2k+2.
inline Mat4d gate_rotation(const GateApp &g) {
    switch (g.kind) {
    case GateKind::W: {
        static const Mat4d w = rotation_of_matchgate(fermionic_swap());
        return w;
    }
    case GateKind::GXX: {
        static const Mat4d gxx =
            rotation_of_matchgate(Matchgate{pauli::X(), pauli::X()});
        return gxx;
    }
    case GateKind::Rot: {
        const auto [a, b] = plane_pair(g.plane);
        return PlaneRotation{a, b, -g.params.at(0)}.dense(4);
    }
    case GateKind::MG:
        return rotation_of_matchgate(Mat4c(gate_matrix(g)));
    default:
        throw ValidationError("gate_rotation: not a matchgate kind");
    }
}

/// The fast path: O(N + n) time and O(n) memory.
inline double simulate_expectation(const MatchgateCircuit &c) {
    require_valid(c);
    const int n = c.width;
    const int k = c.measure_line;
    std::vector<double> u(2 * static_cast<std::size_t>(n), 0.0);
    std::vector<double> v(u.size(), 0.0);
    u[static_cast<std::size_t>(2 * k - 2)] = 1.0;
    v[static_cast<std::size_t>(2 * k - 1)] = 1.0;
    // u <- R_1^T ... R_N^T e, i.e. walk the gates backwards.
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        const Mat4d r = gate_rotation(*it);
        const auto base = static_cast<std::size_t>(2 * it->lines[0] - 2);
        double tu[4];
        double tv[4];
        for (int i = 0; i < 4; ++i) {
            tu[i] = 0.0;
            tv[i] = 0.0;
            for (int j = 0; j < 4; ++j) {
                tu[i] += r(j, i) * u[base + static_cast<std::size_t>(j)];
                tv[i] += r(j, i) * v[base + static_cast<std::size_t>(j)];
            }
        }
        for (int i = 0; i < 4; ++i) {
            u[base + static_cast<std::size_t>(i)] = tu[i];
            v[base + static_cast<std::size_t>(i)] = tv[i];
        }
    }
    double z = 0.0;
    for (int q = 0; q < n; ++q) {
        const double s = c.input[static_cast<std::size_t>(q)] ? -1.0 : 1.0;
        const auto a = static_cast<std::size_t>(2 * q);
        z += s * (u[a] * v[a + 1] - u[a + 1] * v[a]);
    }
    return z;
}

inline constexpr int kReferenceMaxWidth = 64;

/// Dense R = R_N ... R_1 embedded in 2n dimensions.
inline MatXd circuit_rotation(const MatchgateCircuit &c) {
    const int d = 2 * c.width;
    MatXd r = MatXd::Identity(d, d);
    for (const auto &g : c.gates) {
        const Mat4d block = gate_rotation(g);
        const int base = 2 * g.lines[0] - 2;
        const MatXd rows = r.middleRows(base, 4);
        r.middleRows(base, 4) = block * rows;
    }
    return r;
}

/// Materialises R and evaluates (R S R^T)[2k-1, 2k].
inline double simulate_expectation_reference(const MatchgateCircuit &c) {
    require_valid(c);
    if (c.width > kReferenceMaxWidth) {
        throw GuardError("reference simulation limited to width " +
                         std::to_string(kReferenceMaxWidth));
    }
    const MatXd r = circuit_rotation(c);
    const MatXd m = r * s_matrix(c.input) * r.transpose();
    const int k = c.measure_line;
    return m(2 * k - 2, 2 * k - 1);
}

struct OutcomeDistribution {
    double p0{1.0};
    double p1{0.0};
};

inline constexpr double kOvershootLimit = 1e-6;

inline OutcomeDistribution distribution_from_expectation(double z) {
    if (!std::isfinite(z) || std::abs(z) > 1.0 + kOvershootLimit) {
        throw ConsistencyError("expectation " + std::to_string(z) +
                               " outside [-1, 1]");
    }
    z = std::clamp(z, -1.0, 1.0);
    return {std::clamp((1.0 + z) / 2.0, 0.0, 1.0),
            std::clamp((1.0 - z) / 2.0, 0.0, 1.0)};
}

/// (p0, p1) of the measured line.
inline OutcomeDistribution output_distribution(const MatchgateCircuit &c) {
    return distribution_from_expectation(simulate_expectation(c));
}

} // namespace mgc
