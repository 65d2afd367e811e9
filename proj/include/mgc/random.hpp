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
 * Seeded random gates and circuits for tests, benchmarks and the CLI.
 */
#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "mgc/circuit.hpp"
#include "mgc/matchgate.hpp"

namespace mgc {

using Rng = std::mt19937_64;

/// Haar-distributed U(d): QR of a complex Ginibre matrix with phase fix.
inline MatXc random_unitary(int d, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    MatXc g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            g(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    Eigen::HouseholderQR<MatXc> qr(g);
    MatXc q = qr.householderQ() * MatXc::Identity(d, d);
    const MatXc r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const Complex diag = r(j, j);
        q.col(j) *= diag / std::abs(diag);
    }
    return q;
}

/// Haar A in U(2); B Haar in U(2) rescaled so det B = det A.
inline Matchgate random_matchgate(Rng &rng) {
    const Mat2c a = random_unitary(2, rng);
    Mat2c b = random_unitary(2, rng);
    b *= std::sqrt(a.determinant() / b.determinant());
    return {a, b};
}

/// Uniform SO(d): Haar O(d) via real QR, one column flipped when det < 0.
inline MatXd random_special_orthogonal(int d, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    MatXd g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            g(i, j) = normal(rng);
        }
    }
    Eigen::HouseholderQR<MatXd> qr(g);
    MatXd q = qr.householderQ() * MatXd::Identity(d, d);
    const MatXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        if (r(j, j) < 0) {
            q.col(j) *= -1.0;
        }
    }
    if (q.determinant() < 0) {
        q.col(0) *= -1.0;
    }
    return q;
}

inline Bitstring random_bits(int n, Rng &rng) {
    std::bernoulli_distribution coin(0.5);
    Bitstring b(static_cast<std::size_t>(n));
    for (auto &x : b) {
        x = coin(rng) ? 1 : 0;
    }
    return b;
}

/// A random matchgate-flavour gate on line pair k (mostly explicit G(A,B)).
inline GateApp random_matchgate_gate(int k, Rng &rng) {
    std::uniform_int_distribution<int> pick(0, 9);
    const int p = pick(rng);
    if (p == 0) {
        return gates::w(k);
    }
    if (p == 1) {
        return gates::gxx(k);
    }
    if (p == 2) {
        std::uniform_int_distribution<int> plane(1, 6);
        std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
        const int pl = plane(rng);
        return gates::rot(k, pl, angle(rng));
    }
    return gates::mg(k, random_matchgate(rng));
}

/**
 * width n >= 2, size >= ceil(n/2). Random input bits and measured line;
 * gate positions uniform over the n-1 line pairs.
 */
inline MatchgateCircuit random_matchgate_circuit(int n, int size, Rng &rng) {
    if (n < 2 || 2 * size < n) {
        throw ValidationError("random matchgate circuit needs n >= 2 and "
                              "size >= n/2");
    }
    MatchgateCircuit c;
    c.width = n;
    c.input = random_bits(n, rng);
    std::uniform_int_distribution<int> line(1, n);
    c.measure_line = line(rng);
    std::uniform_int_distribution<int> pos(1, n - 1);
    c.gates.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        c.gates.push_back(random_matchgate_gate(pos(rng), rng));
    }
    return c;
}

/// Random x / h / u1 / u2 / cu1 gates; two-line kinds need width >= 2.
inline GeneralCircuit random_general_circuit(int m, int size, Rng &rng) {
    if (m < 1 || size < 0) {
        throw ValidationError("random general circuit needs m >= 1");
    }
    GeneralCircuit c;
    c.width = m;
    c.input = random_bits(m, rng);
    std::uniform_int_distribution<int> line(1, m);
    std::uniform_int_distribution<int> kind(0, m >= 2 ? 5 : 2);
    for (int i = 0; i < size; ++i) {
        const int q = line(rng);
        int q2 = q;
        if (m >= 2) {
            while (q2 == q) {
                q2 = line(rng);
            }
        }
        switch (kind(rng)) {
        case 0:
            c.gates.push_back(gates::h(q));
            break;
        case 1:
            c.gates.push_back(gates::x(q));
            break;
        case 2:
            c.gates.push_back(gates::u1(q, random_unitary(2, rng)));
            break;
        case 3:
        case 4:
            c.gates.push_back(gates::u2(q, q2, random_unitary(4, rng)));
            break;
        default:
            c.gates.push_back(gates::cu1(q, q2, random_unitary(2, rng)));
            break;
        }
    }
    return c;
}

} // namespace mgc
