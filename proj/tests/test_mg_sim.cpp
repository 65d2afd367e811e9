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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mgc/mgc.hpp"
#include "test_util.hpp"

namespace {

using namespace mgc;

TEST(SMatrix, ZeroInputIsBlockYtilde) {
    const MatXd s = s_matrix({0, 0});
    MatXd expected = MatXd::Zero(4, 4);
    expected(0, 1) = expected(2, 3) = 1;
    expected(1, 0) = expected(3, 2) = -1;
    EXPECT_EQ(s, expected);
}

TEST(SMatrix, OneFlipsItsBlock) {
    const MatXd s = s_matrix({1});
    MatXd expected(2, 2);
    expected << 0, -1, 1, 0;
    EXPECT_EQ(s, expected);
}

TEST(SMatrix, MatchesDenseMajoranaProducts) {
    for (int n = 1; n <= 4; ++n) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            Bitstring x(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                x[static_cast<std::size_t>(i)] = (v >> (n - 1 - i)) & 1;
            }
            EXPECT_EQ(s_matrix(x), mgc::testing::s_matrix_dense(x))
                << bits_to_string(x);
        }
    }
}

TEST(Simulate, TrivialCircuitsFromExamples) {
    const MatchgateCircuit xx{2, {gates::gxx(1)}, {0, 0}, 1};
    EXPECT_NEAR(simulate_expectation(xx), -1.0, 1e-12);
    const auto d = output_distribution(xx);
    EXPECT_NEAR(d.p0, 0.0, 1e-12);
    EXPECT_NEAR(d.p1, 1.0, 1e-12);

    const MatchgateCircuit id{2, {gates::mg(1, pauli::I(), pauli::I())},
                              {0, 0}, 1};
    EXPECT_NEAR(simulate_expectation(id), 1.0, 1e-12);

    const MatchgateCircuit swap{2, {gates::w(1)}, {0, 1}, 1};
    EXPECT_NEAR(simulate_expectation(swap), -1.0, 1e-12);
}

TEST(Simulate, HalfRotationGivesEvenSplit) {
    // sends |00> to (|00> + |11>)/sqrt 2
    const MatchgateCircuit c{2, {gates::rot(1, 2, std::numbers::pi / 2)},
                             {0, 0}, 1};
    const auto d = output_distribution(c);
    EXPECT_NEAR(d.p0, 0.5, 1e-12);
    EXPECT_NEAR(d.p1, 0.5, 1e-12);
}

TEST(Simulate, FastReferenceAndOracleAgree) {
    Rng rng(11);
    for (int t = 0; t < 120; ++t) {
        const int n = 2 + t % 9;
        const auto c = random_matchgate_circuit(n, 3 * n, rng);
        const double fast = simulate_expectation(c);
        const double ref = simulate_expectation_reference(c);
        const double oracle = expectation_z(run_statevector(c), c.measure_line);
        EXPECT_NEAR(fast, ref, 1e-10);
        EXPECT_NEAR(fast, oracle, 1e-9);
        EXPECT_LE(std::abs(fast), 1.0 + 1e-9);
    }
}

TEST(Simulate, SwapOnlyCircuitIsSignedPermutation) {
    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        const int n = 3 + t % 5;
        MatchgateCircuit c{n, {}, random_bits(n, rng), 1};
        std::uniform_int_distribution<int> pos(1, n - 1);
        for (int i = 0; i < 2 * n; ++i) {
            c.gates.push_back(gates::w(pos(rng)));
        }
        const MatXd r = circuit_rotation(c);
        EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
        for (Eigen::Index i = 0; i < r.rows(); ++i) {
            int nonzero = 0;
            for (Eigen::Index j = 0; j < r.cols(); ++j) {
                if (r(i, j) != 0.0) {
                    ++nonzero;
                    EXPECT_EQ(std::abs(r(i, j)), 1.0);
                }
            }
            EXPECT_EQ(nonzero, 1);
        }
        const double z = simulate_expectation(c);
        EXPECT_EQ(std::abs(z), 1.0);
    }
}

TEST(Simulate, ProbabilitiesAreAProperDistribution) {
    Rng rng(13);
    for (int t = 0; t < 50; ++t) {
        const auto c = random_matchgate_circuit(2 + t % 20, 30, rng);
        const auto d = output_distribution(c);
        EXPECT_GE(d.p0, 0.0);
        EXPECT_GE(d.p1, 0.0);
        EXPECT_NEAR(d.p0 + d.p1, 1.0, 1e-12);
    }
}

TEST(Simulate, OvershootIsAnError) {
    EXPECT_THROW(distribution_from_expectation(1.1), ConsistencyError);
    EXPECT_THROW(distribution_from_expectation(std::nan("")), ConsistencyError);
    const auto d = distribution_from_expectation(1.0 + 1e-9);
    EXPECT_EQ(d.p0, 1.0);
    EXPECT_EQ(d.p1, 0.0);
}

// <x| U^dag (-i c_j c_l) U |x> = (R S R^T)[j,l] for every j != l.
TEST(Simulate, RotatedMajoranaCorrelations) {
    Rng rng(14);
    for (int t = 0; t < 8; ++t) {
        const int n = 2 + t % 5;
        const auto c = random_matchgate_circuit(n, 2 * n, rng);
        const MatXc u = mgc::testing::circuit_unitary(c.gates, n);
        const MatXd r = circuit_rotation(c);
        const MatXd predicted = r * s_matrix(c.input) * r.transpose();
        const auto idx =
            static_cast<Eigen::Index>(mgc::testing::basis_index(c.input));
        for (int j = 1; j <= 2 * n; ++j) {
            for (int l = 1; l <= 2 * n; ++l) {
                if (j == l) {
                    continue;
                }
                const MatXc op = Complex(0, -1) * u.adjoint() *
                                 jordan_wigner(n, j) * jordan_wigner(n, l) * u;
                const Complex v = op(idx, idx);
                EXPECT_NEAR(v.real(), predicted(j - 1, l - 1), 1e-9);
                EXPECT_NEAR(v.imag(), 0.0, 1e-9);
            }
        }
    }
}

TEST(Simulate, ReferenceGuard) {
    MatchgateCircuit c{65, {gates::w(1)}, Bitstring(65, 0), 1, true};
    EXPECT_THROW(simulate_expectation_reference(c), GuardError);
    EXPECT_NEAR(simulate_expectation(c), 1.0, 0.0);
}

} // namespace
