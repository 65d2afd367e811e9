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

#include "mgc/mgc.hpp"
#include "test_util.hpp"

namespace {

using namespace mgc;
using mgc::testing::circuit_unitary;
using mgc::testing::full_unitary;

MatXc ytilde() { return MatXc(pauli::Ytilde()); }
MatXc id2() { return MatXc::Identity(2, 2); }

TEST(Gadget, VConjugatesYtildeOnFirstLine) {
    const MatXc v = v_gadget();
    const MatXc lhs = v.adjoint() * kron(ytilde(), id2()) * v;
    const MatXc rhs = kron(MatXc(pauli::Z()), MatXc(-ytilde()));
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Gadget, WConjugatesYtildeOnSecondLine) {
    const MatXc w = w_gadget();
    const MatXc lhs = w.adjoint() * kron(id2(), ytilde()) * w;
    const MatXc rhs = kron(MatXc(pauli::Z()), MatXc(-ytilde()));
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
}

// <0..01_A| V~^dag Ytilde_A V~ |0..00_A> = <0..0| V^dag Z_1 V |0..0>
TEST(Gadget, AncillaElementReproducesZ) {
    Rng rng(51);
    for (int t = 0; t < 20; ++t) {
        const int m = 1 + t % 3;
        const auto v = random_general_circuit(m, 6, rng);
        const auto base = absorb_input(v);
        const auto tilde = append_w_gadget(base);
        const MatXc u = circuit_unitary(tilde.gates, m + 1);
        const MatXc y = full_unitary(ytilde(), {m + 1}, m + 1);
        const Complex lhs = (u.adjoint() * y * u)(1, 0);
        const double rhs =
            mgc::testing::z_of(circuit_unitary(base.gates, m), base.input, 1);
        EXPECT_NEAR(lhs.real(), rhs, 1e-12);
        EXPECT_NEAR(lhs.imag(), 0.0, 1e-12);
    }
}

TEST(Realify, RealGateKeepsItsMatrix) {
    const auto g = realify_gate(MatXc(pauli::X()), {1}, 2);
    EXPECT_EQ(g.matrix, kron(MatXd(pauli::X().real()),
                             MatXd(Eigen::Matrix2d::Identity())));
    EXPECT_EQ(g.lines, (std::vector<int>{1, 2}));
}

TEST(Realify, ImaginaryScalar) {
    const auto g = realify_gate(Complex(0, 1) * MatXc::Identity(2, 2), {1}, 2);
    const MatXd expected =
        -kron(MatXd(Eigen::Matrix2d::Identity()), MatXd(ytilde().real()));
    EXPECT_EQ(g.matrix, expected);
}

TEST(Realify, OrthogonalStatePreservingAndMultiplicative) {
    Rng rng(52);
    Mat2c phase = Mat2c::Identity();
    phase(1, 1) = Complex(0, 1);
    const MatXc samples[] = {MatXc(phase * pauli::H()), random_unitary(2, rng),
                             random_unitary(4, rng)};
    for (const MatXc &u : samples) {
        const auto g = realify_gate(u, {}, 1);
        EXPECT_LT(unitarity_defect(g.matrix), 1e-12);
        EXPECT_NEAR(g.matrix.determinant(), 1.0, 1e-12);
        const MatXc psi_m = random_unitary(static_cast<int>(u.rows()), rng).col(0);
        std::vector<Complex> psi(psi_m.data(), psi_m.data() + psi_m.size());
        const MatXc out_m = u * psi_m;
        std::vector<Complex> out(out_m.data(), out_m.data() + out_m.size());
        EXPECT_LT((g.matrix * realify_state(psi) - realify_state(out))
                      .cwiseAbs()
                      .maxCoeff(),
                  1e-12);
        const MatXc v = random_unitary(static_cast<int>(u.rows()), rng);
        const MatXd lhs = realify_gate(u * v, {}, 1).matrix;
        const MatXd rhs = g.matrix * realify_gate(v, {}, 1).matrix;
        EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
    }
    MatXc bad = MatXc::Identity(2, 2);
    bad(0, 0) = 2;
    EXPECT_THROW(realify_gate(bad, {1}, 2), ValidationError);
}

MatXd rotation_of(const std::vector<GateApp> &seq, int n) {
    MatchgateCircuit c{n, seq, Bitstring(static_cast<std::size_t>(n), 0), 1,
                       true};
    return circuit_rotation(c);
}

TEST(TwoLevel, WithinOneWindow) {
    for (auto [a, b] : {std::pair{1, 2}, std::pair{1, 4}}) {
        const auto seq = two_level_to_matchgates(a, b, 0.3, 2);
        ASSERT_EQ(seq.size(), 1U);
        EXPECT_EQ(seq[0].lines, std::vector<int>{1});
        EXPECT_LT((rotation_of(seq, 2) - PlaneRotation{a, b, 0.3}.dense(4))
                      .cwiseAbs()
                      .maxCoeff(),
                  1e-12);
    }
}

TEST(TwoLevel, LadderAcrossOnePair) {
    const auto seq = two_level_to_matchgates(1, 6, 0.3, 3);
    ASSERT_EQ(seq.size(), 3U);
    EXPECT_EQ(seq[0], gates::w(2));
    EXPECT_EQ(seq[1].kind, GateKind::Rot);
    EXPECT_EQ(seq[1].lines, std::vector<int>{1});
    EXPECT_EQ(seq[2], gates::w(2));
    EXPECT_LT((rotation_of(seq, 3) - PlaneRotation{1, 6, 0.3}.dense(6))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
}

TEST(TwoLevel, EveryPlaneAtWidthSix) {
    const int n = 6;
    for (int a = 1; a <= 2 * n; ++a) {
        for (int b = a + 1; b <= 2 * n; ++b) {
            const auto seq = two_level_to_matchgates(a, b, -1.1, n);
            EXPECT_LE(seq.size(), static_cast<std::size_t>(1 + 2 * n));
            EXPECT_LT((rotation_of(seq, n) - PlaneRotation{a, b, -1.1}.dense(2 * n))
                          .cwiseAbs()
                          .maxCoeff(),
                      1e-12)
                << a << "," << b;
        }
    }
    EXPECT_THROW(two_level_to_matchgates(3, 3, 0.1, n), ValidationError);
    EXPECT_THROW(two_level_to_matchgates(1, 13, 0.1, n), ValidationError);
}

TEST(Expand, HadamardGivesZero) {
    const GeneralCircuit c{1, {gates::h(1)}, {0}};
    const auto r = expand(c);
    EXPECT_EQ(r.circuit.width, 4);
    EXPECT_NEAR(simulate_expectation(r.circuit), 0.0, 1e-9);
}

TEST(Expand, ComputationalInputsAndSigns) {
    for (std::uint8_t bit : {0, 1}) {
        const GeneralCircuit c{2, {gates::x(2)}, {bit, 0}};
        const auto r = expand(c);
        EXPECT_NEAR(simulate_expectation(r.circuit), bit ? -1.0 : 1.0, 1e-12);
    }
}

TEST(Expand, RandomCircuitsMatchOracle) {
    Rng rng(53);
    for (int t = 0; t < 30; ++t) {
        const int m = 1 + t % 3;
        const auto c = random_general_circuit(m, 6, rng);
        const auto r = expand(c);
        EXPECT_EQ(r.circuit.width, 1 << (m + 1));
        EXPECT_EQ(r.circuit.input, Bitstring(static_cast<std::size_t>(1 << (m + 1)), 0));
        EXPECT_EQ(r.circuit.measure_line, 1);
        EXPECT_TRUE(validate(r.circuit).empty());
        const double want = expectation_z(run_statevector(c), 1);
        EXPECT_NEAR(simulate_expectation(r.circuit), want, 1e-8);
        EXPECT_NEAR(simulate_expectation_reference(r.circuit), want, 1e-8);
        if (r.circuit.width <= 8) {
            EXPECT_NEAR(expectation_z(run_statevector(r.circuit), 1), want,
                        1e-8);
        }
    }
}

TEST(Expand, SizeGrowsLikeFourToTheM) {
    Rng rng(54);
    for (int m = 1; m <= 4; ++m) {
        const auto c = random_general_circuit(m, 8, rng);
        const auto r = expand(c);
        const double per_gate =
            static_cast<double>(r.stats.gates) /
            static_cast<double>(c.gates.size() + 3) / std::pow(4.0, m);
        EXPECT_LE(per_gate, 64.0) << "m=" << m;
    }
}

TEST(Expand, WidthGuard) {
    const GeneralCircuit c{5, {gates::h(1)}, Bitstring(5, 0)};
    EXPECT_THROW(expand(c), GuardError);
    EXPECT_NO_THROW(expand(c, 5));
}

} // namespace
