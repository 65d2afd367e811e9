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

#include <bit>
#include <set>

#include "mgc/mgc.hpp"
#include "test_util.hpp"

namespace {

using namespace mgc;
using mgc::testing::basis_index;
using mgc::testing::circuit_unitary;
using mgc::testing::full_unitary;

TEST(Gray, FirstEightLabels) {
    const char *expected[] = {"000", "001", "011", "010",
                              "110", "111", "101", "100"};
    for (int i = 0; i < 8; ++i) {
        EXPECT_EQ(bits_to_string(gray(static_cast<std::uint64_t>(i), 3)),
                  expected[i]);
    }
}

TEST(Gray, BijectiveWithUnitSteps) {
    std::set<Bitstring> seen;
    for (std::uint64_t i = 0; i < 16; ++i) {
        seen.insert(gray(i, 4));
        EXPECT_EQ(gray_decode(gray_code(i)), i);
        if (i > 0) {
            Bitstring a = gray(i - 1, 4);
            const Bitstring b = gray(i, 4);
            int d = 0;
            for (std::size_t k = 0; k < a.size(); ++k) {
                d += a[k] != b[k];
            }
            EXPECT_EQ(d, 1);
        }
    }
    EXPECT_EQ(seen.size(), 16U);
    EXPECT_THROW(gray(8, 3), ValidationError);
}

TEST(GrayConverter, MapsBinaryToGray) {
    EXPECT_TRUE(gray_converter_circuit(1).empty());
    for (int mu = 2; mu <= 4; ++mu) {
        const auto conv = gray_converter_circuit(mu);
        EXPECT_EQ(conv.size(), static_cast<std::size_t>(mu - 1));
        const MatXc u = circuit_unitary(conv, mu);
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << mu); ++i) {
            const auto col = static_cast<Eigen::Index>(i);
            const auto row =
                static_cast<Eigen::Index>(basis_index(gray(i, mu)));
            EXPECT_EQ(u(row, col), Complex(1, 0));
        }
        auto both = conv;
        const auto back = gray_to_binary_circuit(mu);
        both.insert(both.end(), back.begin(), back.end());
        EXPECT_TRUE(circuit_unitary(both, mu).isIdentity());
    }
}

TEST(Align, AdjacentLabelsNeedNothing) {
    const auto al = align_conjugation({0, 1, 0}, {0, 1, 1});
    EXPECT_TRUE(al.gates.empty());
    EXPECT_EQ(al.pattern.target, 3);
    EXPECT_EQ(al.pattern.bits[0], ControlValue::Zero);
    EXPECT_EQ(al.pattern.bits[1], ControlValue::One);
    EXPECT_FALSE(al.a_is_one);
}

TEST(Align, DistanceThreeExample) {
    for (std::uint8_t z : {0, 1}) {
        const auto al = align_conjugation({0, 1, z, 1}, {1, 0, z, 0});
        const std::vector<GateApp> expected = {gates::x(2), gates::x(4),
                                               gates::cx(1, 2), gates::cx(1, 4)};
        EXPECT_EQ(al.gates, expected);
        EXPECT_EQ(al.pattern.target, 1);
        EXPECT_EQ(al.pattern.bits[2],
                  z ? ControlValue::One : ControlValue::Zero);
    }
}

TEST(Align, RandomPairsBecomeAdjacent) {
    Rng rng(41);
    for (int t = 0; t < 60; ++t) {
        const Bitstring a = random_bits(4, rng);
        Bitstring b = random_bits(4, rng);
        if (a == b) {
            b[0] ^= 1;
        }
        const auto al = align_conjugation(a, b);
        const MatXc p = circuit_unitary(al.gates, 4);
        // images of |a>, |b>
        Eigen::Index ia = 0;
        Eigen::Index ib = 0;
        p.col(static_cast<Eigen::Index>(basis_index(a))).cwiseAbs().maxCoeff(&ia);
        p.col(static_cast<Eigen::Index>(basis_index(b))).cwiseAbs().maxCoeff(&ib);
        const auto diff = static_cast<std::uint64_t>(ia ^ ib);
        EXPECT_EQ(std::popcount(diff), 1);
        const int target_bit = 4 - std::countr_zero(diff);
        EXPECT_EQ(al.pattern.target, target_bit);
        EXPECT_EQ(al.a_is_one, ((ia >> (4 - target_bit)) & 1) == 1);
        for (int i = 1; i <= 4; ++i) {
            if (i == target_bit) {
                continue;
            }
            const bool bit = (ia >> (4 - i)) & 1;
            EXPECT_EQ(al.pattern.bits[static_cast<std::size_t>(i - 1)],
                      bit ? ControlValue::One : ControlValue::Zero);
        }
    }
}

// Dense Lambda^r t on `width` lines with the ancilla held at |0>.
MatXc ideal_lambda(const std::vector<LineControl> &controls, int target,
                   const Mat2c &t, int width) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << width);
    MatXc u = MatXc::Identity(dim, dim);
    const MatXc tt = full_unitary(MatXc(t), {target}, width);
    for (Eigen::Index col = 0; col < dim; ++col) {
        bool fire = true;
        for (const auto &c : controls) {
            fire = fire && (((col >> (width - c.line)) & 1) == c.value);
        }
        if (fire) {
            u.col(col) = tt.col(col);
        }
    }
    return u;
}

TEST(LambdaR, TrivialCases) {
    const Mat2c t = pauli::H();
    const auto r0 = lambda_r_decompose({}, 1, t, 2);
    ASSERT_EQ(r0.size(), 1U);
    EXPECT_EQ(r0[0], gates::u1(1, t));
    const LineControl one[] = {{2, true}};
    const auto r1 = lambda_r_decompose(one, 1, t, 3);
    ASSERT_EQ(r1.size(), 1U);
    EXPECT_EQ(r1[0], gates::cu1(2, 1, t));
}

TEST(LambdaR, DenseUpToFiveControls) {
    Rng rng(42);
    const MatXc rot = PlaneRotation{1, 2, 0.7}.dense(2).cast<Complex>();
    for (int r = 0; r <= 5; ++r) {
        const int width = r + 2;
        const int target = r + 1;
        const int ancilla = r + 2;
        std::vector<LineControl> controls;
        for (int i = 1; i <= r; ++i) {
            controls.push_back({i, (rng() & 1) == 1});
        }
        const Mat2c t = r == 3 ? Mat2c(rot) : Mat2c(random_unitary(2, rng));
        const auto seq = lambda_r_decompose(controls, target, t, ancilla);
        for (const auto &g : seq) {
            EXPECT_LE(acting_lines(g).size(), 2U);
        }
        EXPECT_LE(seq.size(), static_cast<std::size_t>(40 * (r + 1)));
        const MatXc got = circuit_unitary(seq, width);
        const MatXc want = ideal_lambda(controls, target, t, width);
        // columns with the ancilla (last line) at 0
        for (Eigen::Index col = 0; col < got.cols(); col += 2) {
            EXPECT_LT((got.col(col) - want.col(col)).cwiseAbs().maxCoeff(),
                      1e-10)
                << "r=" << r << " col=" << col;
        }
    }
}

TEST(LambdaR, LineCollisions) {
    const LineControl c[] = {{1, true}, {2, true}};
    EXPECT_THROW(lambda_r_decompose(c, 2, pauli::X(), 3), ValidationError);
    EXPECT_THROW(lambda_r_decompose(c, 3, pauli::X(), 3), ValidationError);
}

// Random circuit already in standard form (input 0...0, line 1 measured).
MatchgateCircuit random_standard(int n, int size, Rng &rng) {
    auto c = random_matchgate_circuit(n, size, rng);
    c.input.assign(static_cast<std::size_t>(n), 0);
    c.measure_line = 1;
    return c;
}

TEST(Compress, WidthFormula) {
    Rng rng(43);
    for (int n : {4, 8, 16, 32}) {
        const auto c = random_standard(n, n, rng);
        const auto r = compress(c, true);
        EXPECT_EQ(r.circuit.width, ceil_log2(static_cast<std::uint64_t>(n)) + 3);
        EXPECT_EQ(r.circuit.width, compressed_width(n));
    }
}

TEST(Compress, IdentityMatchgateGivesOne) {
    const MatchgateCircuit c{2, {gates::mg(1, pauli::I(), pauli::I())},
                             {0, 0}, 1};
    const auto r = compress(c);
    EXPECT_NEAR(expectation_z(run_statevector(r.circuit), 1), 1.0, 1e-9);
}

TEST(Compress, RejectsUnpreparedInput) {
    const MatchgateCircuit c{2, {gates::gxx(1)}, {1, 0}, 1};
    EXPECT_THROW(compress(c, true), ValidationError);
    const MatchgateCircuit odd{3, {gates::gxx(1), gates::w(2)}, {0, 0, 0}, 1};
    EXPECT_THROW(compress(odd, true), ValidationError);
    EXPECT_NO_THROW(compress(odd, false));
}

TEST(Compress, RandomStandardizedCircuitsMatch) {
    Rng rng(44);
    int count = 0;
    for (int n : {4, 8, 16}) {
        for (int t = 0; t < 18; ++t, ++count) {
            std::uniform_int_distribution<int> size(n / 2, 40);
            const auto c = random_standard(n, size(rng), rng);
            const auto r = compress(c, true);
            const double want = simulate_expectation(c);
            const double got = expectation_z(run_statevector(r.circuit), 1);
            EXPECT_NEAR(got, want, 1e-8) << "n=" << n << " t=" << t;
            EXPECT_LE(r.stats.max_label_distance, 3);
            EXPECT_TRUE(validate(r.circuit).empty());
        }
    }
    EXPECT_GE(count, 50);
}

TEST(Compress, FullPipelineOnArbitraryCircuits) {
    Rng rng(45);
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + t % 7;
        const auto c = random_matchgate_circuit(n, 2 * n, rng);
        const auto r = compress(c);
        EXPECT_EQ(r.circuit.width,
                  compressed_width(r.prepared_width));
        EXPECT_NEAR(expectation_z(run_statevector(r.circuit), 1),
                    simulate_expectation(c), 1e-8);
    }
}

TEST(Compress, StreamingMatchesCollected) {
    Rng rng(46);
    const auto c = random_standard(8, 20, rng);
    std::size_t streamed = 0;
    const auto stats = compress_circuit(c, [&](const GateApp &) { ++streamed; });
    EXPECT_EQ(stats.gates, streamed);
    EXPECT_EQ(compress(c, true).circuit.gates.size(), streamed);
}

} // namespace
