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
 * Dense statevector reference simulator. Line 1 is the most significant
 * bit of the basis index. Used as ground truth for every equivalence check.
 */
#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "mgc/circuit.hpp"
#include "mgc/matchgate.hpp"

namespace mgc {

inline constexpr int kOracleMaxWidth = 14;

class Statevector {
  public:
    /// |bits>.
    explicit Statevector(const Bitstring &bits)
        : width_(static_cast<int>(bits.size())) {
        check_width(width_);
        amps_.assign(std::size_t{1} << width_, Complex{});
        std::size_t idx = 0;
        for (auto b : bits) {
            idx = (idx << 1) | b;
        }
        amps_[idx] = 1.0;
    }

    Statevector(int width, std::vector<Complex> amps)
        : width_(width), amps_(std::move(amps)) {
        check_width(width_);
        if (amps_.size() != (std::size_t{1} << width_)) {
            throw ValidationError("statevector: amplitude count mismatch");
        }
    }

    [[nodiscard]] int width() const noexcept { return width_; }
    [[nodiscard]] const std::vector<Complex> &amplitudes() const noexcept {
        return amps_;
    }

    [[nodiscard]] double norm() const {
        double s = 0.0;
        for (const auto &a : amps_) {
            s += std::norm(a);
        }
        return std::sqrt(s);
    }

    /**
     * Applies a dense 2^K x 2^K matrix on the given lines (first listed line
     * is the most significant bit of the local index).
     */
    void apply(const MatXc &m, const std::vector<int> &lines) {
        const auto k = static_cast<int>(lines.size());
        const std::size_t local = std::size_t{1} << k;
        if (m.rows() != static_cast<Eigen::Index>(local) ||
            m.cols() != m.rows()) {
            throw ValidationError("statevector: matrix size mismatch");
        }
        std::vector<std::size_t> masks(static_cast<std::size_t>(k));
        std::size_t all = 0;
        for (int i = 0; i < k; ++i) {
            const int line = lines[static_cast<std::size_t>(i)];
            if (line < 1 || line > width_) {
                throw ValidationError("statevector: line out of range");
            }
            masks[static_cast<std::size_t>(i)] = std::size_t{1}
                                                  << (width_ - line);
            all |= masks[static_cast<std::size_t>(i)];
        }
        // offsets[l] = global bit pattern of local index l
        std::vector<std::size_t> offsets(local, 0);
        for (std::size_t l = 0; l < local; ++l) {
            for (int i = 0; i < k; ++i) {
                if (l & (std::size_t{1} << (k - 1 - i))) {
                    offsets[l] |= masks[static_cast<std::size_t>(i)];
                }
            }
        }
        std::vector<Complex> in(local);
        for (std::size_t base = 0; base < amps_.size(); ++base) {
            if (base & all) {
                continue;
            }
            for (std::size_t l = 0; l < local; ++l) {
                in[l] = amps_[base | offsets[l]];
            }
            for (std::size_t r = 0; r < local; ++r) {
                Complex acc{};
                for (std::size_t c = 0; c < local; ++c) {
                    acc += m(static_cast<Eigen::Index>(r),
                             static_cast<Eigen::Index>(c)) *
                           in[c];
                }
                amps_[base | offsets[r]] = acc;
            }
        }
    }

    void apply(const GateApp &g) { apply(gate_matrix(g), acting_lines(g)); }

  private:
    static void check_width(int w) {
        if (w < 1 || w > kOracleMaxWidth) {
            throw GuardError("statevector width " + std::to_string(w) +
                             " outside 1.." + std::to_string(kOracleMaxWidth));
        }
    }

    int width_;
    std::vector<Complex> amps_;
};

inline constexpr double kNormTolerance = 1e-9;

template <typename C> Statevector run_statevector_impl(const C &c) {
    require_valid(c);
    Statevector s(c.input);
    for (const auto &g : c.gates) {
        s.apply(g);
    }
    if (std::abs(s.norm() - 1.0) > kNormTolerance) {
        throw ConsistencyError("statevector norm drifted");
    }
    return s;
}

inline Statevector run_statevector(const MatchgateCircuit &c) {
    return run_statevector_impl(c);
}
inline Statevector run_statevector(const GeneralCircuit &c) {
    return run_statevector_impl(c);
}
inline Statevector run_statevector(const Circuit &c) {
    return std::visit([](const auto &x) { return run_statevector_impl(x); },
                      c);
}

/// sum_x |amp(x)|^2 (-1)^(x_k).
inline double expectation_z(const Statevector &s, int k) {
    if (k < 1 || k > s.width()) {
        throw ValidationError("expectation_z: line out of range");
    }
    const std::size_t mask = std::size_t{1} << (s.width() - k);
    double z = 0.0;
    const auto &a = s.amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) {
        z += (i & mask) ? -std::norm(a[i]) : std::norm(a[i]);
    }
    return z;
}

/// I..I (x) u (x) I..I with u on lines (k, k+1) of an n-line register.
inline MatXc embed_two_line(const Mat4c &u, int k, int n) {
    MatXc out = MatXc::Identity(1, 1);
    for (int line = 1; line <= n; ++line) {
        if (line == k) {
            out = kron(out, MatXc(u));
            ++line;
        } else {
            out = kron(out, MatXc::Identity(2, 2));
        }
    }
    return out;
}

inline constexpr int kAdjointCheckMaxWidth = 7;

/**
 * max_j || U^dag c_j U - sum_l R[j,l] c_l ||_max for g on lines (k, k+1),
 * with R the rotation_of_matchgate image embedded in 2n dimensions.
 */
inline double adjoint_action_check(const Matchgate &g, int k, int n) {
    if (n > kAdjointCheckMaxWidth) {
        throw GuardError("adjoint_action_check limited to width " +
                         std::to_string(kAdjointCheckMaxWidth));
    }
    if (k < 1 || k + 1 > n) {
        throw ValidationError("adjoint_action_check: lines out of range");
    }
    const MatXc u = embed_two_line(make_matchgate(g), k, n);
    MatXd r = MatXd::Identity(2 * n, 2 * n);
    r.block(2 * k - 2, 2 * k - 2, 4, 4) = rotation_of_matchgate(g);
    std::vector<MatXc> c;
    for (int j = 1; j <= 2 * n; ++j) {
        c.push_back(jordan_wigner(n, j));
    }
    double worst = 0.0;
    for (int j = 0; j < 2 * n; ++j) {
        MatXc rhs = MatXc::Zero(u.rows(), u.cols());
        for (int l = 0; l < 2 * n; ++l) {
            if (r(j, l) != 0.0) {
                rhs += r(j, l) * c[static_cast<std::size_t>(l)];
            }
        }
        const MatXc lhs = u.adjoint() * c[static_cast<std::size_t>(j)] * u;
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return worst;
}

struct EquivalenceReport {
    double z_a{0.0};
    double z_b{0.0};
    double difference{0.0};
    double tolerance{0.0};
    bool pass{false};
};

inline EquivalenceReport compare_expectations(double za, double zb,
                                              double tol) {
    EquivalenceReport r{za, zb, std::abs(za - zb), tol, false};
    r.pass = r.difference <= tol;
    return r;
}

/// Compares <Z> of line_a in a with <Z> of line_b in b via the oracle.
inline EquivalenceReport verify_equivalent(const Circuit &a, const Circuit &b,
                                           int line_a, int line_b,
                                           double tol) {
    const double za = expectation_z(run_statevector(a), line_a);
    const double zb = expectation_z(run_statevector(b), line_b);
    return compare_expectations(za, zb, tol);
}

} // namespace mgc
