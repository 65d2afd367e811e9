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
 * Matchgates G(A,B), the Jordan-Wigner operators, the matchgate <-> SO(4)
 * correspondence and Givens factorisation of special orthogonal matrices.
 *
 * Conventions used throughout the library:
 *  - Two-qubit matrices are ordered |00>, |01>, |10>, |11> with the lower
 *    numbered line as the most significant bit.
 *  - The local Majorana operators of a line pair (k, k+1) are
 *    c'_1 = X I, c'_2 = Y I, c'_3 = Z X, c'_4 = Z Y.
 *  - rotation_of_matchgate(U)[j][l] is defined by U^dag c_j U = sum_l R[j,l] c_l.
 */
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgc/common.hpp"

namespace mgc {

struct Matchgate {
    Mat2c a{Mat2c::Identity()};
    Mat2c b{Mat2c::Identity()};
};

/// Returns a description of the first violated rule, if any.
inline std::optional<std::string> matchgate_violation(const Mat2c &a,
                                                      const Mat2c &b) {
    if (!is_unitary(a)) {
        return "non-unitary A";
    }
    if (!is_unitary(b)) {
        return "non-unitary B";
    }
    if (std::abs(a.determinant() - b.determinant()) > kTolerance) {
        return "det(A) != det(B)";
    }
    return std::nullopt;
}

/// The 4x4 matrix with A on span{|00>,|11>} and B on span{|01>,|10>}.
inline Mat4c make_matchgate(const Mat2c &a, const Mat2c &b) {
    if (auto v = matchgate_violation(a, b)) {
        throw ValidationError("matchgate: " + *v);
    }
    Mat4c g = Mat4c::Zero();
    g(0, 0) = a(0, 0);
    g(0, 3) = a(0, 1);
    g(3, 0) = a(1, 0);
    g(3, 3) = a(1, 1);
    g(1, 1) = b(0, 0);
    g(1, 2) = b(0, 1);
    g(2, 1) = b(1, 0);
    g(2, 2) = b(1, 1);
    return g;
}

inline Mat4c make_matchgate(const Matchgate &g) {
    return make_matchgate(g.a, g.b);
}

/// W = G(Z, X): swaps adjacent lines, with a sign on |11>.
inline Matchgate fermionic_swap() { return {pauli::Z(), pauli::X()}; }

/// c'_j on two lines, j in 1..4.
inline Mat4c local_majorana(int j) {
    using namespace pauli;
    switch (j) {
    case 1:
        return kron(MatXc(X()), MatXc(I()));
    case 2:
        return kron(MatXc(Y()), MatXc(I()));
    case 3:
        return kron(MatXc(Z()), MatXc(X()));
    case 4:
        return kron(MatXc(Z()), MatXc(Y()));
    default:
        throw ValidationError("local Majorana index out of range");
    }
}

/// Local planes enumerated (1,2),(1,3),(1,4),(2,3),(2,4),(3,4) as 1..6.
inline std::pair<int, int> plane_pair(int plane) {
    static constexpr std::array<std::pair<int, int>, 6> kPlanes{
        {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    if (plane < 1 || plane > 6) {
        throw ValidationError("plane must be in 1..6");
    }
    return kPlanes[static_cast<std::size_t>(plane - 1)];
}

inline int plane_index(int a, int b) {
    for (int p = 1; p <= 6; ++p) {
        if (plane_pair(p) == std::pair{a, b}) {
            return p;
        }
    }
    throw ValidationError("no local plane (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
}

/**
 * exp((theta/2) c'_a c'_b) = cos(theta/2) I + sin(theta/2) c'_a c'_b.
 * Its adjoint-action image is the plane rotation (a, b) by -theta.
 */
inline Mat4c majorana_exponential(int plane, double theta) {
    const auto [a, b] = plane_pair(plane);
    return std::cos(theta / 2) * Mat4c::Identity() +
           std::sin(theta / 2) * local_majorana(a) * local_majorana(b);
}

inline constexpr int kJordanWignerMaxWidth = 14;

/// Dense c_j = Z..Z X I..I (j odd) or Z..Z Y I..I (j even) on n qubits.
inline MatXc jordan_wigner(int n, int j) {
    if (n < 1 || n > kJordanWignerMaxWidth) {
        throw GuardError("jordan_wigner: width " + std::to_string(n) +
                         " outside 1.." +
                         std::to_string(kJordanWignerMaxWidth));
    }
    if (j < 1 || j > 2 * n) {
        throw ValidationError("jordan_wigner: index out of range");
    }
    const int line = (j + 1) / 2;
    MatXc out = MatXc::Identity(1, 1);
    for (int k = 1; k <= n; ++k) {
        Mat2c f = pauli::I();
        if (k < line) {
            f = pauli::Z();
        } else if (k == line) {
            f = (j % 2 == 1) ? pauli::X() : pauli::Y();
        }
        out = kron(out, MatXc(f));
    }
    return out;
}

/// R with U^dag c'_j U = sum_l R[j,l] c'_l, R[j,l] = tr(U^dag c'_j U c'_l)/4.
inline Mat4d rotation_of_matchgate(const Mat4c &u) {
    static const std::array<Mat4c, 4> c = {local_majorana(1), local_majorana(2),
                                           local_majorana(3), local_majorana(4)};
    Mat4d r;
    for (int j = 0; j < 4; ++j) {
        const Mat4c conj = u.adjoint() * c[static_cast<std::size_t>(j)] * u;
        for (int l = 0; l < 4; ++l) {
            // tr(A B) = sum_{p,q} A[p,q] B[q,p]
            r(j, l) =
                conj.cwiseProduct(c[static_cast<std::size_t>(l)].transpose())
                    .sum()
                    .real() /
                4.0;
        }
    }
    return r;
}

inline Mat4d rotation_of_matchgate(const Matchgate &g) {
    return rotation_of_matchgate(make_matchgate(g));
}

inline void require_special_orthogonal(const MatXd &m, const char *who) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw ValidationError(std::string(who) + ": matrix is not square");
    }
    if (unitarity_defect(m) > kTolerance) {
        throw ValidationError(std::string(who) + ": matrix is not orthogonal");
    }
    if (std::abs(m.determinant() - 1.0) > kTolerance) {
        throw ValidationError(std::string(who) + ": determinant is not +1");
    }
}

/// Product seq[0] * seq[1] * ... * seq[p-1] as a dense d x d matrix.
inline MatXd compose(const std::vector<PlaneRotation> &seq, int dim) {
    MatXd m = MatXd::Identity(dim, dim);
    for (const auto &g : seq) {
        m = m * g.dense(dim);
    }
    return m;
}

inline constexpr double kNegligibleAngle = 1e-12;

/**
 * Factors a special orthogonal r as seq[0] * seq[1] * ... * seq[p-1]
 * (so seq.back() acts first on a vector). Column-by-column Givens
 * elimination; at most d(d-1)/2 factors, each angle in [-pi, pi].
 */
inline std::vector<PlaneRotation> givens_factor(const MatXd &r) {
    require_special_orthogonal(r, "givens_factor");
    const auto d = static_cast<int>(r.rows());
    MatXd m = r;
    std::vector<PlaneRotation> seq;
    for (int col = 1; col < d; ++col) {
        for (int row = d; row > col; --row) {
            const double x = m(col - 1, col - 1);
            const double y = m(row - 1, col - 1);
            const double phi = std::atan2(-y, x);
            if (std::abs(phi) < kNegligibleAngle) {
                continue;
            }
            const PlaneRotation q{col, row, phi};
            const double c = std::cos(phi);
            const double s = std::sin(phi);
            for (int k = 0; k < d; ++k) {
                const double top = m(col - 1, k);
                const double bottom = m(row - 1, k);
                m(col - 1, k) = c * top - s * bottom;
                m(row - 1, k) = s * top + c * bottom;
            }
            seq.push_back(q.inverse());
        }
    }
    if ((m - MatXd::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-8) {
        throw ConsistencyError("givens_factor: elimination did not reach I");
    }
    return seq;
}

/**
 * A matchgate whose rotation is r (unique up to global phase). Each Givens
 * factor (a, b, theta) maps to exp(-(theta/2) c'_a c'_b).
 */
inline Matchgate matchgate_of_rotation(const Mat4d &r) {
    const auto seq = givens_factor(MatXd(r));
    Mat4c u = Mat4c::Identity();
    for (const auto &g : seq) {
        u = u * majorana_exponential(plane_index(g.a, g.b), -g.theta);
    }
    Matchgate out;
    out.a << u(0, 0), u(0, 3), u(3, 0), u(3, 3);
    out.b << u(1, 1), u(1, 2), u(2, 1), u(2, 2);
    return out;
}

} // namespace mgc
