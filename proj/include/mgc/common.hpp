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
 * Shared scalar/matrix aliases, tolerances, error types and the plane
 * rotation value type used by every other header.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mgc {

using Complex = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Mat4d = Eigen::Matrix4d;
using MatXc = Eigen::MatrixXcd;
using MatXd = Eigen::MatrixXd;
using VecXd = Eigen::VectorXd;

/// Bitstring stored most-significant (line 1) first; each entry is 0 or 1.
using Bitstring = std::vector<std::uint8_t>;

/// Entrywise tolerance for unitarity, orthogonality and determinant checks.
inline constexpr double kTolerance = 1e-9;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed circuit text. Carries the 1-based source line.
class ParseError : public Error {
  public:
    ParseError(int line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] int line() const noexcept { return line_; }

  private:
    int line_;
};

/// A value violates a type invariant (range, unitarity, determinant...).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A size guard (dense width, expansion width) was exceeded.
class GuardError : public Error {
  public:
    using Error::Error;
};

/// Two computations that must agree did not.
class ConsistencyError : public Error {
  public:
    using Error::Error;
};

inline Bitstring bits_from_string(std::string_view s) {
    Bitstring out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch != '0' && ch != '1') {
            throw ValidationError("bitstring contains '" + std::string(1, ch) +
                                  "'");
        }
        out.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return out;
}

inline std::string bits_to_string(const Bitstring &bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) {
        s.push_back(static_cast<char>('0' + b));
    }
    return s;
}

inline int hamming_weight(const Bitstring &bits) {
    int r = 0;
    for (auto b : bits) {
        r += b;
    }
    return r;
}

/**
 * Two-level rotation in the coordinate plane (a, b), 1-based, a < b.
 * Inside the plane it acts as [[cos, -sin], [sin, cos]], i.e. the entry
 * at [b, a] is +sin(theta).
 */
struct PlaneRotation {
    int a{1};
    int b{2};
    double theta{0.0};

    bool operator==(const PlaneRotation &) const = default;

    [[nodiscard]] PlaneRotation inverse() const { return {a, b, -theta}; }

    /// Left-multiplies the vector: v <- G v.
    void apply(std::span<double> v) const {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const double va = v[a - 1];
        const double vb = v[b - 1];
        v[a - 1] = c * va - s * vb;
        v[b - 1] = s * va + c * vb;
    }

    [[nodiscard]] MatXd dense(int dim) const {
        MatXd m = MatXd::Identity(dim, dim);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        m(a - 1, a - 1) = c;
        m(b - 1, b - 1) = c;
        m(b - 1, a - 1) = s;
        m(a - 1, b - 1) = -s;
        return m;
    }
};

namespace pauli {
inline Mat2c I() { return Mat2c::Identity(); }
inline Mat2c X() {
    Mat2c m;
    m << 0, 1, 1, 0;
    return m;
}
inline Mat2c Y() {
    Mat2c m;
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}
inline Mat2c Z() {
    Mat2c m;
    m << 1, 0, 0, -1;
    return m;
}
inline Mat2c H() {
    Mat2c m;
    const double r = 1.0 / std::sqrt(2.0);
    m << r, r, r, -r;
    return m;
}
/// iY = [[0, 1], [-1, 0]].
inline Mat2c Ytilde() {
    Mat2c m;
    m << 0, 1, -1, 0;
    return m;
}
} // namespace pauli

inline MatXc kron(const MatXc &a, const MatXc &b) {
    MatXc out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

inline MatXd kron(const MatXd &a, const MatXd &b) {
    MatXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

/// Largest entrywise deviation of M^dagger M from the identity.
template <typename Derived>
double unitarity_defect(const Eigen::MatrixBase<Derived> &m) {
    const auto n = m.rows();
    if (m.cols() != n) {
        return INFINITY;
    }
    using Scalar = typename Derived::Scalar;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Mat g = m.adjoint() * m;
    return (g - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived> &m,
                double tol = kTolerance) {
    return unitarity_defect(m) <= tol;
}

} // namespace mgc
