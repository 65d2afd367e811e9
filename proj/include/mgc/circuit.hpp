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
 * Circuit intermediate representation: gate applications, the matchgate
 * and general circuit flavours, dense gate matrices and validation.
 */
#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mgc/common.hpp"
#include "mgc/matchgate.hpp"

namespace mgc {

enum class GateKind {
    // matchgate flavour: one line number k, acting on (k, k+1)
    W,
    GXX,
    Rot,
    MG,
    // general flavour
    X,
    H,
    U1,
    U2,
    CU1,
};

inline bool is_matchgate_kind(GateKind k) {
    return k == GateKind::W || k == GateKind::GXX || k == GateKind::Rot ||
           k == GateKind::MG;
}

inline std::string_view kind_name(GateKind k) {
    switch (k) {
    case GateKind::W:
        return "w";
    case GateKind::GXX:
        return "gxx";
    case GateKind::Rot:
        return "rot";
    case GateKind::MG:
        return "mg";
    case GateKind::X:
        return "x";
    case GateKind::H:
        return "h";
    case GateKind::U1:
        return "u1";
    case GateKind::U2:
        return "u2";
    case GateKind::CU1:
        return "cu1";
    }
    return "?";
}

/// Number of reals in params and of explicit line numbers for each kind.
inline std::size_t param_count(GateKind k) {
    switch (k) {
    case GateKind::Rot:
        return 1;
    case GateKind::MG:
        return 16;
    case GateKind::U1:
    case GateKind::CU1:
        return 8;
    case GateKind::U2:
        return 32;
    default:
        return 0;
    }
}

inline std::size_t line_count(GateKind k) {
    switch (k) {
    case GateKind::U2:
    case GateKind::CU1:
        return 2;
    default:
        return 1;
    }
}

/**
 * One gate application. Matrix-valued params are stored row-major with the
 * real part before the imaginary part of each entry; `mg` stores A then B.
 * `plane` is only meaningful for Rot.
 */
struct GateApp {
    GateKind kind{GateKind::X};
    std::vector<double> params;
    std::vector<int> lines;
    int plane{0};

    bool operator==(const GateApp &) const = default;
};

namespace detail {
inline void append_matrix(std::vector<double> &out, const MatXc &m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out.push_back(m(i, j).real());
            out.push_back(m(i, j).imag());
        }
    }
}

inline MatXc read_matrix(const std::vector<double> &p, std::size_t offset,
                         int dim) {
    MatXc m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const std::size_t at =
                offset + 2 * static_cast<std::size_t>(i * dim + j);
            m(i, j) = Complex(p[at], p[at + 1]);
        }
    }
    return m;
}
} // namespace detail

namespace gates {
inline GateApp w(int k) { return {GateKind::W, {}, {k}, 0}; }
inline GateApp gxx(int k) { return {GateKind::GXX, {}, {k}, 0}; }
inline GateApp rot(int k, int plane, double theta) {
    return {GateKind::Rot, {theta}, {k}, plane};
}
inline GateApp mg(int k, const Mat2c &a, const Mat2c &b) {
    GateApp g{GateKind::MG, {}, {k}, 0};
    detail::append_matrix(g.params, a);
    detail::append_matrix(g.params, b);
    return g;
}
inline GateApp mg(int k, const Matchgate &m) { return mg(k, m.a, m.b); }
inline GateApp x(int q) { return {GateKind::X, {}, {q}, 0}; }
inline GateApp h(int q) { return {GateKind::H, {}, {q}, 0}; }
inline GateApp u1(int q, const Mat2c &m) {
    GateApp g{GateKind::U1, {}, {q}, 0};
    detail::append_matrix(g.params, m);
    return g;
}
/// q1 is the more significant bit of the 4x4 matrix.
inline GateApp u2(int q1, int q2, const Mat4c &m) {
    GateApp g{GateKind::U2, {}, {q1, q2}, 0};
    detail::append_matrix(g.params, m);
    return g;
}
inline GateApp cu1(int control, int target, const Mat2c &m) {
    GateApp g{GateKind::CU1, {}, {control, target}, 0};
    detail::append_matrix(g.params, m);
    return g;
}
inline GateApp cx(int control, int target) {
    return cu1(control, target, pauli::X());
}
} // namespace gates

/// Lines a gate acts on; matchgate kinds expand k to (k, k+1).
inline std::vector<int> acting_lines(const GateApp &g) {
    if (is_matchgate_kind(g.kind)) {
        return {g.lines.at(0), g.lines.at(0) + 1};
    }
    return g.lines;
}

/// Dense matrix on acting_lines(g), first line most significant.
inline MatXc gate_matrix(const GateApp &g) {
    switch (g.kind) {
    case GateKind::W:
        return make_matchgate(fermionic_swap());
    case GateKind::GXX:
        return make_matchgate(pauli::X(), pauli::X());
    case GateKind::Rot:
        return majorana_exponential(g.plane, g.params.at(0));
    case GateKind::MG: {
        const Mat2c a = detail::read_matrix(g.params, 0, 2);
        const Mat2c b = detail::read_matrix(g.params, 8, 2);
        return make_matchgate(a, b);
    }
    case GateKind::X:
        return pauli::X();
    case GateKind::H:
        return pauli::H();
    case GateKind::U1:
        return detail::read_matrix(g.params, 0, 2);
    case GateKind::U2:
        return detail::read_matrix(g.params, 0, 4);
    case GateKind::CU1: {
        MatXc m = MatXc::Identity(4, 4);
        m.block(2, 2, 2, 2) = detail::read_matrix(g.params, 0, 2);
        return m;
    }
    }
    throw ValidationError("unknown gate kind");
}

/// MG(n; N; x; k).
struct MatchgateCircuit {
    int width{1};
    std::vector<GateApp> gates;
    Bitstring input;
    int measure_line{1};
    /// Lifts the N >= n/2 rule (lines without gates are allowed).
    bool allow_idle{false};

    bool operator==(const MatchgateCircuit &) const = default;
};

/// QC(m; M; y); the measured line is always 1.
struct GeneralCircuit {
    int width{1};
    std::vector<GateApp> gates;
    Bitstring input;

    bool operator==(const GeneralCircuit &) const = default;
};

using Circuit = std::variant<MatchgateCircuit, GeneralCircuit>;

struct Violation {
    /// Gate index, or -1 for circuit-level rules.
    int gate{-1};
    std::string rule;

    bool operator==(const Violation &) const = default;
};

namespace detail {
inline void validate_gate(const GateApp &g, int index, int width,
                          bool matchgate_flavour,
                          std::vector<Violation> &out) {
    auto fail = [&](std::string rule) {
        out.push_back({index, std::move(rule)});
    };
    if (is_matchgate_kind(g.kind) != matchgate_flavour) {
        fail(std::string("gate kind '") + std::string(kind_name(g.kind)) +
             "' not allowed in this circuit flavour");
        return;
    }
    if (g.lines.size() != line_count(g.kind)) {
        fail("wrong number of line numbers");
        return;
    }
    if (g.params.size() != param_count(g.kind)) {
        fail("bad parameter count");
        return;
    }
    for (double p : g.params) {
        if (!std::isfinite(p)) {
            fail("non-finite parameter");
            return;
        }
    }
    if (matchgate_flavour && g.lines[0] >= 1 && g.lines[0] + 1 > width) {
        fail("line " + std::to_string(g.lines[0]) + " requires width >= " +
             std::to_string(g.lines[0] + 1));
        return;
    }
    for (int line : acting_lines(g)) {
        if (line < 1 || line > width) {
            fail("line " + std::to_string(line) + " out of range 1.." +
                 std::to_string(width));
            return;
        }
    }
    if (g.lines.size() == 2 && g.lines[0] == g.lines[1]) {
        fail("repeated line");
        return;
    }
    switch (g.kind) {
    case GateKind::Rot:
        if (g.plane < 1 || g.plane > 6) {
            fail("plane out of range 1..6");
        }
        break;
    case GateKind::MG: {
        const Mat2c a = read_matrix(g.params, 0, 2);
        const Mat2c b = read_matrix(g.params, 8, 2);
        if (auto v = matchgate_violation(a, b)) {
            fail(*v);
        }
        break;
    }
    case GateKind::U1:
    case GateKind::CU1:
        if (!is_unitary(read_matrix(g.params, 0, 2))) {
            fail("non-unitary");
        }
        break;
    case GateKind::U2:
        if (!is_unitary(read_matrix(g.params, 0, 4))) {
            fail("non-unitary");
        }
        break;
    default:
        break;
    }
}

inline void validate_input(const Bitstring &input, int width,
                           std::vector<Violation> &out) {
    if (width < 1) {
        out.push_back({-1, "width must be positive"});
    }
    if (static_cast<int>(input.size()) != width) {
        out.push_back({-1, "input length differs from width"});
    }
    if (std::any_of(input.begin(), input.end(),
                    [](std::uint8_t b) { return b > 1; })) {
        out.push_back({-1, "input is not a bitstring"});
    }
}
} // namespace detail

inline std::vector<Violation> validate(const MatchgateCircuit &c) {
    std::vector<Violation> out;
    detail::validate_input(c.input, c.width, out);
    if (c.measure_line < 1 || c.measure_line > c.width) {
        out.push_back({-1, "measure line out of range"});
    }
    if (c.gates.empty()) {
        out.push_back({-1, "circuit has no gates"});
    } else if (!c.allow_idle &&
               2 * static_cast<long>(c.gates.size()) < c.width) {
        out.push_back({-1, "size N < n/2 (idle lines)"});
    }
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        detail::validate_gate(c.gates[i], static_cast<int>(i), c.width, true,
                              out);
    }
    return out;
}

inline std::vector<Violation> validate(const GeneralCircuit &c) {
    std::vector<Violation> out;
    detail::validate_input(c.input, c.width, out);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        detail::validate_gate(c.gates[i], static_cast<int>(i), c.width, false,
                              out);
    }
    return out;
}

inline std::vector<Violation> validate(const Circuit &c) {
    return std::visit([](const auto &x) { return validate(x); }, c);
}

inline std::string describe(const std::vector<Violation> &vs) {
    std::string s;
    for (const auto &v : vs) {
        if (!s.empty()) {
            s += "; ";
        }
        if (v.gate >= 0) {
            s += "gate " + std::to_string(v.gate) + ": ";
        }
        s += v.rule;
    }
    return s;
}

template <typename C> void require_valid(const C &c) {
    const auto vs = validate(c);
    if (!vs.empty()) {
        throw ValidationError(describe(vs));
    }
}

} // namespace mgc
