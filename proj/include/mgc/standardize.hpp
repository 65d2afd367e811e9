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
 * Rewrites a matchgate circuit into the normal form with input 0...0 and
 * the measurement on line 1.
 */
#pragma once

#include <vector>

#include "mgc/circuit.hpp"

namespace mgc {

struct StandardizeResult {
    MatchgateCircuit circuit;
    std::size_t prefix_gates{0};
    std::size_t suffix_gates{0};

    [[nodiscard]] std::size_t added_gates() const {
        return prefix_gates + suffix_gates;
    }
};

/// Upper bound on added gates for width n: ceil(r/2) + r(n-r) + (n-1).
inline std::size_t standardize_overhead_bound(int n) {
    const auto nn = static_cast<std::size_t>(n);
    return nn * nn / 4 + (nn + 1) / 2 + nn;
}

/**
 * Preparation: ceil(r/2) G(X,X) gates on the bottom line pairs (one extra
 * line when r is odd), then fermionic swaps moving each 1 up to its place
 * (topmost first). The original gates follow, then a W ladder bringing
 * line k to line 1. Swap signs only affect the global phase.
 */
inline StandardizeResult standardize_with_stats(const MatchgateCircuit &c) {
    require_valid(c);
    const int n = c.width;
    const int r = hamming_weight(c.input);
    const int width = (r % 2 == 0) ? n : n + 1;

    StandardizeResult out;
    auto &d = out.circuit;
    d.width = width;
    d.input.assign(static_cast<std::size_t>(width), 0);
    d.measure_line = 1;
    d.allow_idle = c.allow_idle;

    const int pairs = (r + 1) / 2;
    for (int p = 0; p < pairs; ++p) {
        d.gates.push_back(gates::gxx(width - 1 - 2 * p));
    }
    // The r ones now occupy lines n-r+1..n (line n+1 keeps the odd one).
    int source = n - r + 1;
    for (int line = 1; line <= n; ++line) {
        if (!c.input[static_cast<std::size_t>(line - 1)]) {
            continue;
        }
        for (int at = source; at > line; --at) {
            d.gates.push_back(gates::w(at - 1));
        }
        ++source;
    }
    out.prefix_gates = d.gates.size();

    d.gates.insert(d.gates.end(), c.gates.begin(), c.gates.end());

    for (int at = c.measure_line; at > 1; --at) {
        d.gates.push_back(gates::w(at - 1));
    }
    out.suffix_gates = d.gates.size() - out.prefix_gates - c.gates.size();
    return out;
}

inline MatchgateCircuit standardize(const MatchgateCircuit &c) {
    return standardize_with_stats(c).circuit;
}

inline bool is_standardized(const MatchgateCircuit &c) {
    return c.measure_line == 1 && hamming_weight(c.input) == 0;
}

} // namespace mgc
