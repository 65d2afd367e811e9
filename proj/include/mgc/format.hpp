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
 * Text encoding of circuits.
 *
 *   circuit <mg|qc> width=<int> input=<bits> [measure=<int>]
 *   w <k> | gxx <k> | rot <k> plane=<1..6> theta=<real>
 *   mg <k> a=<8 reals> b=<8 reals>
 *   x <q> | h <q> | u1 <q> m=<8 reals> | u2 <q1> <q2> m=<32 reals>
 *   cu1 <control> <target> m=<8 reals>
 *
 * Reals inside a list are comma separated on output; the parser also
 * accepts whitespace separated lists. '#' starts a comment.
 */
#pragma once

#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "mgc/circuit.hpp"

namespace mgc {

/// Shortest text that parses back to exactly the same double.
inline std::string format_real(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

inline double parse_real(std::string_view s, int line) {
    double v = 0.0;
    const char *first = s.data();
    if (!s.empty() && s.front() == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(line, "bad real '" + std::string(s) + "'");
    }
    return v;
}

inline int parse_int(std::string_view s, int line) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(line, "bad integer '" + std::string(s) + "'");
    }
    return v;
}

/// Positional tokens and key=value lists of one source line.
struct Fields {
    std::vector<std::string_view> positional;
    std::map<std::string, std::vector<std::string_view>, std::less<>> keyed;
};

inline Fields split_fields(const std::vector<std::string_view> &tokens,
                           int line) {
    Fields f;
    std::vector<std::string_view> *current = nullptr;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto tok = tokens[i];
        const auto eq = tok.find('=');
        if (eq != std::string_view::npos) {
            std::string key(tok.substr(0, eq));
            if (key.empty()) {
                throw ParseError(line, "empty key");
            }
            if (f.keyed.count(key) != 0) {
                throw ParseError(line, "duplicate key '" + key + "'");
            }
            current = &f.keyed[key];
            tok = tok.substr(eq + 1);
        } else if (current == nullptr) {
            f.positional.push_back(tok);
            continue;
        }
        std::size_t start = 0;
        while (start <= tok.size()) {
            const auto comma = tok.find(',', start);
            const auto piece = tok.substr(start, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - start);
            if (!piece.empty()) {
                current->push_back(piece);
            }
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
    }
    return f;
}

inline std::vector<double> take_reals(Fields &f, const std::string &key,
                                      std::size_t count, int line) {
    auto it = f.keyed.find(key);
    if (it == f.keyed.end()) {
        throw ParseError(line, "missing " + key + "=");
    }
    if (it->second.size() != count) {
        throw ParseError(line, key + "= needs " + std::to_string(count) +
                                   " reals, got " +
                                   std::to_string(it->second.size()));
    }
    std::vector<double> out;
    out.reserve(count);
    for (auto s : it->second) {
        out.push_back(parse_real(s, line));
    }
    f.keyed.erase(it);
    return out;
}

inline std::string_view take_single(Fields &f, const std::string &key,
                                    int line) {
    auto it = f.keyed.find(key);
    if (it == f.keyed.end()) {
        throw ParseError(line, "missing " + key + "=");
    }
    if (it->second.size() != 1) {
        throw ParseError(line, key + "= takes one value");
    }
    auto v = it->second.front();
    f.keyed.erase(it);
    return v;
}

inline GateKind kind_from_name(std::string_view name, int line) {
    for (GateKind k : {GateKind::W, GateKind::GXX, GateKind::Rot, GateKind::MG,
                       GateKind::X, GateKind::H, GateKind::U1, GateKind::U2,
                       GateKind::CU1}) {
        if (kind_name(k) == name) {
            return k;
        }
    }
    throw ParseError(line, "unknown gate '" + std::string(name) + "'");
}

inline GateApp parse_gate(const std::vector<std::string_view> &tokens,
                          int line) {
    GateApp g;
    g.kind = kind_from_name(tokens[0], line);
    Fields f = split_fields(tokens, line);
    if (f.positional.size() != line_count(g.kind)) {
        throw ParseError(line, "'" + std::string(tokens[0]) + "' takes " +
                                   std::to_string(line_count(g.kind)) +
                                   " line number(s)");
    }
    for (auto p : f.positional) {
        g.lines.push_back(parse_int(p, line));
    }
    switch (g.kind) {
    case GateKind::Rot:
        g.plane = parse_int(take_single(f, "plane", line), line);
        g.params = {parse_real(take_single(f, "theta", line), line)};
        break;
    case GateKind::MG: {
        g.params = take_reals(f, "a", 8, line);
        auto b = take_reals(f, "b", 8, line);
        g.params.insert(g.params.end(), b.begin(), b.end());
        break;
    }
    case GateKind::U1:
    case GateKind::CU1:
        g.params = take_reals(f, "m", 8, line);
        break;
    case GateKind::U2:
        g.params = take_reals(f, "m", 32, line);
        break;
    default:
        break;
    }
    if (!f.keyed.empty()) {
        throw ParseError(line, "unexpected key '" + f.keyed.begin()->first +
                                   "'");
    }
    return g;
}

} // namespace detail

/// Parses and validates; throws ParseError or ValidationError.
inline Circuit parse_circuit(std::string_view text) {
    bool have_header = false;
    bool matchgate = false;
    int width = 0;
    int measure = 0;
    Bitstring input;
    std::vector<GateApp> gates;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        auto raw = text.substr(pos, nl == std::string_view::npos
                                        ? std::string_view::npos
                                        : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        const auto tokens = detail::split_ws(raw);
        if (tokens.empty()) {
            continue;
        }
        if (!have_header) {
            if (tokens[0] != "circuit" || tokens.size() < 2) {
                throw ParseError(line_no, "expected 'circuit <mg|qc> ...'");
            }
            if (tokens[1] == "mg") {
                matchgate = true;
            } else if (tokens[1] != "qc") {
                throw ParseError(line_no, "flavour must be mg or qc");
            }
            std::vector<std::string_view> rest(tokens.begin() + 1,
                                               tokens.end());
            auto f = detail::split_fields(rest, line_no);
            if (!f.positional.empty()) {
                throw ParseError(line_no, "unexpected header token");
            }
            width = detail::parse_int(detail::take_single(f, "width", line_no),
                                      line_no);
            const auto in = detail::take_single(f, "input", line_no);
            try {
                input = bits_from_string(in);
            } catch (const ValidationError &e) {
                throw ParseError(line_no, e.what());
            }
            if (matchgate) {
                measure = detail::parse_int(
                    detail::take_single(f, "measure", line_no), line_no);
            } else if (f.keyed.count("measure") != 0) {
                throw ParseError(line_no, "measure= is not allowed for qc");
            }
            if (!f.keyed.empty()) {
                throw ParseError(line_no, "unexpected key '" +
                                              f.keyed.begin()->first + "'");
            }
            have_header = true;
            continue;
        }
        gates.push_back(detail::parse_gate(tokens, line_no));
    }
    if (!have_header) {
        throw ParseError(line_no, "missing circuit header");
    }
    if (matchgate) {
        MatchgateCircuit c{width, std::move(gates), std::move(input), measure,
                           false};
        require_valid(c);
        return c;
    }
    GeneralCircuit c{width, std::move(gates), std::move(input)};
    require_valid(c);
    return c;
}

namespace detail {
inline void write_list(std::ostream &os, const std::vector<double> &p,
                       std::size_t from, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        if (i != 0) {
            os << ',';
        }
        os << format_real(p[from + i]);
    }
}
} // namespace detail

inline void write_gate(std::ostream &os, const GateApp &g) {
    os << kind_name(g.kind);
    for (int l : g.lines) {
        os << ' ' << l;
    }
    switch (g.kind) {
    case GateKind::Rot:
        os << " plane=" << g.plane << " theta=" << format_real(g.params.at(0));
        break;
    case GateKind::MG:
        os << " a=";
        detail::write_list(os, g.params, 0, 8);
        os << " b=";
        detail::write_list(os, g.params, 8, 8);
        break;
    case GateKind::U1:
    case GateKind::CU1:
    case GateKind::U2:
        os << " m=";
        detail::write_list(os, g.params, 0, g.params.size());
        break;
    default:
        break;
    }
    os << '\n';
}

inline void write_header(std::ostream &os, const MatchgateCircuit &c) {
    os << "circuit mg width=" << c.width << " input=" << bits_to_string(c.input)
       << " measure=" << c.measure_line << '\n';
}

inline void write_header(std::ostream &os, const GeneralCircuit &c) {
    os << "circuit qc width=" << c.width << " input=" << bits_to_string(c.input)
       << '\n';
}

inline std::string serialize_circuit(const Circuit &c) {
    std::ostringstream os;
    std::visit(
        [&](const auto &circ) {
            write_header(os, circ);
            for (const auto &g : circ.gates) {
                write_gate(os, g);
            }
        },
        c);
    return os.str();
}

} // namespace mgc
