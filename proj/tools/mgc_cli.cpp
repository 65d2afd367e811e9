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

// mgc: simulate, standardize, compress, expand, verify and generate circuits.
//
// Exit codes: 0 ok, 1 internal, 2 parse/validation, 3 guard, 4 verify fail.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mgc/mgc.hpp"

namespace {

enum Exit : int {
    kOk = 0,
    kInternal = 1,
    kInvalid = 2,
    kGuard = 3,
    kVerifyFail = 4,
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw mgc::ValidationError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw mgc::ValidationError("cannot write '" + path + "'");
    }
    out << text;
}

template <typename C> C load(const std::string &path, const char *flavour) {
    auto c = mgc::parse_circuit(read_file(path));
    if (!std::holds_alternative<C>(c)) {
        throw mgc::ValidationError("'" + path + "' is not a " + flavour +
                                   " circuit");
    }
    return std::get<C>(std::move(c));
}

std::string fmt15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v == 0.0 ? 0.0 : v);
    return buf;
}

void print_summary(bool csv, int in_width, std::size_t in_size, int out_width,
                   std::size_t out_size) {
    const double ratio = in_size == 0 ? 0.0
                                      : static_cast<double>(out_size) /
                                            static_cast<double>(in_size);
    if (csv) {
        std::cout << "in_width,in_size,out_width,out_size,size_ratio\n"
                  << in_width << ',' << in_size << ',' << out_width << ','
                  << out_size << ',' << fmt15(ratio) << '\n';
        return;
    }
    std::cout << "in_width=" << in_width << " in_size=" << in_size
              << " out_width=" << out_width << " out_size=" << out_size
              << " size_ratio=" << fmt15(ratio) << '\n';
}

double expectation_of(const mgc::Circuit &c, int line, bool use_mgsim) {
    if (use_mgsim) {
        if (const auto *mg = std::get_if<mgc::MatchgateCircuit>(&c)) {
            auto copy = *mg;
            copy.measure_line = line;
            return mgc::simulate_expectation(copy);
        }
    }
    return mgc::expectation_z(mgc::run_statevector(c), line);
}

int default_line(const mgc::Circuit &c) {
    if (const auto *mg = std::get_if<mgc::MatchgateCircuit>(&c)) {
        return mg->measure_line;
    }
    return 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Matchgate circuit simulator and compiler"};
    app.require_subcommand(1);

    // simulate
    auto *sim = app.add_subcommand("simulate", "print <Z_k> p0 p1");
    std::string sim_path;
    std::string method = "fast";
    sim->add_option("circuit", sim_path)->required();
    sim->add_option("--method", method)
        ->check(CLI::IsMember({"fast", "reference"}));

    // standardize / compress / expand
    std::string in_path;
    std::string out_path;
    bool strict = false;
    bool force = false;
    bool csv = false;
    int guard = mgc::kExpandDefaultGuard;
    auto *stdz = app.add_subcommand("standardize", "rewrite to input 0..0, "
                                                   "measure line 1");
    auto *comp = app.add_subcommand("compress",
                                    "matchgate circuit -> log-width circuit");
    auto *expd = app.add_subcommand("expand",
                                    "general circuit -> matchgate circuit");
    for (auto *sub : {stdz, comp, expd}) {
        sub->add_option("input", in_path)->required();
        sub->add_option("output", out_path, "output file, '-' for stdout")
            ->required();
        sub->add_flag("--csv", csv, "print the summary as CSV");
    }
    comp->add_flag("--strict", strict,
                   "require standardized, power-of-two input");
    expd->add_flag("--force", force, "ignore the width guard");
    expd->add_option("--guard", guard, "largest accepted source width");

    // verify
    auto *ver = app.add_subcommand("verify", "compare two circuits' <Z>");
    std::string path_a;
    std::string path_b;
    std::vector<int> lines;
    double tol = 1e-8;
    std::string lhs = "oracle";
    ver->add_option("a", path_a)->required();
    ver->add_option("b", path_b)->required();
    ver->add_option("--lines", lines, "measured lines kA kB")->expected(2);
    ver->add_option("--tol", tol);
    ver->add_option("--lhs", lhs, "evaluate matchgate circuits with")
        ->check(CLI::IsMember({"mgsim", "oracle"}));

    // gen-random
    auto *gen = app.add_subcommand("gen-random", "seeded random circuit");
    std::string flavour = "mg";
    int width = 4;
    int size = 8;
    std::uint64_t seed = 1;
    std::string gen_out = "-";
    gen->add_option("--flavor", flavour)->check(CLI::IsMember({"mg", "qc"}));
    gen->add_option("--width", width)->check(CLI::PositiveNumber);
    gen->add_option("--size", size)->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed);
    gen->add_option("-o,--output", gen_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*sim) {
            const auto c = load<mgc::MatchgateCircuit>(sim_path, "mg");
            const double z = method == "reference"
                                 ? mgc::simulate_expectation_reference(c)
                                 : mgc::simulate_expectation(c);
            const auto p = mgc::distribution_from_expectation(z);
            std::cout << fmt15(z) << ' ' << fmt15(p.p0) << ' ' << fmt15(p.p1)
                      << '\n';
        } else if (*stdz) {
            const auto c = load<mgc::MatchgateCircuit>(in_path, "mg");
            const auto r = mgc::standardize_with_stats(c);
            write_output(out_path, mgc::serialize_circuit(r.circuit));
            print_summary(csv, c.width, c.gates.size(), r.circuit.width,
                          r.circuit.gates.size());
        } else if (*comp) {
            const auto c = load<mgc::MatchgateCircuit>(in_path, "mg");
            const auto r = mgc::compress(c, strict);
            write_output(out_path, mgc::serialize_circuit(r.circuit));
            print_summary(csv, c.width, c.gates.size(), r.circuit.width,
                          r.circuit.gates.size());
        } else if (*expd) {
            const auto c = load<mgc::GeneralCircuit>(in_path, "qc");
            const auto r = mgc::expand(c, force ? 30 : guard);
            write_output(out_path, mgc::serialize_circuit(r.circuit));
            print_summary(csv, c.width, c.gates.size(), r.circuit.width,
                          r.circuit.gates.size());
        } else if (*ver) {
            const auto a = mgc::parse_circuit(read_file(path_a));
            const auto b = mgc::parse_circuit(read_file(path_b));
            const int ka = lines.empty() ? default_line(a) : lines[0];
            const int kb = lines.empty() ? default_line(b) : lines[1];
            const bool mgsim = lhs == "mgsim";
            const auto rep = mgc::compare_expectations(
                expectation_of(a, ka, mgsim), expectation_of(b, kb, mgsim),
                tol);
            std::cout << "z_a=" << fmt15(rep.z_a) << " z_b=" << fmt15(rep.z_b)
                      << " diff=" << fmt15(rep.difference)
                      << " tol=" << fmt15(rep.tolerance)
                      << " result=" << (rep.pass ? "pass" : "fail") << '\n';
            return rep.pass ? kOk : kVerifyFail;
        } else if (*gen) {
            mgc::Rng rng(seed);
            const mgc::Circuit c =
                flavour == "mg"
                    ? mgc::Circuit(
                          mgc::random_matchgate_circuit(width, size, rng))
                    : mgc::Circuit(
                          mgc::random_general_circuit(width, size, rng));
            write_output(gen_out, mgc::serialize_circuit(c));
        }
    } catch (const mgc::GuardError &e) {
        std::cerr << "mgc: " << e.what() << '\n';
        return kGuard;
    } catch (const mgc::ParseError &e) {
        std::cerr << "mgc: parse error: " << e.what() << '\n';
        return kInvalid;
    } catch (const mgc::ValidationError &e) {
        std::cerr << "mgc: invalid: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception &e) {
        std::cerr << "mgc: internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kOk;
}
