// Copyright 2026 The Homport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homport/fock.hpp"
#include "homport/hom.hpp"
#include "homport/matrix_io.hpp"
#include "homport/matrixfn.hpp"
#include "homport/multiport.hpp"
#include "homport/oracle.hpp"
#include "homport/types.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace homport;

// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error,
// 4 non-unitary input, 5 cap exceeded.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kIoError = 3,
    kNonUnitaryInput = 4,
    kCapExceeded = 5,
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json tolerances_json() {
    return json{
        {"unitary_tol", kUnitaryTol},
        {"vanishing_tolerance_scale", 1e-9},
        {"permanent_dim_cap", kPermanentDimCap},
        {"coincidence_dim_cap", kCoincidenceDimCap},
        {"distribution_dim_cap", kDistributionDimCap},
        {"sweep_dim_cap", kSweepDimCap},
        {"cyclic_dim_cap", kCyclicCheckDimCap},
        {"expansion_dim_cap", kExpansionDimCap},
    };
}

json manifest_json(const std::string& command, json parameters, Clock::time_point start) {
    return json{
        {"command", command},
        {"parameters", std::move(parameters)},
        {"version", kVersion},
        {"duration_ms", elapsed_ms(start)},
        {"tolerances", tolerances_json()},
    };
}

json dip_report_json(const DipReport& report) {
    return json{
        {"n", report.n},
        {"stats", to_string(report.stats)},
        {"parity", to_string(report.parity)},
        {"coincidence_probability", report.coincidence_probability},
        {"matrix_function",
         {{"re", report.matrix_function.real()}, {"im", report.matrix_function.imag()}}},
        {"is_dip", report.is_dip},
    };
}

std::string config_string(const FockConfig& config) {
    std::string out;
    for (std::size_t j = 0; j < config.size(); ++j) {
        if (j > 0) {
            out += ' ';
        }
        out += std::to_string(config[j]);
    }
    return out;
}

ParticleStatistics parse_stats(const std::string& text) {
    return text == "fermion" ? ParticleStatistics::Fermion : ParticleStatistics::Boson;
}

// Shared --n / --matrix input resolution. The DFT family is unitary by
// construction; file input must pass the unitarity gate before any physics
// is computed.
ComplexMatrix resolve_matrix(int n, const std::string& matrix_path) {
    if (!matrix_path.empty()) {
        ComplexMatrix u = load_matrix(matrix_path);
        const double dev = unitarity_deviation(u);
        if (!(dev <= kUnitaryTol)) {
            throw NonUnitaryError("matrix '" + matrix_path + "' is not unitary", dev);
        }
        return u;
    }
    return build_dft(n);
}

struct DftArgs {
    int n = 0;
    std::string out = "-";
};

int run_dft(const DftArgs& args) {
    const ComplexMatrix u = build_dft(args.n);
    if (args.out == "-") {
        write_matrix(std::cout, u);
        return kOk;
    }
    save_matrix(args.out, u);
    return kOk;
}

struct CoincidenceArgs {
    int n = 0;
    std::string matrix_path;
    std::string stats = "boson";
    bool as_json = false;
    bool force = false;
};

int run_coincidence(const CoincidenceArgs& args, Clock::time_point start) {
    const ComplexMatrix u = resolve_matrix(args.n, args.matrix_path);
    const Index cap = args.force ? u.rows() : kCoincidenceDimCap;
    const DipReport report = dip_report(u, parse_stats(args.stats), cap);

    if (args.as_json) {
        json out;
        out["report"] = dip_report_json(report);
        out["manifest"] = manifest_json(
            "coincidence",
            json{{"n", args.n},
                 {"matrix", args.matrix_path},
                 {"stats", args.stats},
                 {"force", args.force}},
            start);
        std::cout << out.dump(2) << '\n';
        return kOk;
    }

    const char* label = report.stats == ParticleStatistics::Boson ? "permanent" : "determinant";
    std::cout << "n: " << report.n << '\n'
              << "stats: " << to_string(report.stats) << '\n'
              << "parity: " << to_string(report.parity) << '\n'
              << "coincidence_probability: " << format_double(report.coincidence_probability)
              << '\n'
              << label << ": " << format_complex(report.matrix_function) << '\n'
              << "is_dip: " << (report.is_dip ? "true" : "false") << '\n';
    return kOk;
}

struct DistributionArgs {
    int n = 0;
    std::string matrix_path;
    std::string stats = "boson";
    std::string format = "csv";
    bool force = false;
};

int run_distribution(const DistributionArgs& args, Clock::time_point start) {
    const ComplexMatrix u = resolve_matrix(args.n, args.matrix_path);
    const Index cap = args.force ? u.rows() : kDistributionDimCap;
    const OutputDistribution dist = full_distribution(u, parse_stats(args.stats), cap);

    if (args.format == "json") {
        json entries = json::array();
        for (const auto& [config, entry] : dist.entries) {
            entries.push_back(json{{"config", config},
                                   {"probability", entry.probability},
                                   {"amp_re", entry.amplitude.real()},
                                   {"amp_im", entry.amplitude.imag()}});
        }
        json out;
        out["n"] = dist.n;
        out["stats"] = to_string(dist.stats);
        out["entries"] = std::move(entries);
        out["manifest"] = manifest_json(
            "distribution",
            json{{"n", args.n},
                 {"matrix", args.matrix_path},
                 {"stats", args.stats},
                 {"format", args.format},
                 {"force", args.force}},
            start);
        std::cout << out.dump(2) << '\n';
        return kOk;
    }

    std::cout << "config,probability,amp_re,amp_im\n";
    for (const auto& [config, entry] : dist.entries) {
        std::cout << config_string(config) << ',' << format_double(entry.probability) << ','
                  << format_double(entry.amplitude.real()) << ','
                  << format_double(entry.amplitude.imag()) << '\n';
    }
    return kOk;
}

struct SweepArgs {
    int min = 0;
    int max = 0;
    std::string stats = "boson";
    std::string format = "csv";
};

int run_sweep(const SweepArgs& args, Clock::time_point start) {
    if (args.min < 1 || args.max < args.min || args.max > kSweepDimCap) {
        std::cerr << "error: sweep range must satisfy 1 <= min <= max <= " << kSweepDimCap
                  << " (got " << args.min << ".." << args.max << ")\n";
        return kUsageError;
    }
    const std::vector<DipReport> reports =
        parity_sweep(args.min, args.max, parse_stats(args.stats));

    if (args.format == "json") {
        json rows = json::array();
        for (const DipReport& report : reports) {
            rows.push_back(dip_report_json(report));
        }
        json out;
        out["reports"] = std::move(rows);
        out["manifest"] = manifest_json("sweep",
                                        json{{"min", args.min},
                                             {"max", args.max},
                                             {"stats", args.stats},
                                             {"format", args.format}},
                                        start);
        std::cout << out.dump(2) << '\n';
        return kOk;
    }

    std::cout << "n,parity,coincidence_probability,magnitude,is_dip\n";
    for (const DipReport& report : reports) {
        std::cout << report.n << ',' << to_string(report.parity) << ','
                  << format_double(report.coincidence_probability) << ','
                  << format_double(std::abs(report.matrix_function)) << ','
                  << (report.is_dip ? "true" : "false") << '\n';
    }
    return kOk;
}

struct VerifyArgs {
    int n_max = 0;
};

bool report_check(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "  " << detail << '\n';
    return ok;
}

int run_verify(const VerifyArgs& args) {
    bool all_ok = true;
    const int cyclic_max = std::min<int>(args.n_max, static_cast<int>(kCyclicCheckDimCap));
    for (int n = 1; n <= cyclic_max; ++n) {
        const CyclicSymmetryReport rep = verify_cyclic_symmetry(n);
        all_ok &= report_check(
            "cyclic-symmetry n=" + std::to_string(n), rep.passed,
            "column_cycle=" + format_double(rep.column_cycle_deviation) +
                " factorization=" + format_double(rep.multiplicativity_deviation) +
                " parity=" + format_double(rep.parity_deviation));
    }

    const int expansion_max = std::min(args.n_max, 5);
    for (int n = 1; n <= expansion_max; ++n) {
        const ComplexMatrix u = build_dft(n);
        for (const ParticleStatistics stats :
             {ParticleStatistics::Boson, ParticleStatistics::Fermion}) {
            const NormalForm form = expand_output_state(u, stats);
            double max_dev = 0.0;
            double total = 0.0;
            for (const FockConfig& config : enumerate_configs(n, stats)) {
                const Complex direct = amplitude(u, config, stats);
                max_dev = std::max(max_dev, std::abs(direct - form.fock_amplitude(config)));
                total += std::norm(form.fock_amplitude(config));
            }
            std::uint64_t expected_monomials = 1;
            for (int i = 0; i < n; ++i) {
                expected_monomials *= static_cast<std::uint64_t>(n);
            }
            const bool ok = max_dev <= 1e-10 && std::abs(total - 1.0) <= 1e-10 &&
                            form.monomial_count == expected_monomials;
            all_ok &= report_check(
                "expansion-vs-kernels n=" + std::to_string(n) + " stats=" + to_string(stats), ok,
                "max_amplitude_dev=" + format_double(max_dev) +
                    " total_probability=" + format_double(total) +
                    " monomials=" + std::to_string(form.monomial_count));
        }
    }

    if (args.n_max >= 2) {
        // Two-particle worked case: bosons bunch 1/2 : 0 : 1/2, fermions
        // anti-bunch with certainty.
        const ComplexMatrix u2 = build_dft(2);
        const OutputDistribution boson = full_distribution(u2, ParticleStatistics::Boson);
        const OutputDistribution fermion = full_distribution(u2, ParticleStatistics::Fermion);
        const bool ok = std::abs(boson.probability({2, 0}) - 0.5) <= 1e-12 &&
                        boson.probability({1, 1}) <= 1e-12 &&
                        std::abs(boson.probability({0, 2}) - 0.5) <= 1e-12 &&
                        std::abs(fermion.probability({1, 1}) - 1.0) <= 1e-12;
        all_ok &= report_check(
            "two-particle-case", ok,
            "P(2 0)=" + format_double(boson.probability({2, 0})) +
                " P(1 1)=" + format_double(boson.probability({1, 1})) +
                " P(0 2)=" + format_double(boson.probability({0, 2})) +
                " fermion P(1 1)=" + format_double(fermion.probability({1, 1})));
    }

    std::cout << (all_ok ? "VERIFY OK" : "VERIFY FAILED") << '\n';
    return all_ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homport: exact multiparticle interference at Bell multiport beam splitters"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    DftArgs dft_args;
    CLI::App* cmd_dft = app.add_subcommand("dft", "Emit the n-port Bell multiport (DFT) matrix");
    cmd_dft->add_option("--n", dft_args.n, "Port count")->required()->check(CLI::Range(1, 64));
    cmd_dft->add_option("--out", dft_args.out, "Output path, '-' for stdout");

    CoincidenceArgs co_args;
    CLI::App* cmd_co = app.add_subcommand("coincidence", "Coincidence probability for one matrix");
    auto* co_n = cmd_co->add_option("--n", co_args.n, "Bell multiport port count")
                     ->check(CLI::Range(1, 4096));
    auto* co_m = cmd_co->add_option("--matrix", co_args.matrix_path, "Matrix file to load");
    co_n->excludes(co_m);
    co_m->excludes(co_n);
    cmd_co->add_option("--stats", co_args.stats, "Particle statistics")
        ->required()
        ->check(CLI::IsMember({"boson", "fermion"}));
    cmd_co->add_flag("--json", co_args.as_json, "Emit JSON instead of text");
    cmd_co->add_flag("--force", co_args.force, "Lift the dimension cap");

    DistributionArgs dist_args;
    CLI::App* cmd_dist =
        app.add_subcommand("distribution", "Exact output distribution for one matrix");
    auto* dist_n = cmd_dist->add_option("--n", dist_args.n, "Bell multiport port count")
                       ->check(CLI::Range(1, 4096));
    auto* dist_m = cmd_dist->add_option("--matrix", dist_args.matrix_path, "Matrix file to load");
    dist_n->excludes(dist_m);
    dist_m->excludes(dist_n);
    cmd_dist->add_option("--stats", dist_args.stats, "Particle statistics")
        ->required()
        ->check(CLI::IsMember({"boson", "fermion"}));
    cmd_dist->add_option("--format", dist_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_dist->add_flag("--force", dist_args.force, "Lift the dimension cap");

    SweepArgs sweep_args;
    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "Parity sweep over the Bell multiport family");
    cmd_sweep->add_option("--min", sweep_args.min, "Smallest port count")->required();
    cmd_sweep->add_option("--max", sweep_args.max, "Largest port count")->required();
    cmd_sweep->add_option("--stats", sweep_args.stats, "Particle statistics")
        ->required()
        ->check(CLI::IsMember({"boson", "fermion"}));
    cmd_sweep->add_option("--format", sweep_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    VerifyArgs verify_args;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "Cross-check kernels against the exhaustive expansion");
    cmd_verify->add_option("--n-max", verify_args.n_max, "Largest port count to verify")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    const auto start = Clock::now();
    try {
        if (cmd_dft->parsed()) {
            return run_dft(dft_args);
        }
        if (cmd_co->parsed()) {
            if (co_args.n == 0 && co_args.matrix_path.empty()) {
                std::cerr << "error: exactly one of --n / --matrix is required\n";
                return kUsageError;
            }
            return run_coincidence(co_args, start);
        }
        if (cmd_dist->parsed()) {
            if (dist_args.n == 0 && dist_args.matrix_path.empty()) {
                std::cerr << "error: exactly one of --n / --matrix is required\n";
                return kUsageError;
            }
            return run_distribution(dist_args, start);
        }
        if (cmd_sweep->parsed()) {
            return run_sweep(sweep_args, start);
        }
        if (cmd_verify->parsed()) {
            return run_verify(verify_args);
        }
    } catch (const NonUnitaryError& e) {
        std::cerr << "error: " << e.what() << " (deviation " << format_double(e.deviation())
                  << ")\n";
        return kNonUnitaryInput;
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << " (requested " << e.requested() << ", cap "
                  << e.cap() << "; --force lifts it where supported)\n";
        return kCapExceeded;
    } catch (const MatrixFormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
    return kUsageError;
}
