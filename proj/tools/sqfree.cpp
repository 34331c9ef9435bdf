// CLI for the sqfree library: counting runs, certified constants, the
// asymptotic verification report, lemma checks and probe sweeps.

#include <CLI11.hpp>

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

#include "sqfree/run.hpp"

namespace {

// Exit codes: 0 success, 1 usage, 2 verification failure, 3 resource limit.
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitResource = 3;

void apply_thread_env(sqfree::RunConfig& config) {
    const char* env = std::getenv("SQFREE_THREADS");
    if (env == nullptr || *env == '\0') return;
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (end == nullptr || *end != '\0' || value > 1024)
        throw std::invalid_argument("SQFREE_THREADS must be an integer in [0, 1024]");
    config.threads = static_cast<unsigned>(value);
}

int emit(const sqfree::RunResult& result, const std::optional<std::string>& out_path) {
    if (!out_path) {
        std::cout << result.output;
        return result.exit_code;
    }
    std::ofstream file(*out_path, std::ios::binary);
    file << result.output;
    if (!file) {
        std::cerr << "error: could not write " << *out_path << "\n";
        return kExitResource;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "consecutive squarefree values of n^2+1, n^2+2, n^2+3: "
        "sieve counts, certified density constants, asymptotic verification"};
    app.require_subcommand(1);

    sqfree::RunConfig config;
    std::string format = "json";

    auto add_output_flags = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", config.out_path, "write the report to PATH");
    };
    auto add_sieve_flags = [&](CLI::App* sub) {
        sub->add_option("--segment-length", config.segment_length,
                        "sieve segment length in values of n");
        sub->add_option("--threads", config.threads,
                        "worker threads, 0 = hardware (SQFREE_THREADS overrides)");
    };

    CLI::App* count = app.add_subcommand("count", "count squarefree n^2+shift up to X");
    count->add_option("--x", config.x, "count n <= X")->required();
    count->add_option("--shift", config.shifts, "report this single shift (repeatable)")
        ->check(CLI::Range(1, 3));
    count->add_flag("--triple", config.triple, "report the triple count");
    count->add_option("--truncation", config.truncation,
                      "Euler product truncation for predictions");
    add_sieve_flags(count);
    add_output_flags(count);

    CLI::App* constants =
        app.add_subcommand("constants", "certified density constant intervals");
    constants->add_option("--truncation", config.truncation,
                          "Euler product truncation (>= 5)");
    constants->add_option("--set", config.set_name,
                          "one of phi_1..phi_3, theta_1..theta_3, sigma");
    add_output_flags(constants);

    CLI::App* verify =
        app.add_subcommand("verify", "compare triple counts against the main term");
    verify->add_option("--x", config.x, "verify up to X")->required();
    verify->add_option("--truncation", config.truncation,
                       "Euler product truncation for the constant");
    add_sieve_flags(verify);
    add_output_flags(verify);

    CLI::App* lemmas = app.add_subcommand("lemmas", "exact identity checks and probes");
    lemmas->add_option("--which", config.which,
                       "all, floor_identity, two_omega, b_sum, pell_count, "
                       "four_term or four_shift_factor")
        ->check(CLI::IsMember({"all", "floor_identity", "two_omega", "b_sum",
                               "pell_count", "four_term", "four_shift_factor"}));
    lemmas->add_option("--phi", config.phi, "shift in {1,2,3}")->check(CLI::Range(1, 3));
    lemmas->add_option("--d", config.d_low, "dyadic block start D");
    lemmas->add_option("--x", config.x, "upper limit X");
    lemmas->add_option("--n", config.n, "scan limit N");
    lemmas->add_option("--k", config.k, "Pell coefficient k");
    add_output_flags(lemmas);

    CLI::App* sweep = app.add_subcommand("sweep", "probe tables over parameter grids");
    sweep->add_option("--probe", config.probe, "all, b_sum or pell_count")
        ->check(CLI::IsMember({"all", "b_sum", "pell_count"}));
    sweep->add_option("--phi", config.phi, "shift in {1,2,3}")->check(CLI::Range(1, 3));
    sweep->add_option("--x", config.x, "upper limit X");
    sweep->add_option("--dmax", config.d_max, "largest dyadic block start");
    sweep->add_option("--kmax", config.k_max, "largest Pell coefficient");
    add_output_flags(sweep);

    try {
        app.parse(argc, argv);
        config.subcommand = app.get_subcommands().front()->get_name();
        config.format = sqfree::format_from_name(format);
        apply_thread_env(config);
        return emit(sqfree::run(config), config.out_path);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return kExitResource;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::logic_error& e) {
        std::cerr << "error: internal invariant violated: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
}
