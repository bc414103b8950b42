// mm_cli.cpp -- command-line harness: single games, seeded benchmark sweeps
// with CSV output, verification suites, and a human-codemaker mode

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mastermind/bench.hpp"
#include "mastermind/strategy_black.hpp"
#include "mastermind/strategy_bw.hpp"
#include "mastermind/suites.hpp"

namespace {

using namespace mastermind;

std::string format_code(const Code& code) {
    std::ostringstream out;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i) out << ' ';
        out << code[i];
    }
    return out.str();
}

std::string format_answer(const Answer& answer) {
    std::ostringstream out;
    out << "black=" << answer.black;
    if (answer.white) out << " white=" << *answer.white;
    return out.str();
}

// ---------------------------------------------------------------------------
// play

int cmd_play(int n, int k, const std::string& strategy, std::uint64_t seed,
             std::string mode, const StrategyConfig& base_config) {
    if (mode == "auto") mode = (strategy == "bw-composite") ? "bw" : "black";

    Rng secret_rng(mix64(seed ^ 0x5EC5EC5EC5EC5EC5ULL));
    Code secret(static_cast<std::size_t>(n));
    for (auto& c : secret) c = secret_rng.uniform_int(1, k);

    StrategyConfig config = base_config;
    config.seed = mix64(seed ^ 0x57A757A757A757A7ULL);

    const AnswerMode answer_mode =
        mode == "bw" ? AnswerMode::black_and_white : AnswerMode::black_only;
    SecretOracle oracle(secret, k, answer_mode);

    SolveResult result;
    if (strategy == "adaptive") {
        result = solve_adaptive(oracle, n, k, config);
    } else if (strategy == "random-guess") {
        Rng rng(config.seed);
        result = solve_random_guessing(oracle, n, k, rng);
    } else if (strategy == "bw-composite" && answer_mode == AnswerMode::black_and_white) {
        result = solve_bw(oracle, n, k, config);
    } else if (strategy == "bw-composite") {
        // Black-peg game: serve white pegs through the monochromatic adapter.
        BlackToBwOracle adapted(oracle);
        const SolveResult inner = solve_bw(adapted, n, k, config);
        result = {inner.code, oracle.query_count()};
    } else {
        std::cerr << "unknown strategy: " << strategy << '\n';
        return 2;
    }

    for (std::size_t i = 0; i < oracle.transcript().size(); ++i) {
        const auto& [guess, answer] = oracle.transcript().entries[i];
        std::cout << '#' << (i + 1) << "  " << format_code(guess) << "  ->  "
                  << format_answer(answer) << '\n';
    }
    const bool success = result.code == secret;
    std::cout << "secret:  " << format_code(secret) << '\n'
              << "deduced: " << format_code(result.code) << '\n'
              << "queries: " << result.queries << '\n'
              << (success ? "success" : "FAILURE") << '\n';
    return success ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench(const SweepConfig& sweep, const std::string& out_path,
              const StrategyConfig& base_config) {
    const auto records = run_sweep(sweep, base_config);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open output file: " << out_path << '\n';
        return 1;
    }
    write_csv(out, records);
    out.flush();
    if (!out) {
        std::cerr << "write failed: " << out_path << '\n';
        return 1;
    }

    // Per-configuration means on stdout.
    std::size_t at = 0;
    for (std::size_t si = 0; si < sweep.sizes.size(); ++si) {
        for (std::size_t sti = 0; sti < sweep.strategies.size(); ++sti) {
            long total = 0;
            long failures = 0;
            for (int t = 0; t < sweep.trials; ++t) {
                const auto& r = records[at + static_cast<std::size_t>(t) * sweep.strategies.size() + sti];
                total += r.queries;
                failures += !r.success;
            }
            std::cout << "n=" << sweep.sizes[si] << " k="
                      << k_for(sweep.sizes[si], sweep.k_rule, sweep.fixed_k) << ' '
                      << sweep.strategies[sti] << ": mean queries "
                      << static_cast<double>(total) / sweep.trials;
            if (failures) std::cout << "  (" << failures << " FAILED)";
            std::cout << '\n';
        }
        at += static_cast<std::size_t>(sweep.trials) * sweep.strategies.size();
    }
    std::cout << records.size() << " records -> " << out_path << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& suite) {
    std::vector<suites::CheckResult> results;
    try {
        results = suite == "all" ? suites::run_all() : suites::run_suite(suite);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    bool all_passed = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ')';
        std::cout << '\n';
        all_passed &= r.passed;
    }
    return all_passed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// interactive

/// Raised by the human oracle when a guess scores a full match.
struct secret_found {
    Code guess;
};

/// Answers come from a person typing peg counts; the secret stays in their
/// head. Re-prompts on invalid input; EOF aborts.
class HumanOracle final : public Oracle {
public:
    HumanOracle(int n, int k, AnswerMode mode) : Oracle(n, k, mode) {}

private:
    static int read_count(const std::string& prompt, int limit) {
        for (;;) {
            std::cout << prompt << std::flush;
            std::string line;
            if (!std::getline(std::cin, line))
                throw std::runtime_error("input closed; aborting");
            std::istringstream in(line);
            int value;
            if (in >> value && value >= 0 && value <= limit) return value;
            std::cout << "  enter a number between 0 and " << limit << '\n';
        }
    }

    Answer respond(const Code& guess) override {
        std::cout << "guess #" << (query_count() + 1) << ": " << format_code(guess) << '\n';
        Answer answer;
        answer.black = read_count("  black pegs? ", positions());
        if (mode() == AnswerMode::black_and_white)
            answer.white = read_count("  white pegs? ", positions() - answer.black);
        if (answer.black == positions()) throw secret_found{guess};
        return answer;
    }
};

int cmd_interactive(int n, int k, const std::string& mode,
                    const StrategyConfig& base_config) {
    StrategyConfig config = base_config;
    std::cout << "Think of a code: " << n << " positions, colors 1.." << k
              << ". Answer each guess.\n";
    try {
        Code deduced;
        if (mode == "bw") {
            HumanOracle oracle(n, k, AnswerMode::black_and_white);
            deduced = solve_bw(oracle, n, k, config).code;
        } else {
            HumanOracle oracle(n, k, AnswerMode::black_only);
            deduced = solve_adaptive(oracle, n, k, config).code;
        }
        std::cout << "your code: " << format_code(deduced) << '\n';
        return 0;
    } catch (const secret_found& hit) {
        std::cout << "your code: " << format_code(hit.guess) << '\n';
        return 0;
    } catch (const inconsistent_answers&) {
        std::cout << "answers inconsistent with any code\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cout << e.what() << '\n';
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mastermind query-strategy harness"};
    app.require_subcommand(1);

    StrategyConfig base_config;
    app.add_option("--cf", base_config.weighing_budget,
                   "coin-weighing budget constant")->capture_default_str();
    app.add_option("--endgame-threshold", base_config.endgame_threshold,
                   "stop phases once k' <= max(sqrt(n), this)")->capture_default_str();

    // play
    auto* play = app.add_subcommand("play", "simulate one game against a random secret");
    int play_n = 0;
    int play_k = 0;
    std::string play_strategy = "adaptive";
    std::uint64_t play_seed = 1;
    std::string play_mode = "auto";
    play->add_option("--n", play_n, "positions")->required()->check(CLI::PositiveNumber);
    play->add_option("--k", play_k, "colors (default n)");
    play->add_option("--strategy", play_strategy, "adaptive | random-guess | bw-composite")
        ->check(CLI::IsMember({"adaptive", "random-guess", "bw-composite"}));
    play->add_option("--seed", play_seed, "seed")->capture_default_str();
    play->add_option("--mode", play_mode, "black | bw | auto")
        ->check(CLI::IsMember({"black", "bw", "auto"}));

    // bench
    auto* bench = app.add_subcommand("bench", "seeded sweep, one CSV row per game");
    SweepConfig sweep;
    std::string k_rule = "n";
    int bench_k = 0;
    std::string out_path;
    bench->add_option("--n", sweep.sizes, "board sizes")->required()->check(CLI::PositiveNumber);
    bench->add_option("--k-rule", k_rule, "n | 2n | nsq | fixed")
        ->check(CLI::IsMember({"n", "2n", "nsq", "fixed"}));
    bench->add_option("--k", bench_k, "color count for --k-rule fixed");
    bench->add_option("--trials", sweep.trials, "games per size and strategy")
        ->check(CLI::PositiveNumber)->capture_default_str();
    bench->add_option("--seed", sweep.base_seed, "base seed")->capture_default_str();
    bench->add_option("--strategy", sweep.strategies, "strategies to run")->required();
    bench->add_option("--out", out_path, "CSV output path")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run a named property suite");
    std::string suite;
    verify->add_option("suite", suite,
                       "oracle-equivalence | coinweigh | invariants | nonadaptive | scaling | all")
        ->required();

    // interactive
    auto* interactive = app.add_subcommand("interactive", "you are the Codemaker");
    int inter_n = 0;
    int inter_k = 0;
    std::string inter_mode = "black";
    interactive->add_option("--n", inter_n, "positions")->required()->check(CLI::PositiveNumber);
    interactive->add_option("--k", inter_k, "colors (default n)");
    interactive->add_option("--mode", inter_mode, "black | bw")
        ->check(CLI::IsMember({"black", "bw"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*play) {
            if (play_k == 0) play_k = play_n;
            return cmd_play(play_n, play_k, play_strategy, play_seed, play_mode, base_config);
        }
        if (*bench) {
            if (k_rule == "n") sweep.k_rule = KRule::equal_n;
            else if (k_rule == "2n") sweep.k_rule = KRule::double_n;
            else if (k_rule == "nsq") sweep.k_rule = KRule::square_n;
            else {
                sweep.k_rule = KRule::fixed;
                sweep.fixed_k = bench_k;
            }
            try {
                sweep.validate();
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << '\n';
                return 2;
            }
            return cmd_bench(sweep, out_path, base_config);
        }
        if (*verify) return cmd_verify(suite);
        if (*interactive) {
            if (inter_k == 0) inter_k = inter_n;
            return cmd_interactive(inter_n, inter_k, inter_mode, base_config);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 2;
}
