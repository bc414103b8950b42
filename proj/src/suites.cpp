#include "mastermind/suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mastermind/bench.hpp"
#include "mastermind/coinweigh.hpp"
#include "mastermind/strategy_black.hpp"
#include "mastermind/strategy_bw.hpp"
#include "mastermind/verify.hpp"

namespace mastermind::suites {

namespace {

Code nth_code(long index, int n, int k) {
    Code code(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        code[static_cast<std::size_t>(i)] = static_cast<Color>(index % k) + 1;
        index /= k;
    }
    return code;
}

long code_space(int n, int k) {
    long total = 1;
    for (int i = 0; i < n; ++i) total *= k;
    return total;
}

Code random_code(int n, int k, Rng& rng) {
    Code code(static_cast<std::size_t>(n));
    for (auto& c : code) c = rng.uniform_int(1, k);
    return code;
}

// 1. White-peg closed form vs the permutation definition, exhaustively.
CheckResult check_oracle_equivalence() {
    long pairs = 0;
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            const long space = code_space(n, k);
            for (long zi = 0; zi < space; ++zi) {
                const Code z = nth_code(zi, n, k);
                for (long xi = 0; xi < space; ++xi) {
                    const Code x = nth_code(xi, n, k);
                    if (white_answer(z, x) != brute_force_white(z, x)) {
                        std::ostringstream detail;
                        detail << "mismatch at n=" << n << " k=" << k;
                        return {1, "oracle equivalence", false, detail.str()};
                    }
                    ++pairs;
                }
            }
        }
    std::ostringstream detail;
    detail << pairs << " pairs compared";
    return {1, "oracle equivalence", true, detail.str()};
}

// 2. Adaptive strategy returns the exact secret; z_i stays in C_i throughout.
CheckResult check_adaptive_correctness() {
    const int trials = 100;
    long runs = 0;
    long violations = 0;
    for (int n : {8, 16, 32, 64, 128, 256}) {
        const int k = n;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(game_seed(20260101, static_cast<std::size_t>(n),
                              static_cast<std::size_t>(trial), 0));
            const Code secret = random_code(n, k, rng);
            SecretOracle oracle(secret, k, AnswerMode::black_only);
            oracle.record_transcript(false);

            AdaptiveHooks hooks;
            std::optional<Code> lifted;
            hooks.after_round = [&](const CandidateState& state, const PaddedOracle& game) {
                if (!lifted) lifted = game.lift_secret(secret);
                const int floor = state.phase_size / 2;
                for (int i = 0; i < state.positions(); ++i) {
                    const auto& set = state.sets[static_cast<std::size_t>(i)];
                    if (!set.contains((*lifted)[static_cast<std::size_t>(i)])) ++violations;
                    if (state.phase >= 1 && set.size() < floor) ++violations;
                }
            };

            StrategyConfig config;
            config.seed = rng.next();
            const SolveResult result = solve_adaptive(oracle, n, k, config, hooks);
            runs += (result.code == secret);
        }
    }
    std::ostringstream detail;
    detail << runs << "/600 exact, " << violations << " candidate-set violations";
    return {2, "adaptive correctness", runs == 600 && violations == 0, detail.str()};
}

// 3. Adaptive mean queries over n*log2(n) trend down (5% slack) while the
//    random-guessing baseline stays in a factor-2 band.
CheckResult check_scaling_separation() {
    const std::vector<int> sizes{64, 128, 256, 512};
    const int trials = 50;
    std::vector<double> adaptive_ratio;
    std::vector<double> random_ratio;
    long failures = 0;
    for (std::size_t si = 0; si < sizes.size(); ++si) {
        const int n = sizes[si];
        double adaptive_sum = 0.0;
        double random_sum = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            const std::uint64_t seed =
                game_seed(20260303, si, static_cast<std::size_t>(trial), 0);
            StrategyConfig config;
            const BenchRecord a = run_game(n, n, "adaptive", seed, config);
            const BenchRecord r = run_game(n, n, "random-guess", seed, config);
            failures += !a.success + !r.success;
            adaptive_sum += a.queries;
            random_sum += r.queries;
        }
        const double scale = n * std::log2(static_cast<double>(n));
        adaptive_ratio.push_back(adaptive_sum / trials / scale);
        random_ratio.push_back(random_sum / trials / scale);
    }

    bool decreasing = true;
    for (std::size_t i = 0; i + 1 < adaptive_ratio.size(); ++i)
        if (adaptive_ratio[i + 1] >= 1.05 * adaptive_ratio[i]) decreasing = false;
    const double lo = *std::min_element(random_ratio.begin(), random_ratio.end());
    const double hi = *std::max_element(random_ratio.begin(), random_ratio.end());
    const bool banded = hi <= 2.0 * lo;

    std::ostringstream detail;
    detail << "adaptive/(n log n):";
    for (double r : adaptive_ratio) detail << ' ' << r;
    detail << "; random-guess/(n log n):";
    for (double r : random_ratio) detail << ' ' << r;
    if (failures) detail << "; " << failures << " wrong codes";
    return {3, "scaling separation", decreasing && banded && failures == 0, detail.str()};
}

// 4. Random weighings reconstruct simulated block contributions at least
//    half the time; verdicts match plain enumeration where feasible.
CheckResult check_coinweigh_success() {
    const int trials = 200;
    std::ostringstream detail;
    bool pass = true;
    for (int m : {8, 16, 32}) {
        const int width = 16; // candidate colors per position
        const int block = 4;  // positions per block, = per-block bound
        int successes = 0;
        int verdict_mismatches = 0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(game_seed(20260404, static_cast<std::size_t>(m),
                              static_cast<std::size_t>(trial), 0));
            std::vector<int> weights;
            for (;;) {
                weights.assign(static_cast<std::size_t>(m), 0);
                int total = 0;
                for (int s = 0; s < m; ++s)
                    for (int i = 0; i < block; ++i) {
                        const bool match = rng.uniform_int(1, width) == rng.uniform_int(1, width);
                        weights[static_cast<std::size_t>(s)] += match;
                        total += match;
                    }
                if (total <= m / 2) break;
            }
            WeighingProblem problem;
            problem.coin_count = m;
            for (int w : weights) problem.total += w;
            problem.queries = sample_weighings(m, default_weighing_count(m), rng);
            for (const auto& q : problem.queries)
                problem.answers.push_back(weigh(weights, q));

            const auto solved = solve_weighing(problem, block);
            if (solved) {
                if (*solved != weights) ++verdict_mismatches; // must be the hidden vector
                ++successes;
            }
            if (m <= 10) {
                const int count = count_consistent_weighings(problem, block);
                if (solved.has_value() != (count == 1)) ++verdict_mismatches;
            }
        }
        detail << "m=" << m << ": " << successes << '/' << trials << "  ";
        if (successes * 2 < trials || verdict_mismatches != 0) pass = false;
    }
    return {4, "coin-weighing success", pass, detail.str()};
}

// 5. col(X) equals |C* cap X| for every small color set.
CheckResult check_color_query() {
    long checks = 0;
    for (int n = 1; n <= 4; ++n)
        for (int k = 2; k <= 5; ++k) {
            for (int trial = 0; trial < 200; ++trial) {
                Rng rng(game_seed(20260505, static_cast<std::size_t>(n * 8 + k),
                                  static_cast<std::size_t>(trial), 0));
                // Half the trials avoid color 1 so that b = 0 is exercised.
                Code secret(static_cast<std::size_t>(n));
                for (auto& c : secret)
                    c = (trial % 2 == 0) ? rng.uniform_int(1, k) : rng.uniform_int(2, k);
                std::set<Color> star(secret.begin(), secret.end());

                SecretOracle oracle(secret, k, AnswerMode::black_and_white);
                const int b = oracle.query(repeated(n, 1)).black;
                for (int mask = 0; mask < (1 << k); ++mask) {
                    std::vector<Color> colors;
                    for (int c = 0; c < k; ++c)
                        if (mask & (1 << c)) colors.push_back(c + 1);
                    if (static_cast<int>(colors.size()) > n) continue;
                    int expected = 0;
                    for (Color c : colors) expected += star.count(c);
                    if (color_query(oracle, colors, b, n) != expected) {
                        std::ostringstream detail;
                        detail << "mismatch at n=" << n << " k=" << k;
                        return {5, "color-query exactness", false, detail.str()};
                    }
                    ++checks;
                }
            }
        }
    std::ostringstream detail;
    detail << checks << " color queries checked";
    return {5, "color-query exactness", true, detail.str()};
}

// 6. The composite bw strategy is exact and its color partition obeys the
//    disjointness, size, and one-secret-color-per-part postconditions.
CheckResult check_bw_composite() {
    const int trials = 50;
    long runs = 0;
    long expected_runs = 0;
    long violations = 0;
    for (int n : {8, 16, 32})
        for (int k : {n, 2 * n, 4 * n, std::min(n * n, 1024)}) {
            for (int trial = 0; trial < trials; ++trial) {
                ++expected_runs;
                Rng rng(game_seed(20260606, static_cast<std::size_t>(n * 2048 + k),
                                  static_cast<std::size_t>(trial), 0));
                const Code secret = random_code(n, k, rng);
                const std::set<Color> star(secret.begin(), secret.end());
                SecretOracle oracle(secret, k, AnswerMode::black_and_white);
                oracle.record_transcript(false);

                BwHooks hooks;
                std::optional<ColorUniverse> learned;
                hooks.after_learn = [&](const ColorUniverse& u) { learned = u; };
                hooks.after_partition = [&](const ColorPartition& parts) {
                    if (!learned) ++violations;
                    const int bound = learned ? static_cast<int>(
                        (learned->live.size() + star.size() - 1) / star.size()) : 0;
                    std::set<Color> seen;
                    for (const auto& part : parts.parts) {
                        if (static_cast<int>(part.size()) > bound) ++violations;
                        int hits = 0;
                        for (Color c : part) {
                            if (!seen.insert(c).second) ++violations; // disjointness
                            hits += star.count(c);
                        }
                        if (hits != 1) ++violations;
                    }
                };

                StrategyConfig config;
                config.seed = rng.next();
                const SolveResult result = solve_bw(oracle, n, k, config, hooks);
                runs += (result.code == secret);
                if (learned) {
                    if (learned->star_count != static_cast<int>(star.size())) ++violations;
                    for (Color c : star)
                        if (std::find(learned->live.begin(), learned->live.end(), c) ==
                            learned->live.end())
                            ++violations;
                }
            }
        }
    std::ostringstream detail;
    detail << runs << '/' << expected_runs << " exact, " << violations
           << " postcondition violations";
    return {6, "bw composite", runs == expected_runs && violations == 0, detail.str()};
}

// 7. Answers served through the black-only adapter equal a genuine bw
//    oracle's answers for every guess, after exactly k-1 setup queries.
CheckResult check_adapter_fidelity() {
    long checks = 0;
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            const long space = code_space(n, k);
            for (long zi = 0; zi < space; ++zi) {
                const Code secret = nth_code(zi, n, k);
                SecretOracle black(secret, k, AnswerMode::black_only);
                BlackToBwOracle adapted(black);
                if (black.query_count() != k - 1) {
                    std::ostringstream detail;
                    detail << "setup cost " << black.query_count() << " != " << k - 1;
                    return {7, "adapter fidelity", false, detail.str()};
                }
                SecretOracle genuine(secret, k, AnswerMode::black_and_white);
                for (long xi = 0; xi < space; ++xi) {
                    const Code guess = nth_code(xi, n, k);
                    if (adapted.query(guess) != genuine.query(guess)) {
                        std::ostringstream detail;
                        detail << "answer mismatch at n=" << n << " k=" << k;
                        return {7, "adapter fidelity", false, detail.str()};
                    }
                    ++checks;
                }
            }
        }
    std::ostringstream detail;
    detail << checks << " guesses compared";
    return {7, "adapter fidelity", true, detail.str()};
}

// 8. Random query sets of the prescribed size identify every secret at desk
//    scale, and the identification test agrees with pattern splitting.
CheckResult check_nonadaptive() {
    const std::vector<std::pair<int, int>> configs{{2, 2}, {3, 2}, {2, 3}, {3, 3}};
    std::ostringstream detail;
    bool pass = true;
    for (const auto& [n, k] : configs) {
        const int set_size = identifying_set_size(n, k, 8.0);
        Rng rng(game_seed(20260808, static_cast<std::size_t>(n),
                          static_cast<std::size_t>(k), 0));
        int disagreements = 0;
        const auto found = find_identifying_set(
            n, k, set_size, rng, 100, [&](const QuerySet& queries, bool good) {
                if (good != splits_all_patterns(queries, n, k)) ++disagreements;
            });
        detail << '(' << n << ',' << k << "): N=" << set_size
               << (found ? " found" : " missing") << "  ";
        if (!found || disagreements != 0) pass = false;
    }
    return {8, "non-adaptive identifiability", pass, detail.str()};
}

// 9. Identical sweep configs give byte-identical CSV.
CheckResult check_csv_determinism() {
    SweepConfig sweep;
    sweep.sizes = {4, 8};
    sweep.k_rule = KRule::equal_n;
    sweep.trials = 3;
    sweep.base_seed = 20260909;
    sweep.strategies = {"adaptive", "random-guess", "bw-composite"};
    StrategyConfig config;

    std::ostringstream first;
    write_csv(first, run_sweep(sweep, config));
    std::ostringstream second;
    write_csv(second, run_sweep(sweep, config));

    const std::string a = first.str();
    const std::string b = second.str();
    const bool identical = a == b;
    const long rows = static_cast<long>(std::count(a.begin(), a.end(), '\n')) - 1;
    std::ostringstream detail;
    detail << rows << " rows, " << (identical ? "byte-identical" : "runs differ");
    return {9, "CSV determinism", identical && rows == 18, detail.str()};
}

} // namespace

CheckResult run_check(int id) {
    switch (id) {
        case 1: return check_oracle_equivalence();
        case 2: return check_adaptive_correctness();
        case 3: return check_scaling_separation();
        case 4: return check_coinweigh_success();
        case 5: return check_color_query();
        case 6: return check_bw_composite();
        case 7: return check_adapter_fidelity();
        case 8: return check_nonadaptive();
        case 9: return check_csv_determinism();
        default: throw std::invalid_argument("unknown check id");
    }
}

std::vector<CheckResult> run_all() {
    std::vector<CheckResult> out;
    for (int id = 1; id <= 9; ++id) out.push_back(run_check(id));
    return out;
}

std::vector<CheckResult> run_suite(const std::string& name) {
    static const std::map<std::string, std::vector<int>> suites{
        {"oracle-equivalence", {1, 5, 7}}, {"coinweigh", {4}},
        {"invariants", {2, 6}},            {"nonadaptive", {8}},
        {"scaling", {3, 9}},
    };
    const auto it = suites.find(name);
    if (it == suites.end()) throw std::invalid_argument("unknown suite: " + name);
    std::vector<CheckResult> out;
    for (int id : it->second) out.push_back(run_check(id));
    return out;
}

std::vector<std::string> suite_names() {
    return {"oracle-equivalence", "coinweigh", "invariants", "nonadaptive", "scaling"};
}

} // namespace mastermind::suites
