#include "mastermind/bench.hpp"

#include <chrono>
#include <ostream>
#include <stdexcept>

#include "mastermind/strategy_bw.hpp"

namespace mastermind {

void SweepConfig::validate() const {
    if (sizes.empty()) throw std::invalid_argument("sweep: needs at least one size");
    for (int n : sizes)
        if (n < 1) throw std::invalid_argument("sweep: sizes must be positive");
    if (trials < 1) throw std::invalid_argument("sweep: trials must be at least 1");
    if (strategies.empty()) throw std::invalid_argument("sweep: needs at least one strategy");
    if (k_rule == KRule::fixed && fixed_k < 2)
        throw std::invalid_argument("sweep: fixed k must be at least 2");
}

std::uint64_t game_seed(std::uint64_t base_seed, std::size_t size_index,
                        std::size_t trial_index, std::size_t strategy_index) {
    std::uint64_t s = mix64(base_seed);
    s = mix64(s ^ (static_cast<std::uint64_t>(size_index) + 1));
    s = mix64(s ^ (static_cast<std::uint64_t>(trial_index) + 1));
    s = mix64(s ^ (static_cast<std::uint64_t>(strategy_index) + 1));
    return s;
}

int k_for(int n, KRule rule, int fixed_k) {
    switch (rule) {
        case KRule::equal_n: return n;
        case KRule::double_n: return 2 * n;
        case KRule::square_n: return n * n;
        case KRule::fixed: return fixed_k;
    }
    throw std::invalid_argument("sweep: unknown k rule");
}

BenchRecord run_game(int n, int k, const std::string& strategy, std::uint64_t seed,
                     const StrategyConfig& base_config) {
    // Secret and strategy randomness come from separate streams of the
    // derived seed.
    Rng secret_rng(mix64(seed ^ 0x5EC5EC5EC5EC5EC5ULL));
    Code secret(static_cast<std::size_t>(n));
    for (auto& c : secret) c = secret_rng.uniform_int(1, k);

    StrategyConfig config = base_config;
    config.seed = mix64(seed ^ 0x57A757A757A757A7ULL);

    BenchRecord record;
    record.n = n;
    record.k = k;
    record.strategy = strategy;
    record.seed = seed;

    const auto begin = std::chrono::steady_clock::now();
    SolveResult result;
    if (strategy == "adaptive") {
        SecretOracle oracle(secret, k, AnswerMode::black_only);
        oracle.record_transcript(false);
        result = solve_adaptive(oracle, n, k, config);
    } else if (strategy == "random-guess") {
        SecretOracle oracle(secret, k, AnswerMode::black_only);
        oracle.record_transcript(false);
        Rng rng(config.seed);
        result = solve_random_guessing(oracle, n, k, rng);
    } else if (strategy == "bw-composite") {
        SecretOracle oracle(secret, k, AnswerMode::black_and_white);
        oracle.record_transcript(false);
        result = solve_bw(oracle, n, k, config);
    } else {
        throw std::invalid_argument("unknown strategy: " + strategy);
    }
    const auto end = std::chrono::steady_clock::now();

    record.queries = result.queries;
    record.success = (result.code == secret);
    record.wall_time_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(end - begin).count());
    return record;
}

std::vector<BenchRecord> run_sweep(const SweepConfig& sweep,
                                   const StrategyConfig& base_config) {
    sweep.validate();
    std::vector<BenchRecord> records;
    records.reserve(sweep.sizes.size() * static_cast<std::size_t>(sweep.trials) *
                    sweep.strategies.size());
    for (std::size_t si = 0; si < sweep.sizes.size(); ++si) {
        const int n = sweep.sizes[si];
        const int k = k_for(n, sweep.k_rule, sweep.fixed_k);
        for (std::size_t trial = 0; trial < static_cast<std::size_t>(sweep.trials); ++trial)
            for (std::size_t sti = 0; sti < sweep.strategies.size(); ++sti)
                records.push_back(run_game(n, k, sweep.strategies[sti],
                                           game_seed(sweep.base_seed, si, trial, sti),
                                           base_config));
    }
    return records;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "n,k,strategy,seed,queries,success,wall_time_ms\n";
    for (const auto& r : records)
        out << r.n << ',' << r.k << ',' << r.strategy << ',' << r.seed << ','
            << r.queries << ',' << (r.success ? "true" : "false") << ','
            << r.wall_time_ms << '\n';
}

} // namespace mastermind
