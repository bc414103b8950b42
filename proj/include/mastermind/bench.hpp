// bench.hpp -- seeded simulation sweeps with CSV output

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mastermind/strategy_black.hpp"

namespace mastermind {

/// One simulated game. `success` means the returned code equaled the
/// simulated secret (cross-checked before the record is emitted).
struct BenchRecord {
    int n = 0;
    int k = 0;
    std::string strategy;
    std::uint64_t seed = 0;
    int queries = 0;
    bool success = false;
    long wall_time_ms = 0; ///< truncated to whole milliseconds
};

enum class KRule { equal_n, double_n, square_n, fixed };

struct SweepConfig {
    std::vector<int> sizes;
    KRule k_rule = KRule::equal_n;
    int fixed_k = 0; ///< used when k_rule == fixed
    int trials = 1;
    std::uint64_t base_seed = 1;
    std::vector<std::string> strategies; ///< adaptive | random-guess | bw-composite

    void validate() const;
};

/// Per-game seed: base_seed and the (size, trial, strategy) indices chained
/// through the splitmix64 finalizer, so records do not depend on execution
/// order. The exact formula is documented in the README.
std::uint64_t game_seed(std::uint64_t base_seed, std::size_t size_index,
                        std::size_t trial_index, std::size_t strategy_index);

int k_for(int n, KRule rule, int fixed_k);

/// Runs one simulated game of `strategy` with the given derived seed.
BenchRecord run_game(int n, int k, const std::string& strategy, std::uint64_t seed,
                     const StrategyConfig& base_config);

/// Full sweep in deterministic (size, trial, strategy) order.
std::vector<BenchRecord> run_sweep(const SweepConfig& sweep,
                                   const StrategyConfig& base_config);

/// Fixed header n,k,strategy,seed,queries,success,wall_time_ms; one row per
/// record; newline-delimited, no quoting.
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

} // namespace mastermind
