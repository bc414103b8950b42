// coinweigh.hpp -- reconstructing non-negative integer coin weights from
// random subset weighings, as used to identify 0-blocks

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mastermind/rng.hpp"

namespace mastermind {

/// One weighing: which coins sit on the scale.
struct WeighingQuery {
    std::vector<bool> included;
};

/// A recorded coin-weighing instance: `coin_count` coins of unknown
/// non-negative integer weights with known `total`, plus measured subset sums.
struct WeighingProblem {
    int coin_count = 0;
    int total = 0;
    std::vector<WeighingQuery> queries;
    std::vector<int> answers;
};

/// Number of random weighings spent per round, ceil(budget * m / log2(m + 2)).
/// The Theta(m / log m) shape guarantees reconstruction with probability at
/// least 1/2; `budget` trades queries for retries, not correctness.
int default_weighing_count(int coin_count, double budget = 8.0);

/// `count` weighings whose coordinates are independent fair coins from rng.
std::vector<WeighingQuery> sample_weighings(int coin_count, int count, Rng& rng);

/// Subset sum of `weights` over the coins a query includes.
/// Throws std::invalid_argument on length mismatch.
int weigh(const std::vector<int>& weights, const WeighingQuery& query);

/// Exact reconstruction: returns the weight vector iff exactly one vector
/// with entries in {0..per_coin_bound}, summing to `total`, is consistent
/// with every recorded (query, answer) pair; otherwise nullopt.
///
/// When the weighings plus the total row have full column rank over GF(2)
/// (so at most one rational solution exists), the solution is computed by
/// elimination and verified exactly. Everything else is decided by
/// depth-first assignment with running partial-sum pruning per weighing
/// (both the subset and its complement, since the total is known),
/// remaining-total pruning, and solution counting. Never returns a wrong
/// vector and never claims uniqueness when a second solution exists;
/// exceeding `node_budget` aborts pathological searches as undetermined.
/// An inconsistent problem (no solution) is also reported as nullopt.
std::optional<std::vector<int>> solve_weighing(const WeighingProblem& problem,
                                               int per_coin_bound,
                                               std::uint64_t node_budget = 10'000'000);

/// Reference checker: plainly enumerates every bounded vector and counts the
/// consistent ones, stopping at `stop_after`. Independent of solve_weighing;
/// only viable for small instances.
int count_consistent_weighings(const WeighingProblem& problem, int per_coin_bound,
                               int stop_after = 2);

} // namespace mastermind
