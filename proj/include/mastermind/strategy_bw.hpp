// strategy_bw.hpp -- black/white-peg machinery: color queries, color-count
// learning, color-set partitioning, black-peg simulation over color sets,
// the composite strategy for k >= n, and the black-only adapter

#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "mastermind/strategy_black.hpp"

namespace mastermind {

/// col(X): how many distinct colors of the secret lie in X (|X| <= n).
/// Asks one guess made of X padded with color-1 fillers (sorted, fillers
/// last) and decodes the black+white total using the previously learned
/// count `ones_count` of color 1. Throws std::invalid_argument if |X| > n.
int color_query(Oracle& bw, std::vector<Color> colors, int ones_count, int n);

/// What the initial color sweep learns: the number of distinct secret
/// colors and a superset of them of size at most n * star_count.
struct ColorUniverse {
    int ones_count = 0;      ///< occurrences of color 1 in the secret
    int star_count = 0;      ///< number of distinct secret colors
    std::vector<Color> live; ///< superset of the secret's colors
};

/// Partitions {1..k} into ceil(k/n) sets of size <= n and color-queries
/// each; the counts sum to star_count and the positive parts union to the
/// superset.
ColorUniverse learn_counts_and_superset(Oracle& bw, int n, int k, int ones_count);

/// Disjoint color sets, each holding exactly one secret color.
struct ColorPartition {
    std::vector<std::vector<Color>> parts;
    int part_bound = 0; ///< largest part size
};

/// Repeatedly draws a uniform random ceil(|pool|/remaining)-subset of the
/// current pool and keeps it when its color query answers exactly 1,
/// removing it from the pool. Draw sizes are clamped to the pool.
ColorPartition partition_colors(Oracle& bw, std::vector<Color> pool,
                                int secret_count, int ones_count, Rng& rng);

/// Recovers the secret's color set from a partition by solving a virtual
/// black-peg game with one position per part: the black answer to a guess
/// is the color query of its symbols. Singleton parts cost nothing.
std::vector<Color> identify_secret_colors(Oracle& bw, const ColorPartition& parts,
                                          int ones_count, const StrategyConfig& config,
                                          Rng& rng, const AdaptiveHooks& hooks = {});

struct BwHooks {
    std::function<void(const ColorUniverse&)> after_learn;
    std::function<void(const ColorPartition&)> after_partition;
    std::function<void(const std::vector<Color>&)> after_identify;
    AdaptiveHooks adaptive;
};

/// The composite strategy: one all-ones query learns the color-1 count;
/// a color sweep learns the distinct-color count and a superset; random
/// color queries split the superset into one-secret-color parts; a virtual
/// black-peg game pins down the secret's colors; and the adaptive black-peg
/// solver over that color set recovers the code, ignoring white pegs.
SolveResult solve_bw(Oracle& bw, int n, int k, const StrategyConfig& config = {},
                     const BwHooks& hooks = {});

/// Serves black-and-white answers on top of a black-only oracle. Creation
/// spends exactly k-1 monochromatic queries to learn how often each color
/// occurs in the secret; afterwards every white count is computed from
/// those occurrence counts and the inner black answer.
class BlackToBwOracle final : public Oracle {
public:
    explicit BlackToBwOracle(Oracle& inner);

    const std::vector<int>& color_counts() const { return counts_; }

private:
    Answer respond(const Code& guess) override;

    Oracle* inner_;
    std::vector<int> counts_;
};

} // namespace mastermind
