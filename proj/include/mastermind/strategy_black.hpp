// strategy_black.hpp -- black-peg codebreakers: the dummy-color preamble,
// the phase/block adaptive strategy with coin-weighing rounds, its
// per-position endgame, and the random-guessing baseline

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mastermind/coinweigh.hpp"
#include "mastermind/oracle.hpp"
#include "mastermind/rng.hpp"

namespace mastermind {

/// Tunables of the adaptive strategies. All randomness of a solve run flows
/// from `seed`, so identical (n, k, secret, config) gives identical
/// transcripts.
struct StrategyConfig {
    double weighing_budget = 8.0; ///< constant in the weighing-count formula
    int endgame_threshold = 8;    ///< stop phases once k' <= max(sqrt(n), this)
    int round_cap_factor = 4;     ///< phase round cap = factor * 64 * k'
    std::uint64_t seed = 1;

    void validate() const; ///< throws std::invalid_argument when out of range
};

struct SolveResult {
    Code code;
    int queries = 0;
};

/// Result of the dummy-color preamble: a color known wrong at every position,
/// plus the positions holding colors 1 and 2 (learned for free).
struct DummyScan {
    Code dummies;
    std::vector<int> ones;
    std::vector<int> twos;
};

/// Queries (1,...,1), then flips positions to color 2 one at a time
/// (n+1 queries total). Consecutive answer differences reveal, per position,
/// whether the secret holds 1, 2, or neither; dummies[i] is 1 unless the
/// secret holds 1 there, in which case 2.
DummyScan find_dummy_colors(Oracle& oracle, int n, int k);

/// k monochromatic queries (c,...,c); returns per-color occurrence counts
/// (index 0 unused). Colors with count 0 cannot appear anywhere, leaving at
/// most n live colors. Requires k > n to be worth the spend.
std::vector<int> reduce_k_monochromatic(Oracle& oracle, int n, int k);

/// Presents an inner per-position-alphabet black-peg game as a standard game
/// whose position and color counts are powers of two.
///
/// A padded guess maps, per active position, either through the position's
/// alphabet (an injection into inner colors) or, for colors past the
/// alphabet, to the position's known-wrong dummy entry. Extension positions
/// carry a self-chosen fixed code (color 1) whose contribution the wrapper
/// adds itself; `fills` are known-correct inner colors at positions excluded
/// from play, whose constant contribution the wrapper subtracts.
/// One outer query forwards exactly one inner query.
class PaddedOracle final : public Oracle {
public:
    PaddedOracle(Oracle& inner,
                 std::vector<int> active_positions,
                 std::vector<std::vector<Color>> alphabets,
                 std::vector<int> dummy_index,
                 std::vector<std::pair<int, Color>> fills = {});

    int active_count() const { return static_cast<int>(actives_.size()); }

    /// Known-wrong color of this game at every padded position.
    const Code& dummy_code() const { return dummies_; }

    /// Inner realization of a padded guess.
    Code lower_guess(const Code& padded) const;

    /// Padded-game image of the true inner secret (simulation/test aid).
    Code lift_secret(const Code& inner_secret) const;

    /// Full inner code for a solved padded secret (fills merged back in).
    /// Throws inconsistent_answers if the padded code is not liftable.
    Code restore_secret(const Code& padded_secret) const;

private:
    Answer respond(const Code& padded) override;

    Oracle* inner_;
    std::vector<int> actives_;
    std::vector<std::vector<Color>> alphabets_;
    std::vector<int> dummy_index_;
    std::vector<std::pair<int, Color>> fills_;
    Code dummies_;
    int inner_positions_;
};

/// Convenience wrapper for the whole-game case: identity alphabets {1..k}
/// at every position, out-of-range colors replaced by `dummies`.
PaddedOracle wrap_padded_oracle(Oracle& inner, int n, int k, const Code& dummies);

/// Per-position candidate bookkeeping of the phase strategy.
class ColorSet {
public:
    ColorSet() = default;
    ColorSet(int limit, bool full);

    bool contains(Color c) const { return member_[static_cast<std::size_t>(c)] != 0; }
    bool erase(Color c);
    int size() const { return count_; }
    std::vector<Color> to_vector() const;

private:
    std::vector<std::uint8_t> member_;
    int count_ = 0;
};

/// Phase state over the padded game: candidate color sets C_i, the frozen
/// per-phase sampling sets, the per-position dummies, and the block layout.
struct CandidateState {
    std::vector<ColorSet> sets;
    int phase = 0;      ///< j; 0 before the first phase
    int phase_size = 0; ///< k' = padded_colors / 2^(j-1)
    std::vector<std::vector<Color>> sampling_sets; ///< frozen copy taken at phase start
    Code dummies;
    int block_size = 0;
    int block_count = 0; ///< m = 4 * positions / k'
    int padded_positions = 0;
    int padded_colors = 0;

    int positions() const { return padded_positions; }
    int block_of(int position) const { return position / block_size; }
    bool all_sets_at(int target) const;
};

/// Full candidate sets, dummies from the game, no phase begun yet.
CandidateState make_initial_state(const PaddedOracle& game);

/// Advances to the next phase: halves k', freezes the sampling sets, and
/// lays out m = 4n/k' contiguous blocks of size k'/4.
void begin_phase(CandidateState& state);

struct RoundOutcome {
    enum class Status { success, high_answer, undetermined };
    Status status = Status::undetermined;
    Code sample;                  ///< the random guess r of this round
    std::vector<int> zero_blocks; ///< filled on success
    int queries_used = 0;
};

/// One round: sample r from the frozen sets and query it; if the answer
/// exceeds m/2, give up after that single query. Otherwise spend the
/// configured number of random weighings (blocks with y_s = 1 copy r, the
/// rest show dummies) and reconstruct per-block contributions; a unique
/// reconstruction yields the 0-block set. Failure is a normal outcome.
RoundOutcome run_round(Oracle& game, const CandidateState& state,
                       const StrategyConfig& config, Rng& rng);

/// Removes r_i from C_i exactly at positions in 0-blocks where |C_i| is
/// still above the k'/2 floor and r_i was not already gone.
void apply_round(CandidateState& state, const Code& sample,
                 const std::vector<int>& zero_blocks);

/// Per-position wrap-up: for all but one candidate c at position i, query
/// the code that shows dummies everywhere except c at i; the answer is 1
/// exactly when the secret holds c there. Stops probing a position on a
/// 1-answer; if every tested candidate answers 0, the untested one is it.
/// At most sum_i (|C_i| - 1) queries.
Code endgame_per_position(Oracle& game, const CandidateState& state);

/// Test/simulation hooks; after_round fires once per round, post-update.
struct AdaptiveHooks {
    std::function<void(const CandidateState&, const PaddedOracle&)> after_round;
};

/// Core solver over per-position alphabets (all listed colors must be valid
/// inner colors; each alphabet must contain the secret's color). Positions
/// with singleton alphabets are fixed up front; the rest are padded to
/// power-of-two sizes and solved by phases plus the endgame.
///
/// `dummy_index`, when given, supplies a known-wrong alphabet entry per
/// position and skips the preamble; otherwise a preamble over each
/// position's first two alphabet entries finds one.
Code solve_black_product(Oracle& inner,
                         const std::vector<std::vector<Color>>& alphabets,
                         const StrategyConfig& config, Rng& rng,
                         const std::optional<std::vector<int>>& dummy_index,
                         const AdaptiveHooks& hooks = {});

/// The composite adaptive strategy: dummy-color preamble, monochromatic
/// color reduction when k > n, power-of-two padding, candidate-halving
/// phases driven by coin-weighing rounds, and the per-position endgame.
/// Returns the exact secret and the total query count.
SolveResult solve_adaptive(Oracle& oracle, int n, int k,
                           const StrategyConfig& config = {},
                           const AdaptiveHooks& hooks = {});

/// Baseline: guess uniformly from the full code space (the distribution
/// never adapts); a 0-answer eliminates the guessed color at every
/// position; stop once every candidate set is a singleton (or a guess
/// matches outright). Meant for k on the order of n, where 0-answers keep
/// constant probability (1 - 1/k)^n; with k much smaller than n they
/// become exponentially rare and the run crawls.
SolveResult solve_random_guessing(Oracle& oracle, int n, int k, Rng& rng);

/// Smallest power of two >= value (value >= 1).
int next_pow2(int value);

} // namespace mastermind
