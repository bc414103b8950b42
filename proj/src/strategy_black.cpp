#include "mastermind/strategy_black.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mastermind {

void StrategyConfig::validate() const {
    if (weighing_budget <= 0.0)
        throw std::invalid_argument("config: weighing budget must be positive");
    if (endgame_threshold < 2)
        throw std::invalid_argument("config: endgame threshold must be at least 2");
    if (round_cap_factor < 1)
        throw std::invalid_argument("config: round cap factor must be at least 1");
}

int next_pow2(int value) {
    int p = 1;
    while (p < value) p *= 2;
    return p;
}

DummyScan find_dummy_colors(Oracle& oracle, int n, int k) {
    if (k < 2) throw std::invalid_argument("find_dummy_colors: needs at least two colors");
    DummyScan out;
    out.dummies.assign(static_cast<std::size_t>(n), 0);
    Code probe = repeated(n, 1);
    int prev = oracle.query(probe).black;
    for (int i = 0; i < n; ++i) {
        probe[static_cast<std::size_t>(i)] = 2;
        const int cur = oracle.query(probe).black;
        const int diff = cur - prev;
        if (diff == 1) {
            out.twos.push_back(i);
            out.dummies[static_cast<std::size_t>(i)] = 1;
        } else if (diff == -1) {
            out.ones.push_back(i);
            out.dummies[static_cast<std::size_t>(i)] = 2;
        } else if (diff == 0) {
            out.dummies[static_cast<std::size_t>(i)] = 1;
        } else {
            throw inconsistent_answers("answers inconsistent with any code");
        }
        prev = cur;
    }
    return out;
}

std::vector<int> reduce_k_monochromatic(Oracle& oracle, int n, int k) {
    std::vector<int> counts(static_cast<std::size_t>(k) + 1, 0);
    for (Color c = 1; c <= k; ++c)
        counts[static_cast<std::size_t>(c)] = oracle.query(repeated(n, c)).black;
    return counts;
}

// ---------------------------------------------------------------------------
// PaddedOracle

namespace {

int padded_color_count(const std::vector<std::vector<Color>>& alphabets) {
    int widest = 0;
    for (const auto& a : alphabets) widest = std::max(widest, static_cast<int>(a.size()));
    return next_pow2(std::max(widest, 2));
}

} // namespace

PaddedOracle::PaddedOracle(Oracle& inner,
                           std::vector<int> active_positions,
                           std::vector<std::vector<Color>> alphabets,
                           std::vector<int> dummy_index,
                           std::vector<std::pair<int, Color>> fills)
    : Oracle(next_pow2(static_cast<int>(active_positions.size())),
             padded_color_count(alphabets), AnswerMode::black_only),
      inner_(&inner),
      actives_(std::move(active_positions)),
      alphabets_(std::move(alphabets)),
      dummy_index_(std::move(dummy_index)),
      fills_(std::move(fills)),
      inner_positions_(inner.positions()) {
    if (actives_.empty())
        throw std::invalid_argument("padded oracle: needs an active position");
    if (alphabets_.size() != actives_.size() || dummy_index_.size() != actives_.size())
        throw std::invalid_argument("padded oracle: per-position data out of step");
    for (std::size_t t = 0; t < actives_.size(); ++t) {
        if (alphabets_[t].size() < 2)
            throw std::invalid_argument("padded oracle: active alphabets need two colors");
        if (dummy_index_[t] < 1 || dummy_index_[t] > static_cast<int>(alphabets_[t].size()))
            throw std::invalid_argument("padded oracle: dummy index out of range");
    }
    // Padded-game dummies: the known-wrong alphabet entry at active
    // positions, anything but the fixed extension color elsewhere.
    dummies_.assign(static_cast<std::size_t>(positions()), 2);
    for (std::size_t t = 0; t < actives_.size(); ++t)
        dummies_[t] = dummy_index_[t];
}

Code PaddedOracle::lower_guess(const Code& padded) const {
    Code inner(static_cast<std::size_t>(inner_positions_), 0);
    for (const auto& [pos, color] : fills_) inner[static_cast<std::size_t>(pos)] = color;
    for (std::size_t t = 0; t < actives_.size(); ++t) {
        const auto& alphabet = alphabets_[t];
        const Color c = padded[t];
        const int local = c <= static_cast<int>(alphabet.size()) ? c : dummy_index_[t];
        inner[static_cast<std::size_t>(actives_[t])] = alphabet[static_cast<std::size_t>(local) - 1];
    }
    return inner;
}

Answer PaddedOracle::respond(const Code& padded) {
    int black = inner_->query(lower_guess(padded)).black - static_cast<int>(fills_.size());
    for (int i = active_count(); i < positions(); ++i)
        black += (padded[static_cast<std::size_t>(i)] == 1);
    return Answer{black, std::nullopt};
}

Code PaddedOracle::lift_secret(const Code& inner_secret) const {
    Code padded(static_cast<std::size_t>(positions()), 1);
    for (std::size_t t = 0; t < actives_.size(); ++t) {
        const auto& alphabet = alphabets_[t];
        const Color real = inner_secret[static_cast<std::size_t>(actives_[t])];
        const auto it = std::find(alphabet.begin(), alphabet.end(), real);
        if (it == alphabet.end())
            throw std::logic_error("padded oracle: secret color missing from its alphabet");
        padded[t] = static_cast<Color>(it - alphabet.begin()) + 1;
    }
    return padded;
}

Code PaddedOracle::restore_secret(const Code& padded_secret) const {
    Code inner(static_cast<std::size_t>(inner_positions_), 0);
    for (const auto& [pos, color] : fills_) inner[static_cast<std::size_t>(pos)] = color;
    for (std::size_t t = 0; t < actives_.size(); ++t) {
        const Color c = padded_secret[t];
        if (c < 1 || c > static_cast<int>(alphabets_[t].size()))
            throw inconsistent_answers("answers inconsistent with any code");
        inner[static_cast<std::size_t>(actives_[t])] = alphabets_[t][static_cast<std::size_t>(c) - 1];
    }
    return inner;
}

PaddedOracle wrap_padded_oracle(Oracle& inner, int n, int k, const Code& dummies) {
    std::vector<int> actives(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) actives[static_cast<std::size_t>(i)] = i;
    std::vector<Color> identity(static_cast<std::size_t>(k));
    for (Color c = 1; c <= k; ++c) identity[static_cast<std::size_t>(c) - 1] = c;
    std::vector<int> dummy_index(dummies.begin(), dummies.end());
    return PaddedOracle(inner, std::move(actives),
                        std::vector<std::vector<Color>>(static_cast<std::size_t>(n), identity),
                        std::move(dummy_index));
}

// ---------------------------------------------------------------------------
// Candidate bookkeeping

ColorSet::ColorSet(int limit, bool full)
    : member_(static_cast<std::size_t>(limit) + 1, full ? 1 : 0), count_(full ? limit : 0) {
    member_[0] = 0;
}

bool ColorSet::erase(Color c) {
    auto& slot = member_[static_cast<std::size_t>(c)];
    if (!slot) return false;
    slot = 0;
    --count_;
    return true;
}

std::vector<Color> ColorSet::to_vector() const {
    std::vector<Color> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (std::size_t c = 1; c < member_.size(); ++c)
        if (member_[c]) out.push_back(static_cast<Color>(c));
    return out;
}

bool CandidateState::all_sets_at(int target) const {
    for (const auto& s : sets)
        if (s.size() != target) return false;
    return true;
}

CandidateState make_initial_state(const PaddedOracle& game) {
    CandidateState st;
    st.padded_positions = game.positions();
    st.padded_colors = game.colors();
    st.sets.assign(static_cast<std::size_t>(st.padded_positions),
                   ColorSet(st.padded_colors, true));
    st.dummies = game.dummy_code();
    return st;
}

void begin_phase(CandidateState& state) {
    state.phase += 1;
    state.phase_size = state.phase == 1 ? state.padded_colors : state.phase_size / 2;
    if (state.phase_size < 4)
        throw std::logic_error("phase: candidate width must be at least 4 for blocks");
    state.block_size = state.phase_size / 4;
    state.block_count = 4 * state.padded_positions / state.phase_size;
    state.sampling_sets.clear();
    state.sampling_sets.reserve(state.sets.size());
    for (const auto& s : state.sets) state.sampling_sets.push_back(s.to_vector());
}

RoundOutcome run_round(Oracle& game, const CandidateState& state,
                       const StrategyConfig& config, Rng& rng) {
    const int n = state.positions();
    const int m = state.block_count;
    RoundOutcome out;
    Code sample(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& pool = state.sampling_sets[static_cast<std::size_t>(i)];
        sample[static_cast<std::size_t>(i)] = pool[rng.below(pool.size())];
    }
    out.sample = sample;
    const int total = game.query(sample).black;
    out.queries_used = 1;
    if (total > m / 2) {
        out.status = RoundOutcome::Status::high_answer;
        return out;
    }

    const int count = default_weighing_count(m, config.weighing_budget);
    WeighingProblem problem;
    problem.coin_count = m;
    problem.total = total;
    problem.queries = sample_weighings(m, count, rng);
    problem.answers.reserve(static_cast<std::size_t>(count));
    Code masked(static_cast<std::size_t>(n));
    for (const auto& q : problem.queries) {
        for (int i = 0; i < n; ++i)
            masked[static_cast<std::size_t>(i)] =
                q.included[static_cast<std::size_t>(state.block_of(i))]
                    ? sample[static_cast<std::size_t>(i)]
                    : state.dummies[static_cast<std::size_t>(i)];
        problem.answers.push_back(game.query(masked).black);
        ++out.queries_used;
    }

    const auto weights = solve_weighing(problem, state.block_size);
    if (!weights) {
        out.status = RoundOutcome::Status::undetermined;
        return out;
    }
    for (int s = 0; s < m; ++s)
        if ((*weights)[static_cast<std::size_t>(s)] == 0) out.zero_blocks.push_back(s);
    out.status = RoundOutcome::Status::success;
    return out;
}

void apply_round(CandidateState& state, const Code& sample,
                 const std::vector<int>& zero_blocks) {
    const int floor = state.phase_size / 2;
    for (int s : zero_blocks) {
        const int begin = s * state.block_size;
        const int end = begin + state.block_size;
        for (int i = begin; i < end; ++i) {
            auto& set = state.sets[static_cast<std::size_t>(i)];
            if (set.size() > floor) set.erase(sample[static_cast<std::size_t>(i)]);
        }
    }
}

Code endgame_per_position(Oracle& game, const CandidateState& state) {
    const int n = state.positions();
    Code found(static_cast<std::size_t>(n), 0);
    Code probe = state.dummies;
    for (int i = 0; i < n; ++i) {
        const auto candidates = state.sets[static_cast<std::size_t>(i)].to_vector();
        if (candidates.empty())
            throw inconsistent_answers("answers inconsistent with any code");
        Color hit = 0;
        for (std::size_t t = 0; t + 1 < candidates.size() && hit == 0; ++t) {
            probe[static_cast<std::size_t>(i)] = candidates[t];
            const int answer = game.query(probe).black;
            if (answer == 1)
                hit = candidates[t];
            else if (answer != 0)
                throw inconsistent_answers("answers inconsistent with any code");
        }
        found[static_cast<std::size_t>(i)] = hit != 0 ? hit : candidates.back();
        probe[static_cast<std::size_t>(i)] = state.dummies[static_cast<std::size_t>(i)];
    }
    return found;
}

// ---------------------------------------------------------------------------
// Core solver over per-position alphabets

Code solve_black_product(Oracle& inner,
                         const std::vector<std::vector<Color>>& alphabets,
                         const StrategyConfig& config, Rng& rng,
                         const std::optional<std::vector<int>>& dummy_index,
                         const AdaptiveHooks& hooks) {
    config.validate();
    const int n = static_cast<int>(alphabets.size());
    std::vector<int> actives;
    std::vector<std::pair<int, Color>> fills;
    for (int i = 0; i < n; ++i) {
        if (alphabets[static_cast<std::size_t>(i)].empty())
            throw std::invalid_argument("solve: every position needs a candidate color");
        if (alphabets[static_cast<std::size_t>(i)].size() == 1)
            fills.emplace_back(i, alphabets[static_cast<std::size_t>(i)][0]);
        else
            actives.push_back(i);
    }
    if (actives.empty()) {
        Code done(static_cast<std::size_t>(n), 0);
        for (const auto& [pos, color] : fills) done[static_cast<std::size_t>(pos)] = color;
        return done;
    }

    std::vector<std::vector<Color>> act_alpha;
    act_alpha.reserve(actives.size());
    for (int i : actives) act_alpha.push_back(alphabets[static_cast<std::size_t>(i)]);

    std::vector<int> act_dummy(actives.size(), 0);
    if (dummy_index) {
        for (std::size_t t = 0; t < actives.size(); ++t)
            act_dummy[t] = (*dummy_index)[static_cast<std::size_t>(actives[t])];
    } else {
        // Preamble over each position's first two alphabet entries.
        Code probe(static_cast<std::size_t>(n), 0);
        for (const auto& [pos, color] : fills) probe[static_cast<std::size_t>(pos)] = color;
        for (std::size_t t = 0; t < actives.size(); ++t)
            probe[static_cast<std::size_t>(actives[t])] = act_alpha[t][0];
        int prev = inner.query(probe).black;
        for (std::size_t t = 0; t < actives.size(); ++t) {
            probe[static_cast<std::size_t>(actives[t])] = act_alpha[t][1];
            const int cur = inner.query(probe).black;
            const int diff = cur - prev;
            if (diff < -1 || diff > 1)
                throw inconsistent_answers("answers inconsistent with any code");
            act_dummy[t] = diff == -1 ? 2 : 1;
            prev = cur;
        }
    }

    PaddedOracle game(inner, actives, std::move(act_alpha), std::move(act_dummy),
                      std::move(fills));
    CandidateState state = make_initial_state(game);
    const int padded_n = game.positions();
    const int padded_k = game.colors();
    const double stop = std::max(std::sqrt(static_cast<double>(padded_n)),
                                 static_cast<double>(config.endgame_threshold));

    // Blocks need m = 4n/k' >= 1; a game with very few positions but wide
    // alphabets goes straight to the probe endgame.
    if (padded_k <= 4 * padded_n) {
        int width = padded_k;
        while (static_cast<double>(width) > stop) {
            begin_phase(state);
            const long cap = static_cast<long>(config.round_cap_factor) * 64L * width;
            long rounds = 0;
            bool capped = false;
            while (!state.all_sets_at(width / 2)) {
                if (++rounds > cap) {
                    capped = true;
                    break;
                }
                const RoundOutcome outcome = run_round(game, state, config, rng);
                if (outcome.status == RoundOutcome::Status::success)
                    apply_round(state, outcome.sample, outcome.zero_blocks);
                if (hooks.after_round) hooks.after_round(state, game);
            }
            if (capped) break;
            width /= 2;
        }
    }

    const Code padded_secret = endgame_per_position(game, state);
    return game.restore_secret(padded_secret);
}

// ---------------------------------------------------------------------------
// Whole-game strategies

SolveResult solve_adaptive(Oracle& oracle, int n, int k,
                           const StrategyConfig& config, const AdaptiveHooks& hooks) {
    config.validate();
    if (n < 1) throw std::invalid_argument("solve_adaptive: need a position");
    if (k < 2) throw std::invalid_argument("solve_adaptive: need two colors");
    const int start = oracle.query_count();
    Rng rng(config.seed);
    const DummyScan scan = find_dummy_colors(oracle, n, k);

    Code secret;
    if (k > n) {
        const auto counts = reduce_k_monochromatic(oracle, n, k);
        std::vector<Color> live;
        for (Color c = 1; c <= k; ++c)
            if (counts[static_cast<std::size_t>(c)] > 0) live.push_back(c);
        if (live.size() == 1) {
            secret = repeated(n, live[0]);
        } else {
            // Live colors plus, per position, the preamble dummy as a final
            // known-wrong slot (there may be no in-alphabet color known
            // wrong when |live| is an exact power of two).
            std::vector<std::vector<Color>> alphabets(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                alphabets[static_cast<std::size_t>(i)] = live;
                alphabets[static_cast<std::size_t>(i)].push_back(
                    scan.dummies[static_cast<std::size_t>(i)]);
            }
            const std::vector<int> dummy_index(static_cast<std::size_t>(n),
                                               static_cast<int>(live.size()) + 1);
            secret = solve_black_product(oracle, alphabets, config, rng, dummy_index, hooks);
        }
    } else {
        std::vector<Color> identity(static_cast<std::size_t>(k));
        for (Color c = 1; c <= k; ++c) identity[static_cast<std::size_t>(c) - 1] = c;
        const std::vector<std::vector<Color>> alphabets(static_cast<std::size_t>(n), identity);
        const std::vector<int> dummy_index(scan.dummies.begin(), scan.dummies.end());
        secret = solve_black_product(oracle, alphabets, config, rng, dummy_index, hooks);
    }
    return {std::move(secret), oracle.query_count() - start};
}

namespace {

/// Candidate pool with O(1) membership, removal, and uniform sampling.
struct SampledSet {
    std::vector<Color> items;
    std::vector<int> where; // color -> index in items, or -1

    SampledSet(int k) : items(static_cast<std::size_t>(k)), where(static_cast<std::size_t>(k) + 1) {
        for (Color c = 1; c <= k; ++c) {
            items[static_cast<std::size_t>(c) - 1] = c;
            where[static_cast<std::size_t>(c)] = c - 1;
        }
    }

    bool erase(Color c) {
        const int at = where[static_cast<std::size_t>(c)];
        if (at < 0 || items.size() == 1) return false;
        const Color last = items.back();
        items[static_cast<std::size_t>(at)] = last;
        where[static_cast<std::size_t>(last)] = at;
        items.pop_back();
        where[static_cast<std::size_t>(c)] = -1;
        return true;
    }
};

} // namespace

SolveResult solve_random_guessing(Oracle& oracle, int n, int k, Rng& rng) {
    if (n < 1) throw std::invalid_argument("solve_random_guessing: need a position");
    if (k < 1) throw std::invalid_argument("solve_random_guessing: need a color");
    const int start = oracle.query_count();
    std::vector<SampledSet> sets(static_cast<std::size_t>(n), SampledSet(k));
    int undecided = (k > 1) ? n : 0;

    // Guesses keep the fixed uniform distribution over the whole code space;
    // a 0-answer then excludes, at every position, a color uniform over that
    // position's wrong colors (possibly one already gone). Sampling from the
    // shrinking candidate product instead would drive the 0-answer
    // probability to prod_i (1 - 1/|C_i|), which collapses exponentially as
    // the sets approach singletons and stalls the endgame.
    Code guess(static_cast<std::size_t>(n));
    while (undecided > 0) {
        for (int i = 0; i < n; ++i)
            guess[static_cast<std::size_t>(i)] = rng.uniform_int(1, k);
        const int answer = oracle.query(guess).black;
        if (answer == n) return {guess, oracle.query_count() - start};
        if (answer == 0)
            for (int i = 0; i < n; ++i) {
                auto& set = sets[static_cast<std::size_t>(i)];
                if (set.erase(guess[static_cast<std::size_t>(i)]) && set.items.size() == 1)
                    --undecided;
            }
    }
    Code secret(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) secret[static_cast<std::size_t>(i)] = sets[static_cast<std::size_t>(i)].items[0];
    return {std::move(secret), oracle.query_count() - start};
}

} // namespace mastermind
