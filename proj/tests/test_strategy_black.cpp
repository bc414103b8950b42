#include <doctest.h>

#include <algorithm>
#include <set>

#include "mastermind/strategy_black.hpp"

using namespace mastermind;

namespace {

/// Candidate state shaped by hand for round-level tests.
CandidateState handmade_state(int positions, int colors, int phase_size,
                              const std::vector<std::vector<Color>>& sampling,
                              const Code& dummies) {
    CandidateState st;
    st.padded_positions = positions;
    st.padded_colors = colors;
    st.sets.assign(static_cast<std::size_t>(positions), ColorSet(colors, true));
    st.phase = 1;
    st.phase_size = phase_size;
    st.block_size = phase_size / 4;
    st.block_count = 4 * positions / phase_size;
    st.sampling_sets = sampling;
    st.dummies = dummies;
    return st;
}

Code random_secret(int n, int k, Rng& rng) {
    Code z(static_cast<std::size_t>(n));
    for (auto& c : z) c = rng.uniform_int(1, k);
    return z;
}

} // namespace

TEST_SUITE("strategy_black") {

TEST_CASE("dummy-color preamble decodes answer differences") {
    SUBCASE("mixed colors") {
        SecretOracle oracle({2, 1, 2}, 3, AnswerMode::black_only);
        const DummyScan scan = find_dummy_colors(oracle, 3, 3);
        CHECK(scan.dummies == Code{1, 2, 1});
        CHECK(scan.ones == std::vector<int>{1});
        CHECK(scan.twos == std::vector<int>{0, 2});
        CHECK(oracle.query_count() == 4); // n + 1
    }
    SUBCASE("secret avoids colors 1 and 2") {
        SecretOracle oracle({3, 3, 3}, 3, AnswerMode::black_only);
        const DummyScan scan = find_dummy_colors(oracle, 3, 3);
        CHECK(scan.dummies == Code{1, 1, 1});
        CHECK(scan.ones.empty());
        CHECK(scan.twos.empty());
    }
    SUBCASE("all-ones secret") {
        SecretOracle oracle({1, 1}, 2, AnswerMode::black_only);
        const DummyScan scan = find_dummy_colors(oracle, 2, 2);
        CHECK(scan.dummies == Code{2, 2});
        CHECK(scan.ones == std::vector<int>{0, 1});
    }
    SUBCASE("needs two colors") {
        SecretOracle oracle({1, 1}, 1, AnswerMode::black_only);
        CHECK_THROWS_AS(find_dummy_colors(oracle, 2, 1), std::invalid_argument);
    }
}

TEST_CASE("dummies are never the secret color") {
    Rng rng(555);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = rng.uniform_int(1, 9);
        const int k = rng.uniform_int(2, 9);
        const Code z = random_secret(n, k, rng);
        SecretOracle oracle(z, k, AnswerMode::black_only);
        const DummyScan scan = find_dummy_colors(oracle, n, k);
        for (int i = 0; i < n; ++i)
            REQUIRE(scan.dummies[static_cast<std::size_t>(i)] != z[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("padded game: extension positions answer for themselves") {
    const Code z{3, 1, 2};
    SecretOracle oracle(z, 4, AnswerMode::black_only);
    const DummyScan scan = find_dummy_colors(oracle, 3, 4);
    PaddedOracle game = wrap_padded_oracle(oracle, 3, 4, scan.dummies);
    CHECK(game.positions() == 4);
    CHECK(game.colors() == 4);
    // The extension slot holds the fixed color 1: matching it adds one peg.
    const int with_match = game.query({3, 1, 2, 1}).black;
    const int without = game.query({3, 1, 2, 2}).black;
    CHECK(with_match == 4);
    CHECK(without == 3);
    // One outer query forwarded exactly one inner query.
    CHECK(oracle.query_count() == 4 + 2);
}

TEST_CASE("padded game: out-of-range colors land on dummies") {
    const Code z{2, 3};
    SecretOracle oracle(z, 5, AnswerMode::black_only);
    const DummyScan scan = find_dummy_colors(oracle, 2, 5);
    PaddedOracle game = wrap_padded_oracle(oracle, 2, 5, scan.dummies);
    CHECK(game.colors() == 8);
    // Color 7 exceeds the real range, so position 0 shows its dummy: no peg.
    Code probe{7, 3};
    CHECK(game.query(probe).black == 1);
    CHECK(game.lower_guess(probe)[0] == scan.dummies[0]);
}

TEST_CASE("padded game is the identity at power-of-two sizes") {
    const Code z{4, 1, 3, 2};
    SecretOracle oracle(z, 4, AnswerMode::black_only);
    PaddedOracle game = wrap_padded_oracle(oracle, 4, 4, {2, 2, 1, 1});
    CHECK(game.positions() == 4);
    CHECK(game.colors() == 4);
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const Code g = random_secret(4, 4, rng);
        REQUIRE(game.query(g).black == black_answer(z, g));
    }
    CHECK(game.lift_secret(z) == z);
    CHECK(game.restore_secret(z) == z);
}

TEST_CASE("monochromatic sweep counts every color") {
    SUBCASE("small fixed games") {
        SecretOracle a({3, 3}, 4, AnswerMode::black_only);
        CHECK(reduce_k_monochromatic(a, 2, 4) == std::vector<int>{0, 0, 0, 2, 0});
        SecretOracle b({1, 2}, 3, AnswerMode::black_only);
        CHECK(reduce_k_monochromatic(b, 2, 3) == std::vector<int>{0, 1, 1, 0});
        CHECK(b.query_count() == 3); // k queries
    }
    SUBCASE("counts sum to the board size") {
        Rng rng(321);
        for (int trial = 0; trial < 30; ++trial) {
            const int n = rng.uniform_int(1, 8);
            const int k = rng.uniform_int(2, 12);
            SecretOracle oracle(random_secret(n, k, rng), k, AnswerMode::black_only);
            const auto counts = reduce_k_monochromatic(oracle, n, k);
            int sum = 0;
            for (int c : counts) sum += c;
            REQUIRE(sum == n);
        }
    }
}

TEST_CASE("round gives up after one query on a high answer") {
    const Code z{1, 2, 3, 4};
    SecretOracle oracle(z, 4, AnswerMode::black_only);
    // Sampling sets pinned to the secret itself: the answer is n > m/2.
    std::vector<std::vector<Color>> sampling{{1}, {2}, {3}, {4}};
    const CandidateState st = handmade_state(4, 4, 4, sampling, {2, 1, 1, 1});
    StrategyConfig config;
    Rng rng(1);
    const RoundOutcome out = run_round(oracle, st, config, rng);
    CHECK(out.status == RoundOutcome::Status::high_answer);
    CHECK(out.queries_used == 1);
    CHECK(oracle.query_count() == 1);
}

TEST_CASE("a zero answer makes every block a 0-block") {
    const Code z{1, 2, 3, 4};
    SecretOracle oracle(z, 4, AnswerMode::black_only);
    // Sampling sets that miss the secret everywhere.
    std::vector<std::vector<Color>> sampling{{2}, {3}, {4}, {1}};
    const CandidateState st = handmade_state(4, 4, 4, sampling, {2, 1, 1, 1});
    StrategyConfig config;
    Rng rng(1);
    const RoundOutcome out = run_round(oracle, st, config, rng);
    REQUIRE(out.status == RoundOutcome::Status::success);
    CHECK(out.zero_blocks == std::vector<int>{0, 1, 2, 3});
    CHECK(out.queries_used == 1 + default_weighing_count(4, config.weighing_budget));
}

TEST_CASE("successful rounds name exactly the matchless blocks") {
    const int n = 16;
    Rng rng(20240416);
    const Code z = random_secret(n, n, rng);
    SecretOracle oracle(z, n, AnswerMode::black_only);
    const DummyScan scan = find_dummy_colors(oracle, n, n);
    PaddedOracle game = wrap_padded_oracle(oracle, n, n, scan.dummies);
    CandidateState st = make_initial_state(game);
    begin_phase(st);
    const Code lifted = game.lift_secret(z);

    StrategyConfig config;
    int successes = 0;
    for (int round = 0; round < 60 && successes < 8; ++round) {
        const RoundOutcome out = run_round(game, st, config, rng);
        if (out.status != RoundOutcome::Status::success) continue;
        ++successes;
        std::set<int> zero(out.zero_blocks.begin(), out.zero_blocks.end());
        for (int s = 0; s < st.block_count; ++s) {
            int matches = 0;
            for (int i = s * st.block_size; i < (s + 1) * st.block_size; ++i)
                matches += (out.sample[static_cast<std::size_t>(i)] ==
                            lifted[static_cast<std::size_t>(i)]);
            REQUIRE(zero.count(s) == static_cast<std::size_t>(matches == 0));
        }
        apply_round(st, out.sample, out.zero_blocks);
        for (int i = 0; i < st.positions(); ++i)
            REQUIRE(st.sets[static_cast<std::size_t>(i)].contains(
                lifted[static_cast<std::size_t>(i)]));
    }
    CHECK(successes >= 8);
}

TEST_CASE("updates respect the floor, prior removals, and single steps") {
    CandidateState st = handmade_state(4, 8, 8, {}, {2, 2, 2, 2});
    // block_size = 2, blocks {0,1} and {2,3}; floor is 4.
    const Code sample{5, 6, 7, 8};

    SUBCASE("at the floor nothing moves") {
        for (int step = 0; step < 4; ++step) {
            apply_round(st, {static_cast<Color>(5 + step), 6, 7, 8}, {0});
            // position 1 erased 6 only once; re-erase below
        }
        CHECK(st.sets[0].size() == 4);
        apply_round(st, {1, 1, 1, 1}, {0});
        CHECK(st.sets[0].size() == 4); // still at the floor
        CHECK(st.sets[0].contains(1));
    }
    SUBCASE("an already-removed color changes nothing") {
        apply_round(st, sample, {0});
        CHECK(st.sets[0].size() == 7);
        apply_round(st, sample, {0});
        CHECK(st.sets[0].size() == 7);
    }
    SUBCASE("one color per position per round") {
        apply_round(st, sample, {1});
        CHECK(st.sets[0].size() == 8);
        CHECK(st.sets[1].size() == 8);
        CHECK(st.sets[2].size() == 7);
        CHECK(st.sets[3].size() == 7);
        CHECK_FALSE(st.sets[2].contains(7));
    }
}

TEST_CASE("endgame probes positions one color at a time") {
    const Code z{4, 7};
    SecretOracle oracle(z, 8, AnswerMode::black_only);
    PaddedOracle game = wrap_padded_oracle(oracle, 2, 8, {1, 1});
    CandidateState st = make_initial_state(game);
    // Narrow the sets by hand: {4,7} at both positions.
    for (int i = 0; i < 2; ++i)
        for (Color c = 1; c <= 8; ++c)
            if (c != 4 && c != 7) st.sets[static_cast<std::size_t>(i)].erase(c);

    const Code found = endgame_per_position(game, st);
    CHECK(game.restore_secret(found) == z);
    // Position 0: probe 4 answers 1, stop. Position 1: probe 4 answers 0,
    // conclude 7 with no second probe.
    CHECK(game.query_count() == 2);
}

TEST_CASE("a probe scores one peg exactly when its color is the secret's") {
    // Exhaustive over all small games, positions, and candidate colors.
    for (int n = 1; n <= 4; ++n)
        for (int k = 2; k <= 4; ++k) {
            long space = 1;
            for (int i = 0; i < n; ++i) space *= k;
            for (long zi = 0; zi < space; ++zi) {
                Code z(static_cast<std::size_t>(n));
                long index = zi;
                for (int i = 0; i < n; ++i) {
                    z[static_cast<std::size_t>(i)] = static_cast<Color>(index % k) + 1;
                    index /= k;
                }
                SecretOracle oracle(z, k, AnswerMode::black_only);
                const DummyScan scan = find_dummy_colors(oracle, n, k);
                for (int i = 0; i < n; ++i)
                    for (Color c = 1; c <= k; ++c) {
                        Code probe = scan.dummies;
                        probe[static_cast<std::size_t>(i)] = c;
                        REQUIRE(black_answer(z, probe) ==
                                (z[static_cast<std::size_t>(i)] == c ? 1 : 0));
                    }
            }
        }
}

TEST_CASE("endgame flags answers outside the probe range") {
    struct LoudOracle final : Oracle {
        LoudOracle() : Oracle(2, 4, AnswerMode::black_only) {}
        Answer respond(const Code&) override { return Answer{3, std::nullopt}; }
    } oracle;
    CandidateState st;
    st.padded_positions = 2;
    st.padded_colors = 4;
    st.sets.assign(2, ColorSet(4, true));
    st.dummies = {1, 1};
    CHECK_THROWS_AS(endgame_per_position(oracle, st), inconsistent_answers);
}

TEST_CASE("product solver returns fixed singletons without queries") {
    SecretOracle oracle({2, 3}, 3, AnswerMode::black_only);
    StrategyConfig config;
    Rng rng(1);
    const Code out = solve_black_product(oracle, {{2}, {3}}, config, rng, std::nullopt);
    CHECK(out == Code{2, 3});
    CHECK(oracle.query_count() == 0);
}

TEST_CASE("adaptive strategy recovers handpicked secrets") {
    StrategyConfig config;
    config.seed = 11;
    SUBCASE("square game") {
        SecretOracle oracle({3, 1, 4, 2}, 4, AnswerMode::black_only);
        CHECK(solve_adaptive(oracle, 4, 4, config).code == Code{3, 1, 4, 2});
    }
    SUBCASE("two positions") {
        SecretOracle oracle({2, 1}, 2, AnswerMode::black_only);
        const SolveResult result = solve_adaptive(oracle, 2, 2, config);
        CHECK(result.code == Code{2, 1});
        CHECK(result.queries == oracle.query_count());
    }
    SUBCASE("single position") {
        SecretOracle oracle({2}, 3, AnswerMode::black_only);
        CHECK(solve_adaptive(oracle, 1, 3, config).code == Code{2});
    }
    SUBCASE("more colors than positions") {
        SecretOracle oracle({9, 2, 9, 4}, 11, AnswerMode::black_only);
        CHECK(solve_adaptive(oracle, 4, 11, config).code == Code{9, 2, 9, 4});
    }
    SUBCASE("live colors an exact power of two") {
        // Neither preamble color survives the monochromatic sweep.
        SecretOracle oracle({3, 4, 5, 6}, 8, AnswerMode::black_only);
        CHECK(solve_adaptive(oracle, 4, 8, config).code == Code{3, 4, 5, 6});
    }
    SUBCASE("monochromatic wide game") {
        SecretOracle oracle({7, 7, 7}, 9, AnswerMode::black_only);
        const SolveResult result = solve_adaptive(oracle, 3, 9, config);
        CHECK(result.code == Code{7, 7, 7});
        CHECK(result.queries == 4 + 9); // preamble plus the sweep settle it
    }
}

TEST_CASE("adaptive strategy sweep across shapes") {
    Rng rng(616);
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{
             {2, 2}, {3, 2}, {5, 3}, {7, 7}, {8, 8}, {16, 16}, {12, 5}, {5, 17}, {33, 6}}) {
        for (int trial = 0; trial < 5; ++trial) {
            const Code z = random_secret(n, k, rng);
            SecretOracle oracle(z, k, AnswerMode::black_only);
            StrategyConfig config;
            config.seed = rng.next();
            const SolveResult result = solve_adaptive(oracle, n, k, config);
            REQUIRE(result.code == z);
            REQUIRE(result.queries == oracle.query_count());
        }
    }
}

TEST_CASE("candidate sets keep the secret through every round") {
    Rng rng(31);
    for (int n : {16, 32}) {
        const Code z = random_secret(n, n, rng);
        SecretOracle oracle(z, n, AnswerMode::black_only);
        StrategyConfig config;
        config.seed = 5;
        AdaptiveHooks hooks;
        std::optional<Code> lifted;
        int rounds = 0;
        hooks.after_round = [&](const CandidateState& st, const PaddedOracle& game) {
            if (!lifted) lifted = game.lift_secret(z);
            ++rounds;
            for (int i = 0; i < st.positions(); ++i) {
                REQUIRE(st.sets[static_cast<std::size_t>(i)].contains(
                    (*lifted)[static_cast<std::size_t>(i)]));
                REQUIRE(st.sets[static_cast<std::size_t>(i)].size() >= st.phase_size / 2);
            }
        };
        CHECK(solve_adaptive(oracle, n, n, config, hooks).code == z);
        CHECK(rounds > 0);
    }
}

TEST_CASE("identical seeds replay identical transcripts") {
    const Code z{5, 2, 7, 7, 1, 4, 3, 8};
    Transcript first;
    for (int run = 0; run < 2; ++run) {
        SecretOracle oracle(z, 8, AnswerMode::black_only);
        StrategyConfig config;
        config.seed = 99;
        solve_adaptive(oracle, 8, 8, config);
        if (run == 0)
            first = oracle.transcript();
        else
            REQUIRE(first.entries == oracle.transcript().entries);
    }
}

TEST_CASE("a starved weighing budget still ends in the exact secret") {
    // With ~1 weighing per round most rounds stay undetermined; the phase
    // cap trips and the endgame finishes from partially thinned sets.
    Rng rng(12);
    const Code z = random_secret(16, 16, rng);
    SecretOracle oracle(z, 16, AnswerMode::black_only);
    StrategyConfig config;
    config.weighing_budget = 0.25;
    config.round_cap_factor = 1;
    config.seed = 3;
    CHECK(solve_adaptive(oracle, 16, 16, config).code == z);
}

TEST_CASE("a low endgame threshold drives phases into tiny blocks") {
    // Down to k' = 4 the blocks shrink to single positions; with more
    // colors than four times the positions there is exactly one block.
    Rng rng(606);
    StrategyConfig config;
    config.endgame_threshold = 2;
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{8, 8}, {2, 8}, {16, 4}}) {
        for (int trial = 0; trial < 3; ++trial) {
            const Code z = random_secret(n, k, rng);
            SecretOracle oracle(z, k, AnswerMode::black_only);
            config.seed = rng.next();
            REQUIRE(solve_adaptive(oracle, n, k, config).code == z);
        }
    }
}

TEST_CASE("strategy config validation") {
    StrategyConfig config;
    config.endgame_threshold = 1;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = {};
    config.round_cap_factor = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = {};
    config.weighing_budget = 0.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("cross-shape soak stays exact") {
    Rng meta(0xDEADBEEF);
    for (int trial = 0; trial < 250; ++trial) {
        const int n = meta.uniform_int(1, 48);
        const int k = meta.uniform_int(2, 64);
        Code z(static_cast<std::size_t>(n));
        for (auto& c : z) c = meta.uniform_int(1, k);
        StrategyConfig config;
        config.seed = meta.next();
        config.endgame_threshold = meta.uniform_int(2, 12);
        {
            SecretOracle oracle(z, k, AnswerMode::black_only);
            REQUIRE(solve_adaptive(oracle, n, k, config).code == z);
        }
        if (trial % 4 == 0 && 2 * k >= n) {
            SecretOracle oracle(z, k, AnswerMode::black_only);
            Rng rng(config.seed);
            REQUIRE(solve_random_guessing(oracle, n, k, rng).code == z);
        }
    }
}

TEST_CASE("random guessing identifies seeded secrets") {
    SUBCASE("single position") {
        SecretOracle oracle({2}, 2, AnswerMode::black_only);
        Rng rng(5);
        const SolveResult result = solve_random_guessing(oracle, 1, 2, rng);
        CHECK(result.code == Code{2});
        CHECK(result.queries >= 1);
    }
    SUBCASE("square game") {
        Rng rng(17);
        const Code z = random_secret(16, 16, rng);
        SecretOracle oracle(z, 16, AnswerMode::black_only);
        const SolveResult result = solve_random_guessing(oracle, 16, 16, rng);
        CHECK(result.code == z);
        CHECK(result.queries == oracle.query_count());
    }
    SUBCASE("full match returns immediately") {
        // k = 1 forces the very first guess to hit.
        SecretOracle oracle({1, 1, 1}, 1, AnswerMode::black_only);
        Rng rng(2);
        const SolveResult result = solve_random_guessing(oracle, 3, 1, rng);
        CHECK(result.code == Code{1, 1, 1});
        CHECK(result.queries <= 1);
    }
}

} // TEST_SUITE
