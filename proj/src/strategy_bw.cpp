#include "mastermind/strategy_bw.hpp"

#include <algorithm>
#include <stdexcept>

namespace mastermind {

int color_query(Oracle& bw, std::vector<Color> colors, int ones_count, int n) {
    if (static_cast<int>(colors.size()) > n)
        throw std::invalid_argument("color_query: set larger than the board");
    std::sort(colors.begin(), colors.end());
    if (std::adjacent_find(colors.begin(), colors.end()) != colors.end())
        throw std::invalid_argument("color_query: duplicate color in the set");
    const bool has_one = !colors.empty() && colors.front() == 1;
    const int size = static_cast<int>(colors.size());
    const int slack = n - size;

    Code guess = std::move(colors);
    guess.resize(static_cast<std::size_t>(n), 1); // fillers last
    const Answer answer = bw.query(guess);
    if (!answer.white)
        throw std::logic_error("color_query: needs black-and-white answers");
    const int y = answer.black + *answer.white;
    const int adjust = (!has_one || ones_count == 0)
                           ? std::min(slack, ones_count)
                           : std::min(slack, ones_count - 1);
    const int result = y - adjust;
    if (result < 0 || result > size)
        throw inconsistent_answers("answers inconsistent with any code");
    return result;
}

ColorUniverse learn_counts_and_superset(Oracle& bw, int n, int k, int ones_count) {
    ColorUniverse universe;
    universe.ones_count = ones_count;
    for (Color lo = 1; lo <= k; lo += n) {
        const Color hi = std::min(lo + n - 1, k);
        std::vector<Color> part;
        part.reserve(static_cast<std::size_t>(hi - lo) + 1);
        for (Color c = lo; c <= hi; ++c) part.push_back(c);
        const int found = color_query(bw, part, ones_count, n);
        universe.star_count += found;
        if (found > 0)
            universe.live.insert(universe.live.end(), part.begin(), part.end());
    }
    return universe;
}

ColorPartition partition_colors(Oracle& bw, std::vector<Color> pool,
                                int secret_count, int ones_count, Rng& rng) {
    const int n = bw.positions();
    ColorPartition out;
    long draws_left = 1000 + 200L * secret_count;
    while (secret_count > 0) {
        if (--draws_left < 0)
            throw inconsistent_answers("answers inconsistent with any code");
        std::size_t want =
            (pool.size() + static_cast<std::size_t>(secret_count) - 1) /
            static_cast<std::size_t>(secret_count);
        if (want > pool.size()) want = pool.size();
        if (want > static_cast<std::size_t>(n)) want = static_cast<std::size_t>(n);
        std::vector<Color> drawn = rng.sample(pool, want);
        if (color_query(bw, drawn, ones_count, n) != 1) continue;
        std::sort(drawn.begin(), drawn.end());
        std::erase_if(pool, [&](Color c) {
            return std::binary_search(drawn.begin(), drawn.end(), c);
        });
        out.part_bound = std::max(out.part_bound, static_cast<int>(drawn.size()));
        out.parts.push_back(std::move(drawn));
        --secret_count;
    }
    return out;
}

namespace {

/// Virtual black-peg game with one position per part: the answer to a guess
/// is the color query of its symbols (parts are disjoint and each holds
/// exactly one secret color, so the count equals the positional matches).
class PartOracle final : public Oracle {
public:
    PartOracle(Oracle& bw, const std::vector<std::vector<Color>>& parts, int ones_count)
        : Oracle(static_cast<int>(parts.size()), widest_color(parts), AnswerMode::black_only),
          bw_(&bw), ones_count_(ones_count) {}

private:
    static int widest_color(const std::vector<std::vector<Color>>& parts) {
        Color top = 1;
        for (const auto& p : parts)
            for (Color c : p) top = std::max(top, c);
        return top;
    }

    Answer respond(const Code& guess) override {
        std::vector<Color> colors(guess.begin(), guess.end());
        return Answer{color_query(*bw_, std::move(colors), ones_count_, bw_->positions()),
                      std::nullopt};
    }

    Oracle* bw_;
    int ones_count_;
};

} // namespace

std::vector<Color> identify_secret_colors(Oracle& bw, const ColorPartition& parts,
                                          int ones_count, const StrategyConfig& config,
                                          Rng& rng, const AdaptiveHooks& hooks) {
    PartOracle game(bw, parts.parts, ones_count);
    Code picked = solve_black_product(game, parts.parts, config, rng, std::nullopt, hooks);
    std::sort(picked.begin(), picked.end());
    return picked;
}

SolveResult solve_bw(Oracle& bw, int n, int k, const StrategyConfig& config,
                     const BwHooks& hooks) {
    config.validate();
    if (bw.mode() != AnswerMode::black_and_white)
        throw std::invalid_argument("solve_bw: needs a black-and-white oracle");
    const int start = bw.query_count();
    Rng rng(config.seed);

    const Answer first = bw.query(repeated(n, 1));
    if (first.white && *first.white != 0)
        throw inconsistent_answers("answers inconsistent with any code");
    const int ones_count = first.black;
    if (ones_count == n) return {repeated(n, 1), bw.query_count() - start};

    const ColorUniverse universe = learn_counts_and_superset(bw, n, k, ones_count);
    if (hooks.after_learn) hooks.after_learn(universe);
    if (universe.star_count < 1 || universe.live.empty())
        throw inconsistent_answers("answers inconsistent with any code");

    const ColorPartition parts =
        partition_colors(bw, universe.live, universe.star_count, ones_count, rng);
    if (hooks.after_partition) hooks.after_partition(parts);

    const std::vector<Color> secret_colors =
        identify_secret_colors(bw, parts, ones_count, config, rng, hooks.adaptive);
    if (hooks.after_identify) hooks.after_identify(secret_colors);

    Code code;
    if (secret_colors.size() == 1) {
        code = repeated(n, secret_colors[0]);
    } else {
        const std::vector<std::vector<Color>> alphabets(static_cast<std::size_t>(n),
                                                        secret_colors);
        code = solve_black_product(bw, alphabets, config, rng, std::nullopt, hooks.adaptive);
    }
    return {std::move(code), bw.query_count() - start};
}

BlackToBwOracle::BlackToBwOracle(Oracle& inner)
    : Oracle(inner.positions(), inner.colors(), AnswerMode::black_and_white),
      inner_(&inner), counts_(static_cast<std::size_t>(inner.colors()) + 1, 0) {
    const int n = inner.positions();
    const int k = inner.colors();
    int seen = 0;
    for (Color c = 1; c < k; ++c) {
        counts_[static_cast<std::size_t>(c)] = inner_->query(repeated(n, c)).black;
        seen += counts_[static_cast<std::size_t>(c)];
    }
    counts_[static_cast<std::size_t>(k)] = n - seen;
}

Answer BlackToBwOracle::respond(const Code& guess) {
    const int black = inner_->query(guess).black;
    std::vector<int> guess_counts(counts_.size(), 0);
    for (Color c : guess) ++guess_counts[static_cast<std::size_t>(c)];
    int common = 0;
    for (std::size_t c = 1; c < counts_.size(); ++c)
        common += std::min(counts_[c], guess_counts[c]);
    return Answer{black, common - black};
}

} // namespace mastermind
