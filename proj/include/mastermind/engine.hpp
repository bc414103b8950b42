// engine.hpp -- codes, answers, and answer evaluation

#pragma once

#include <compare>
#include <optional>
#include <vector>

namespace mastermind {

/// Colors are 1-based integers. Color 0 is an internal "unset" sentinel and
/// never crosses an oracle boundary.
using Color = int;

/// A code is a fixed-length sequence of colors: the secret or a guess.
using Code = std::vector<Color>;

/// One reply from the Codemaker. `white` is absent in black-peg-only games.
struct Answer {
    int black = 0;
    std::optional<int> white;

    bool operator==(const Answer&) const = default;
};

/// Number of positions where the two codes agree exactly.
/// Throws std::invalid_argument on length mismatch.
int black_answer(const Code& secret, const Code& guess);

/// Number of additional pegs with the right color in the wrong position,
/// computed by the multiset-minimum closed form
///   sum_c min(count_c(secret), count_c(guess)) - black_answer.
/// The definitional maximum over position matchings is kept as a test
/// oracle in the verify module.
int white_answer(const Code& secret, const Code& guess);

/// Code of `length` copies of `color`.
Code repeated(int length, Color color);

} // namespace mastermind
