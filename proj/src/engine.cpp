#include "mastermind/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace mastermind {

int black_answer(const Code& secret, const Code& guess) {
    if (secret.size() != guess.size())
        throw std::invalid_argument("black_answer: codes differ in length");
    int black = 0;
    for (std::size_t i = 0; i < secret.size(); ++i)
        black += (secret[i] == guess[i]);
    return black;
}

int white_answer(const Code& secret, const Code& guess) {
    if (secret.size() != guess.size())
        throw std::invalid_argument("white_answer: codes differ in length");
    Color top = 0;
    for (Color c : secret) top = std::max(top, c);
    for (Color c : guess) top = std::max(top, c);
    std::vector<int> secret_counts(static_cast<std::size_t>(top) + 1, 0);
    std::vector<int> guess_counts(static_cast<std::size_t>(top) + 1, 0);
    for (Color c : secret) ++secret_counts[static_cast<std::size_t>(c)];
    for (Color c : guess) ++guess_counts[static_cast<std::size_t>(c)];
    int common = 0;
    for (Color c = 0; c <= top; ++c)
        common += std::min(secret_counts[static_cast<std::size_t>(c)],
                           guess_counts[static_cast<std::size_t>(c)]);
    return common - black_answer(secret, guess);
}

Code repeated(int length, Color color) {
    return Code(static_cast<std::size_t>(length), color);
}

} // namespace mastermind
