#include "mastermind/oracle.hpp"

namespace mastermind {

Oracle::Oracle(int positions, int colors, AnswerMode mode)
    : positions_(positions), colors_(colors), mode_(mode) {
    if (positions < 1) throw std::invalid_argument("oracle: need at least one position");
    if (colors < 1) throw std::invalid_argument("oracle: need at least one color");
}

void Oracle::check_guess(const Code& guess) const {
    if (static_cast<int>(guess.size()) != positions_)
        throw std::invalid_argument("oracle: guess length does not match the game");
    for (Color c : guess)
        if (c < 1 || c > colors_)
            throw std::invalid_argument("oracle: guess color out of range");
}

Answer Oracle::query(const Code& guess) {
    check_guess(guess);
    Answer answer = respond(guess);
    ++query_count_;
    if (record_) transcript_.entries.emplace_back(guess, answer);
    return answer;
}

SecretOracle::SecretOracle(Code secret, int colors, AnswerMode mode)
    : Oracle(static_cast<int>(secret.size()), colors, mode), secret_(std::move(secret)) {
    for (Color c : secret_)
        if (c < 1 || c > colors)
            throw std::invalid_argument("oracle: secret color out of range");
}

Answer SecretOracle::respond(const Code& guess) {
    Answer answer;
    answer.black = black_answer(secret_, guess);
    if (mode() == AnswerMode::black_and_white)
        answer.white = white_answer(secret_, guess);
    return answer;
}

} // namespace mastermind
