// oracle.hpp -- the Codemaker interface: answers, transcripts, query counting

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mastermind/engine.hpp"

namespace mastermind {

enum class AnswerMode { black_only, black_and_white };

/// Ordered record of every (guess, answer) pair an oracle has served.
struct Transcript {
    std::vector<std::pair<Code, Answer>> entries;

    std::size_t size() const { return entries.size(); }
};

/// Raised when a sequence of answers cannot come from any secret code
/// (only possible with an unreliable answer source, e.g. a human).
struct inconsistent_answers : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Base class for every answer source. A query validates the guess, obtains
/// the answer, appends exactly one transcript entry (while recording, the
/// default), and increments the query counter by exactly one.
class Oracle {
public:
    Oracle(int positions, int colors, AnswerMode mode);
    virtual ~Oracle() = default;

    Answer query(const Code& guess);

    int positions() const { return positions_; }
    int colors() const { return colors_; }
    AnswerMode mode() const { return mode_; }
    int query_count() const { return query_count_; }
    const Transcript& transcript() const { return transcript_; }

    /// Benchmark sweeps keep only the counters: a game far outside a
    /// strategy's intended regime can take tens of millions of queries,
    /// and storing every guess would exhaust memory. The counter runs
    /// either way.
    void record_transcript(bool on) { record_ = on; }

protected:
    virtual Answer respond(const Code& guess) = 0;

    /// Throws std::invalid_argument for malformed guesses.
    virtual void check_guess(const Code& guess) const;

private:
    int positions_;
    int colors_;
    AnswerMode mode_;
    int query_count_ = 0;
    bool record_ = true;
    Transcript transcript_;
};

/// Simulation Codemaker holding a hidden secret. Strategies only see the
/// answer interface; tests reach the secret through SimulationAccess.
class SecretOracle final : public Oracle {
public:
    SecretOracle(Code secret, int colors, AnswerMode mode);

    /// Explicit test/simulation gate for invariant checks such as z_i in C_i.
    struct SimulationAccess {
        static const Code& secret(const SecretOracle& oracle) { return oracle.secret_; }
    };

private:
    Answer respond(const Code& guess) override;

    Code secret_;
};

} // namespace mastermind
