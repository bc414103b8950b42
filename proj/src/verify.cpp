#include "mastermind/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace mastermind {

namespace {

constexpr long kEnumerationCap = 10'000'000;

/// k^n, or kEnumerationCap+1 once it would pass the cap.
long code_space(int n, int k) {
    long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= k;
        if (total > kEnumerationCap) return kEnumerationCap + 1;
    }
    return total;
}

void require_enumerable(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("verify: empty game");
    if (code_space(n, k) > kEnumerationCap)
        throw std::invalid_argument("verify: instance too large to enumerate");
}

Code nth_code(long index, int n, int k) {
    Code code(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        code[static_cast<std::size_t>(i)] = static_cast<Color>(index % k) + 1;
        index /= k;
    }
    return code;
}

} // namespace

DifferencePattern::DifferencePattern(std::vector<int> pos, Code a, Code b)
    : positions(std::move(pos)), colors_a(std::move(a)), colors_b(std::move(b)) {
    if (positions.empty())
        throw std::invalid_argument("difference pattern: needs an index");
    if (positions.size() != colors_a.size() || positions.size() != colors_b.size())
        throw std::invalid_argument("difference pattern: lists out of step");
    for (std::size_t i = 0; i < positions.size(); ++i)
        if (colors_a[i] == colors_b[i])
            throw std::invalid_argument("difference pattern: lists must disagree everywhere");
}

int brute_force_white(const Code& secret, const Code& guess) {
    if (secret.size() != guess.size())
        throw std::invalid_argument("brute_force_white: codes differ in length");
    const int n = static_cast<int>(secret.size());
    if (n > 8) throw std::invalid_argument("brute_force_white: refused, n > 8");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = 0;
    do {
        int matched = 0;
        for (int i = 0; i < n; ++i)
            matched += (secret[static_cast<std::size_t>(i)] ==
                        guess[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
        best = std::max(best, matched);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best - black_answer(secret, guess);
}

bool splits(const DifferencePattern& pattern, const Code& query) {
    int with_a = 0;
    int with_b = 0;
    for (std::size_t t = 0; t < pattern.positions.size(); ++t) {
        const Color q = query[static_cast<std::size_t>(pattern.positions[t])];
        with_a += (q == pattern.colors_a[t]);
        with_b += (q == pattern.colors_b[t]);
    }
    return with_a != with_b;
}

bool is_identified(const QuerySet& queries, const Code& secret, int n, int k) {
    require_enumerable(n, k);
    const long space = code_space(n, k);
    std::vector<int> expected;
    expected.reserve(queries.size());
    for (const auto& q : queries) expected.push_back(black_answer(secret, q));
    for (long idx = 0; idx < space; ++idx) {
        const Code other = nth_code(idx, n, k);
        if (other == secret) continue;
        bool same = true;
        for (std::size_t j = 0; j < queries.size() && same; ++j)
            same = (black_answer(other, queries[j]) == expected[j]);
        if (same) return false;
    }
    return true;
}

bool identifies_all(const QuerySet& queries, int n, int k) {
    require_enumerable(n, k);
    const long space = code_space(n, k);
    if (space <= 1) return true;
    if (queries.empty()) return false;
    std::unordered_set<std::string> seen;
    seen.reserve(static_cast<std::size_t>(space));
    std::string signature;
    for (long idx = 0; idx < space; ++idx) {
        const Code code = nth_code(idx, n, k);
        signature.clear();
        for (const auto& q : queries)
            signature.push_back(static_cast<char>(black_answer(code, q)));
        if (!seen.insert(signature).second) return false;
    }
    return true;
}

bool splits_all_patterns(const QuerySet& queries, int n, int k) {
    require_enumerable(n, k);
    // Walks every nonempty index subset and every pair of disagreeing color
    // lists on it.
    std::vector<int> positions;
    for (int mask = 1; mask < (1 << n); ++mask) {
        positions.clear();
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) positions.push_back(i);
        const int d = static_cast<int>(positions.size());
        std::vector<Color> a(static_cast<std::size_t>(d), 1);
        std::vector<Color> b(static_cast<std::size_t>(d), 1);
        // Odometer over the d pairs (a_t, b_t), a_t != b_t.
        std::vector<int> pair_index(static_cast<std::size_t>(d), 0);
        const int pairs = k * (k - 1);
        for (;;) {
            for (int t = 0; t < d; ++t) {
                const int p = pair_index[static_cast<std::size_t>(t)];
                a[static_cast<std::size_t>(t)] = p / (k - 1) + 1;
                const int rest = p % (k - 1);
                b[static_cast<std::size_t>(t)] =
                    rest + 1 + (rest + 1 >= a[static_cast<std::size_t>(t)] ? 1 : 0);
            }
            const DifferencePattern pattern(positions, a, b);
            bool split = false;
            for (const auto& q : queries)
                if (splits(pattern, q)) {
                    split = true;
                    break;
                }
            if (!split) return false;
            int t = 0;
            while (t < d && ++pair_index[static_cast<std::size_t>(t)] == pairs)
                pair_index[static_cast<std::size_t>(t++)] = 0;
            if (t == d) break;
        }
    }
    return true;
}

int identifying_set_size(int n, int k, double constant) {
    const double ratio = std::log2(static_cast<double>(n) / static_cast<double>(k));
    const double denom = std::max(ratio, 1.0);
    return static_cast<int>(std::ceil(constant * n * std::log2(static_cast<double>(k)) / denom));
}

std::optional<QuerySet> find_identifying_set(
    int n, int k, int set_size, Rng& rng, int attempts,
    const std::function<void(const QuerySet&, bool)>& on_attempt) {
    require_enumerable(n, k);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        QuerySet queries(static_cast<std::size_t>(set_size));
        for (auto& q : queries) {
            q.resize(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                q[static_cast<std::size_t>(i)] = rng.uniform_int(1, k);
        }
        const bool good = identifies_all(queries, n, k);
        if (on_attempt) on_attempt(queries, good);
        if (good) return queries;
    }
    return std::nullopt;
}

} // namespace mastermind
