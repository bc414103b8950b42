#include "mastermind/coinweigh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mastermind {

int default_weighing_count(int coin_count, double budget) {
    if (coin_count < 1) throw std::invalid_argument("default_weighing_count: need a coin");
    const double denom = std::log2(static_cast<double>(coin_count) + 2.0);
    return static_cast<int>(std::ceil(budget * coin_count / denom));
}

std::vector<WeighingQuery> sample_weighings(int coin_count, int count, Rng& rng) {
    std::vector<WeighingQuery> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        WeighingQuery q;
        q.included.resize(static_cast<std::size_t>(coin_count));
        for (int s = 0; s < coin_count; ++s) q.included[static_cast<std::size_t>(s)] = rng.coin();
        out.push_back(std::move(q));
    }
    return out;
}

int weigh(const std::vector<int>& weights, const WeighingQuery& query) {
    if (weights.size() != query.included.size())
        throw std::invalid_argument("weigh: weight vector and query differ in length");
    int sum = 0;
    for (std::size_t s = 0; s < weights.size(); ++s)
        if (query.included[s]) sum += weights[s];
    return sum;
}

namespace {

struct WeighingSearch {
    const WeighingProblem& problem;
    int bound;
    std::uint64_t node_budget;

    int coins;
    int query_count;
    std::vector<std::vector<int>> queries_with;    // queries containing coin s
    std::vector<std::vector<int>> queries_without; // queries excluding coin s
    // The total is known, so every weighing also pins its complement sum;
    // both sides carry a residual and an unassigned-member count.
    std::vector<int> in_res;
    std::vector<int> out_res;
    std::vector<int> in_free;
    std::vector<int> out_free;
    int residual_total = 0;
    int unassigned = 0;
    std::vector<signed char> assigned;
    std::vector<int> current;
    std::vector<int> first;
    int found = 0;
    bool aborted = false;
    std::uint64_t nodes = 0;

    WeighingSearch(const WeighingProblem& p, int b, std::uint64_t budget)
        : problem(p), bound(b), node_budget(budget),
          coins(p.coin_count), query_count(static_cast<int>(p.queries.size())) {}

    bool prepare() {
        queries_with.assign(static_cast<std::size_t>(coins), {});
        queries_without.assign(static_cast<std::size_t>(coins), {});
        in_free.assign(static_cast<std::size_t>(query_count), 0);
        out_free.assign(static_cast<std::size_t>(query_count), 0);
        for (int q = 0; q < query_count; ++q) {
            const auto& inc = problem.queries[static_cast<std::size_t>(q)].included;
            for (int s = 0; s < coins; ++s) {
                const bool in = inc[static_cast<std::size_t>(s)];
                (in ? queries_with[s] : queries_without[s]).push_back(q);
                ++(in ? in_free : out_free)[static_cast<std::size_t>(q)];
            }
        }
        in_res = problem.answers;
        out_res.resize(static_cast<std::size_t>(query_count));
        for (int q = 0; q < query_count; ++q) {
            out_res[q] = problem.total - in_res[q];
            if (in_res[q] < 0 || in_res[q] > bound * in_free[q]) return false;
            if (out_res[q] < 0 || out_res[q] > bound * out_free[q]) return false;
        }
        residual_total = problem.total;
        if (residual_total < 0 || residual_total > bound * coins) return false;
        unassigned = coins;
        assigned.assign(static_cast<std::size_t>(coins), 0);
        current.assign(static_cast<std::size_t>(coins), 0);
        return true;
    }

    /// Remaining value range for an unassigned coin under the current
    /// residuals; empty (lo > hi) means the branch is dead.
    void range_of(int s, int& lo, int& hi) const {
        lo = std::max(0, residual_total - bound * (unassigned - 1));
        hi = std::min(bound, residual_total);
        for (int q : queries_with[s]) {
            lo = std::max(lo, in_res[q] - bound * (in_free[q] - 1));
            hi = std::min(hi, in_res[q]);
            if (lo > hi) return;
        }
        for (int q : queries_without[s]) {
            lo = std::max(lo, out_res[q] - bound * (out_free[q] - 1));
            hi = std::min(hi, out_res[q]);
            if (lo > hi) return;
        }
    }

    void descend() {
        if (++nodes > node_budget) {
            aborted = true;
            return;
        }
        if (unassigned == 0) {
            // The last assignment pins every residual to zero or dies first.
            if (++found == 1) first = current;
            return;
        }
        // Most-constrained coin first; forced coins (single-value ranges)
        // cascade without branching.
        int pick = -1;
        int pick_lo = 0;
        int pick_hi = 0;
        for (int s = 0; s < coins; ++s) {
            if (assigned[static_cast<std::size_t>(s)]) continue;
            int lo;
            int hi;
            range_of(s, lo, hi);
            if (lo > hi) return;
            if (pick < 0 || hi - lo < pick_hi - pick_lo) {
                pick = s;
                pick_lo = lo;
                pick_hi = hi;
                if (hi == lo) break;
            }
        }
        assigned[static_cast<std::size_t>(pick)] = 1;
        --unassigned;
        for (int v = pick_lo; v <= pick_hi; ++v) {
            current[static_cast<std::size_t>(pick)] = v;
            residual_total -= v;
            for (int q : queries_with[pick]) {
                in_res[q] -= v;
                --in_free[q];
            }
            for (int q : queries_without[pick]) {
                out_res[q] -= v;
                --out_free[q];
            }
            descend();
            residual_total += v;
            for (int q : queries_with[pick]) {
                in_res[q] += v;
                ++in_free[q];
            }
            for (int q : queries_without[pick]) {
                out_res[q] += v;
                ++out_free[q];
            }
            if (found >= 2 || aborted) break;
        }
        current[static_cast<std::size_t>(pick)] = 0;
        assigned[static_cast<std::size_t>(pick)] = 0;
        ++unassigned;
    }
};

} // namespace

namespace {

/// Success-only shortcut: when the weighings plus the total row have full
/// column rank over GF(2) (hence over the rationals), the real solution is
/// unique; solve in doubles, round, and verify exactly. Returns nullopt to
/// mean "decide by search", never "no solution".
std::optional<std::vector<int>> linear_shortcut(const WeighingProblem& p, int bound) {
    const int m = p.coin_count;
    const int rows = static_cast<int>(p.queries.size()) + 1;
    if (rows <= m) return std::nullopt;

    const int words = (m + 63) / 64;
    std::vector<std::vector<std::uint64_t>> bits(
        static_cast<std::size_t>(rows), std::vector<std::uint64_t>(static_cast<std::size_t>(words), 0));
    for (int r = 0; r + 1 < rows; ++r)
        for (int s = 0; s < m; ++s)
            if (p.queries[static_cast<std::size_t>(r)].included[static_cast<std::size_t>(s)])
                bits[r][static_cast<std::size_t>(s) / 64] |= 1ULL << (s % 64);
    for (int s = 0; s < m; ++s)
        bits[static_cast<std::size_t>(rows) - 1][static_cast<std::size_t>(s) / 64] |= 1ULL << (s % 64);

    int rank = 0;
    for (int col = 0; col < m && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (bits[r][static_cast<std::size_t>(col) / 64] >> (col % 64) & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt; // column rank short of m
        std::swap(bits[static_cast<std::size_t>(rank)], bits[static_cast<std::size_t>(pivot)]);
        for (int r = rank + 1; r < rows; ++r)
            if (bits[r][static_cast<std::size_t>(col) / 64] >> (col % 64) & 1)
                for (int w = 0; w < words; ++w)
                    bits[r][static_cast<std::size_t>(w)] ^= bits[static_cast<std::size_t>(rank)][static_cast<std::size_t>(w)];
        ++rank;
    }
    if (rank < m) return std::nullopt;

    // Dense elimination with partial pivoting on the augmented system.
    std::vector<std::vector<double>> a(static_cast<std::size_t>(rows),
                                       std::vector<double>(static_cast<std::size_t>(m) + 1, 0.0));
    for (int r = 0; r + 1 < rows; ++r) {
        for (int s = 0; s < m; ++s)
            a[r][static_cast<std::size_t>(s)] =
                p.queries[static_cast<std::size_t>(r)].included[static_cast<std::size_t>(s)] ? 1.0 : 0.0;
        a[r][static_cast<std::size_t>(m)] = p.answers[static_cast<std::size_t>(r)];
    }
    for (int s = 0; s <= m; ++s)
        a[static_cast<std::size_t>(rows) - 1][static_cast<std::size_t>(s)] =
            (s == m) ? static_cast<double>(p.total) : 1.0;

    for (int col = 0; col < m; ++col) {
        int pivot = col;
        for (int r = col + 1; r < rows; ++r)
            if (std::abs(a[r][static_cast<std::size_t>(col)]) >
                std::abs(a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)]))
                pivot = r;
        if (std::abs(a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)]) < 1e-9)
            return std::nullopt; // numerically shaky; let the search decide
        std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
        const double head = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int r = col + 1; r < rows; ++r) {
            const double factor = a[r][static_cast<std::size_t>(col)] / head;
            if (factor == 0.0) continue;
            for (int s = col; s <= m; ++s)
                a[r][static_cast<std::size_t>(s)] -= factor * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(s)];
        }
    }
    std::vector<double> x(static_cast<std::size_t>(m), 0.0);
    for (int col = m - 1; col >= 0; --col) {
        double acc = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(m)];
        for (int s = col + 1; s < m; ++s)
            acc -= a[static_cast<std::size_t>(col)][static_cast<std::size_t>(s)] * x[static_cast<std::size_t>(s)];
        x[static_cast<std::size_t>(col)] = acc / a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    }

    std::vector<int> candidate(static_cast<std::size_t>(m), 0);
    int sum = 0;
    for (int s = 0; s < m; ++s) {
        const double rounded = std::round(x[static_cast<std::size_t>(s)]);
        if (std::abs(x[static_cast<std::size_t>(s)] - rounded) > 0.25) return std::nullopt;
        const int v = static_cast<int>(rounded);
        if (v < 0 || v > bound) return std::nullopt;
        candidate[static_cast<std::size_t>(s)] = v;
        sum += v;
    }
    if (sum != p.total) return std::nullopt;
    for (std::size_t q = 0; q < p.queries.size(); ++q)
        if (weigh(candidate, p.queries[q]) != p.answers[q]) return std::nullopt;
    return candidate;
}

} // namespace

std::optional<std::vector<int>> solve_weighing(const WeighingProblem& problem,
                                               int per_coin_bound,
                                               std::uint64_t node_budget) {
    if (problem.queries.size() != problem.answers.size())
        throw std::invalid_argument("solve_weighing: queries and answers differ in length");
    for (const auto& q : problem.queries)
        if (static_cast<int>(q.included.size()) != problem.coin_count)
            throw std::invalid_argument("solve_weighing: query length does not match coin count");
    if (per_coin_bound < 0 || problem.total < 0) return std::nullopt;

    if (auto pinned = linear_shortcut(problem, per_coin_bound)) return pinned;

    WeighingSearch search(problem, per_coin_bound, node_budget);
    if (!search.prepare()) return std::nullopt;
    search.descend();
    if (search.aborted || search.found != 1) return std::nullopt;
    return search.first;
}

namespace {

void enumerate(const WeighingProblem& p, int bound, int stop_after,
               std::vector<int>& v, int s, int& hits) {
    if (hits >= stop_after) return;
    if (s == p.coin_count) {
        int sum = 0;
        for (int w : v) sum += w;
        if (sum != p.total) return;
        for (std::size_t q = 0; q < p.queries.size(); ++q)
            if (weigh(v, p.queries[q]) != p.answers[q]) return;
        ++hits;
        return;
    }
    for (int w = 0; w <= bound; ++w) {
        v[static_cast<std::size_t>(s)] = w;
        enumerate(p, bound, stop_after, v, s + 1, hits);
    }
    v[static_cast<std::size_t>(s)] = 0;
}

} // namespace

int count_consistent_weighings(const WeighingProblem& problem, int per_coin_bound,
                               int stop_after) {
    std::vector<int> v(static_cast<std::size_t>(problem.coin_count), 0);
    int hits = 0;
    enumerate(problem, per_coin_bound, stop_after, v, 0, hits);
    return hits;
}

} // namespace mastermind
