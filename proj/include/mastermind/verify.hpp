// verify.hpp -- brute-force oracles and checkers: the permutation definition
// of white pegs, difference-pattern splitting, and non-adaptive
// identifiability at tiny scale

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mastermind/engine.hpp"
#include "mastermind/rng.hpp"

namespace mastermind {

/// An index set with two disagreeing color lists, abstracting a pair of
/// secrets. Construction enforces colors_a[i] != colors_b[i] and |I| >= 1.
struct DifferencePattern {
    std::vector<int> positions;
    Code colors_a;
    Code colors_b;

    DifferencePattern(std::vector<int> positions, Code colors_a, Code colors_b);
};

using QuerySet = std::vector<Code>;

/// Definitional white-peg count: max over all position matchings, by full
/// permutation enumeration. Refuses n > 8 (test oracle, factorial cost).
int brute_force_white(const Code& secret, const Code& guess);

/// True iff the query matches the pattern's two color lists unequally.
bool splits(const DifferencePattern& pattern, const Code& query);

/// True iff no other secret gives the same answer vector as `secret` on
/// every query. Refuses instances with k^n > 10^7.
bool is_identified(const QuerySet& queries, const Code& secret, int n, int k);

/// True iff the query set identifies every secret in [k]^n (all answer
/// vectors distinct). Same size guard as is_identified.
bool identifies_all(const QuerySet& queries, int n, int k);

/// Equivalent formulation: every difference pattern of every size is split
/// by some query. Only used to cross-check identifies_all at tiny scale.
bool splits_all_patterns(const QuerySet& queries, int n, int k);

/// Query-set size prescribed for non-adaptive identification,
/// ceil(C * n * log2(k) / max(log2(n/k), 1)).
int identifying_set_size(int n, int k, double constant);

/// Probabilistic-method search: up to `attempts` uniform random query sets
/// of the given size; returns the first passing identifies_all. The
/// optional callback sees every attempted set and whether it passed.
std::optional<QuerySet> find_identifying_set(
    int n, int k, int set_size, Rng& rng, int attempts,
    const std::function<void(const QuerySet&, bool)>& on_attempt = {});

} // namespace mastermind
