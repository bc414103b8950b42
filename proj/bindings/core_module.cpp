// core_module.cpp -- python bindings for the main operations

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mastermind/bench.hpp"
#include "mastermind/coinweigh.hpp"
#include "mastermind/strategy_black.hpp"
#include "mastermind/strategy_bw.hpp"
#include "mastermind/verify.hpp"

namespace py = pybind11;
using namespace mastermind;

namespace {

KRule parse_k_rule(const std::string& rule) {
    if (rule == "n") return KRule::equal_n;
    if (rule == "2n") return KRule::double_n;
    if (rule == "nsq") return KRule::square_n;
    if (rule == "fixed") return KRule::fixed;
    throw std::invalid_argument("unknown k rule: " + rule);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Mastermind query strategies: adaptive coin-weighing codebreaker, "
              "black/white composite, random guessing, and verification oracles";

    m.def("black_answer", &black_answer, py::arg("secret"), py::arg("guess"),
          "Positions where the two codes agree.");
    m.def("white_answer", &white_answer, py::arg("secret"), py::arg("guess"),
          "Additional right colors in wrong positions (multiset form).");
    m.def("brute_force_white", &brute_force_white, py::arg("secret"), py::arg("guess"),
          "Definitional white count by permutation enumeration (n <= 8).");

    m.def(
        "play",
        [](int n, int k, const std::string& strategy, std::uint64_t seed) {
            const BenchRecord r = run_game(n, k, strategy, seed, StrategyConfig{});
            py::dict out;
            out["n"] = r.n;
            out["k"] = r.k;
            out["strategy"] = r.strategy;
            out["seed"] = r.seed;
            out["queries"] = r.queries;
            out["success"] = r.success;
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("strategy") = "adaptive", py::arg("seed") = 1,
        "Simulate one seeded game; returns the record as a dict.");

    m.def(
        "solve_secret",
        [](const Code& secret, int k, const std::string& strategy, std::uint64_t seed) {
            StrategyConfig config;
            config.seed = seed;
            const int n = static_cast<int>(secret.size());
            SolveResult result;
            if (strategy == "adaptive") {
                SecretOracle oracle(secret, k, AnswerMode::black_only);
                result = solve_adaptive(oracle, n, k, config);
            } else if (strategy == "random-guess") {
                SecretOracle oracle(secret, k, AnswerMode::black_only);
                Rng rng(seed);
                result = solve_random_guessing(oracle, n, k, rng);
            } else if (strategy == "bw-composite") {
                SecretOracle oracle(secret, k, AnswerMode::black_and_white);
                result = solve_bw(oracle, n, k, config);
            } else {
                throw std::invalid_argument("unknown strategy: " + strategy);
            }
            return py::make_tuple(result.code, result.queries);
        },
        py::arg("secret"), py::arg("k"), py::arg("strategy") = "adaptive", py::arg("seed") = 1,
        "Run a codebreaker against a chosen secret; returns (code, queries).");

    m.def("default_weighing_count", &default_weighing_count, py::arg("coin_count"),
          py::arg("budget") = 8.0);
    m.def(
        "solve_weighing",
        [](int coin_count, int total, const std::vector<std::vector<bool>>& queries,
           const std::vector<int>& answers, int per_coin_bound) {
            WeighingProblem problem;
            problem.coin_count = coin_count;
            problem.total = total;
            for (const auto& q : queries) problem.queries.push_back({q});
            problem.answers = answers;
            return solve_weighing(problem, per_coin_bound);
        },
        py::arg("coin_count"), py::arg("total"), py::arg("queries"), py::arg("answers"),
        py::arg("per_coin_bound"),
        "Unique weight vector consistent with the weighings, or None.");

    m.def("identifying_set_size", &identifying_set_size, py::arg("n"), py::arg("k"),
          py::arg("constant") = 8.0);
    m.def(
        "identifies_all",
        [](const std::vector<Code>& queries, int n, int k) {
            return identifies_all(queries, n, k);
        },
        py::arg("queries"), py::arg("n"), py::arg("k"));
    m.def(
        "find_identifying_set",
        [](int n, int k, int set_size, std::uint64_t seed, int attempts) {
            Rng rng(seed);
            return find_identifying_set(n, k, set_size, rng, attempts);
        },
        py::arg("n"), py::arg("k"), py::arg("set_size"), py::arg("seed") = 1,
        py::arg("attempts") = 100);

    m.def(
        "sweep_csv",
        [](const std::vector<int>& sizes, const std::string& k_rule, int fixed_k, int trials,
           std::uint64_t seed, const std::vector<std::string>& strategies) {
            SweepConfig sweep;
            sweep.sizes = sizes;
            sweep.k_rule = parse_k_rule(k_rule);
            sweep.fixed_k = fixed_k;
            sweep.trials = trials;
            sweep.base_seed = seed;
            sweep.strategies = strategies;
            std::ostringstream out;
            write_csv(out, run_sweep(sweep, StrategyConfig{}));
            return out.str();
        },
        py::arg("sizes"), py::arg("k_rule") = "n", py::arg("fixed_k") = 0,
        py::arg("trials") = 1, py::arg("seed") = 1,
        py::arg("strategies") = std::vector<std::string>{"adaptive"},
        "Run a seeded sweep and return the CSV text.");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
