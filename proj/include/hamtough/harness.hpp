#ifndef HAMTOUGH_HARNESS_HPP
#define HAMTOUGH_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hamtough/cycles.hpp"
#include "hamtough/graph.hpp"
#include "hamtough/toughness.hpp"

namespace hamtough {

/// Version tag written into every JSONL record.
inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitInconsistent = 2 };

struct ScanOptions {
    int t = 4;
    bool lemmas = false;
    bool verdict = false;
    bool verify_conclusion = false;
    int tough_limit = kDefaultToughLimit;
    std::uint64_t budget = kDefaultBudget;
    bool strict = false;
    unsigned threads = 0;  // 0 = hardware concurrency
};

struct RecordResult {
    nlohmann::json record;
    bool error = false;         // malformed input line
    bool inconsistent = false;  // a verdict or bound contradicted exact results
};

/// Full ScanRecord for one decoded graph.
RecordResult scan_graph(std::size_t index, const std::string& graph6, const Graph& g, const ScanOptions& opts);

/// Decodes and scans one input line; decoding failures become error records.
RecordResult scan_line(std::size_t index, std::string_view line, const ScanOptions& opts);

/// Streams graph6 lines from `in` to JSONL on `out`, preserving input order.
/// Returns 0, 1 (malformed input or I/O failure) or 2 (inconsistency).
int run_scan(std::istream& in, std::ostream& out, const ScanOptions& opts);

/// Runs the lemma suites over a graph6 corpus and writes one summary object.
/// Graphs above `max_n` are counted as skipped. Returns 0 or 2.
int run_verify_lemmas(std::istream& corpus, int max_n, std::ostream& out, const ScanOptions& opts);

/// Builds the named families for n in [n_min, n_max] and verifies them.
int run_families(int t, int n_min, int n_max, std::ostream& out, const ScanOptions& opts);

struct RandomOptions {
    int n = 10;
    std::optional<int> n_max;  // sample n uniformly in [n, n_max]
    std::optional<double> p;
    std::optional<long long> m;
    int count = 1;
    std::uint64_t seed = 0;
};

/// G(n, p) or G(n, m) sample.
Graph random_graph(int n, std::optional<double> p, std::optional<long long> m, std::mt19937_64& rng);

/// Deterministic stream of scanned random samples, each with an
/// implication-chain record. Returns 2 on any chain violation.
int run_random(const RandomOptions& ropts, std::ostream& out, const ScanOptions& opts);

}  // namespace hamtough

#endif  // HAMTOUGH_HARNESS_HPP
