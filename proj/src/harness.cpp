#include "hamtough/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <istream>
#include <ostream>
#include <random>
#include <thread>
#include <vector>

#include "hamtough/closure.hpp"
#include "hamtough/error.hpp"
#include "hamtough/graph6.hpp"
#include "hamtough/spectra.hpp"
#include "hamtough/theorems.hpp"

namespace hamtough {

using nlohmann::json;

namespace {

constexpr std::size_t kBatch = 4096;

unsigned worker_count(unsigned requested) {
    if (requested) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// results[i] = fn(i) for i in [0, count), computed by a small worker pool.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t count, unsigned threads, Fn fn) {
    std::vector<R> results(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count && !failed;) {
            try {
                results[i] = fn(i);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    const unsigned n = std::min<std::size_t>(worker_count(threads), std::max<std::size_t>(count, 1));
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
    work();
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return results;
}

json skipped(std::string_view reason) { return json{{"skipped", reason}}; }

json cut_json(const CutCertificate& c) { return json{{"cut", c.cut}, {"pieces", c.pieces}}; }

json decision_json(Decision d) { return std::string(to_string(d)); }

json toughness_json(const Graph& g, bool connected, const ScanOptions& opts) {
    if (!connected) return skipped("graph is not connected");
    if (g.order() > opts.tough_limit) {
        return skipped("n > tough-limit (" + std::to_string(opts.tough_limit) + ")");
    }
    const auto tau = toughness_exact(g, opts.tough_limit);
    json j{{"value", tau.to_string()}};
    if (tau.witness) j.update(cut_json(*tau.witness));
    return j;
}

json spectral_json(const SpectralSummary& s) {
    json j{{"lambda1_A", s.lambda1_A}, {"q1", s.q1}};
    if (s.lambda1_D) {
        j["lambda1_D"] = *s.lambda1_D;
        j["eta1"] = *s.eta1;
        j["wiener"] = s.transmissions->wiener;
        j["transmissions"] = s.transmissions->per_vertex;
        j["transmission_regular"] = s.transmissions->regular;
    } else {
        j["distance"] = skipped("graph is not connected");
    }
    return j;
}

json bound_json(const BoundCheck& b) {
    return json{{"value", b.value}, {"bound", b.bound}, {"slack", b.slack}, {"holds", b.holds()},
                {"equality", b.equality()}};
}

json lemma_json(const LemmaReport& r) {
    json j;
    j["adjacency_bound"] = bound_json(r.adjacency);
    j["signless_bound"] = r.signless ? bound_json(*r.signless) : skipped("n < 2");
    j["distance_bound"] = bound_json(r.distance);
    j["distance_signless_bound"] = bound_json(r.distance_signless);
    j["transmission_min_slack"] = r.min_transmission_slack;
    j["wiener_slack"] = r.wiener_slack;
    j["violations"] = r.violations();
    return j;
}

json condition_json(const ConditionResult& c) {
    if (!c.evaluated) return skipped(c.reason);
    return json{{"holds", c.holds}, {"value", c.value}, {"bound", c.bound}, {"margin", c.margin}};
}

json conclusion_json(const Conclusion& c) {
    return json{{"hamiltonian", decision_json(c.hamiltonian)},
                {"pancyclic", decision_json(c.pancyclic)},
                {"bipartite", c.bipartite}};
}

json verdict_json(const TheoremVerdict& v) {
    json pre{{"connected", v.connected}, {"order_ok", v.order_ok}, {"toughness", to_string(v.toughness)}};
    if (v.tough_witness) pre["tough_witness"] = cut_json(*v.tough_witness);
    if (!v.tough_reason.empty()) pre["tough_reason"] = v.tough_reason;

    json conditions{{"size", condition_json(v.size)},
                    {"spectral", condition_json(v.adjacency)},
                    {"signless_laplacian", condition_json(v.signless_laplacian)},
                    {"distance", condition_json(v.distance)},
                    {"distance_signless_laplacian", condition_json(v.distance_signless)}};
    if (v.size_margin) conditions["size"]["margin"] = *v.size_margin;

    json j{{"t", v.t}, {"preconditions", pre}, {"conditions", conditions}};
    j["implied"] = json{{"hamiltonian", v.implied}, {"pancyclic_or_bipartite", v.implied}};
    j["observed"] = v.observed ? conclusion_json(*v.observed) : skipped("--verify-conclusion not set");
    j["consistent"] = v.consistent;
    j["notes"] = v.notes;
    return j;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    return s;
}

/// Reads up to kBatch non-blank lines.
std::vector<std::string> read_batch(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (lines.size() < kBatch && std::getline(in, line)) {
        if (!trim(line).empty()) lines.emplace_back(trim(line));
    }
    return lines;
}

bool is_star(const Graph& g) {
    const int n = g.order();
    if (n < 2 || g.size() != n - 1) return false;
    const auto d = g.degrees();
    return *std::max_element(d.begin(), d.end()) == n - 1;
}

}  // namespace

RecordResult scan_graph(std::size_t index, const std::string& graph6, const Graph& g, const ScanOptions& opts) {
    RecordResult r;
    const bool connected = is_connected(g);
    const auto seq = degree_sequence(g);
    json& j = r.record;
    j["schema"] = kSchemaVersion;
    j["index"] = index;
    j["graph6"] = graph6;
    j["n"] = g.order();
    j["m"] = g.size();
    j["min_degree"] = seq.min();
    j["max_degree"] = seq.max();
    j["bipartite"] = is_bipartite(g).has_value();
    j["connected"] = connected;
    j["spectral"] = spectral_json(spectral_summary(g));
    j["toughness"] = toughness_json(g, connected, opts);

    if (opts.verdict) {
        TheoremQuery q;
        q.t = opts.t;
        q.verify_conclusion = opts.verify_conclusion;
        q.budget = opts.budget;
        q.tough_limit = opts.tough_limit;
        const auto v = check_theorems(g, q);
        j["verdict"] = verdict_json(v);
        r.inconsistent = r.inconsistent || !v.consistent;
    } else {
        j["verdict"] = skipped("--verdict not set");
    }

    if (opts.lemmas) {
        if (connected) {
            const auto report = lemma_bounds_report(g);
            j["lemmas"] = lemma_json(report);
            r.inconsistent = r.inconsistent || report.violations() > 0;
        } else {
            j["lemmas"] = skipped("graph is not connected");
        }
    } else {
        j["lemmas"] = skipped("--lemmas not set");
    }
    return r;
}

RecordResult scan_line(std::size_t index, std::string_view line, const ScanOptions& opts) {
    line = trim(line);
    try {
        const Graph g = decode_graph6(line);
        return scan_graph(index, std::string(line), g, opts);
    } catch (const Error& e) {
        RecordResult r;
        r.error = true;
        json err{{"kind", to_string(e.kind())}, {"message", e.what()}};
        if (const auto* fe = dynamic_cast<const FormatError*>(&e)) err["offset"] = fe->offset();
        r.record = json{{"schema", kSchemaVersion}, {"index", index}, {"graph6", std::string(line)}, {"error", err}};
        return r;
    }
}

int run_scan(std::istream& in, std::ostream& out, const ScanOptions& opts) {
    bool error = false, inconsistent = false;
    std::size_t base = 0;
    while (true) {
        const auto lines = read_batch(in);
        if (lines.empty()) break;
        const auto results = parallel_map<RecordResult>(
            lines.size(), opts.threads, [&](std::size_t i) { return scan_line(base + i, lines[i], opts); });
        for (const auto& r : results) {
            out << r.record.dump() << '\n';
            error = error || r.error;
            inconsistent = inconsistent || r.inconsistent;
            if (r.error && opts.strict) return kExitError;
        }
        base += lines.size();
    }
    if (in.bad() || !out) return kExitError;
    if (inconsistent) return kExitInconsistent;
    return error ? kExitError : kExitOk;
}

namespace {

/// Per-graph outcome of the lemma suites; summed into the final report.
struct LemmaTally {
    long graphs = 0;
    long skipped = 0;
    long malformed = 0;

    long bounds_checked = 0;
    long adjacency_violations = 0, adjacency_equalities = 0, adjacency_mismatches = 0;
    long signless_checked = 0, signless_violations = 0, signless_equalities = 0, signless_mismatches = 0;
    long distance_violations = 0, distance_equalities = 0;
    long distance_signless_violations = 0, distance_signless_equalities = 0, distance_signless_mismatches = 0;
    long transmission_violations = 0, wiener_violations = 0;
    long complete_or_star = 0, transmission_regular = 0;

    long closure_checked = 0, closure_disagreements = 0, closure_unknown = 0;
    long dense_checked = 0, dense_violations = 0, dense_unknown = 0;
    long toughness_checked = 0, toughness_violations = 0;

    std::vector<std::string> failing;

    LemmaTally& operator+=(const LemmaTally& o) {
        graphs += o.graphs;
        skipped += o.skipped;
        malformed += o.malformed;
        bounds_checked += o.bounds_checked;
        adjacency_violations += o.adjacency_violations;
        adjacency_equalities += o.adjacency_equalities;
        adjacency_mismatches += o.adjacency_mismatches;
        signless_checked += o.signless_checked;
        signless_violations += o.signless_violations;
        signless_equalities += o.signless_equalities;
        signless_mismatches += o.signless_mismatches;
        distance_violations += o.distance_violations;
        distance_equalities += o.distance_equalities;
        distance_signless_violations += o.distance_signless_violations;
        distance_signless_equalities += o.distance_signless_equalities;
        distance_signless_mismatches += o.distance_signless_mismatches;
        transmission_violations += o.transmission_violations;
        wiener_violations += o.wiener_violations;
        complete_or_star += o.complete_or_star;
        transmission_regular += o.transmission_regular;
        closure_checked += o.closure_checked;
        closure_disagreements += o.closure_disagreements;
        closure_unknown += o.closure_unknown;
        dense_checked += o.dense_checked;
        dense_violations += o.dense_violations;
        dense_unknown += o.dense_unknown;
        toughness_checked += o.toughness_checked;
        toughness_violations += o.toughness_violations;
        for (const auto& f : o.failing)
            if (failing.size() < 20) failing.push_back(f);
        return *this;
    }

    long failures() const {
        return adjacency_violations + adjacency_mismatches + signless_violations + signless_mismatches +
               distance_violations + distance_signless_violations + distance_signless_mismatches +
               transmission_violations + wiener_violations + closure_disagreements + dense_violations +
               toughness_violations;
    }
};

LemmaTally check_lemmas(std::string_view line, int max_n, const ScanOptions& opts) {
    LemmaTally t;
    Graph g;
    try {
        g = decode_graph6(line);
    } catch (const Error&) {
        t.malformed = 1;
        t.failing.emplace_back(line);
        return t;
    }
    const int n = g.order();
    if (n > max_n || !is_connected(g)) {
        t.skipped = 1;
        return t;
    }
    t.graphs = 1;

    const auto r = lemma_bounds_report(g);
    const bool extremal = g.is_complete() || is_star(g);
    t.bounds_checked = 1;
    t.complete_or_star = extremal;
    t.transmission_regular = r.transmission_regular;
    t.adjacency_violations = !r.adjacency.holds();
    t.adjacency_equalities = r.adjacency.equality();
    t.adjacency_mismatches = r.adjacency.equality() != extremal;
    if (r.signless) {
        t.signless_checked = 1;
        t.signless_violations = !r.signless->holds();
        t.signless_equalities = r.signless->equality();
        t.signless_mismatches = r.signless->equality() != extremal;
    }
    t.distance_violations = !r.distance.holds();
    t.distance_equalities = r.distance.equality();
    t.distance_signless_violations = !r.distance_signless.holds();
    t.distance_signless_equalities = r.distance_signless.equality();
    t.distance_signless_mismatches = r.distance_signless.equality() != r.transmission_regular;
    t.transmission_violations = r.min_transmission_slack < 0;
    t.wiener_violations = r.wiener_slack < 0;

    if (n >= 3) {
        t.closure_checked = 1;
        const auto direct = find_hamiltonian_cycle(g, opts.budget).outcome;
        const auto closed = find_hamiltonian_cycle(k_closure(g, n).closed, opts.budget).outcome;
        if (direct == Decision::Unknown || closed == Decision::Unknown) {
            t.closure_unknown = 1;
        } else {
            t.closure_disagreements = direct != closed;
        }
        if (direct == Decision::Yes && many_high_degree_vertices(g)) {
            t.dense_checked = 1;
            const auto spectrum = cycle_spectrum(g, opts.budget);
            if (!spectrum.exact())
                t.dense_unknown = 1;
            else
                t.dense_violations = !spectrum.pancyclic();
        }
    }

    if (!g.is_complete() && n <= opts.tough_limit) {
        t.toughness_checked = 1;
        const auto tau = toughness_exact(g, opts.tough_limit);
        t.toughness_violations = Rational(degree_sequence(g).min()) < 2 * tau.value;
    }

    if (t.failures() > 0) t.failing.emplace_back(line);
    return t;
}

}  // namespace

int run_verify_lemmas(std::istream& corpus, int max_n, std::ostream& out, const ScanOptions& opts) {
    if (!corpus) throw Error(ErrorKind::IOError, "corpus is not readable");
    LemmaTally total;
    while (true) {
        const auto lines = read_batch(corpus);
        if (lines.empty()) break;
        const auto parts = parallel_map<LemmaTally>(lines.size(), opts.threads,
                                                    [&](std::size_t i) { return check_lemmas(lines[i], max_n, opts); });
        for (const auto& p : parts) total += p;
    }

    const auto& t = total;
    json j;
    j["schema"] = kSchemaVersion;
    j["max_n"] = max_n;
    j["graphs"] = t.graphs;
    j["skipped"] = t.skipped;
    j["malformed"] = t.malformed;
    j["adjacency_bound"] = {{"checked", t.bounds_checked},
                            {"violations", t.adjacency_violations},
                            {"equality_cases", t.adjacency_equalities},
                            {"complete_or_star", t.complete_or_star},
                            {"equality_mismatches", t.adjacency_mismatches}};
    j["signless_bound"] = {{"checked", t.signless_checked},
                           {"violations", t.signless_violations},
                           {"equality_cases", t.signless_equalities},
                           {"equality_mismatches", t.signless_mismatches}};
    j["distance_bound"] = {{"checked", t.bounds_checked},
                           {"violations", t.distance_violations},
                           {"equality_cases", t.distance_equalities}};
    j["distance_signless_bound"] = {{"checked", t.bounds_checked},
                                    {"violations", t.distance_signless_violations},
                                    {"equality_cases", t.distance_signless_equalities},
                                    {"transmission_regular", t.transmission_regular},
                                    {"equality_mismatches", t.distance_signless_mismatches}};
    j["transmission_bound"] = {{"checked", t.bounds_checked},
                               {"vertex_violations", t.transmission_violations},
                               {"wiener_violations", t.wiener_violations}};
    j["closure_equivalence"] = {{"checked", t.closure_checked},
                                {"disagreements", t.closure_disagreements},
                                {"unknown", t.closure_unknown}};
    j["high_degree_pancyclic"] = {{"checked", t.dense_checked},
                                  {"violations", t.dense_violations},
                                  {"unknown", t.dense_unknown}};
    j["min_degree_toughness"] = {{"checked", t.toughness_checked}, {"violations", t.toughness_violations}};
    j["failures"] = t.failures() + t.malformed;
    j["failing_examples"] = t.failing;
    out << j.dump() << '\n';
    if (t.malformed) return kExitError;
    return t.failures() ? kExitInconsistent : kExitOk;
}

namespace {

struct FamilySpec {
    std::string family;
    json params;
    Graph graph;
    bool claimed_hamiltonian = false;
    bool expect_bipartite_not_pancyclic = false;
};

json family_record(const FamilySpec& f, int t, const ScanOptions& opts, bool& failed) {
    const Graph& g = f.graph;
    json j{{"schema", kSchemaVersion}, {"family", f.family}, {"params", f.params}, {"graph6", encode_graph6(g)},
           {"n", g.order()}, {"m", g.size()}, {"degree_sequence", degree_sequence(g).to_string()}};

    const auto ham = is_hamiltonian_via_closure(g, opts.budget);
    j["hamiltonian"] = decision_json(ham.outcome);
    j["closure_complete"] = ham.closure_complete;
    if (ham.cycle) j["cycle"] = ham.cycle->order;
    const auto closure_n1 = k_closure(g, g.order() - 1);
    j["closure_n_minus_1_complete"] = closure_n1.is_complete;
    if (ham.outcome != Decision::Yes) {
        // Any cut S with more than |S| components rules out a spanning cycle.
        auto cut = ham.obstruction;
        if (!cut) cut = is_t_tough(g, Rational(1), std::min(opts.tough_limit, kMaxExhaustiveOrder)).witness;
        j["obstruction"] = cut ? cut_json(*cut) : skipped("no cut with c(G-S) > |S| found");
    }
    j["claimed_hamiltonian"] = f.claimed_hamiltonian;
    if (f.claimed_hamiltonian && ham.outcome != Decision::Yes) {
        j["mismatch"] = "claimed Hamiltonian but search answered " + std::string(to_string(ham.outcome));
        failed = true;
    }

    const auto seq = degree_sequence(g);
    if (auto w = predicate_P(seq, t)) {
        j["predicate_p"] = {{"holds", false}, {"k", w->k}, {"d_k", w->d_k}, {"d_shifted", w->d_shifted}};
    } else {
        j["predicate_p"] = {{"holds", true}};
    }
    if (auto pair = low_degree_pair(g)) {
        j["low_degree_pair"] = {{"x", pair->x}, {"y", pair->y}, {"degree_sum", pair->degree_sum}};
    } else {
        j["low_degree_pair"] = skipped("no nonadjacent pair with d(x)+d(y) <= n-5");
    }

    TheoremQuery q;
    q.t = t;
    q.assume_tough = true;
    q.verify_conclusion = opts.verify_conclusion || f.expect_bipartite_not_pancyclic;
    q.budget = opts.budget;
    const auto v = check_theorems(g, q);
    j["verdict"] = verdict_json(v);
    if (!v.consistent) failed = true;
    if (f.expect_bipartite_not_pancyclic && v.observed) {
        const auto& o = *v.observed;
        if (o.hamiltonian != Decision::Yes || !o.bipartite || o.pancyclic != Decision::No) {
            j["mismatch"] = "expected Hamiltonian, bipartite and not pancyclic";
            failed = true;
        }
    }
    return j;
}

}  // namespace

int run_families(int t, int n_min, int n_max, std::ostream& out, const ScanOptions& opts) {
    std::vector<FamilySpec> specs;
    auto add = [&](std::string family, json params, auto build, bool claimed, bool bip = false) {
        try {
            specs.push_back({family, params, build(), claimed, bip});
        } catch (const Error& e) {
            out << json{{"schema", kSchemaVersion},
                        {"family", family},
                        {"params", params},
                        {"skipped", e.what()}}
                       .dump()
                << '\n';
        }
    };
    for (int n = n_min; n <= n_max; ++n) {
        for (int i = 4; i <= n - 8; ++i) {
            for (Core c : {Core::C8, Core::TwoC4, Core::FourK2, Core::EightK1}) {
                add("join", json{{"i", i}, {"n", n}, {"core", to_string(c)}}, [&] { return join_family(i, n, c); },
                    true);
            }
        }
        if (n > 3 * t) {
            add("extremal_seq", json{{"t", t}, {"n", n}, {"variant", "case11"}},
                [&] { return extremal_sequence(t, n, ExtremalCase::Case11); }, false);
        }
        if (n == 10 * t - 1) {
            add("extremal_seq", json{{"t", t}, {"n", n}, {"variant", "case12"}},
                [&] { return extremal_sequence(t, n, ExtremalCase::Case12); }, true);
        }
        if (n % 2 == 0) {
            add("balanced_bipartite", json{{"n", n}}, [&] { return balanced_bipartite(n); }, true, true);
        }
    }

    std::vector<char> failed(specs.size(), 0);
    const auto records = parallel_map<json>(specs.size(), opts.threads, [&](std::size_t i) {
        bool f = false;
        auto j = family_record(specs[i], t, opts, f);
        failed[i] = f;
        return j;
    });
    for (const auto& r : records) out << r.dump() << '\n';
    return std::any_of(failed.begin(), failed.end(), [](char f) { return f != 0; }) ? kExitInconsistent : kExitOk;
}

Graph random_graph(int n, std::optional<double> p, std::optional<long long> m, std::mt19937_64& rng) {
    if (n < 1 || n > kMaxVertices) throw Error(ErrorKind::InvalidParameter, "random graph order outside [1, 512]");
    if (p.has_value() == m.has_value()) throw Error(ErrorKind::InvalidParameter, "give exactly one of p and m");
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    if (p) {
        if (*p < 0 || *p > 1) throw Error(ErrorKind::InvalidParameter, "edge probability outside [0, 1]");
        std::bernoulli_distribution coin(*p);
        std::vector<Edge> chosen;
        for (const auto& e : pairs)
            if (coin(rng)) chosen.push_back(e);
        return Graph::from_edges(n, chosen);
    }
    if (*m < 0 || *m > static_cast<long long>(pairs.size())) {
        throw Error(ErrorKind::InvalidParameter, "edge count outside [0, n(n-1)/2]");
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(static_cast<std::size_t>(*m));
    return Graph::from_edges(n, pairs);
}

int run_random(const RandomOptions& ropts, std::ostream& out, const ScanOptions& opts) {
    if (ropts.count < 0) throw Error(ErrorKind::InvalidParameter, "count must be >= 0");
    if (ropts.n_max && *ropts.n_max < ropts.n) throw Error(ErrorKind::InvalidParameter, "n-max below n");
    std::mt19937_64 rng(ropts.seed);
    std::vector<Graph> samples;
    samples.reserve(static_cast<std::size_t>(ropts.count));
    for (int i = 0; i < ropts.count; ++i) {
        int n = ropts.n;
        if (ropts.n_max) n = std::uniform_int_distribution<int>(ropts.n, *ropts.n_max)(rng);
        samples.push_back(random_graph(n, ropts.p, ropts.m, rng));
    }

    std::vector<char> bad(samples.size(), 0);
    const auto records = parallel_map<json>(samples.size(), opts.threads, [&](std::size_t i) {
        const Graph& g = samples[i];
        auto r = scan_graph(i, encode_graph6(g), g, opts);
        TheoremQuery q;
        q.t = opts.t;
        q.assume_tough = true;
        const auto chain = implication_chain(check_theorems(g, q));
        r.record["chain"] = {{"checked", chain.checked}, {"violations", chain.violations}};
        bad[i] = r.inconsistent || chain.violations > 0;
        return r.record;
    });
    for (const auto& r : records) out << r.dump() << '\n';
    return std::any_of(bad.begin(), bad.end(), [](char b) { return b != 0; }) ? kExitInconsistent : kExitOk;
}

}  // namespace hamtough
