#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hamtough/error.hpp"
#include "hamtough/harness.hpp"

using namespace hamtough;

namespace {

struct Common {
    ScanOptions scan;
    std::string out;
};

void add_common(CLI::App& app, Common& c) {
    app.add_option("--t", c.scan.t, "toughness parameter t")->check(CLI::Range(1, 1000));
    app.add_option("--tough-limit", c.scan.tough_limit, "largest order for exact toughness")
        ->check(CLI::Range(0, kMaxExhaustiveOrder));
    app.add_option("--budget", c.scan.budget, "search-tree expansions per cycle query");
    app.add_option("--threads", c.scan.threads, "worker threads (0 = all cores)");
    app.add_flag("--verify-conclusion", c.scan.verify_conclusion, "run the exact Hamiltonicity/pancyclicity search");
    app.add_option("--out", c.out, "write the report here instead of stdout");
}

int with_output(const std::string& path, auto&& body) {
    if (path.empty()) return body(std::cout);
    std::ofstream file(path);
    if (!file) throw Error(ErrorKind::IOError, "cannot open " + path + " for writing");
    const int code = body(file);
    file.flush();
    return file ? code : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toughness, closure and spectral conditions for Hamiltonicity"};
    app.require_subcommand(1);

    Common scan_opts;
    std::string scan_input;
    auto* scan = app.add_subcommand("scan", "scan graph6 lines into JSONL records");
    add_common(*scan, scan_opts);
    scan->add_flag("--lemmas", scan_opts.scan.lemmas, "report the spectral and transmission bounds");
    scan->add_flag("--verdict", scan_opts.scan.verdict, "evaluate the sufficient conditions");
    scan->add_flag("--strict", scan_opts.scan.strict, "stop at the first malformed line");
    scan->add_option("input", scan_input, "graph6 file (default stdin)");

    Common lemma_opts;
    std::string corpus;
    int max_n = 8;
    auto* lemmas = app.add_subcommand("verify-lemmas", "run the lemma suites over a graph6 corpus");
    add_common(*lemmas, lemma_opts);
    lemmas->add_option("--corpus", corpus, "graph6 corpus")->required();
    lemmas->add_option("--max-n", max_n, "skip graphs above this order")->check(CLI::Range(1, kMaxVertices));

    Common family_opts;
    int n_min = 20, n_max = 24;
    auto* families = app.add_subcommand("families", "build and verify the join and extremal families");
    add_common(*families, family_opts);
    families->add_option("--n-min", n_min)->check(CLI::Range(1, kMaxVertices));
    families->add_option("--n-max", n_max)->check(CLI::Range(1, kMaxVertices));

    Common random_opts;
    RandomOptions ropts;
    std::optional<int> sample_n_max;
    std::optional<double> p;
    std::optional<long long> m;
    auto* random = app.add_subcommand("random", "scan seeded G(n,p) or G(n,m) samples");
    add_common(*random, random_opts);
    random->add_option("--n", ropts.n, "order (lower end when --n-max is given)")->check(CLI::Range(1, kMaxVertices));
    random->add_option("--n-max", sample_n_max, "draw n uniformly from [n, n-max]");
    auto* p_opt = random->add_option("--p", p, "edge probability")->check(CLI::Range(0.0, 1.0));
    auto* m_opt = random->add_option("--m", m, "edge count");
    p_opt->excludes(m_opt);
    random->add_option("--count", ropts.count, "number of samples")->check(CLI::NonNegativeNumber);
    random->add_option("--seed", ropts.seed, "generator seed")->required();
    random->add_flag("--lemmas", random_opts.scan.lemmas, "report the spectral and transmission bounds");
    random->add_flag("--verdict", random_opts.scan.verdict, "evaluate the sufficient conditions");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*scan) {
            return with_output(scan_opts.out, [&](std::ostream& out) {
                if (scan_input.empty()) return run_scan(std::cin, out, scan_opts.scan);
                std::ifstream in(scan_input);
                if (!in) throw Error(ErrorKind::IOError, "cannot open " + scan_input);
                return run_scan(in, out, scan_opts.scan);
            });
        }
        if (*lemmas) {
            std::ifstream in(corpus);
            if (!in) throw Error(ErrorKind::IOError, "cannot open corpus " + corpus);
            return with_output(lemma_opts.out,
                               [&](std::ostream& out) { return run_verify_lemmas(in, max_n, out, lemma_opts.scan); });
        }
        if (*families) {
            if (n_max < n_min) throw Error(ErrorKind::InvalidParameter, "--n-max below --n-min");
            return with_output(family_opts.out, [&](std::ostream& out) {
                return run_families(family_opts.scan.t, n_min, n_max, out, family_opts.scan);
            });
        }
        if (*random) {
            if (!p && !m) throw Error(ErrorKind::InvalidParameter, "random needs --p or --m");
            ropts.n_max = sample_n_max;
            ropts.p = p;
            ropts.m = m;
            return with_output(random_opts.out,
                               [&](std::ostream& out) { return run_random(ropts, out, random_opts.scan); });
        }
    } catch (const Error& e) {
        std::cerr << "hamtough: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return kExitError;
    }
    return kExitOk;
}
