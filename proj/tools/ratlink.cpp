// Command line front end: evaluate continued fractions, run and trace the
// transformation, check the identity suite, render diagrams, and self-test
// on randomized inputs.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "ratlink/contfrac.hpp"
#include "ratlink/engine.hpp"
#include "ratlink/render.hpp"
#include "ratlink/schubert.hpp"
#include "ratlink/trace_io.hpp"
#include "ratlink/verifier.hpp"

namespace {

using namespace ratlink;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::filesystem::path resolve_out(const std::string& out) {
    std::filesystem::path path(out);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("RATLINK_OUT_DIR")) path = std::filesystem::path(dir) / path;
    }
    return path;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << content;
}

BigInt parse_big(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: " + s);
    }
}

int run_eval(const std::string& cf_text, bool as_json) {
    ContinuedFraction cf = parse_fraction(cf_text);
    if (cf.empty()) {
        std::cout << "1/0 (trivial)\n";
        return kExitOk;
    }
    auto cs = convergents(cf);
    auto [bp, bq] = evaluate_backward(cf);
    if (cs.back().p != bp || cs.back().q != bq) {
        std::cerr << "internal error: evaluators disagree: " << cs.back().p << "/" << cs.back().q
                  << " vs " << bp << "/" << bq << "\n";
        return kExitVerifyFailed;
    }
    if (as_json) {
        std::cout << convergents_to_json(cs);
    } else {
        std::cout << "convergents: " << cs.back().p.str() << "/" << cs.back().q.str() << "\n";
        std::cout << "backward: " << bp.str() << "/" << bq.str() << "\n";
    }
    return kExitOk;
}

int run_transform(const std::string& cf_text, const std::string& trace_fmt,
                  const std::string& out) {
    ContinuedFraction cf = parse_fraction(cf_text);
    TransformTrace trace = transform(cf, /*allow_empty=*/true);
    std::cout << trace.final.to_string();
    if (trace.final.degenerate) std::cout << " (degenerate)";
    std::cout << "\n";

    if (!trace_fmt.empty()) {
        TraceFormat fmt;
        if (trace_fmt == "json") fmt = TraceFormat::json;
        else if (trace_fmt == "csv") fmt = TraceFormat::csv;
        else if (trace_fmt == "markdown") fmt = TraceFormat::markdown;
        else throw CLI::ValidationError("--trace must be json, csv or markdown");
        std::string doc = emit_trace(trace, fmt);
        if (out.empty()) std::cout << doc;
        else write_file(resolve_out(out), doc);
    }
    return kExitOk;
}

int run_verify(const std::string& cf_text, bool as_json) {
    ContinuedFraction cf = parse_fraction(cf_text);
    TransformTrace trace = transform(cf);
    auto reports = verify_trace(trace);
    if (as_json) std::cout << reports_to_json(reports);

    std::map<std::string, std::pair<int, int>> family;  // name -> {pass, total}
    for (const auto& r : reports) {
        auto& f = family[lemma_name(r.lemma)];
        f.first += r.pass ? 1 : 0;
        f.second += 1;
    }
    bool ok = all_pass(reports);
    if (!as_json) {
        for (const auto& [name, counts] : family)
            std::cout << name << ": " << counts.first << "/" << counts.second << " checks\n";
        std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << " (" << reports.size()
                  << " total)\n";
        if (!ok)
            for (const auto& r : reports)
                if (!r.pass)
                    std::cout << "  " << lemma_name(r.lemma) << " n=" << r.n << " t=" << r.t
                              << ": " << r.lhs.str() << " != " << r.rhs.str() << "\n";
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

int run_render_conway(const std::string& cf_text, const std::string& out) {
    ContinuedFraction cf = parse_fraction(cf_text);
    auto path = resolve_out(out);
    write_file(path, render_conway(DiagramSpec::for_conway(cf)));
    std::cout << "wrote " << path.string() << "\n";
    return kExitOk;
}

int run_render_schubert(const std::string& p_text, const std::string& q_text,
                        const std::string& out) {
    BridgePresentation bp = normalize(parse_big(p_text), parse_big(q_text));
    auto path = resolve_out(out);
    write_file(path, render_schubert(DiagramSpec::for_schubert(bp)));
    std::cout << "wrote " << path.string() << "\n";
    return kExitOk;
}

int run_equivalent(const std::string& p1, const std::string& q1, const std::string& p2,
                   const std::string& q2) {
    BridgePresentation a = normalize(parse_big(p1), parse_big(q1));
    BridgePresentation b = normalize(parse_big(p2), parse_big(q2));
    std::cout << (equivalent(a, b) ? "true" : "false") << "\n";
    return kExitOk;
}

int run_selftest(int cases, int max_len, int max_term, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> term_dist(1, max_term);

    const auto start = std::chrono::steady_clock::now();
    long checks = 0;
    for (int c = 0; c < cases; ++c) {
        std::vector<BigInt> terms(len_dist(rng));
        for (auto& t : terms) t = term_dist(rng);
        ContinuedFraction cf{terms};

        TransformTrace trace = transform(cf);
        const auto cs = convergents(cf);
        const auto [bp, bq] = evaluate_backward(cf);

        auto fail = [&](const std::string& what) {
            std::cout << "FAIL case " << c << " " << what << " (seed " << seed << ")\n";
            return kExitVerifyFailed;
        };

        // engine final agrees with both evaluators, per-step values agree
        // with the convergents, and the pair is reduced
        if (trace.final.p != bp || trace.final.q != bq) return fail("backward-fold mismatch");
        for (std::size_t n = 1; n <= cf.length(); ++n) {
            const auto& st = trace.steps[n - 1];
            if (st.p != cs[n].p || st.q != cs[n].q) return fail("convergent mismatch");
        }
        if (gcd(trace.final.p, trace.final.q) != 1) return fail("final pair not reduced");
        checks += 3;

        // the two step routes are the same map
        DataMatrix D;
        for (const auto& st : trace.steps) {
            DataMatrix scalar = step_scalar(D, st.guides, st.a);
            if (scalar != st.D) return fail("scalar route diverged at step " + std::to_string(st.n));
            D = scalar;
            ++checks;
        }

        auto reports = verify_trace(trace);
        for (const auto& r : reports)
            if (!r.pass)
                return fail(std::string("identity ") + lemma_name(r.lemma) + " at n=" +
                            std::to_string(r.n) + " t=" + std::to_string(r.t));
        checks += static_cast<long>(reports.size());
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cout << "selftest: " << cases << " cases, " << checks << " checks, all passed ("
              << elapsed << " ms, seed " << seed << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational link to two-bridge presentation toolkit"};
    app.require_subcommand(1);

    std::string cf_text, trace_fmt, out;
    std::string p1, q1, p2, q2;
    bool as_json = false;
    int cases = 1000, max_len = 12, max_term = 9;
    unsigned long long seed = 1;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a continued fraction both ways");
    eval_cmd->add_option("cf", cf_text, "continued fraction, e.g. [2,5,4,1]")->required();
    eval_cmd->add_flag("--json", as_json, "emit the convergents as JSON");

    auto* transform_cmd = app.add_subcommand("transform", "run the transformation");
    transform_cmd->add_option("cf", cf_text)->required();
    transform_cmd->add_option("--trace", trace_fmt, "emit the trace: json, csv or markdown");
    transform_cmd->add_option("--out", out, "write the trace to a file instead of stdout");

    auto* verify_cmd = app.add_subcommand("verify", "run the identity suite on a transformation");
    verify_cmd->add_option("cf", cf_text)->required();
    verify_cmd->add_flag("--json", as_json, "emit the full report list as JSON");

    auto* render_cmd = app.add_subcommand("render", "render a diagram as SVG");
    render_cmd->require_subcommand(1);
    auto* render_conway_cmd = render_cmd->add_subcommand("conway", "twist-region diagram");
    render_conway_cmd->add_option("cf", cf_text)->required();
    render_conway_cmd->add_option("--out", out, "output SVG path")->required();
    auto* render_schubert_cmd = render_cmd->add_subcommand("schubert", "two-bridge diagram");
    render_schubert_cmd->add_option("p", p1)->required();
    render_schubert_cmd->add_option("q", q1)->required();
    render_schubert_cmd->add_option("--out", out, "output SVG path")->required();

    auto* equivalent_cmd = app.add_subcommand("equivalent", "compare two presentations");
    equivalent_cmd->add_option("p1", p1)->required();
    equivalent_cmd->add_option("q1", q1)->required();
    equivalent_cmd->add_option("p2", p2)->required();
    equivalent_cmd->add_option("q2", q2)->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "randomized property run");
    selftest_cmd->add_option("--cases", cases, "number of random fractions");
    selftest_cmd->add_option("--max-len", max_len, "maximum fraction length");
    selftest_cmd->add_option("--max-term", max_term, "maximum term value");
    selftest_cmd->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*eval_cmd) return run_eval(cf_text, as_json);
        if (*transform_cmd) return run_transform(cf_text, trace_fmt, out);
        if (*verify_cmd) return run_verify(cf_text, as_json);
        if (*render_conway_cmd) return run_render_conway(cf_text, out);
        if (*render_schubert_cmd) return run_render_schubert(p1, q1, out);
        if (*equivalent_cmd) return run_equivalent(p1, q1, p2, q2);
        if (*selftest_cmd) return run_selftest(cases, max_len, max_term, seed);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
