// Acceptance suite: one check per shipping criterion, one line of output
// each, non-zero exit if anything fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ratlink/contfrac.hpp"
#include "ratlink/engine.hpp"
#include "ratlink/render.hpp"
#include "ratlink/schubert.hpp"
#include "ratlink/verifier.hpp"
#include "testutil.hpp"

using namespace ratlink;
using namespace ratlink::testutil;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

constexpr unsigned long long kSeed = 20260810;

std::vector<ContinuedFraction> seeded_inputs(int count, int max_len, int max_term) {
    std::mt19937_64 rng(kSeed);
    std::vector<ContinuedFraction> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(random_cf(rng, max_len, max_term));
    return out;
}

bool golden_table(std::string& detail) {
    Golden2541 gold;
    const auto start = std::chrono::steady_clock::now();
    TransformTrace trace = transform(gold.input);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    detail = "(" + std::to_string(ms) + " ms)";
    if (trace.steps.size() != 4) return false;
    for (std::size_t n = 0; n < 4; ++n) {
        const auto& st = trace.steps[n];
        if (st.guides.principal != gold.guides[n].principal ||
            st.guides.secondary != gold.guides[n].secondary)
            return false;
        if (st.M != gold.M[n] || st.D != gold.D[n]) return false;
        if (st.p != gold.pq[n].first || st.q != gold.pq[n].second) return false;
    }
    if (trace.rule != FinalRule::even_m) return false;
    if (trace.final.p != 57 || trace.final.q != 26) return false;
    return ms < 10.0;
}

bool golden_kink(std::string&) {
    Golden122 gold;
    TransformTrace trace = transform(gold.input);
    if (trace.steps.size() != 3) return false;
    for (std::size_t n = 0; n < 3; ++n) {
        if (trace.steps[n].D != gold.D[n]) return false;
        if (trace.steps[n].s != gold.s[n]) return false;
    }
    return trace.rule == FinalRule::odd_m_kink && trace.final.p == 7 && trace.final.q == 5;
}

bool main_theorem_property(std::string& detail) {
    const auto inputs = seeded_inputs(1000, 12, 9);
    const auto start = std::chrono::steady_clock::now();
    for (const auto& f : inputs) {
        TransformTrace trace = transform(f);
        const auto cs = convergents(f);
        const auto [bp, bq] = evaluate_backward(f);
        if (trace.final.p != cs.back().p || trace.final.q != cs.back().q) return false;
        if (trace.final.p != bp || trace.final.q != bq) return false;
        if (gcd(trace.final.p, trace.final.q) != 1) return false;
        // the per-step recurrence itself, from the recorded values
        for (std::size_t n = 1; n + 1 <= f.length(); ++n) {
            const BigInt& pn = trace.steps[n - 1].p;
            const BigInt& qn = trace.steps[n - 1].q;
            const BigInt p_prev = n >= 2 ? trace.steps[n - 2].p : BigInt(1);
            const BigInt q_prev = n >= 2 ? trace.steps[n - 2].q : BigInt(0);
            const BigInt& a_next = f.term(n + 1);
            if (trace.steps[n].p != a_next * pn + p_prev) return false;
            if (trace.steps[n].q != a_next * qn + q_prev) return false;
        }
        if (trace.steps[0].p != f.term(1) || trace.steps[0].q != 1) return false;
    }
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    detail = "(1000 inputs, " + std::to_string(sec) + " s)";
    return sec < 5.0;
}

bool lemma_suite(std::string& detail) {
    long total = 0;
    for (const auto& f : seeded_inputs(1000, 12, 9)) {
        auto reports = verify_trace(transform(f));
        total += static_cast<long>(reports.size());
        if (!all_pass(reports)) return false;
    }
    detail = "(" + std::to_string(total) + " identity checks)";
    return true;
}

bool dual_path(std::string&) {
    for (const auto& f : seeded_inputs(1000, 12, 9)) {
        TransformTrace trace = transform(f);
        DataMatrix d;
        for (const auto& st : trace.steps) {
            if (step_scalar(d, st.guides, st.a) != st.D) return false;
            d = st.D;
        }
    }
    return true;
}

bool conjugation(std::string&) {
    const std::vector<GuideState> states = {guide(1, 1, 2, 3), guide(1, 1, 3, 2),
                                            guide(1, 2, 1, 3), guide(1, 2, 3, 1),
                                            guide(1, 3, 1, 2), guide(1, 3, 2, 1)};
    int cases = 0;
    for (const auto& st : states)
        for (int a = 1; a <= 9; ++a) {
            if (change_matrix(st, a) != change_matrix_conjugated(st, a)) return false;
            ++cases;
        }
    return cases == 54;
}

bool big_integer_stress(std::string& detail) {
    std::vector<BigInt> terms(64, BigInt(9));
    ContinuedFraction f{terms};
    TransformTrace trace = transform(f);
    const auto [bp, bq] = evaluate_backward(f);
    detail = "(p has " + std::to_string(trace.final.p.str().size()) + " digits)";
    return trace.final.p.str().size() > 60 && trace.final.p == bp && trace.final.q == bq;
}

bool renderer_counts(std::string&) {
    std::mt19937_64 rng(kSeed + 1);
    std::uniform_int_distribution<long long> pq_dist(2, 200);
    for (int i = 0; i < 50; ++i) {
        auto f = random_cf(rng, 10, 9);
        BigInt total = 0;
        for (const auto& a : f.terms()) total += a;
        auto svg = render_conway(DiagramSpec::for_conway(f));
        if (count_occurrences(svg, "class=\"crossing\"") != total.convert_to<int>()) return false;

        BridgePresentation bp;
        do {
            bp = normalize(pq_dist(rng), pq_dist(rng));
        } while (bp.degenerate);
        auto svg2 = render_schubert(DiagramSpec::for_schubert(bp));
        int expected = 2 * (bp.p.convert_to<int>() - 1);
        if (count_occurrences(svg2, "class=\"crossing\"") != expected) return false;
    }
    auto fig = render_schubert(DiagramSpec::for_schubert(normalize(7, 3)));
    return count_occurrences(fig, "class=\"crossing\"") == 12;
}

bool equivalence(std::string&) {
    if (!equivalent(normalize(7, 5), normalize(7, 3))) return false;
    for (long long p = 2; p <= 50; ++p) {
        for (long long q1 = 1; q1 < p; ++q1) {
            if (gcd(BigInt(p), BigInt(q1)) != 1) continue;
            long long inverse = -1;
            for (long long c = 1; c < p; ++c)
                if ((c * q1) % p == 1) {
                    inverse = c;
                    break;
                }
            for (long long q2 = 1; q2 < p; ++q2) {
                if (gcd(BigInt(p), BigInt(q2)) != 1) continue;
                bool expected = (q2 == q1) || (q2 == inverse);
                if (equivalent(normalize(p, q1), normalize(p, q2)) != expected) return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"golden four-step table", golden_table},
        {"golden three-step kink example", golden_kink},
        {"per-step recurrence over 1000 seeded inputs", main_theorem_property},
        {"identity suite over 1000 seeded inputs", lemma_suite},
        {"scalar and matrix step routes identical", dual_path},
        {"conjugated change matrix, 54 exhaustive cases", conjugation},
        {"length-64 all-nines stress", big_integer_stress},
        {"renderer crossing tallies", renderer_counts},
        {"two-bridge equivalence vs enumerated inverses", equivalence},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %zu. %s %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(),
                    detail.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criteria failed\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
