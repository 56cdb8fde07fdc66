#include "ratlink/verifier.hpp"

#include <stdexcept>

namespace ratlink {

const char* lemma_name(Lemma lemma) {
    switch (lemma) {
        case Lemma::difij: return "difij";
        case Lemma::corsn: return "corsn";
        case Lemma::snminus1: return "snminus1";
        case Lemma::dk: return "dk";
        case Lemma::twodk: return "twodk";
        case Lemma::propsum: return "propsum";
    }
    return "?";
}

namespace {

int delta(int l, int t) { return l == t ? 1 : 0; }

// Local column sum so these checks share no arithmetic with the engine.
BigInt colsum(const DataMatrix& D, int t) { return D.at(1, t) + D.at(2, t) + D.at(3, t); }

LemmaReport report(Lemma lemma, int n, int t, BigInt lhs, BigInt rhs) {
    LemmaReport r;
    r.lemma = lemma;
    r.n = n;
    r.t = t;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.pass = r.lhs == r.rhs;
    return r;
}

}  // namespace

std::array<LemmaReport, 3> check_difij(const DataMatrix& D, const DataMatrix& D_next,
                                       const GuideState& guides_next, const BigInt& a, int n) {
    const int i = guides_next.principal, j = guides_next.secondary;
    const int mu_a = parity(a);
    const int sign = mu_a ? -1 : 1;
    std::array<LemmaReport, 3> out;
    for (int t = 1; t <= 3; ++t) {
        BigInt lhs = D_next.at(i, t) - D_next.at(j, t);
        BigInt rhs = sign * (D.at(i, t) + D.at(j, t) + mu_a * delta(i, t) +
                             (1 - mu_a) * delta(j, t));
        out[t - 1] = report(Lemma::difij, n, t, std::move(lhs), std::move(rhs));
    }
    return out;
}

std::array<LemmaReport, 3> check_sn(const DataMatrix& D_next, const GuideState& guides_next,
                                    const BigInt& a, const ColumnSums& s_expected, int n) {
    const int i = guides_next.principal, j = guides_next.secondary, k = guides_next.idle;
    const int mu_a = parity(a);
    const int sign = mu_a ? -1 : 1;
    std::array<LemmaReport, 3> out;
    for (int t = 1; t <= 3; ++t) {
        BigInt recovered = sign * (D_next.at(i, t) - D_next.at(j, t)) + D_next.at(k, t) -
                           mu_a * delta(i, t) + (mu_a - 1) * delta(j, t);
        out[t - 1] = report(Lemma::corsn, n, t, s_expected[t - 1], std::move(recovered));
    }
    return out;
}

std::array<LemmaReport, 3> check_snminus1(const DataMatrix& D, const GuideState& guides_next,
                                          const ColumnSums& s_prev_expected, int n) {
    const int i = guides_next.principal, j = guides_next.secondary, k = guides_next.idle;
    std::array<LemmaReport, 3> out;
    for (int t = 1; t <= 3; ++t) {
        BigInt recovered = D.at(i, t) - D.at(j, t) + D.at(k, t) - delta(j, t);
        out[t - 1] = report(Lemma::snminus1, n, t, s_prev_expected[t - 1], std::move(recovered));
    }
    return out;
}

std::array<LemmaReport, 3> check_dk(const DataMatrix& D, const GuideState& guides_next, int n) {
    const int i = guides_next.principal, j = guides_next.secondary, k = guides_next.idle;
    const int mu_n = parity(n);
    std::array<LemmaReport, 3> out;
    for (int t = 1; t <= 3; ++t) {
        const int signed_mu = delta(3, t) ? -mu_n : mu_n;
        BigInt rhs = D.at(i, t) + D.at(j, t) - delta(k, t) + delta(3, t) + signed_mu;
        out[t - 1] = report(Lemma::dk, n, t, D.at(k, t), std::move(rhs));
    }
    return out;
}

std::array<LemmaReport, 3> check_2dk(const DataMatrix& D, const GuideState& guides_next, int n) {
    const int k = guides_next.idle;
    const int mu_n = parity(n);
    std::array<LemmaReport, 3> out;
    for (int t = 1; t <= 3; ++t) {
        const int signed_mu = delta(3, t) ? -mu_n : mu_n;
        BigInt rhs = 2 * D.at(k, t) + delta(k, t) - delta(3, t) - signed_mu;
        out[t - 1] = report(Lemma::twodk, n, t, colsum(D, t), std::move(rhs));
    }
    return out;
}

std::array<LemmaReport, 3> check_propsum(const ColumnSums& s_n, const ColumnSums& s_prev,
                                         const ColumnSums& s_next, const BigInt& a,
                                         const DataMatrix& D, const GuideState& guides_next,
                                         int n) {
    const int i = guides_next.principal, j = guides_next.secondary, k = guides_next.idle;
    const int mu_n = parity(n);
    std::array<LemmaReport, 3> out;
    for (int t = 1; t <= 3; ++t) {
        BigInt raw = a * s_n[t - 1] +
                     a * (D.at(i, t) + D.at(j, t) - D.at(k, t) + delta(i, t) + delta(j, t)) +
                     (D.at(i, t) - D.at(j, t) + D.at(k, t) - delta(j, t));
        const BigInt& lhs = s_next[t - 1];
        if (n >= 1 && lhs == raw) {
            // reduced form; only the parity of n survives of the tally terms
            const int signed_mu = delta(3, t) ? -mu_n : mu_n;
            BigInt reduced = a * s_n[t - 1] + a * (1 - delta(3, t) - signed_mu) + s_prev[t - 1];
            out[t - 1] = report(Lemma::propsum, n, t, lhs, std::move(reduced));
        } else {
            out[t - 1] = report(Lemma::propsum, n, t, lhs, std::move(raw));
        }
    }
    return out;
}

std::vector<LemmaReport> verify_trace(const TransformTrace& trace) {
    const std::size_t m = trace.steps.size();
    std::vector<LemmaReport> reports;
    if (m == 0) return reports;
    reports.reserve(6 * m * 3);

    auto D_at = [&](std::size_t n) -> DataMatrix {
        return n == 0 ? DataMatrix::zero() : trace.steps[n - 1].D;
    };
    auto s_at = [&](std::size_t n) -> ColumnSums {
        return n == 0 ? ColumnSums{} : trace.steps[n - 1].s;
    };
    // guides of step n+1; one advance past the end for the checks anchored
    // at the last tally
    auto guides_after = [&](std::size_t n) -> GuideState {
        if (n < m) return trace.steps[n].guides;
        return advance_guides(trace.steps[m - 1].guides, trace.steps[m - 1].a);
    };

    auto push = [&](const std::array<LemmaReport, 3>& rs) {
        reports.insert(reports.end(), rs.begin(), rs.end());
    };

    for (std::size_t n = 0; n < m; ++n) {
        const GuideState g = guides_after(n);
        const BigInt& a = trace.steps[n].a;
        const int ni = static_cast<int>(n);
        push(check_difij(D_at(n), D_at(n + 1), g, a, ni));
        push(check_sn(D_at(n + 1), g, a, s_at(n), ni));
        push(check_propsum(s_at(n), n >= 1 ? s_at(n - 1) : ColumnSums{}, s_at(n + 1), a,
                           D_at(n), g, ni));
    }
    for (std::size_t n = 1; n <= m; ++n) {
        const GuideState g = guides_after(n);
        const int ni = static_cast<int>(n);
        push(check_snminus1(D_at(n), g, s_at(n - 1), ni));
        push(check_dk(D_at(n), g, ni));
        push(check_2dk(D_at(n), g, ni));
    }
    return reports;
}

bool all_pass(const std::vector<LemmaReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace ratlink
