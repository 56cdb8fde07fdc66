#include "ratlink/engine.hpp"

#include <stdexcept>

namespace ratlink {

DataMatrix step(const DataMatrix& D, const ChangeMatrix& M) {
    return 2 * (M * D) + D + M;
}

DataMatrix step_scalar(const DataMatrix& D, const GuideState& guides, const BigInt& a) {
    if (!guides.valid()) throw std::invalid_argument("invalid guide state");
    if (a < 1) throw std::domain_error("twist size must be positive");
    const int i = guides.principal, j = guides.secondary, k = guides.idle;
    const BigInt fa = floor_half(a);       // new undercrossings of the principal, per pass
    const BigInt ca = ceil_half(a);        // of the secondary, per pass under the principal
    const BigInt fb = floor_half(a - 1);
    const BigInt cb = ceil_half(a - 1);

    DataMatrix out;
    for (int t = 1; t <= 3; ++t) {
        out.at(k, t) = D.at(k, t);  // idle row carried over untouched
        out.at(i, t) = (1 + 2 * fa) * D.at(i, t) + 2 * cb * D.at(j, t);
        out.at(j, t) = (1 + 2 * fb) * D.at(j, t) + 2 * ca * D.at(i, t);
    }
    // crossings added where the guides reach their endpoints
    out.at(i, i) += fa;
    out.at(i, j) += cb;
    out.at(j, i) += ca;
    out.at(j, j) += fb;
    return out;
}

ColumnSums column_sums(const DataMatrix& D) {
    ColumnSums s;
    for (int t = 1; t <= 3; ++t) s[t - 1] = D.at(1, t) + D.at(2, t) + D.at(3, t);
    return s;
}

std::pair<BigInt, BigInt> pq_at_step(const ColumnSums& s, int n) {
    const int mu = parity(n);
    return {s[0] + 1 - mu, s[2] + mu};
}

TransformTrace transform(const ContinuedFraction& cf, bool allow_empty) {
    TransformTrace trace;
    trace.input = cf;

    if (cf.empty()) {
        if (!allow_empty) throw std::domain_error("cannot transform the empty fraction");
        trace.final = BridgePresentation{1, 0, true};
        trace.rule = FinalRule::even_m;
        return trace;
    }

    const std::size_t m = cf.length();
    trace.steps.reserve(m);

    GuideState guides = GuideState::initial();
    DataMatrix D;
    for (std::size_t n = 1; n <= m; ++n) {
        if (n > 1) guides = advance_guides(guides, cf.term(n - 1));
        const BigInt& a = cf.term(n);
        ChangeMatrix M = change_matrix(guides, a);
        D = step(D, M);

        StepRecord rec;
        rec.n = static_cast<int>(n);
        rec.a = a;
        rec.guides = guides;
        rec.M = std::move(M);
        rec.D = D;
        rec.s = column_sums(D);
        rec.mu = parity(rec.n);
        auto [p, q] = pq_at_step(rec.s, rec.n);
        rec.p = std::move(p);
        rec.q = std::move(q);
        trace.steps.push_back(std::move(rec));
    }

    const StepRecord& last = trace.steps.back();
    BigInt fp, fq;
    if (m % 2 == 0) {
        trace.rule = FinalRule::even_m;
        fp = last.s[0] + 1;
        fq = last.s[2];
    } else {
        trace.rule = FinalRule::odd_m_kink;
        fp = last.s[0];
        fq = last.s[2] + 1;
    }
    if (fp != last.p || fq != last.q)
        throw std::logic_error("final extraction disagrees with the per-step values");
    trace.final = make_presentation(std::move(fp), std::move(fq));
    return trace;
}

}  // namespace ratlink
