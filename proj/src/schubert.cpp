#include "ratlink/schubert.hpp"

#include <stdexcept>
#include <utility>

namespace ratlink {

BridgePresentation make_presentation(BigInt p, BigInt q) {
    if (p < 1) throw std::domain_error("presentation requires p >= 1");
    bool degenerate = !(q > 0 && q < p);
    return BridgePresentation{std::move(p), std::move(q), degenerate};
}

BridgePresentation normalize(const BigInt& p, const BigInt& q) {
    if (p < 1) throw std::domain_error("normalize requires p >= 1");
    if (q < 0) throw std::domain_error("normalize requires q >= 0");
    if (q == p) return BridgePresentation{1, 1, true};  // unknot, kink collapsed
    BigInt r = q % p;
    BigInt g = gcd(p, r);
    BigInt np = p / g;
    BigInt nr = r / g;
    if (np == 1) return BridgePresentation{1, 0, true};  // trivial
    return BridgePresentation{std::move(np), std::move(nr), false};
}

bool equivalent(const BridgePresentation& a, const BridgePresentation& b) {
    if (a.degenerate || b.degenerate)
        throw std::domain_error("equivalence test requires non-degenerate presentations");
    if (a.p != b.p) return false;
    if (a.q == b.q) return true;
    return (a.q * b.q) % a.p == 1;
}

BridgePresentation mirror(const BridgePresentation& a) {
    if (a.degenerate) throw std::domain_error("mirror requires a non-degenerate presentation");
    return normalize(a.p, a.p - a.q);
}

}  // namespace ratlink
