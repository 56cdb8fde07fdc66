#pragma once

#include <string>

#include "ratlink/bigint.hpp"

namespace ratlink {

/// A two-bridge presentation p/q. The reduced form satisfies 0 < q < p with
/// gcd(p,q) = 1; the two degenerate values 1/0 (trivial) and 1/1 (unknot as
/// a collapsed kink) are carried with a flag instead of being rejected.
struct BridgePresentation {
    BigInt p = 1;
    BigInt q = 0;
    bool degenerate = true;

    std::string to_string() const { return p.str() + "/" + q.str(); }

    friend bool operator==(const BridgePresentation&, const BridgePresentation&) = default;
};

/// Builds a presentation from raw values without normalizing, flagging it
/// degenerate unless 0 < q < p.
BridgePresentation make_presentation(BigInt p, BigInt q);

/// Canonical representative: reduces q mod p, divides out the gcd, and flags
/// the degenerate outcomes. Idempotent. Throws std::domain_error for p < 1
/// or q < 0.
BridgePresentation normalize(const BigInt& p, const BigInt& q);

/// Classical two-bridge equivalence: same p, and the q values equal or
/// multiplicative inverses mod p. This criterion is imported from the
/// classification literature, not derived here; it lives in this module so
/// the transformation core stays free of it.
/// Throws std::domain_error if either input is degenerate.
bool equivalent(const BridgePresentation& a, const BridgePresentation& b);

/// Mirror image, q -> p - q. Conventions for rational diagrams differ across
/// the literature precisely by this map, so it is exposed separately rather
/// than folded into equivalent(). Throws std::domain_error on degenerates.
BridgePresentation mirror(const BridgePresentation& a);

}  // namespace ratlink
