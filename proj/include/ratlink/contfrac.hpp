#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratlink/bigint.hpp"

namespace ratlink {

/// A continued fraction with strictly positive integer terms. The empty
/// fraction (m = 0) is allowed and stands for the trivial presentation 1/0.
class ContinuedFraction {
  public:
    ContinuedFraction() = default;

    /// Validates every term; throws std::domain_error naming the 1-based
    /// index of the first non-positive term.
    explicit ContinuedFraction(std::vector<BigInt> terms);

    const std::vector<BigInt>& terms() const { return terms_; }
    std::size_t length() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const BigInt& term(std::size_t n) const { return terms_.at(n - 1); }  // 1-based

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

  private:
    std::vector<BigInt> terms_;
};

struct Convergent {
    std::size_t n = 0;
    BigInt p;
    BigInt q;

    friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Parses "[a1,a2,...]" (whitespace-tolerant). Throws std::invalid_argument
/// on malformed syntax and std::domain_error on out-of-domain terms.
ContinuedFraction parse_fraction(std::string_view text);

/// All convergents p_n/q_n for n = 0..m, starting from (p0,q0) = (1,0) and
/// (p1,q1) = (a1,1), via p_{n+1} = a_{n+1} p_n + p_{n-1} (and the same for q).
std::vector<Convergent> convergents(const ContinuedFraction& cf);

/// Independent evaluator: folds the fraction from the innermost term as an
/// exact rational and reduces. Must agree with the last convergent.
/// Throws std::domain_error for the empty fraction.
std::pair<BigInt, BigInt> evaluate_backward(const ContinuedFraction& cf);

}  // namespace ratlink
