#include "ratlink/contfrac.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace ratlink {

ContinuedFraction::ContinuedFraction(std::vector<BigInt> terms) : terms_(std::move(terms)) {
    for (std::size_t idx = 0; idx < terms_.size(); ++idx) {
        if (terms_[idx] < 1)
            throw std::domain_error("term " + std::to_string(idx + 1) +
                                    " is not a positive integer: " + terms_[idx].str());
    }
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
};

[[noreturn]] void syntax_error(const std::string& what) {
    throw std::invalid_argument("malformed continued fraction: " + what);
}

}  // namespace

ContinuedFraction parse_fraction(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    if (c.done() || c.peek() != '[') syntax_error("expected '['");
    ++c.pos;
    c.skip_ws();

    std::vector<BigInt> terms;
    if (!c.done() && c.peek() == ']') {
        ++c.pos;
    } else {
        for (;;) {
            c.skip_ws();
            std::size_t start = c.pos;
            if (!c.done() && c.peek() == '-') ++c.pos;
            while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
            if (c.pos == start || (text[start] == '-' && c.pos == start + 1))
                syntax_error("expected an integer at position " + std::to_string(start));
            std::size_t term_index = terms.size() + 1;
            if (!c.done() && c.peek() == '.')
                throw std::domain_error("term " + std::to_string(term_index) +
                                        " is not an integer");
            terms.emplace_back(std::string(text.substr(start, c.pos - start)));
            if (terms.back() < 1)
                throw std::domain_error("term " + std::to_string(term_index) +
                                        " is not a positive integer: " + terms.back().str());
            c.skip_ws();
            if (!c.done() && c.peek() == ',') {
                ++c.pos;
                continue;
            }
            if (!c.done() && c.peek() == ']') {
                ++c.pos;
                break;
            }
            syntax_error("expected ',' or ']'");
        }
    }
    c.skip_ws();
    if (!c.done()) syntax_error("trailing characters after ']'");
    return ContinuedFraction(std::move(terms));
}

std::vector<Convergent> convergents(const ContinuedFraction& cf) {
    std::vector<Convergent> out;
    out.reserve(cf.length() + 1);
    out.push_back({0, 1, 0});
    BigInt p_prev = 1, q_prev = 0;  // p_{n-1}, q_{n-1}
    BigInt p_cur, q_cur;            // p_n, q_n
    for (std::size_t n = 1; n <= cf.length(); ++n) {
        const BigInt& a = cf.term(n);
        if (n == 1) {
            p_cur = a;
            q_cur = 1;
        } else {
            BigInt p_next = a * p_cur + p_prev;
            BigInt q_next = a * q_cur + q_prev;
            p_prev = std::move(p_cur);
            q_prev = std::move(q_cur);
            p_cur = std::move(p_next);
            q_cur = std::move(q_next);
        }
        out.push_back({n, p_cur, q_cur});
    }
    return out;
}

std::pair<BigInt, BigInt> evaluate_backward(const ContinuedFraction& cf) {
    if (cf.empty()) throw std::domain_error("cannot evaluate the empty fraction");
    // Fold from the innermost term: a + 1/(num/den) = (a*num + den)/num.
    BigInt num = cf.term(cf.length());
    BigInt den = 1;
    for (std::size_t n = cf.length(); n-- > 1;) {
        BigInt next_num = cf.term(n) * num + den;
        den = std::move(num);
        num = std::move(next_num);
    }
    BigInt g = gcd(num, den);
    return {num / g, den / g};
}

}  // namespace ratlink
