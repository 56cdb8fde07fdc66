#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ratlink {

// All counts and presentation numbers are exact integers; the numerators grow
// at least as fast as Fibonacci numbers, so fixed-width types are not an option.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

// floor(a/2) for a >= 0
inline BigInt floor_half(const BigInt& a) { return a / 2; }

// ceil(a/2) for a >= 0
inline BigInt ceil_half(const BigInt& a) { return (a + 1) / 2; }

// parity indicator: 0 for even, 1 for odd
inline int parity(const BigInt& a) { return a % 2 == 0 ? 0 : 1; }
inline int parity(long long n) { return n % 2 == 0 ? 0 : 1; }

}  // namespace ratlink
