#pragma once

#include <array>
#include <string>

#include "ratlink/bigint.hpp"

namespace ratlink {

/// 3x3 matrix of exact integers, indexed 1..3 in both coordinates to match
/// the string labels used throughout the transformation. Row r, column t.
class Mat3 {
  public:
    Mat3() = default;

    static Mat3 zero() { return Mat3{}; }

    BigInt& at(int r, int t) { return entries_[idx(r, t)]; }
    const BigInt& at(int r, int t) const { return entries_[idx(r, t)]; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    bool nonnegative() const {
        for (const auto& e : entries_)
            if (e < 0) return false;
        return true;
    }

    friend Mat3 operator*(const Mat3& a, const Mat3& b) {
        Mat3 c;
        for (int r = 1; r <= 3; ++r)
            for (int t = 1; t <= 3; ++t) {
                BigInt acc = 0;
                for (int x = 1; x <= 3; ++x) acc += a.at(r, x) * b.at(x, t);
                c.at(r, t) = std::move(acc);
            }
        return c;
    }

    friend Mat3 operator+(const Mat3& a, const Mat3& b) {
        Mat3 c;
        for (int r = 1; r <= 3; ++r)
            for (int t = 1; t <= 3; ++t) c.at(r, t) = a.at(r, t) + b.at(r, t);
        return c;
    }

    friend Mat3 operator*(int k, const Mat3& a) {
        Mat3 c;
        for (int r = 1; r <= 3; ++r)
            for (int t = 1; t <= 3; ++t) c.at(r, t) = k * a.at(r, t);
        return c;
    }

    friend bool operator==(const Mat3&, const Mat3&) = default;

    /// Transpose; for permutation matrices this is the inverse.
    Mat3 transposed() const {
        Mat3 c;
        for (int r = 1; r <= 3; ++r)
            for (int t = 1; t <= 3; ++t) c.at(r, t) = at(t, r);
        return c;
    }

    /// Compact row-major rendering, e.g. "[[1,1,0],[1,0,0],[0,0,0]]".
    std::string to_string() const {
        std::string out = "[";
        for (int r = 1; r <= 3; ++r) {
            out += (r == 1 ? "[" : ",[");
            for (int t = 1; t <= 3; ++t) {
                if (t > 1) out += ",";
                out += at(r, t).str();
            }
            out += "]";
        }
        out += "]";
        return out;
    }

  private:
    static constexpr int idx(int r, int t) { return (r - 1) * 3 + (t - 1); }
    std::array<BigInt, 9> entries_{};
};

}  // namespace ratlink
