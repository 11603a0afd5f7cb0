#ifndef DISSOC_COUNT_HPP
#define DISSOC_COUNT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dissoc {

/// Exact non-negative counter. Dissociation-set totals are bounded by
/// 2^n <= 2^126 for the supported graph sizes, so unsigned 128-bit
/// arithmetic always suffices; additions and multiplications still
/// check for wrap-around and throw instead of silently overflowing.
class Count {
public:
    using u128 = unsigned __int128;

    Count() = default;
    Count(std::uint64_t v) : v_(v) {}

    static Count pow2(int e) {
        if (e < 0 || e > 127) throw std::domain_error("Count::pow2: exponent out of range");
        Count c;
        c.v_ = u128{1} << e;
        return c;
    }

    Count operator+(const Count& o) const {
        u128 r = v_ + o.v_;
        if (r < v_) throw std::overflow_error("Count: addition overflow");
        Count c;
        c.v_ = r;
        return c;
    }

    Count operator*(const Count& o) const {
        if (v_ != 0 && o.v_ != 0) {
            u128 r = v_ * o.v_;
            if (r / v_ != o.v_) throw std::overflow_error("Count: multiplication overflow");
            Count c;
            c.v_ = r;
            return c;
        }
        return Count{};
    }

    Count operator-(const Count& o) const {
        if (o.v_ > v_) throw std::underflow_error("Count: subtraction below zero");
        Count c;
        c.v_ = v_ - o.v_;
        return c;
    }

    Count& operator+=(const Count& o) { return *this = *this + o; }
    Count& operator*=(const Count& o) { return *this = *this * o; }

    /// Halve an exactly-even value; used by the closed-form evaluations
    /// where the paper's exponent is negative for tiny n.
    Count half_exact() const {
        if (v_ & 1) throw std::domain_error("Count: half_exact of odd value");
        Count c;
        c.v_ = v_ >> 1;
        return c;
    }

    bool operator==(const Count&) const = default;
    std::strong_ordering operator<=>(const Count& o) const {
        if (v_ < o.v_) return std::strong_ordering::less;
        if (v_ > o.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        if (v_ == 0) return "0";
        std::string digits;
        u128 x = v_;
        while (x != 0) {
            digits.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
            x /= 10;
        }
        return {digits.rbegin(), digits.rend()};
    }

    u128 raw() const { return v_; }

private:
    u128 v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Count& c) {
    return os << c.str();
}

} // namespace dissoc

#endif
