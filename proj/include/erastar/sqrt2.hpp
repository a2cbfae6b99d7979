#pragma once
// Exact arithmetic on the lattice {a + b*sqrt(2) : a, b integers}.
// Every G8 path length and every detour penalty lives on this lattice, so
// searches can run bit-exactly when floating point would blur tie-breaks.

#include <cassert>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

namespace erastar {

struct Sqrt2 {
    std::int64_t a = 0;  // integer part
    std::int64_t b = 0;  // coefficient of sqrt(2)

    constexpr Sqrt2() = default;
    constexpr Sqrt2(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {}

    static constexpr Sqrt2 zero() { return {0, 0}; }
    static constexpr Sqrt2 one() { return {1, 0}; }
    static constexpr Sqrt2 root2() { return {0, 1}; }

    double to_double() const {
        return static_cast<double>(a) + static_cast<double>(b) * std::numbers::sqrt2;
    }

    constexpr Sqrt2 operator+(Sqrt2 o) const { return {a + o.a, b + o.b}; }
    constexpr Sqrt2 operator-(Sqrt2 o) const { return {a - o.a, b - o.b}; }
    constexpr Sqrt2 operator-() const { return {-a, -b}; }
    constexpr Sqrt2& operator+=(Sqrt2 o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    constexpr Sqrt2& operator-=(Sqrt2 o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }

    // Sign of a + b*sqrt(2), computed without floating point. When the signs
    // of a and b disagree the comparison reduces to a^2 vs 2*b^2; sqrt(2) is
    // irrational, so the squared forms tie only when a = b = 0.
    constexpr int sign() const {
        if (a == 0 && b == 0) return 0;
        if (a >= 0 && b >= 0) return 1;
        if (a <= 0 && b <= 0) return -1;
        const __int128 aa = static_cast<__int128>(a) * a;
        const __int128 bb2 = 2 * static_cast<__int128>(b) * b;
        if (a > 0)  // b < 0
            return aa > bb2 ? 1 : -1;
        // a < 0, b > 0
        return bb2 > aa ? 1 : -1;
    }

    constexpr bool operator==(Sqrt2 o) const { return a == o.a && b == o.b; }
    constexpr std::strong_ordering operator<=>(Sqrt2 o) const {
        const int s = (*this - o).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        if (b == 0) return std::to_string(a);
        std::string s = a == 0 ? std::string() : std::to_string(a);
        if (b == 1)
            s += s.empty() ? "r2" : "+r2";
        else if (b == -1)
            s += "-r2";
        else
            s += (b > 0 && !s.empty() ? "+" : "") + std::to_string(b) + "r2";
        return s;
    }
};

// Cost policy used by the search templates. `double` is the default mode;
// `Sqrt2` gives bit-exact ordering for differential tests.
template <typename C>
struct CostTraits;

template <>
struct CostTraits<double> {
    static constexpr double infinity() { return std::numeric_limits<double>::infinity(); }
    static constexpr double zero() { return 0.0; }
    static constexpr bool is_finite(double v) { return v != infinity(); }
    static double from_lattice(Sqrt2 v) { return v.to_double(); }
    static double from_steps(std::int64_t orth, std::int64_t diag) {
        return static_cast<double>(orth) + static_cast<double>(diag) * std::numbers::sqrt2;
    }
    static double to_double(double v) { return v; }
};

template <>
struct CostTraits<Sqrt2> {
    // Reserved sentinel; never appears as a real length and must not be
    // operated on arithmetically.
    static constexpr Sqrt2 infinity() { return {std::numeric_limits<std::int64_t>::max(), 0}; }
    static constexpr Sqrt2 zero() { return {0, 0}; }
    static constexpr bool is_finite(Sqrt2 v) { return !(v == infinity()); }
    static constexpr Sqrt2 from_lattice(Sqrt2 v) { return v; }
    static constexpr Sqrt2 from_steps(std::int64_t orth, std::int64_t diag) {
        return {orth, diag};
    }
    static double to_double(Sqrt2 v) { return v.to_double(); }
};

}  // namespace erastar
