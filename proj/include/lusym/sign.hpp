#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lusym {

// Multiplicative sign group {+, -}.
enum class Sign : int8_t { plus = 1, minus = -1 };

constexpr Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::plus : Sign::minus;
}

constexpr Sign& operator*=(Sign& a, Sign b) {
    a = a * b;
    return a;
}

constexpr Sign operator-(Sign a) {
    return a == Sign::plus ? Sign::minus : Sign::plus;
}

constexpr int to_int(Sign a) { return a == Sign::plus ? 1 : -1; }

constexpr Sign sign_of(long v) {
    if (v == 0)
        throw std::invalid_argument("sign_of: zero has no sign");
    return v > 0 ? Sign::plus : Sign::minus;
}

// (-1)^e
constexpr Sign parity_sign(long e) {
    return (e % 2) == 0 ? Sign::plus : Sign::minus;
}

// a^e
constexpr Sign sign_pow(Sign a, long e) {
    return (e % 2) == 0 ? Sign::plus : a;
}

constexpr char sign_char(Sign a) { return a == Sign::plus ? '+' : '-'; }

inline Sign parse_sign(const std::string& s) {
    if (s == "+" || s == "plus" || s == "1")
        return Sign::plus;
    if (s == "-" || s == "minus" || s == "-1")
        return Sign::minus;
    throw std::invalid_argument("parse_sign: expected '+' or '-', got '" + s + "'");
}

// Session-wide sign configuration: ee is the square class of -1 in F_q^x,
// i.e. + exactly when q = 1 (mod 4).
struct SignConfig {
    Sign ee = Sign::plus;

    static SignConfig from_q_class(int q_mod_4) {
        if (q_mod_4 == 1) return {Sign::plus};
        if (q_mod_4 == 3) return {Sign::minus};
        throw std::invalid_argument("SignConfig: q mod 4 must be 1 or 3");
    }
};

// A subset of {+, -}; the value of zeta() on a symbol.
struct SignSet {
    bool has_plus = false;
    bool has_minus = false;

    constexpr bool operator==(const SignSet&) const = default;

    constexpr bool contains(Sign s) const {
        return s == Sign::plus ? has_plus : has_minus;
    }
    constexpr bool both() const { return has_plus && has_minus; }

    static constexpr SignSet only(Sign s) {
        return s == Sign::plus ? SignSet{true, false} : SignSet{false, true};
    }
    static constexpr SignSet all() { return {true, true}; }
};

inline std::string to_string(const SignSet& z) {
    if (z.both()) return "{+,-}";
    if (z.has_plus) return "{+}";
    if (z.has_minus) return "{-}";
    return "{}";
}

} // namespace lusym
