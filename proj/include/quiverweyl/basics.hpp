#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qw {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// All math in the core is exact; additions and multiplications on the
// Tits-form paths go through these so silent wraparound cannot fake a verdict.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

inline u64 checked_mul_u64(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

// Exact rational with normalized sign and gcd-reduced terms.
class Rational {
public:
    Rational() = default;
    Rational(i64 value) : num_(value) {}
    Rational(i64 num, i64 den) : num_(num), den_(den) { normalize(); }

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
    }
    Rational operator*(i64 k) const { return Rational(checked_mul(num_, k), den_); }
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Parses "p" or "p/q"; throws std::invalid_argument on malformed text.
    static Rational parse(const std::string& text);

private:
    void normalize() {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        i64 g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    i64 num_ = 0;
    i64 den_ = 1;
};

inline Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            i64 n = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument("");
            return Rational(n);
        }
        i64 n = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("");
        i64 d = std::stoll(text.substr(slash + 1), &used);
        if (used != text.size() - slash - 1) throw std::invalid_argument("");
        return Rational(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + text + "' (expected p or p/q)");
    }
}

using IntVec = std::vector<i64>;

inline i64 vec_total(const IntVec& a) {
    i64 s = 0;
    for (i64 x : a) s = checked_add(s, x);
    return s;
}

// Graded lexicographic order: by total, then entrywise.
inline bool graded_lex_less(const IntVec& a, const IntVec& b) {
    i64 sa = vec_total(a), sb = vec_total(b);
    if (sa != sb) return sa < sb;
    return a < b;
}

}  // namespace qw
