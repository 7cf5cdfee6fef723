#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace beanbag {

// Exact non-negative ratio of 64-bit integers, kept in reduced form
// (gcd(num, den) == 1) at all times.  Two extended points are allowed:
// zero is canonically 0/1 and infinity is 1/0.  0/0 is invalid.
//
// All quantities the worked examples pin down exactly (odds, predictive
// probabilities, per-draw updating factors) are instances of this type,
// so equality tests on them are exact rather than tolerance-based.
class Ratio {
public:
    // Zero (0/1).
    constexpr Ratio() = default;

    // Reduces num/den; throws std::invalid_argument on 0/0 and
    // canonicalizes x/0 (x > 0) to infinity.
    Ratio(std::uint64_t num, std::uint64_t den);

    static Ratio zero() { return Ratio{}; }
    static Ratio one() { return Ratio{1, 1}; }
    static Ratio infinity();

    std::uint64_t numerator() const { return num_; }
    std::uint64_t denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_infinite() const { return den_ == 0; }
    bool is_finite() const { return den_ != 0; }

    // num/den as a double; infinity maps to +inf.
    double value() const;

    // Swaps numerator and denominator (0 <-> inf).
    Ratio reciprocal() const;

    // Exact product with cross-reduction; throws std::domain_error on
    // 0 * inf and std::overflow_error if the reduced result does not fit.
    Ratio operator*(const Ratio& other) const;
    Ratio& operator*=(const Ratio& other);

    // "num/den" (zero prints "0/1", infinity "1/0").
    std::string to_string() const;

    friend bool operator==(const Ratio&, const Ratio&) = default;
    std::strong_ordering operator<=>(const Ratio& other) const;

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

} // namespace beanbag
