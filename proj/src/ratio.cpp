#include "beanbag/ratio.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace beanbag {

namespace {

using u128 = unsigned __int128;

std::uint64_t checked_u64(u128 v, const char* what) {
    if (v > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error(what);
    }
    return static_cast<std::uint64_t>(v);
}

} // namespace

Ratio::Ratio(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (num_ == 0 && den_ == 0) {
        throw std::invalid_argument("Ratio: 0/0 is undefined");
    }
    if (num_ == 0) {
        den_ = 1;
    } else if (den_ == 0) {
        num_ = 1;
    } else {
        const std::uint64_t g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }
}

Ratio Ratio::infinity() {
    return Ratio{1, 0};
}

double Ratio::value() const {
    if (is_infinite()) {
        return std::numeric_limits<double>::infinity();
    }
    return static_cast<double>(num_) / static_cast<double>(den_);
}

Ratio Ratio::reciprocal() const {
    return Ratio{den_, num_};
}

Ratio Ratio::operator*(const Ratio& other) const {
    if ((is_zero() && other.is_infinite()) || (is_infinite() && other.is_zero())) {
        throw std::domain_error("Ratio: 0 * inf is undefined");
    }
    // Cross-reduce before multiplying so telescoping products stay small.
    // Neither gcd can be 0 here: that would need a 0 * inf operand pair.
    const std::uint64_t g1 = std::gcd(num_, other.den_);
    const std::uint64_t g2 = std::gcd(other.num_, den_);
    const u128 n = u128(num_ / g1) * (other.num_ / g2);
    const u128 d = u128(den_ / g2) * (other.den_ / g1);
    return Ratio{checked_u64(n, "Ratio: product numerator overflow"),
                 checked_u64(d, "Ratio: product denominator overflow")};
}

Ratio& Ratio::operator*=(const Ratio& other) {
    *this = *this * other;
    return *this;
}

std::string Ratio::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering Ratio::operator<=>(const Ratio& other) const {
    // num/0 sorts above every finite value; canonical forms make the
    // cross-product comparison exact.
    return u128(num_) * other.den_ <=> u128(other.num_) * den_;
}

} // namespace beanbag
