#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bcc {

// Unsigned arbitrary-precision integer over 64-bit little-endian limbs.
// Spectrum multiplicities overflow uint64 long before the interesting part
// of the tables ends, so all event counting runs on this type. Only the
// operations the counting needs exist: add, multiply, compare, decimal I/O.
class BigUint {
  public:
    BigUint() = default;
    BigUint(std::uint64_t value) {
        if (value != 0) limbs_.push_back(value);
    }

    bool is_zero() const noexcept { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& rhs);
    BigUint& operator*=(const BigUint& rhs);

    friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend BigUint operator*(const BigUint& lhs, const BigUint& rhs);

    bool operator==(const BigUint&) const = default;
    std::strong_ordering operator<=>(const BigUint& rhs) const noexcept;

    std::string to_string() const;
    // Parses a plain decimal string; nullopt on anything but [0-9]+.
    static std::optional<BigUint> from_string(std::string_view digits);

    // Nearest double; +inf once the value leaves double range.
    double to_double() const noexcept;

    std::size_t limb_count() const noexcept { return limbs_.size(); }

  private:
    std::vector<std::uint64_t> limbs_;  // no trailing zero limbs; empty == 0
};

}  // namespace bcc
