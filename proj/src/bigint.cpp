#include "bcc/bigint.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace bcc {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigUint& BigUint::operator+=(const BigUint& rhs) {
    if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 sum = u128(limbs_[i]) + carry;
        if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
        limbs_[i] = u64(sum);
        carry = u64(sum >> 64);
        if (carry == 0 && i >= rhs.limbs_.size()) break;
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
}

BigUint operator*(const BigUint& lhs, const BigUint& rhs) {
    BigUint out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            u128 cur = u128(lhs.limbs_[i]) * rhs.limbs_[j] + out.limbs_[i + j] + carry;
            out.limbs_[i + j] = u64(cur);
            carry = u64(cur >> 64);
        }
        out.limbs_[i + rhs.limbs_.size()] += carry;
    }
    while (!out.limbs_.empty() && out.limbs_.back() == 0) out.limbs_.pop_back();
    return out;
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
    *this = *this * rhs;
    return *this;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const noexcept {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

namespace {
constexpr u64 kDecChunk = 10'000'000'000'000'000'000ull;  // 10^19
constexpr int kDecChunkDigits = 19;
}  // namespace

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    std::vector<u64> work(limbs_);
    std::string out;
    while (!work.empty()) {
        u64 rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            u128 cur = (u128(rem) << 64) | work[i];
            work[i] = u64(cur / kDecChunk);
            rem = u64(cur % kDecChunk);
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        std::array<char, kDecChunkDigits> chunk{};
        for (int k = 0; k < kDecChunkDigits; ++k) {
            chunk[k] = char('0' + rem % 10);
            rem /= 10;
        }
        int n = kDecChunkDigits;
        if (work.empty()) {  // most significant chunk: drop leading zeros
            while (n > 1 && chunk[n - 1] == '0') --n;
        }
        out.append(chunk.data(), chunk.data() + n);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::optional<BigUint> BigUint::from_string(std::string_view digits) {
    if (digits.empty()) return std::nullopt;
    for (char c : digits) {
        if (c < '0' || c > '9') return std::nullopt;
    }
    BigUint out;
    std::size_t pos = 0;
    while (pos < digits.size()) {
        std::size_t take = std::min<std::size_t>(kDecChunkDigits, digits.size() - pos);
        u64 chunk = 0;
        u64 scale = 1;
        for (std::size_t k = 0; k < take; ++k) {
            chunk = chunk * 10 + u64(digits[pos + k] - '0');
            scale *= 10;
        }
        // out = out * 10^take + chunk
        u64 carry = 0;
        for (auto& limb : out.limbs_) {
            u128 cur = u128(limb) * scale + carry;
            limb = u64(cur);
            carry = u64(cur >> 64);
        }
        if (carry != 0) out.limbs_.push_back(carry);
        out += BigUint(chunk);
        pos += take;
    }
    return out;
}

double BigUint::to_double() const noexcept {
    double r = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        r = r * 18446744073709551616.0 + double(limbs_[i]);
    }
    return r;
}

}  // namespace bcc
