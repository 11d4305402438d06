#include "bcc/code_model.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace bcc {

Rational Rational::reduced(long long num, long long den) {
    long long g = std::gcd(num, den);
    if (g == 0) return {0, 1};
    return {num / g, den / g};
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

void GeneratorSet::validate() const {
    if (constraint_length != kConstraintLength)
        throw std::domain_error("generator set: constraint length must be 7");
    for (auto g : taps) {
        if ((g & 0x01) == 0 || (g & 0x40) == 0)
            throw std::domain_error(
                "generator set: taps must be delay-free (bit 0) and span the full memory (bit 6)");
        if (g > 0x7F) throw std::domain_error("generator set: tap mask exceeds 7 bits");
    }
}

int next_state(int state, int input) {
    if (state < 0 || state >= kNumStates) throw std::domain_error("trellis state out of range");
    if (input != 0 && input != 1) throw std::domain_error("encoder input must be a bit");
    return ((state << 1) & kStateMask) | input;
}

std::pair<int, int> branch_outputs(const GeneratorSet& gens, int state, int input) {
    if (state < 0 || state >= kNumStates) throw std::domain_error("trellis state out of range");
    if (input != 0 && input != 1) throw std::domain_error("encoder input must be a bit");
    // r = (u, sigma0..sigma5); bit i of the register word is r_i
    unsigned reg = unsigned(input) | (unsigned(state) << 1);
    int v1 = std::popcount(reg & gens.taps[0]) & 1;
    int v2 = std::popcount(reg & gens.taps[1]) & 1;
    return {v1, v2};
}

Trellis::Trellis(const GeneratorSet& gens) : gens_(gens) {
    gens_.validate();
    for (int s = 0; s < kNumStates; ++s) {
        for (int u = 0; u < 2; ++u) {
            auto [v1, v2] = branch_outputs(gens_, s, u);
            branches_[std::size_t(s) * 2 + std::size_t(u)] = TrellisBranch{
                std::uint8_t(s), std::uint8_t(u), std::uint8_t(next_state(s, u)),
                std::uint8_t(v1), std::uint8_t(v2)};
        }
    }
}

BitVec encode(const BitVec& info_bits, bool terminate, const GeneratorSet& gens) {
    gens.validate();
    BitVec out;
    out.reserve(2 * (info_bits.size() + (terminate ? kTailBits : 0)));
    int state = 0;
    auto step = [&](int u) {
        auto [v1, v2] = branch_outputs(gens, state, u);
        out.push_back(std::uint8_t(v1));
        out.push_back(std::uint8_t(v2));
        state = next_state(state, u);
    };
    for (auto b : info_bits) step(b & 1);
    if (terminate) {
        for (int i = 0; i < kTailBits; ++i) step(0);
    }
    return out;
}

PunctureSchedule::PunctureSchedule(std::string mask) : mask_(std::move(mask)) {
    for (char c : mask_) {
        if (c == '1') ++kept_per_period_;
    }
    rate_ = Rational::reduced(long(mask_.size()) / 2, kept_per_period_);
}

PunctureSchedule PunctureSchedule::from_mask(std::string_view mask) {
    if (mask.size() < 2 || mask.size() % 2 != 0)
        throw std::invalid_argument("puncture mask period must be even and at least 2");
    int kept = 0;
    for (char c : mask) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("puncture mask may only contain '0' and '1'");
        if (c == '1') ++kept;
    }
    if (kept == 0) throw std::invalid_argument("puncture mask must keep at least one position");
    return PunctureSchedule(std::string(mask));
}

PunctureSchedule PunctureSchedule::for_rate(std::string_view name) {
    if (name == "1/2") return PunctureSchedule("11");
    if (name == "2/3") return PunctureSchedule("1110");
    if (name == "3/4") return PunctureSchedule("111001");
    if (name == "5/6") return PunctureSchedule("1110011001");
    throw std::invalid_argument("unknown code rate \"" + std::string(name) +
                                "\" (expected 1/2, 2/3, 3/4 or 5/6)");
}

std::size_t PunctureSchedule::kept_count(std::size_t full_len) const {
    std::size_t L = mask_.size();
    std::size_t full_periods = full_len / L;
    std::size_t count = full_periods * std::size_t(kept_per_period_);
    for (std::size_t i = full_periods * L; i < full_len; ++i) {
        if (mask_[i % L] == '1') ++count;
    }
    return count;
}

BitVec puncture(const BitVec& coded_bits, const PunctureSchedule& schedule) {
    BitVec out;
    out.reserve(schedule.kept_count(coded_bits.size()));
    for (std::size_t i = 0; i < coded_bits.size(); ++i) {
        if (schedule.keeps(i)) out.push_back(coded_bits[i]);
    }
    return out;
}

}  // namespace bcc
