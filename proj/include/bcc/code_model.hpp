#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcc {

inline constexpr int kConstraintLength = 7;
inline constexpr int kNumStates = 64;  // 2^(K-1)
inline constexpr int kStateMask = kNumStates - 1;
inline constexpr int kTailBits = kConstraintLength - 1;

using BitVec = std::vector<std::uint8_t>;

// Exact rational, kept in lowest terms (used for code rates and the
// modulation penalty factor).
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational reduced(long long num, long long den);
    double value() const { return double(num) / double(den); }
    std::string str() const;
    bool operator==(const Rational&) const = default;
};

// Feedforward generator taps for a two-output constraint-length-7 code;
// bit i of each mask is the coefficient of D^i. Defaults to the 802.11
// mother code, conventionally named g1 = 133 / g2 = 171 octal:
//   g1(D) = 1 + D^2 + D^3 + D^5 + D^6
//   g2(D) = 1 + D   + D^2 + D^3 + D^6
struct GeneratorSet {
    int constraint_length = kConstraintLength;
    std::array<std::uint8_t, 2> taps{0b1101101, 0b1001111};

    static GeneratorSet standard() { return {}; }
    // Throws std::domain_error unless both taps are delay-free (bit 0 set)
    // and reach the last memory element (bit 6 set).
    void validate() const;
};

struct TrellisBranch {
    std::uint8_t from_state;
    std::uint8_t input;
    std::uint8_t to_state;
    std::uint8_t out1;
    std::uint8_t out2;
};

// State transition: sigma' = ((sigma << 1) & 0x3F) | u.
// Throws std::domain_error for out-of-range arguments.
int next_state(int state, int input);

// Output pair for one transition, XOR of the taps over (u, sigma0..sigma5).
std::pair<int, int> branch_outputs(const GeneratorSet& gens, int state, int input);
inline std::pair<int, int> branch_outputs(int state, int input) {
    return branch_outputs(GeneratorSet::standard(), state, input);
}

// All 128 branches of the 64-state trellis, indexed by (state, input).
class Trellis {
  public:
    explicit Trellis(const GeneratorSet& gens = GeneratorSet::standard());

    const TrellisBranch& branch(int state, int input) const {
        return branches_[std::size_t(state) * 2 + std::size_t(input)];
    }
    const std::array<TrellisBranch, 2 * kNumStates>& branches() const { return branches_; }
    const GeneratorSet& generators() const { return gens_; }

  private:
    GeneratorSet gens_;
    std::array<TrellisBranch, 2 * kNumStates> branches_;
};

inline Trellis build_trellis(const GeneratorSet& gens = GeneratorSet::standard()) {
    return Trellis(gens);
}

// Zero-state encoder; with terminate set, six zero tail bits flush the
// register back to state 0. Output is the serialized (v1, v2) stream.
BitVec encode(const BitVec& info_bits, bool terminate,
              const GeneratorSet& gens = GeneratorSet::standard());

// Serial puncture mask over one period. Position i of the coded stream is
// transmitted iff mask[i mod L] == 1. Masks are written leftmost = serial
// position 0, e.g. "111001" for rate 3/4.
class PunctureSchedule {
  public:
    PunctureSchedule() : PunctureSchedule("11") {}

    // Throws std::invalid_argument for characters outside {0,1}, odd or
    // short periods, or an all-zero mask.
    static PunctureSchedule from_mask(std::string_view mask);
    // One of "1/2", "2/3", "3/4", "5/6"; throws std::invalid_argument otherwise.
    static PunctureSchedule for_rate(std::string_view name);

    const std::string& mask() const { return mask_; }
    int period() const { return int(mask_.size()); }
    int kept_per_period() const { return kept_per_period_; }
    bool keeps(std::size_t serial_index) const {
        return mask_[serial_index % mask_.size()] == '1';
    }
    // Transmitted positions among the first full_len serial positions.
    std::size_t kept_count(std::size_t full_len) const;
    Rational rate() const { return rate_; }
    bool is_unpunctured() const { return kept_per_period_ == period(); }

    bool operator==(const PunctureSchedule&) const = default;

  private:
    explicit PunctureSchedule(std::string mask);

    std::string mask_;
    int kept_per_period_ = 0;
    Rational rate_;
};

// Keeps coded_bits[i] iff the mask keeps serial position i; order preserved.
BitVec puncture(const BitVec& coded_bits, const PunctureSchedule& schedule);

}  // namespace bcc
