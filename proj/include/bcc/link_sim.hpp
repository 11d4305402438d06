#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bcc/bounds.hpp"
#include "bcc/code_model.hpp"
#include "bcc/qam.hpp"

namespace bcc {

// Total complex noise power N0 for unit-energy symbols at the given
// information-bit SNR: N0 = 1 / (m * Rc * 10^(ebno_db/10)).
double noise_variance_n0(double ebno_db, Rational rate, const ModulationSpec& mod);

// Adds circularly-symmetric complex Gaussian noise of total variance N0.
std::vector<Complex> awgn_channel(std::span<const Complex> symbols, double ebno_db, Rational rate,
                                  const ModulationSpec& mod, std::mt19937_64& rng);

// Fixed pseudo-random permutation; depends only on (seed, length).
std::vector<std::uint32_t> interleaver_permutation(std::uint64_t seed, std::size_t length);

template <typename T>
std::vector<T> interleave(std::span<const T> in, const std::vector<std::uint32_t>& perm) {
    std::vector<T> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[perm[i]];
    return out;
}

template <typename T>
std::vector<T> deinterleave(std::span<const T> in, const std::vector<std::uint32_t>& perm) {
    std::vector<T> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) out[perm[i]] = in[i];
    return out;
}

// Re-inserts punctured positions as exact-zero LLR erasures; kept positions
// pass through in order. full_len is the pre-puncturing serial length and
// must be consistent with the LLR count (std::invalid_argument otherwise).
std::vector<double> depuncture(std::span<const double> llrs, const PunctureSchedule& schedule,
                               std::size_t full_len);
// Convenience form: infers the smallest consistent full length, i.e. the
// restored stream never ends in erasures.
std::vector<double> depuncture(std::span<const double> llrs, const PunctureSchedule& schedule);

// Maximum-likelihood sequence decoding of full-rate LLRs (positive favors
// bit 0). With `terminated`, the path is pinned to state 0 at both ends and
// the six tail bits are stripped from the result.
BitVec viterbi_decode(std::span<const double> llrs, bool terminated,
                      const GeneratorSet& gens = GeneratorSet::standard());

struct StopRule {
    std::uint64_t min_frame_errors = 100;
    std::uint64_t min_bit_errors = 500;
    std::uint64_t max_frames = 10'000'000;
};

// Bit-to-symbol assignment policy. `none` fills symbols serially, which on
// flat AWGN already cycles coded bits through the constellation's
// reliability levels; `random` applies the seeded per-length permutation.
enum class Interleave { none, random };

struct SimConfig {
    PunctureSchedule schedule;
    ModulationSpec modulation;
    double ebno_db = 0.0;
    int frame_bits = 1024;  // K information bits per frame
    std::uint64_t seed = 1;
    StopRule stop;
    Interleave interleave = Interleave::none;
    int workers = 1;  // 0 = one per hardware thread
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct SimResult {
    std::uint64_t frames = 0;
    std::uint64_t bits = 0;  // information bits only
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    double ber = 0.0;
    double fer = 0.0;
    Interval ber_ci95;
    Interval fer_ci95;
};

// Monte Carlo BER/FER at one SNR point: random frames through
// encode -> puncture -> pad -> interleave -> map -> AWGN -> demap ->
// deinterleave -> depuncture -> viterbi. Each frame draws its randomness
// from a stream derived from (seed, frame index), so tallies are identical
// for any worker count. The stop rule is evaluated on fixed frame batches.
SimResult run_point(const SimConfig& config);

std::vector<SimResult> run_sweep(std::span<const SimConfig> configs);

// Wilson 95% score interval for a binomial proportion.
Interval binomial_ci95(std::uint64_t successes, std::uint64_t trials);

}  // namespace bcc
