#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bcc/spectrum.hpp"

namespace bcc {

// Constellation family used by both the closed-form bounds and the link
// simulator. `delta` is the effective-SNR penalty of Gray-coded square
// M-QAM relative to BPSK/QPSK under the minimum-distance pairwise model:
// 3m / (2(M-1)) for M >= 4 and exactly 1 for BPSK and QPSK.
struct ModulationSpec {
    int points = 4;          // M
    int bits_per_symbol = 2; // m = log2 M
    Rational delta{1, 1};

    // M in {2, 4, 16, 64, 256}; throws std::domain_error otherwise.
    static ModulationSpec from_points(int M);
    // One of bpsk, qpsk, 16qam, 64qam, 256qam; throws std::invalid_argument.
    static ModulationSpec from_name(std::string_view name);

    double delta_db() const;  // 10*log10(1/delta), the waterfall shift
    bool operator==(const ModulationSpec&) const = default;
};

// Gaussian tail probability Q(x). Long double so the deep tail stays
// representable well past the double underflow point.
long double q_function(long double x);

// Pairwise error probability between codewords at Hamming distance d:
// Q(sqrt(2 * Rc * d * delta * 10^(ebno_db/10))).
long double pairwise_error(int d, Rational rate, Rational delta, double ebno_db);

struct BoundQuery {
    const DistanceSpectrum* spectrum = nullptr;
    Rational rate{1, 2};
    ModulationSpec modulation;
    std::vector<double> ebno_db;
    int terms = 30;             // leading spectrum terms to sum
    long long frame_bits = 1;   // K, multiplies the event-error sum for FER
};

enum class CurveKind { bep, fer, uncoded };

struct BoundPoint {
    double ebno_db;
    double probability;  // clamped to [0, 1]
    double raw;          // unclamped sum, for diagnostics
};

struct BoundCurve {
    CurveKind kind;
    Rational rate;
    int constellation_points;
    int terms;
    long long frame_bits;
    std::vector<BoundPoint> points;
};

// Union-bound bit-error probability: sum of beta_d * pairwise_error over the
// first `terms` spectrum entries. Throws std::invalid_argument when the
// spectrum is empty or holds fewer than `terms` entries.
BoundCurve bep_union_bound(const BoundQuery& query);

// Union-bound frame-error probability: frame_bits * sum of alpha_d *
// pairwise_error. frame_bits = 1 gives the plain event-error bound.
BoundCurve fer_union_bound(const BoundQuery& query);

// Leading-term approximation beta_dfree * pairwise_error(d_free, ...).
double single_term_approx(const DistanceSpectrum& spectrum, Rational rate, Rational delta,
                          double ebno_db);

// Uncoded references.
double uncoded_bpsk(double ebno_db);
double uncoded_qam(int points, double ebno_db);  // Gray-coded square M-QAM

// Parses "start:stop:step" (dB); endpoints inclusive within half a step.
// Throws std::invalid_argument on malformed input or a non-positive step.
std::vector<double> parse_snr_grid(std::string_view text);

}  // namespace bcc
