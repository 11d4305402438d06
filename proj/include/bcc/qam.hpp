#pragma once

#include <complex>
#include <span>
#include <vector>

#include "bcc/bounds.hpp"
#include "bcc/code_model.hpp"

namespace bcc {

using Complex = std::complex<double>;

// Gray-coded square constellation with unit average symbol energy
// (E[|s|^2] = 1). Labels split evenly across the two axes, I bits first;
// within an axis the bits form a binary-reflected Gray label, all-zero at
// the most positive level. BPSK uses the real axis only.
class Constellation {
  public:
    explicit Constellation(const ModulationSpec& mod);

    const ModulationSpec& modulation() const { return mod_; }
    int bits_per_axis() const { return bits_per_axis_; }
    int levels_per_axis() const { return int(levels_.size()); }

    Complex map_label(unsigned label) const;
    // Amplitude of the axis level whose Gray label is `g`.
    double axis_level(unsigned g) const { return levels_[g]; }

  private:
    ModulationSpec mod_;
    int bits_per_axis_;
    std::vector<double> levels_;  // indexed by axis Gray label
};

// Maps coded bits (m per symbol, I bits first, MSB first per axis) to
// symbols. Throws std::invalid_argument when the length is not a multiple
// of the symbol size; padding is the caller's job.
std::vector<Complex> map_symbols(const BitVec& bits, const ModulationSpec& mod);

// Max-log per-bit LLRs, one per coded bit, same order as map_symbols
// consumed them. Positive LLR favors bit 0. noise_variance is the total
// complex noise power N0.
std::vector<double> demap_llr(std::span<const Complex> received, const ModulationSpec& mod,
                              double noise_variance);

}  // namespace bcc
