#include "bcc/qam.hpp"

#include <cmath>
#include <stdexcept>

namespace bcc {

namespace {

unsigned gray_decode(unsigned g) {
    unsigned b = 0;
    for (; g != 0; g >>= 1) b ^= g;
    return b;
}

}  // namespace

Constellation::Constellation(const ModulationSpec& mod) : mod_(mod) {
    if (mod.points == 2) {
        bits_per_axis_ = 1;
        levels_ = {1.0, -1.0};  // bit 0 -> +1
        return;
    }
    bits_per_axis_ = mod.bits_per_symbol / 2;
    int n_levels = 1 << bits_per_axis_;
    // Unit average energy over both axes: scale = sqrt(3 / (2(M-1))).
    double scale = std::sqrt(3.0 / (2.0 * (mod.points - 1)));
    levels_.resize(std::size_t(n_levels));
    for (unsigned g = 0; g < unsigned(n_levels); ++g) {
        unsigned idx = gray_decode(g);
        levels_[g] = (n_levels - 1 - 2.0 * idx) * scale;  // label 0 most positive
    }
}

Complex Constellation::map_label(unsigned label) const {
    if (mod_.points == 2) return {levels_[label & 1], 0.0};
    unsigned i_label = label >> bits_per_axis_;
    unsigned q_label = label & ((1u << bits_per_axis_) - 1);
    return {levels_[i_label], levels_[q_label]};
}

std::vector<Complex> map_symbols(const BitVec& bits, const ModulationSpec& mod) {
    const int m = mod.bits_per_symbol;
    if (bits.size() % std::size_t(m) != 0)
        throw std::invalid_argument("coded length must be a multiple of bits per symbol");
    Constellation con(mod);
    std::vector<Complex> out;
    out.reserve(bits.size() / std::size_t(m));
    for (std::size_t i = 0; i < bits.size(); i += std::size_t(m)) {
        unsigned label = 0;
        for (int k = 0; k < m; ++k) label = (label << 1) | (bits[i + std::size_t(k)] & 1);
        out.push_back(con.map_label(label));
    }
    return out;
}

std::vector<double> demap_llr(std::span<const Complex> received, const ModulationSpec& mod,
                              double noise_variance) {
    if (!(noise_variance > 0)) throw std::invalid_argument("noise variance must be positive");
    Constellation con(mod);
    const int m = mod.bits_per_symbol;
    const int axis_bits = con.bits_per_axis();
    const int n_levels = con.levels_per_axis();

    std::vector<double> llrs;
    llrs.reserve(received.size() * std::size_t(m));

    // Per-axis max-log metric: for each bit, the squared-distance gap
    // between the nearest level carrying 1 and the nearest carrying 0.
    auto axis_llrs = [&](double y, auto emit) {
        for (int bit = axis_bits - 1; bit >= 0; --bit) {
            unsigned mask = 1u << bit;
            double best0 = 1e300, best1 = 1e300;
            for (unsigned g = 0; g < unsigned(n_levels); ++g) {
                double diff = y - con.axis_level(g);
                double dist = diff * diff;
                if (g & mask) {
                    if (dist < best1) best1 = dist;
                } else {
                    if (dist < best0) best0 = dist;
                }
            }
            emit((best1 - best0) / noise_variance);
        }
    };

    for (const Complex& y : received) {
        if (mod.points == 2) {
            llrs.push_back(4.0 * y.real() / noise_variance);
            continue;
        }
        axis_llrs(y.real(), [&](double v) { llrs.push_back(v); });
        axis_llrs(y.imag(), [&](double v) { llrs.push_back(v); });
    }
    return llrs;
}

}  // namespace bcc
