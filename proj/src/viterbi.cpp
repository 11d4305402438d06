#include "bcc/link_sim.hpp"

#include <cmath>
#include <stdexcept>

namespace bcc {

// Soft-decision Viterbi over the 64-state trellis with a correlation
// metric: an LLR contributes +llr/2 when the branch output bit is 0 and
// -llr/2 when it is 1, so erased (zero) positions are metric-neutral.
// Ties resolve to the earlier-examined branch (input 0 first).
BitVec viterbi_decode(std::span<const double> llrs, bool terminated, const GeneratorSet& gens) {
    if (llrs.size() % 2 != 0)
        throw std::invalid_argument("viterbi needs an even LLR count (two per trellis step)");
    const std::size_t n_steps = llrs.size() / 2;
    if (terminated && n_steps < std::size_t(kTailBits))
        throw std::invalid_argument("terminated frame shorter than the tail");

    static constexpr double kNoPath = -1e300;
    Trellis trellis(gens);

    std::vector<double> metric(kNumStates, kNoPath), next_metric(kNumStates);
    metric[0] = 0.0;  // encoder starts flushed
    std::vector<std::uint8_t> decision(n_steps * kNumStates);
    std::vector<std::uint8_t> predecessor(n_steps * kNumStates);

    for (std::size_t t = 0; t < n_steps; ++t) {
        const double l1 = llrs[2 * t], l2 = llrs[2 * t + 1];
        std::fill(next_metric.begin(), next_metric.end(), kNoPath);
        for (int s = 0; s < kNumStates; ++s) {
            const double pm = metric[std::size_t(s)];
            if (pm <= kNoPath) continue;
            for (int u = 0; u < 2; ++u) {
                const TrellisBranch& b = trellis.branch(s, u);
                const double bm = (b.out1 ? -l1 : l1) + (b.out2 ? -l2 : l2);
                const double cand = pm + bm;
                if (cand > next_metric[b.to_state]) {
                    next_metric[b.to_state] = cand;
                    decision[t * kNumStates + b.to_state] = std::uint8_t(u);
                    predecessor[t * kNumStates + b.to_state] = std::uint8_t(s);
                }
            }
        }
        metric.swap(next_metric);
    }

    int state = 0;
    if (!terminated) {
        for (int s = 1; s < kNumStates; ++s) {
            if (metric[std::size_t(s)] > metric[std::size_t(state)]) state = s;
        }
    }

    BitVec decoded(n_steps);
    for (std::size_t t = n_steps; t-- > 0;) {
        decoded[t] = decision[t * kNumStates + std::size_t(state)];
        state = predecessor[t * kNumStates + std::size_t(state)];
    }
    if (terminated) decoded.resize(n_steps - std::size_t(kTailBits));
    return decoded;
}

}  // namespace bcc
