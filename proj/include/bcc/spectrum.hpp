#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bcc/code_model.hpp"
#include "bcc/series.hpp"

namespace bcc {

// Encoder state extended with the position inside the serial puncture mask.
// Each trellis step consumes two serial positions, so the phase advances by
// 2 mod L and only even phases are reachable from the start node (0, 0).
struct AugmentedState {
    int sigma;  // trellis state, [0, 64)
    int phase;  // mask position, [0, L)

    bool operator==(const AugmentedState&) const = default;
    bool is_start() const { return sigma == 0 && phase == 0; }
};

struct AugmentedBranch {
    AugmentedState from;
    AugmentedState to;
    int input;     // u, also the branch's input weight
    int distance;  // transmitted 1-bits after the mask

    // The branch label as a one-term series polynomial, d -> (1, u).
    SeriesPolynomial label(int d_max) const {
        SeriesPolynomial p(d_max);
        p.add(distance, SeriesTerm{1, std::uint64_t(input)});
        return p;
    }
};

// Branches of the augmented trellis split by their relation to the start
// node: diverge leaves it, remerge re-enters it, interior never touches it.
// The zero-input start self-loop (possible only at period 2) is excluded.
struct TrellisPartition {
    std::vector<AugmentedBranch> diverge;   // start -> S
    std::vector<AugmentedBranch> interior;  // S -> S
    std::vector<AugmentedBranch> remerge;   // S -> start
};

// Transmitted weight of one output pair at a given mask position:
// p[phase]*v1 + p[(phase+1) mod L]*v2. Throws std::domain_error if the
// phase is outside [0, L).
int branch_distance(int phase, std::pair<int, int> outputs, const PunctureSchedule& schedule);

TrellisPartition build_partition(const PunctureSchedule& schedule,
                                 const GeneratorSet& gens = GeneratorSet::standard());

// Distance spectrum of first-return error events: alpha_d counts events at
// transmitted Hamming distance d, beta_d is their total input weight.
// d_free is empty when no event exists at or below the truncation bound.
struct DistanceSpectrum {
    std::optional<int> d_free;
    std::map<int, BigUint> alpha;
    std::map<int, BigUint> beta;
    int d_max = 0;
    PunctureSchedule schedule;

    bool empty() const { return !d_free.has_value(); }
    std::size_t term_count() const { return alpha.size(); }
};

// Exact spectrum up to d_max via the first-return series over the augmented
// trellis: x accumulates sum_k Q^k R with per-multiply truncation, then the
// diverging branches close the events. Throws std::invalid_argument for
// d_max < 1 and std::runtime_error if the iteration fails to drain (only
// possible for a catastrophic custom mask).
DistanceSpectrum compute_spectrum(const PunctureSchedule& schedule, int d_max,
                                  const GeneratorSet& gens = GeneratorSet::standard());

// Independent oracle: depth-first enumeration of every first-return path of
// at most max_steps branches, accumulating (distance, input weight) per
// path. `truncated` is set when a live path (distance still <= d_max) was
// abandoned at the step limit, i.e. the result may be incomplete.
struct BruteForceResult {
    DistanceSpectrum spectrum;
    bool truncated = false;
};

BruteForceResult brute_force_spectrum(const PunctureSchedule& schedule, int d_max, int max_steps,
                                      const GeneratorSet& gens = GeneratorSet::standard());

}  // namespace bcc
