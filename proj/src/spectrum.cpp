#include "bcc/spectrum.hpp"

#include <limits>
#include <stdexcept>

namespace bcc {

int branch_distance(int phase, std::pair<int, int> outputs, const PunctureSchedule& schedule) {
    if (phase < 0 || phase >= schedule.period())
        throw std::domain_error("mask phase out of range");
    int d = 0;
    if (schedule.keeps(std::size_t(phase))) d += outputs.first;
    if (schedule.keeps(std::size_t(phase + 1) % std::size_t(schedule.period()))) d += outputs.second;
    return d;
}

TrellisPartition build_partition(const PunctureSchedule& schedule, const GeneratorSet& gens) {
    Trellis trellis(gens);
    const int period = schedule.period();
    TrellisPartition part;
    for (int phase = 0; phase < period; phase += 2) {
        for (int sigma = 0; sigma < kNumStates; ++sigma) {
            for (int u = 0; u < 2; ++u) {
                const TrellisBranch& tb = trellis.branch(sigma, u);
                AugmentedBranch ab{
                    {sigma, phase},
                    {tb.to_state, (phase + 2) % period},
                    u,
                    branch_distance(phase, {tb.out1, tb.out2}, schedule)};
                bool from_start = ab.from.is_start();
                bool to_start = ab.to.is_start();
                if (from_start && to_start) continue;  // the all-zero self-loop, not an event
                if (from_start)
                    part.diverge.push_back(ab);
                else if (to_start)
                    part.remerge.push_back(ab);
                else
                    part.interior.push_back(ab);
            }
        }
    }
    return part;
}

namespace {

// Dense counterpart of SeriesPolynomial used inside the hot loop: two
// coefficient arrays indexed by degree plus the active-degree window.
struct DensePoly {
    std::vector<BigUint> count;
    std::vector<BigUint> weight;
    int lo = std::numeric_limits<int>::max();
    int hi = -1;

    void init(int d_max) {
        count.assign(std::size_t(d_max) + 1, BigUint{});
        weight.assign(std::size_t(d_max) + 1, BigUint{});
    }
    bool empty() const { return hi < lo; }
    void clear_active() {
        for (int d = lo; d <= hi; ++d) {
            count[std::size_t(d)] = BigUint{};
            weight[std::size_t(d)] = BigUint{};
        }
        lo = std::numeric_limits<int>::max();
        hi = -1;
    }
    // this += src shifted by `shift`, input weight `u`, truncated at d_max
    void accumulate(const DensePoly& src, int shift, int u, int d_max) {
        if (src.empty()) return;
        int top = std::min(src.hi, d_max - shift);
        for (int d = src.lo; d <= top; ++d) {
            const BigUint& c = src.count[std::size_t(d)];
            if (c.is_zero()) continue;
            int nd = d + shift;
            count[std::size_t(nd)] += c;
            weight[std::size_t(nd)] += src.weight[std::size_t(d)];
            if (u) weight[std::size_t(nd)] += c;
            if (nd < lo) lo = nd;
            if (nd > hi) hi = nd;
        }
    }
    void add_monomial(int d, int u) {
        count[std::size_t(d)] += BigUint(1);
        if (u) weight[std::size_t(d)] += BigUint(1);
        if (d < lo) lo = d;
        if (d > hi) hi = d;
    }
};

int node_index(const AugmentedState& s, int half_period) {
    return s.sigma * half_period + s.phase / 2;
}

}  // namespace

DistanceSpectrum compute_spectrum(const PunctureSchedule& schedule, int d_max,
                                  const GeneratorSet& gens) {
    if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");

    TrellisPartition part = build_partition(schedule, gens);
    const int half_period = schedule.period() / 2;
    const std::size_t n_nodes = std::size_t(kNumStates) * std::size_t(half_period);

    std::vector<DensePoly> term(n_nodes), next(n_nodes);
    for (auto& p : term) p.init(d_max);
    for (auto& p : next) p.init(d_max);

    // term starts as R: the weight of the single remerging branch per source
    for (const AugmentedBranch& b : part.remerge) {
        if (b.distance <= d_max)
            term[std::size_t(node_index(b.from, half_period))].add_monomial(b.distance, b.input);
    }

    // x is only ever read at the destinations of diverging branches
    std::vector<DensePoly> x(part.diverge.size());
    for (auto& p : x) p.init(d_max);

    // Neumann accumulation: x <- sum_k Q^k R, one interior multiply per pass.
    // Every interior cycle of a non-catastrophic schedule carries positive
    // distance, so the term vector drains; the cap catches the rest.
    const long max_iters = 4L * d_max * schedule.period();
    long iter = 0;
    bool live = true;
    while (live) {
        for (std::size_t e = 0; e < part.diverge.size(); ++e)
            x[e].accumulate(term[std::size_t(node_index(part.diverge[e].to, half_period))], 0, 0,
                            d_max);
        live = false;
        for (const AugmentedBranch& b : part.interior) {
            const DensePoly& src = term[std::size_t(node_index(b.to, half_period))];
            if (src.empty()) continue;
            next[std::size_t(node_index(b.from, half_period))].accumulate(src, b.distance, b.input,
                                                                          d_max);
        }
        for (std::size_t i = 0; i < n_nodes; ++i) {
            term[i].clear_active();
            if (!next[i].empty()) live = true;
        }
        term.swap(next);
        if (live && ++iter > max_iters) {
            throw std::runtime_error(
                "spectrum iteration failed to drain below d_max; "
                "the puncture mask is likely catastrophic");
        }
    }

    // Close the events through the diverging branches and strip the d=0 term
    // (the trivial all-zero loop around the mask period).
    SeriesPolynomial total(d_max);
    for (std::size_t e = 0; e < part.diverge.size(); ++e) {
        const AugmentedBranch& b = part.diverge[e];
        const DensePoly& p = x[e];
        if (p.empty()) continue;
        int top = std::min(p.hi, d_max - b.distance);
        for (int d = p.lo; d <= top; ++d) {
            if (p.count[std::size_t(d)].is_zero()) continue;
            SeriesTerm t{p.count[std::size_t(d)], p.weight[std::size_t(d)]};
            if (b.input) t.weight += t.count;
            total.add(d + b.distance, t);
        }
    }

    DistanceSpectrum spec;
    spec.d_max = d_max;
    spec.schedule = schedule;
    for (const auto& [d, t] : total.terms()) {
        if (d == 0) continue;
        spec.alpha[d] = t.count;
        spec.beta[d] = t.weight;
        if (!spec.d_free) spec.d_free = d;
    }
    return spec;
}

BruteForceResult brute_force_spectrum(const PunctureSchedule& schedule, int d_max, int max_steps,
                                      const GeneratorSet& gens) {
    if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");
    if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");

    Trellis trellis(gens);
    const int period = schedule.period();

    BruteForceResult result;
    result.spectrum.d_max = d_max;
    result.spectrum.schedule = schedule;
    auto& alpha = result.spectrum.alpha;
    auto& beta = result.spectrum.beta;

    // Depth-first over the augmented graph; a path ends on its first return
    // to (0, 0). Distance pruning keeps the walk finite.
    struct Frame {
        int sigma, phase, dist, weight, steps;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0, 0, 0, 0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        for (int u = 0; u < 2; ++u) {
            const TrellisBranch& tb = trellis.branch(f.sigma, u);
            int nphase = (f.phase + 2) % period;
            int ndist = f.dist + branch_distance(f.phase, {tb.out1, tb.out2}, schedule);
            if (ndist > d_max) continue;
            int nweight = f.weight + u;
            if (tb.to_state == 0 && nphase == 0) {
                if (ndist > 0) {  // skip the trivial all-zero loop
                    alpha[ndist] += BigUint(1);
                    beta[ndist] += BigUint(std::uint64_t(nweight));
                }
                continue;
            }
            if (f.steps + 1 >= max_steps) {
                result.truncated = true;  // live path abandoned: result may be incomplete
                continue;
            }
            stack.push_back({tb.to_state, nphase, ndist, nweight, f.steps + 1});
        }
    }

    if (!alpha.empty()) result.spectrum.d_free = alpha.begin()->first;
    return result;
}

}  // namespace bcc
