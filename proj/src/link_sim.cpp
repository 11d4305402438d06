#include "bcc/link_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace bcc {

double noise_variance_n0(double ebno_db, Rational rate, const ModulationSpec& mod) {
    double ebno = std::pow(10.0, ebno_db / 10.0);
    return 1.0 / (mod.bits_per_symbol * rate.value() * ebno);
}

std::vector<Complex> awgn_channel(std::span<const Complex> symbols, double ebno_db, Rational rate,
                                  const ModulationSpec& mod, std::mt19937_64& rng) {
    const double n0 = noise_variance_n0(ebno_db, rate, mod);
    const double sigma = std::sqrt(n0 / 2.0);  // per real dimension
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> out;
    out.reserve(symbols.size());
    for (const Complex& s : symbols) {
        out.emplace_back(s.real() + sigma * gauss(rng), s.imag() + sigma * gauss(rng));
    }
    return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

std::vector<std::uint32_t> interleaver_permutation(std::uint64_t seed, std::size_t length) {
    std::vector<std::uint32_t> perm(length);
    std::iota(perm.begin(), perm.end(), 0u);
    std::mt19937_64 rng(splitmix64(seed ^ 0x1e7e5a7e00000000ull) ^ splitmix64(length));
    for (std::size_t i = length; i > 1; --i) {
        std::size_t j = rng() % i;  // Fisher-Yates; modulo bias immaterial here
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

std::vector<double> depuncture(std::span<const double> llrs, const PunctureSchedule& schedule,
                               std::size_t full_len) {
    if (schedule.kept_count(full_len) != llrs.size())
        throw std::invalid_argument("LLR count does not match the mask over this frame length");
    std::vector<double> out(full_len, 0.0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < full_len; ++i) {
        if (schedule.keeps(i)) out[i] = llrs[k++];
    }
    return out;
}

std::vector<double> depuncture(std::span<const double> llrs, const PunctureSchedule& schedule) {
    // Smallest full length consistent with the count: extend to the next
    // kept position, so the output never ends in erasures.
    std::size_t full_len = 0, seen = 0;
    while (seen < llrs.size()) {
        if (schedule.keeps(full_len)) ++seen;
        ++full_len;
    }
    return depuncture(llrs, schedule, full_len);
}

Interval binomial_ci95(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;
    const double n = double(trials);
    const double p = double(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

struct FrameTally {
    std::uint64_t bit_errors = 0;
    bool frame_error = false;
};

struct FramePipeline {
    const SimConfig& config;
    std::size_t coded_len;     // 2 * (K + tail)
    std::size_t punctured_len; // kept positions of the coded stream
    std::size_t pad_bits;      // zero bits appended to fill the last symbol
    double n0;
    std::vector<std::uint32_t> perm;

    explicit FramePipeline(const SimConfig& cfg)
        : config(cfg),
          coded_len(2 * (std::size_t(cfg.frame_bits) + std::size_t(kTailBits))),
          punctured_len(cfg.schedule.kept_count(coded_len)),
          pad_bits((std::size_t(cfg.modulation.bits_per_symbol) -
                    punctured_len % std::size_t(cfg.modulation.bits_per_symbol)) %
                   std::size_t(cfg.modulation.bits_per_symbol)),
          n0(noise_variance_n0(cfg.ebno_db, cfg.schedule.rate(), cfg.modulation)),
          perm(interleaver_permutation(cfg.seed, punctured_len + pad_bits)) {}

    // One frame end to end; RNG stream is private to the frame index.
    FrameTally run(std::uint64_t frame_index) const {
        std::mt19937_64 rng(splitmix64(config.seed) ^ splitmix64(frame_index + 0x5eed));

        BitVec info(std::size_t(config.frame_bits));
        std::uint64_t word = 0;
        for (std::size_t i = 0; i < info.size(); ++i) {
            if (i % 64 == 0) word = rng();
            info[i] = std::uint8_t(word & 1);
            word >>= 1;
        }

        BitVec coded = encode(info, /*terminate=*/true);
        BitVec sent = puncture(coded, config.schedule);
        sent.resize(punctured_len + pad_bits, 0);  // known zero pad, stripped at RX

        const bool permute = config.interleave == Interleave::random;
        BitVec tx_bits = permute ? interleave<std::uint8_t>(sent, perm) : std::move(sent);
        std::vector<Complex> symbols = map_symbols(tx_bits, config.modulation);
        std::vector<Complex> received =
            awgn_channel(symbols, config.ebno_db, config.schedule.rate(), config.modulation, rng);

        std::vector<double> llrs = demap_llr(received, config.modulation, n0);
        std::vector<double> llrs_deint = permute ? deinterleave<double>(llrs, perm) : std::move(llrs);
        llrs_deint.resize(punctured_len);  // drop pad positions
        std::vector<double> full_llrs = depuncture(llrs_deint, config.schedule, coded_len);

        BitVec decoded = viterbi_decode(full_llrs, /*terminated=*/true);

        FrameTally tally;
        for (std::size_t i = 0; i < info.size(); ++i) {
            if (decoded[i] != info[i]) ++tally.bit_errors;
        }
        tally.frame_error = tally.bit_errors != 0;
        return tally;
    }
};

constexpr std::uint64_t kBatchFrames = 256;  // stop-rule granularity

}  // namespace

SimResult run_point(const SimConfig& config) {
    if (config.frame_bits < 1) throw std::invalid_argument("frame_bits must be at least 1");
    if (config.stop.max_frames < 1) throw std::invalid_argument("max_frames must be at least 1");

    unsigned workers = config.workers > 0
                           ? unsigned(config.workers)
                           : std::max(1u, std::thread::hardware_concurrency());

    FramePipeline pipeline(config);

    SimResult result;
    std::uint64_t next_frame = 0;
    while (result.frames < config.stop.max_frames) {
        std::uint64_t batch =
            std::min<std::uint64_t>(kBatchFrames, config.stop.max_frames - result.frames);
        std::uint64_t first = next_frame;

        // Frames are index-seeded, so splitting by stride cannot change the
        // merged tallies, only the wall time.
        std::vector<std::uint64_t> bit_err(workers, 0), frame_err(workers, 0);
        auto work = [&](unsigned w) {
            for (std::uint64_t f = first + w; f < first + batch; f += workers) {
                FrameTally t = pipeline.run(f);
                bit_err[w] += t.bit_errors;
                frame_err[w] += t.frame_error ? 1 : 0;
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
            for (auto& th : pool) th.join();
        }

        next_frame += batch;
        result.frames += batch;
        for (unsigned w = 0; w < workers; ++w) {
            result.bit_errors += bit_err[w];
            result.frame_errors += frame_err[w];
        }
        if (result.frame_errors >= config.stop.min_frame_errors ||
            result.bit_errors >= config.stop.min_bit_errors)
            break;
    }

    result.bits = result.frames * std::uint64_t(config.frame_bits);
    result.ber = result.bits ? double(result.bit_errors) / double(result.bits) : 0.0;
    result.fer = result.frames ? double(result.frame_errors) / double(result.frames) : 0.0;
    result.ber_ci95 = binomial_ci95(result.bit_errors, result.bits);
    result.fer_ci95 = binomial_ci95(result.frame_errors, result.frames);
    return result;
}

std::vector<SimResult> run_sweep(std::span<const SimConfig> configs) {
    std::vector<SimResult> out;
    out.reserve(configs.size());
    for (const SimConfig& cfg : configs) out.push_back(run_point(cfg));
    return out;
}

}  // namespace bcc
