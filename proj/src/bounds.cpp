#include "bcc/bounds.hpp"

#include <cmath>
#include <charconv>
#include <stdexcept>

namespace bcc {

ModulationSpec ModulationSpec::from_points(int M) {
    switch (M) {
        case 2: return {2, 1, {1, 1}};
        case 4: return {4, 2, {1, 1}};
        case 16: return {16, 4, Rational::reduced(2, 5)};
        case 64: return {64, 6, Rational::reduced(2, 14)};
        case 256: return {256, 8, Rational::reduced(8, 170)};
        default: throw std::domain_error("unsupported constellation size " + std::to_string(M));
    }
}

ModulationSpec ModulationSpec::from_name(std::string_view name) {
    if (name == "bpsk") return from_points(2);
    if (name == "qpsk") return from_points(4);
    if (name == "16qam") return from_points(16);
    if (name == "64qam") return from_points(64);
    if (name == "256qam") return from_points(256);
    throw std::invalid_argument("unknown modulation \"" + std::string(name) +
                                "\" (expected bpsk, qpsk, 16qam, 64qam or 256qam)");
}

double ModulationSpec::delta_db() const {
    return 10.0 * std::log10(double(delta.den) / double(delta.num));
}

long double q_function(long double x) {
    return 0.5L * erfcl(x / 1.41421356237309504880168872420969808L);
}

long double pairwise_error(int d, Rational rate, Rational delta, double ebno_db) {
    if (d < 1) throw std::domain_error("pairwise error needs distance >= 1");
    long double ebno = powl(10.0L, (long double)(ebno_db) / 10.0L);
    long double arg = 2.0L * rate.num * d * delta.num * ebno / ((long double)(rate.den) * delta.den);
    return q_function(sqrtl(arg));
}

namespace {

// Shared evaluation core for the two union bounds. `use_beta` picks the
// input-weight series (BEP) versus the multiplicity series (FER).
BoundCurve union_bound(const BoundQuery& query, bool use_beta) {
    if (query.spectrum == nullptr || query.spectrum->empty())
        throw std::invalid_argument("union bound needs a non-empty distance spectrum");
    if (query.terms < 1) throw std::invalid_argument("union bound needs at least one term");
    if (query.frame_bits < 1) throw std::invalid_argument("frame_bits must be at least 1");

    const auto& coeffs = use_beta ? query.spectrum->beta : query.spectrum->alpha;
    if (std::size_t(query.terms) > coeffs.size())
        throw std::invalid_argument("requested " + std::to_string(query.terms) +
                                    " spectrum terms but only " + std::to_string(coeffs.size()) +
                                    " are available at this truncation");

    BoundCurve curve;
    curve.kind = use_beta ? CurveKind::bep : CurveKind::fer;
    curve.rate = query.rate;
    curve.constellation_points = query.modulation.points;
    curve.terms = query.terms;
    curve.frame_bits = use_beta ? 1 : query.frame_bits;
    curve.points.reserve(query.ebno_db.size());

    for (double ebno : query.ebno_db) {
        long double sum = 0.0L;
        int used = 0;
        for (const auto& [d, coeff] : coeffs) {
            if (used++ == query.terms) break;
            sum += (long double)(coeff.to_double()) *
                   pairwise_error(d, query.rate, query.modulation.delta, ebno);
        }
        if (!use_beta) sum *= query.frame_bits;
        double raw = double(sum);
        curve.points.push_back({ebno, std::min(raw, 1.0), raw});
    }
    return curve;
}

}  // namespace

BoundCurve bep_union_bound(const BoundQuery& query) { return union_bound(query, true); }

BoundCurve fer_union_bound(const BoundQuery& query) { return union_bound(query, false); }

double single_term_approx(const DistanceSpectrum& spectrum, Rational rate, Rational delta,
                          double ebno_db) {
    if (spectrum.empty()) throw std::invalid_argument("single-term approximation needs a spectrum");
    int d_free = *spectrum.d_free;
    long double p = (long double)(spectrum.beta.at(d_free).to_double()) *
                    pairwise_error(d_free, rate, delta, ebno_db);
    return std::min(double(p), 1.0);
}

double uncoded_bpsk(double ebno_db) {
    long double ebno = powl(10.0L, (long double)(ebno_db) / 10.0L);
    return double(q_function(sqrtl(2.0L * ebno)));
}

double uncoded_qam(int points, double ebno_db) {
    if (points != 4 && points != 16 && points != 64 && points != 256)
        throw std::domain_error("uncoded QAM reference needs M in {4, 16, 64, 256}");
    int m = 2;
    while ((1 << m) < points) ++m;
    long double ebno = powl(10.0L, (long double)(ebno_db) / 10.0L);
    long double arg = 3.0L * m * ebno / (points - 1);
    long double p = (4.0L / m) * (1.0L - 1.0L / sqrtl((long double)points)) * q_function(sqrtl(arg));
    return double(p);
}

std::vector<double> parse_snr_grid(std::string_view text) {
    auto parse_num = [](std::string_view s) {
        double v{};
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw std::invalid_argument("bad SNR grid component \"" + std::string(s) + "\"");
        return v;
    };
    std::size_t c1 = text.find(':');
    std::size_t c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos)
        throw std::invalid_argument("SNR grid must be start:stop:step (dB)");
    double start = parse_num(text.substr(0, c1));
    double stop = parse_num(text.substr(c1 + 1, c2 - c1 - 1));
    double step = parse_num(text.substr(c2 + 1));
    if (!(step > 0)) throw std::invalid_argument("SNR grid step must be positive");
    if (stop < start) throw std::invalid_argument("SNR grid stop must not precede start");
    std::vector<double> grid;
    for (double v = start; v <= stop + step / 2; v += step) grid.push_back(v);
    return grid;
}

}  // namespace bcc
