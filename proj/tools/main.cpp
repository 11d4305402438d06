// bcctool: distance spectra, union bounds and Monte Carlo link simulation
// for the IEEE 802.11 rate-1/2 K=7 convolutional code and its punctured
// rates. One subcommand per concern; all machine output is CSV.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bcc/bounds.hpp"
#include "bcc/link_sim.hpp"
#include "bcc/spectrum.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitEmptySpectrum = 2;

struct ScheduleChoice {
    std::string rate_name;  // set when chosen via --rate
    std::string mask;       // set when chosen via --mask
};

bcc::PunctureSchedule resolve_schedule(const ScheduleChoice& choice) {
    if (!choice.mask.empty()) return bcc::PunctureSchedule::from_mask(choice.mask);
    return bcc::PunctureSchedule::for_rate(choice.rate_name);
}

std::string thousands(const std::string& digits) {
    std::string out;
    out.reserve(digits.size() + digits.size() / 3);
    std::size_t lead = digits.size() % 3;
    if (lead == 0) lead = 3;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i >= lead && (i - lead) % 3 == 0) out.push_back(',');
        out.append(1, digits[i]);
    }
    return out;
}

std::string prob_str(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5e", p);
    return buf;
}

std::string db_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Output sink: stdout by default, --out <path> otherwise.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

struct SpectrumOptions {
    ScheduleChoice choice;
    int dmax = 30;
    int terms = 5;
    std::string format = "table";
    std::string out_path;
};

int run_spectrum(const SpectrumOptions& opt) {
    Sink sink(opt.out_path);
    std::ostream& os = sink.out();

    struct Block {
        std::string title;
        std::string csv_rate;
        bcc::PunctureSchedule schedule;
    };
    std::vector<Block> blocks;
    if (opt.choice.rate_name.empty() && opt.choice.mask.empty()) {
        for (const char* r : {"1/2", "2/3", "3/4", "5/6"}) {
            auto sch = bcc::PunctureSchedule::for_rate(r);
            blocks.push_back({std::string("Rate ") + r + "  (puncture period = " +
                                  std::to_string(sch.period()) + ")",
                              r, sch});
        }
    } else {
        auto sch = resolve_schedule(opt.choice);
        std::string rate = sch.rate().str();
        std::string title;
        if (!opt.choice.mask.empty()) {
            title = "Mask " + sch.mask() + "  (rate " + rate +
                    ", puncture period = " + std::to_string(sch.period()) + ")";
        } else {
            title = "Rate " + rate + "  (puncture period = " + std::to_string(sch.period()) + ")";
        }
        blocks.push_back({title, rate, sch});
    }

    std::vector<bcc::DistanceSpectrum> spectra;
    for (const Block& b : blocks) {
        auto spec = bcc::compute_spectrum(b.schedule, opt.dmax);
        if (spec.empty()) {
            std::cerr << "error: no spectrum terms at or below d_max=" << opt.dmax
                      << " for mask " << b.schedule.mask()
                      << " (the free distance exceeds it); raise --dmax\n";
            return kExitEmptySpectrum;
        }
        spectra.push_back(std::move(spec));
    }

    if (opt.format == "csv") {
        os << "rate,d,alpha,beta\n";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            int shown = 0;
            for (const auto& [d, a] : spectra[i].alpha) {
                if (shown++ == opt.terms) break;
                os << blocks[i].csv_rate << ',' << d << ',' << a.to_string() << ','
                   << spectra[i].beta.at(d).to_string() << '\n';
            }
        }
        return 0;
    }

    os << "IEEE 802.11 BCC Distance Spectrum\n"
       << "K=7, generators 133_8 / 171_8\n"
       << "d_max=" << opt.dmax << ", showing first " << opt.terms << " non-zero terms\n"
       << "============================================================\n";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        char line[160];
        os << '\n' << blocks[i].title << '\n';
        os << "d_free = " << *spectra[i].d_free << '\n';
        std::snprintf(line, sizeof line, "  %5s  %22s  %24s\n", "d", "alpha_d", "beta_d");
        os << line;
        std::snprintf(line, sizeof line, "  %5s  %22s  %24s\n", "-----",
                      "----------------------", "------------------------");
        os << line;
        int shown = 0;
        for (const auto& [d, a] : spectra[i].alpha) {
            if (shown++ == opt.terms) break;
            std::snprintf(line, sizeof line, "  %5d  %22s  %24s\n", d,
                          thousands(a.to_string()).c_str(),
                          thousands(spectra[i].beta.at(d).to_string()).c_str());
            os << line;
        }
    }
    return 0;
}

struct BoundsOptions {
    ScheduleChoice choice;
    std::string mod = "qpsk";
    std::string snr;
    int terms = 30;
    int dmax = 130;
    bool fer = false;
    long long frame_bits = 1024;
    bool uncoded = false;
    std::string out_path;
};

int run_bounds(const BoundsOptions& opt) {
    auto schedule = resolve_schedule(opt.choice);
    auto modulation = bcc::ModulationSpec::from_name(opt.mod);
    auto grid = bcc::parse_snr_grid(opt.snr);

    auto spectrum = bcc::compute_spectrum(schedule, opt.dmax);
    if (spectrum.empty()) {
        std::cerr << "error: no spectrum terms at or below d_max=" << opt.dmax
                  << " (the free distance exceeds it); raise --dmax\n";
        return kExitEmptySpectrum;
    }

    bcc::BoundQuery query{&spectrum, schedule.rate(), modulation, grid, opt.terms,
                          opt.fer ? opt.frame_bits : 1};
    bcc::BoundCurve curve = opt.fer ? bcc::fer_union_bound(query) : bcc::bep_union_bound(query);

    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    if (opt.uncoded) {
        os << "ebno_db,value,kind\n";
        const char* kind = opt.fer ? "fer" : "bep";
        for (const auto& p : curve.points)
            os << db_str(p.ebno_db) << ',' << prob_str(p.probability) << ',' << kind << '\n';
        for (double snr : grid) {
            double u = modulation.points == 2 ? bcc::uncoded_bpsk(snr)
                                              : bcc::uncoded_qam(modulation.points, snr);
            os << db_str(snr) << ',' << prob_str(u) << ",uncoded\n";
        }
    } else {
        os << "ebno_db,value\n";
        for (const auto& p : curve.points)
            os << db_str(p.ebno_db) << ',' << prob_str(p.probability) << '\n';
    }
    return 0;
}

struct SimulateOptions {
    ScheduleChoice choice;
    std::string mod = "qpsk";
    std::string snr;
    int frame_bits = 1024;
    std::uint64_t seed = 1;
    std::uint64_t min_frame_errors = 100;
    std::uint64_t min_bit_errors = 500;
    std::uint64_t max_frames = 10'000'000;
    int workers = 0;
    std::string out_path;
};

int run_simulate(const SimulateOptions& opt) {
    auto schedule = resolve_schedule(opt.choice);
    auto modulation = bcc::ModulationSpec::from_name(opt.mod);
    auto grid = bcc::parse_snr_grid(opt.snr);

    std::vector<bcc::SimConfig> configs;
    configs.reserve(grid.size());
    for (double snr : grid) {
        bcc::SimConfig cfg;
        cfg.schedule = schedule;
        cfg.modulation = modulation;
        cfg.ebno_db = snr;
        cfg.frame_bits = opt.frame_bits;
        cfg.seed = opt.seed;
        cfg.stop = {opt.min_frame_errors, opt.min_bit_errors, opt.max_frames};
        cfg.workers = opt.workers;
        configs.push_back(cfg);
    }

    Sink sink(opt.out_path);
    std::ostream& os = sink.out();
    os << "ebno_db,frames,bits,bit_errors,frame_errors,ber,fer,"
          "ber_ci_lo,ber_ci_hi,fer_ci_lo,fer_ci_hi\n";
    for (std::size_t i = 0; i < configs.size(); ++i) {
        bcc::SimResult r = bcc::run_point(configs[i]);
        os << db_str(grid[i]) << ',' << r.frames << ',' << r.bits << ',' << r.bit_errors << ','
           << r.frame_errors << ',' << prob_str(r.ber) << ',' << prob_str(r.fer) << ','
           << prob_str(r.ber_ci95.lo) << ',' << prob_str(r.ber_ci95.hi) << ','
           << prob_str(r.fer_ci95.lo) << ',' << prob_str(r.fer_ci95.hi) << '\n';
        os.flush();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"IEEE 802.11 BCC distance spectra, union bounds and link simulation"};
    app.require_subcommand(1);

    SpectrumOptions spec_opt;
    auto* spec_cmd =
        app.add_subcommand("spectrum", "Exact distance spectrum of a puncture schedule");
    auto* sp_rate = spec_cmd->add_option("--rate", spec_opt.choice.rate_name,
                                         "Standard code rate (1/2, 2/3, 3/4, 5/6)");
    auto* sp_mask =
        spec_cmd->add_option("--mask", spec_opt.choice.mask, "Custom serial puncture mask, e.g. 111001");
    sp_rate->excludes(sp_mask);
    sp_mask->excludes(sp_rate);
    spec_cmd->add_option("--dmax", spec_opt.dmax, "Distance truncation bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    spec_cmd->add_option("--terms", spec_opt.terms, "Spectrum terms to print")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    spec_cmd->add_option("--format", spec_opt.format, "Output format")
        ->check(CLI::IsMember({"table", "csv"}))
        ->capture_default_str();
    spec_cmd->add_option("--out", spec_opt.out_path, "Write output to a file instead of stdout");

    BoundsOptions bounds_opt;
    auto* bounds_cmd = app.add_subcommand("bounds", "Union-bound BEP/FER over an SNR grid (CSV)");
    auto* bo_rate = bounds_cmd->add_option("--rate", bounds_opt.choice.rate_name,
                                           "Standard code rate (1/2, 2/3, 3/4, 5/6)");
    auto* bo_mask = bounds_cmd->add_option("--mask", bounds_opt.choice.mask, "Custom serial puncture mask");
    bo_rate->excludes(bo_mask);
    bo_mask->excludes(bo_rate);
    bounds_cmd->add_option("--mod", bounds_opt.mod, "Modulation: bpsk, qpsk, 16qam, 64qam, 256qam")
        ->capture_default_str();
    bounds_cmd->add_option("--snr", bounds_opt.snr, "Eb/N0 grid start:stop:step in dB")->required();
    bounds_cmd->add_option("--terms", bounds_opt.terms, "Spectrum terms in the bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bounds_cmd->add_option("--dmax", bounds_opt.dmax, "Spectrum truncation bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bounds_cmd->add_flag("--fer", bounds_opt.fer, "Frame-error bound instead of bit-error bound");
    bounds_cmd->add_option("--frame-bits", bounds_opt.frame_bits,
                           "Information bits per frame (FER bound)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bounds_cmd->add_flag("--uncoded", bounds_opt.uncoded, "Also emit the uncoded reference");
    bounds_cmd->add_option("--out", bounds_opt.out_path, "Write output to a file instead of stdout");

    SimulateOptions sim_opt;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo BER/FER over an SNR grid (CSV)");
    auto* si_rate = sim_cmd->add_option("--rate", sim_opt.choice.rate_name,
                                        "Standard code rate (1/2, 2/3, 3/4, 5/6)");
    auto* si_mask = sim_cmd->add_option("--mask", sim_opt.choice.mask, "Custom serial puncture mask");
    si_rate->excludes(si_mask);
    si_mask->excludes(si_rate);
    sim_cmd->add_option("--mod", sim_opt.mod, "Modulation: bpsk, qpsk, 16qam, 64qam, 256qam")
        ->capture_default_str();
    sim_cmd->add_option("--snr", sim_opt.snr, "Eb/N0 grid start:stop:step in dB")->required();
    sim_cmd->add_option("--frame-bits", sim_opt.frame_bits, "Information bits per frame")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sim_cmd->add_option("--seed", sim_opt.seed, "RNG seed")->capture_default_str();
    sim_cmd->add_option("--min-frame-errors", sim_opt.min_frame_errors, "Stop rule")
        ->capture_default_str();
    sim_cmd->add_option("--min-bit-errors", sim_opt.min_bit_errors, "Stop rule")
        ->capture_default_str();
    sim_cmd->add_option("--max-frames", sim_opt.max_frames, "Stop rule")->capture_default_str();
    sim_cmd->add_option("--workers", sim_opt.workers, "Worker threads (0 = all cores)")
        ->capture_default_str();
    sim_cmd->add_option("--out", sim_opt.out_path, "Write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the parse diagnostic
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (spec_cmd->parsed()) return run_spectrum(spec_opt);
        if (bounds_cmd->parsed()) {
            if (bounds_opt.choice.rate_name.empty() && bounds_opt.choice.mask.empty())
                throw CLI::RequiredError("--rate or --mask");
            return run_bounds(bounds_opt);
        }
        if (sim_cmd->parsed()) {
            if (sim_opt.choice.rate_name.empty() && sim_opt.choice.mask.empty())
                throw CLI::RequiredError("--rate or --mask");
            return run_simulate(sim_opt);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
