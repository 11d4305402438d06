#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "bcc/bounds.hpp"

using namespace bcc;

namespace {

// Independent Gaussian tail oracle: composite Simpson over the density,
// far enough out that the remainder is negligible at long double scale.
long double q_oracle(long double x) {
    const long double upper = x + 60.0L;
    const int n = 600'000;  // even
    const long double h = (upper - x) / n;
    auto f = [](long double t) { return expl(-t * t / 2.0L); };
    long double sum = f(x) + f(upper);
    for (int i = 1; i < n; ++i) sum += f(x + h * i) * (i % 2 ? 4.0L : 2.0L);
    return sum * h / 3.0L / sqrtl(2.0L * 3.14159265358979323846264338327950288L);
}

DistanceSpectrum spectrum_for(const char* rate, int dmax = 130) {
    return compute_spectrum(PunctureSchedule::for_rate(rate), dmax);
}

}  // namespace

TEST_CASE("modulation penalty factors are the exact table rationals") {
    auto q = ModulationSpec::from_points(4);
    auto q16 = ModulationSpec::from_points(16);
    auto q64 = ModulationSpec::from_points(64);
    auto q256 = ModulationSpec::from_points(256);

    CHECK(q.delta == Rational{1, 1});
    CHECK(q16.delta == Rational{2, 5});
    // 2/14 and 8/170 in lowest terms
    CHECK(q64.delta == Rational{1, 7});
    CHECK(q64.delta.num * 14 == 2 * q64.delta.den);
    CHECK(q256.delta == Rational{4, 85});
    CHECK(q256.delta.num * 170 == 8 * q256.delta.den);

    CHECK(ModulationSpec::from_points(2).delta == Rational{1, 1});

    CHECK(q.delta_db() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(q16.delta_db() - 4.0) < 0.05);
    CHECK(std::abs(q64.delta_db() - 8.5) < 0.05);
    CHECK(std::abs(q256.delta_db() - 13.3) < 0.05);

    CHECK_THROWS_AS(ModulationSpec::from_points(32), std::domain_error);
    CHECK_THROWS_AS(ModulationSpec::from_name("8psk"), std::invalid_argument);
    CHECK(ModulationSpec::from_name("64qam").points == 64);
}

TEST_CASE("q_function against the integration oracle") {
    for (long double x : {0.0L, 0.5L, 1.0L, 2.0L, 3.5L, 4.4721L, 5.6234L, 7.0L}) {
        long double want = q_oracle(x);
        CHECK(std::abs(double(q_function(x) / want - 1.0L)) < 1e-10);
    }
    CHECK(q_function(0.0L) == doctest::Approx(0.5));
    CHECK(double(q_function(std::sqrt(20.0L))) == doctest::Approx(3.8721e-6).epsilon(1e-4));
    CHECK(q_function(40.0L) > 0.0L);  // deep tail stays representable
    CHECK(q_function(-3.0L) > 0.99L);
}

TEST_CASE("pairwise error probability") {
    // frozen against the integration oracle
    CHECK(double(pairwise_error(10, {1, 2}, {1, 1}, 5.0)) ==
          doctest::Approx(9.36104e-9).epsilon(1e-5));
    CHECK(double(pairwise_error(10, {1, 2}, Rational::reduced(24, 510), 17.0)) ==
          doctest::Approx(5.97490e-7).epsilon(1e-5));
    // delta = 1 reduces to the BPSK kernel
    long double ebno = std::pow(10.0L, 0.5L);
    CHECK(double(pairwise_error(10, {1, 2}, {1, 1}, 5.0)) ==
          doctest::Approx(double(q_function(sqrtl(10.0L * ebno)))));
    CHECK_THROWS_AS(pairwise_error(0, {1, 2}, {1, 1}, 5.0), std::domain_error);
}

TEST_CASE("bep union bound reproduces the published QPSK coordinates") {
    struct Point {
        const char* rate;
        double want;
    };
    // 30 terms, d_max 130, 5.00 dB
    for (const Point& p : {Point{"1/2", 4.427e-7}, Point{"2/3", 4.567e-6},
                           Point{"3/4", 4.732e-5}, Point{"5/6", 4.964e-4}}) {
        auto spec = spectrum_for(p.rate);
        BoundQuery q{&spec, spec.schedule.rate(), ModulationSpec::from_points(4), {5.0}, 30, 1};
        auto curve = bep_union_bound(q);
        CHECK(curve.points[0].probability == doctest::Approx(p.want).epsilon(2e-3));
    }
}

TEST_CASE("fer union bound and frame-length scaling") {
    auto spec = spectrum_for("1/2");
    BoundQuery q{&spec, {1, 2}, ModulationSpec::from_points(4), {5.0}, 30, 1024};
    CHECK(fer_union_bound(q).points[0].probability == doctest::Approx(1.2340e-4).epsilon(2e-3));

    BoundQuery q1 = q;
    q1.frame_bits = 1;
    double p1 = fer_union_bound(q1).points[0].probability;
    CHECK(fer_union_bound(q).points[0].probability == doctest::Approx(1024.0 * p1));

    auto spec56 = spectrum_for("5/6");
    BoundQuery q56{&spec56, {5, 6}, ModulationSpec::from_points(4), {6.0}, 30, 1024};
    CHECK(fer_union_bound(q56).points[0].probability == doctest::Approx(2.2741e-3).epsilon(2e-3));
}

TEST_CASE("qam bep bound at the published 256-QAM coordinate") {
    auto spec = spectrum_for("1/2");
    BoundQuery q{&spec, {1, 2}, ModulationSpec::from_points(256), {17.0}, 30, 1};
    CHECK(bep_union_bound(q).points[0].probability == doctest::Approx(5.0309e-5).epsilon(2e-3));
}

TEST_CASE("union bound guards") {
    auto spec = spectrum_for("1/2", 18);  // five stored terms
    BoundQuery q{&spec, {1, 2}, ModulationSpec::from_points(4), {5.0}, 30, 1};
    CHECK_THROWS_WITH_AS(bep_union_bound(q), doctest::Contains("5"), std::invalid_argument);

    auto empty = compute_spectrum(PunctureSchedule::for_rate("1/2"), 8);
    BoundQuery qe{&empty, {1, 2}, ModulationSpec::from_points(4), {5.0}, 1, 1};
    CHECK_THROWS_AS(bep_union_bound(qe), std::invalid_argument);
}

TEST_CASE("bound properties over a grid") {
    auto spec = spectrum_for("1/2");
    std::vector<double> grid = parse_snr_grid("2:8:0.25");
    BoundQuery q{&spec, {1, 2}, ModulationSpec::from_points(4), grid, 30, 1};
    auto curve = bep_union_bound(q);

    SUBCASE("clamped to [0,1], strictly decreasing once below the clamp") {
        for (std::size_t i = 0; i < curve.points.size(); ++i) {
            CHECK(curve.points[i].probability <= 1.0);
            CHECK(curve.points[i].probability >= 0.0);
            if (i > 0 && curve.points[i - 1].probability < 1.0)
                CHECK(curve.points[i].probability < curve.points[i - 1].probability);
        }
    }
    SUBCASE("raw values exceed 1 at low SNR and are exposed") {
        BoundQuery low{&spec, {1, 2}, ModulationSpec::from_points(4), {0.0}, 30, 1};
        auto c = bep_union_bound(low);
        CHECK(c.points[0].probability == 1.0);
        CHECK(c.points[0].raw > 1.0);
    }
    SUBCASE("more terms never decrease the bound") {
        BoundQuery few{&spec, {1, 2}, ModulationSpec::from_points(4), {4.0}, 5, 1};
        BoundQuery many{&spec, {1, 2}, ModulationSpec::from_points(4), {4.0}, 40, 1};
        CHECK(bep_union_bound(many).points[0].probability >=
              bep_union_bound(few).points[0].probability);
    }
}

TEST_CASE("delta substitution makes QAM bounds identical to QPSK, shifted") {
    auto spec = spectrum_for("1/2");
    for (int M : {16, 64, 256}) {
        auto mod = ModulationSpec::from_points(M);
        double shift = mod.delta_db();
        for (double x : {3.0, 4.0, 5.0, 6.0}) {
            BoundQuery qpsk{&spec, {1, 2}, ModulationSpec::from_points(4), {x}, 30, 1};
            BoundQuery qam{&spec, {1, 2}, mod, {x + shift}, 30, 1};
            double a = bep_union_bound(qpsk).points[0].probability;
            double b = bep_union_bound(qam).points[0].probability;
            CHECK(b == doctest::Approx(a).epsilon(1e-9));
        }
    }
}

TEST_CASE("single-term approximation") {
    auto spec = spectrum_for("1/2");
    double st = single_term_approx(spec, {1, 2}, {1, 1}, 5.0);
    CHECK(st == doctest::Approx(36.0 * 9.36104e-9).epsilon(1e-4));

    BoundQuery one{&spec, {1, 2}, ModulationSpec::from_points(4), {5.0}, 1, 1};
    CHECK(st == doctest::Approx(bep_union_bound(one).points[0].probability));

    // frozen share of the 30-term bound at 5 dB (leading-term dominance)
    BoundQuery full{&spec, {1, 2}, ModulationSpec::from_points(4), {5.0}, 30, 1};
    CHECK(st / bep_union_bound(full).points[0].probability ==
          doctest::Approx(0.7612).epsilon(1e-3));

    auto spec56 = spectrum_for("5/6", 20);
    CHECK(single_term_approx(spec56, {5, 6}, {1, 1}, 4.0) ==
          doctest::Approx(1.96578e-3).epsilon(1e-4));
}

TEST_CASE("uncoded references") {
    CHECK(uncoded_bpsk(10.0) == doctest::Approx(3.8721e-6).epsilon(2e-4));
    CHECK(uncoded_bpsk(0.0) == doctest::Approx(7.8650e-2).epsilon(2e-4));
    CHECK(uncoded_bpsk(-80.0) == doctest::Approx(0.5).epsilon(1e-3));

    CHECK(uncoded_qam(4, 10.0) == doctest::Approx(3.8721e-6).epsilon(2e-4));
    CHECK(uncoded_qam(256, 18.0) == doctest::Approx(3.4721e-3).epsilon(2e-4));
    CHECK(uncoded_qam(16, 12.0) == doctest::Approx(1.3866e-4).epsilon(2e-4));
    CHECK_THROWS_AS(uncoded_qam(32, 10.0), std::domain_error);
    CHECK_THROWS_AS(uncoded_qam(2, 10.0), std::domain_error);
}

TEST_CASE("snr grid parsing") {
    auto g = parse_snr_grid("2:8:0.25");
    CHECK(g.size() == 25);
    CHECK(g.front() == doctest::Approx(2.0));
    CHECK(g.back() == doctest::Approx(8.0));

    auto single = parse_snr_grid("5:5:1");
    REQUIRE(single.size() == 1);
    CHECK(single[0] == doctest::Approx(5.0));

    // endpoint inclusive within half a step
    CHECK(parse_snr_grid("0:1:0.3").size() == 4);

    CHECK_THROWS_AS(parse_snr_grid("1:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_snr_grid("1:2:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_snr_grid("2:1:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_snr_grid("a:1:1"), std::invalid_argument);
}
