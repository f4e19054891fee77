#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "capa_isac/scene.hpp"
#include "capa_isac/scene_io.hpp"
#include "capa_isac/scene_sampler.hpp"
#include "oracles.hpp"

using namespace capa_isac;
using test_oracles::rel_diff;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("direction cosines of axis-aligned and oblique positions") {
    const DirectionCosines broadside = direction_cosines({1.0, kPi / 2, kPi / 2});
    CHECK(std::abs(broadside.x) < 1e-15);
    CHECK(broadside.y == doctest::Approx(1.0));
    CHECK(std::abs(broadside.z) < 1e-15);

    const DirectionCosines target = direction_cosines({10.0, kPi / 4, kPi / 4});
    CHECK(target.x == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(target.y == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(target.z == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));

    const DirectionCosines cu = direction_cosines({20.0, kPi / 3, kPi / 3});
    CHECK(cu.x == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-15));
    CHECK(cu.y == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(cu.z == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("cartesian centers") {
    const Point3 broadside = cartesian_center({1.0, kPi / 2, kPi / 2});
    CHECK(std::abs(broadside.x) < 1e-15);
    CHECK(broadside.y == doctest::Approx(1.0));

    const Point3 target = cartesian_center({10.0, kPi / 4, kPi / 4});
    CHECK(target.x == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(target.y == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(target.z == doctest::Approx(10.0 * std::sqrt(2.0) / 2.0).epsilon(1e-15));

    // Pole case: a valid position, but a scene placing an endpoint there is
    // rejected (the y cosine vanishes).
    const Point3 pole = cartesian_center({2.0, 0.0, 1.0});
    CHECK(std::abs(pole.x) < 1e-15);
    CHECK(std::abs(pole.y) < 1e-15);
    CHECK(pole.z == doctest::Approx(2.0));
}

TEST_CASE("direction cosines form a unit vector and centers have norm r") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> open_angle(1e-3, kPi - 1e-3);
    std::uniform_real_distribution<double> radius(0.1, 100.0);
    for (int i = 0; i < 200; ++i) {
        const PolarPosition p{radius(rng), open_angle(rng), open_angle(rng)};
        const DirectionCosines d = direction_cosines(p);
        CHECK(d.y > 0.0);
        CHECK(std::abs(d.x * d.x + d.y * d.y + d.z * d.z - 1.0) < 1e-12);
        const Point3 c = cartesian_center(p);
        const double norm = std::sqrt(c.x * c.x + c.y * c.y + c.z * c.z);
        CHECK(rel_diff(norm, p.range()) < 1e-12);
    }
}

TEST_CASE("polar position domain is enforced by the type") {
    CHECK_THROWS_AS(PolarPosition(-1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(PolarPosition(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(PolarPosition(1.0, -0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(PolarPosition(1.0, kPi + 0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(PolarPosition(1.0, 1.0, kPi + 0.1), std::invalid_argument);
}

TEST_CASE("default scene carries the stock parameters") {
    const Scene s = default_scene();
    CHECK(s.wavenumber() == doctest::Approx(16.0 * kPi).epsilon(1e-15));
    CHECK(s.cu_aperture_area() == doctest::Approx(1.2433e-3).epsilon(1e-4));
    CHECK(s.cu_aperture_area() ==
          doctest::Approx(0.125 * 0.125 / (4.0 * kPi)).epsilon(1e-15));
    CHECK(s.snr_dl_comm() == 10.0);
    CHECK(s.snr_dl_sense() == 10.0);
    CHECK(s.snr_ul_comm() == 10.0);
    CHECK(s.snr_ul_sense() == 10.0);
    CHECK(s.frame_len() == 8);
    CHECK(s.mean_rcs() == 1.0);
    CHECK(s.wave_impedance() == doctest::Approx(120.0 * kPi).epsilon(1e-15));
    CHECK(s.lx() == 0.5);
    CHECK(s.lz() == 0.5);
    CHECK(s.position(Endpoint::Target).range() == 10.0);
    CHECK(s.position(Endpoint::Cu).range() == 20.0);
}

TEST_CASE("scene construction rejects degenerate and invalid parameters") {
    SceneParams in_plane;
    in_plane.target = PolarPosition(10.0, 0.0, kPi / 4);  // pole: y cosine 0
    CHECK_THROWS_AS(Scene{in_plane}, std::invalid_argument);

    SceneParams phi_zero;
    phi_zero.cu = PolarPosition(20.0, kPi / 3, 0.0);  // in-plane azimuth
    CHECK_THROWS_AS(Scene{phi_zero}, std::invalid_argument);

    SceneParams bad_snr;
    bad_snr.snr_ul_sense = 0.0;
    CHECK_THROWS_AS(Scene{bad_snr}, std::invalid_argument);

    SceneParams bad_frame;
    bad_frame.frame_len = 0;
    CHECK_THROWS_AS(Scene{bad_frame}, std::invalid_argument);

    SceneParams bad_side;
    bad_side.lx = -0.5;
    CHECK_THROWS_AS(Scene{bad_side}, std::invalid_argument);
}

TEST_CASE("config format round-trips the scene") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const Scene original = sample_scene(rng);
        const Scene reparsed = parse_scene_config(write_scene_config(original));
        const SceneParams& a = original.params();
        const SceneParams& b = reparsed.params();
        CHECK(a.wavelength == b.wavelength);
        CHECK(a.lx == b.lx);
        CHECK(a.lz == b.lz);
        CHECK(a.cu.range() == b.cu.range());
        CHECK(a.cu.theta() == b.cu.theta());
        CHECK(a.cu.phi() == b.cu.phi());
        CHECK(a.target.range() == b.target.range());
        CHECK(a.target.theta() == b.target.theta());
        CHECK(a.target.phi() == b.target.phi());
        CHECK(a.cu_aperture_area == b.cu_aperture_area);
        CHECK(a.frame_len == b.frame_len);
        CHECK(a.mean_rcs == b.mean_rcs);
        // The dB/linear conversion is the only transcendental round trip.
        CHECK(rel_diff(a.snr_dl_comm, b.snr_dl_comm) < 1e-12);
        CHECK(rel_diff(a.snr_dl_sense, b.snr_dl_sense) < 1e-12);
        CHECK(rel_diff(a.snr_ul_comm, b.snr_ul_comm) < 1e-12);
        CHECK(rel_diff(a.snr_ul_sense, b.snr_ul_sense) < 1e-12);
    }
}

TEST_CASE("config parser diagnostics") {
    const Scene s = default_scene();
    std::string good = write_scene_config(s);

    SUBCASE("unknown key is an error naming the key") {
        try {
            parse_scene_config(good + "bogus_key = 1\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("bogus_key") != std::string::npos);
        }
    }
    SUBCASE("missing key is an error naming the key") {
        try {
            parse_scene_config("lambda_m = 0.125\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("lx_m") != std::string::npos);
        }
    }
    SUBCASE("duplicate key is an error") {
        CHECK_THROWS_AS(parse_scene_config(good + "lambda_m = 0.25\n"), ConfigError);
    }
    SUBCASE("non-numeric value is an error with line context") {
        try {
            parse_scene_config("lambda_m = banana\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(e.line == 1);
        }
    }
    SUBCASE("aperture area defaults to lambda^2 / 4 pi when omitted") {
        std::string text;
        std::istringstream in(good);
        std::string line;
        while (std::getline(in, line))
            if (line.rfind("cu_aperture_area_m2", 0) != 0) text += line + "\n";
        const Scene parsed = parse_scene_config(text);
        CHECK(parsed.cu_aperture_area() ==
              doctest::Approx(s.wavelength() * s.wavelength() / (4.0 * kPi)).epsilon(1e-15));
    }
    SUBCASE("comments and blank lines are accepted") {
        const Scene parsed = parse_scene_config("# scene\n\n" + good);
        CHECK(parsed.lx() == s.lx());
    }
}
