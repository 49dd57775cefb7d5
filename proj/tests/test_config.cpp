#include <doctest.h>

#include "coldeph/errors.hpp"
#include "coldeph/run_config.hpp"

using namespace coldeph;

TEST_SUITE("config") {

TEST_CASE("number parsing") {
    CHECK(parse_real("0.25") == 0.25);
    CHECK(parse_real(" +1e-3 ") == 1e-3);
    CHECK(parse_real("1/60") == doctest::Approx(1.0 / 60));
    CHECK_THROWS_AS(parse_real("1/0"), ConfigError);
    CHECK_THROWS_AS(parse_real("abc"), ConfigError);
    CHECK_THROWS_AS(parse_real("1.5x"), ConfigError);
    CHECK_THROWS_AS(parse_real("inf"), ConfigError);
    CHECK_THROWS_AS(parse_real(""), ConfigError);

    CHECK(parse_complex("0.3") == Complex{0.3, 0.0});
    CHECK(parse_complex("0.6+0.8i") == Complex{0.6, 0.8});
    CHECK(parse_complex("0.6 - 0.8i") == Complex{0.6, -0.8});
    CHECK(parse_complex("-0.5i") == Complex{0.0, -0.5});
    CHECK(parse_complex("i") == Complex{0.0, 1.0});
    CHECK(parse_complex("1e-2-2e-1j") == Complex{1e-2, -2e-1});
    CHECK_THROWS_AS(parse_complex("0.3+"), ConfigError);
    CHECK_THROWS_AS(parse_complex("x"), ConfigError);
}

TEST_CASE("settings map onto the run config") {
    RunConfig c;
    apply_setting(c, "system", "qubit");
    apply_setting(c, "state", "q123_4");
    apply_setting(c, "temperature-ratio", "1/60");
    apply_setting(c, "j0", "2.5");
    apply_setting(c, "omega_c", "3");
    apply_setting(c, "omega0", "0.1");
    apply_setting(c, "mode", "discrete");
    apply_setting(c, "n_modes", "100");
    apply_setting(c, "omega_max", "20");
    apply_setting(c, "t_max", "4");
    apply_setting(c, "steps", "50");
    apply_setting(c, "task", "timeseries");
    apply_setting(c, "out", "a/b.csv");
    CHECK(c.system == SystemKind::Qubit);
    CHECK(c.state == "q123_4");
    CHECK(c.temperature_ratio == doctest::Approx(1.0 / 60));
    CHECK(c.j0 == 2.5);
    CHECK(c.omega_c == 3.0);
    CHECK(c.omega0 == 0.1);
    CHECK(std::holds_alternative<DiscreteModes>(c.mode));
    CHECK(c.n_modes == 100);
    CHECK(c.omega_max == 20.0);
    CHECK(c.t_max == 4.0);
    CHECK(c.steps == 50);
    CHECK(c.out == "a/b.csv");
}

TEST_CASE("bad keys and values are errors") {
    RunConfig c;
    CHECK_THROWS_AS(apply_setting(c, "temprature_ratio", "0"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "state", "f99"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "system", "boson"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "mode", "high-t"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "steps", "1"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "steps", "2.5"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "j0", "0"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "temperature_ratio", "-1"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "t_max", "0"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "amplitudes", "1,,0"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "task", "sweep"), ConfigError);
}

TEST_CASE("config files with shared defaults and sections") {
    const auto parsed = parse_config(
        "# comment\n"
        "j0 = 4   # trailing comment\n"
        "report = out.json\n"
        "\n"
        "[first]\n"
        "state = f24\n"
        "[second]\n"
        "state = q14\n"
        "j0 = 6\r\n");
    CHECK(parsed.shared.size() == 2);
    REQUIRE(parsed.sections.size() == 2);

    PlanOverrides ov;
    ov.settings = {{"t_max", "3"}};
    ov.output_dir = "dir";
    const auto plan = make_plan(parsed, ov);
    REQUIRE(plan.runs.size() == 2);
    CHECK(plan.runs[0].name == "first");
    CHECK(plan.runs[0].j0 == 4.0);
    CHECK(plan.runs[1].j0 == 6.0);
    CHECK(plan.runs[1].t_max == 3.0);
    CHECK(plan.runs[0].out == std::filesystem::path("dir") / "first.csv");
    CHECK(plan.report == std::filesystem::path("dir") / "out.json");

    ov.out = "x.csv";
    CHECK_THROWS_AS(make_plan(parsed, ov), ConfigError);
}

TEST_CASE("malformed config files") {
    CHECK_THROWS_AS(parse_config("state f24\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[a\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[]\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[a]\n[a]\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[a]\nreport = r.json\n"), ConfigError);
    CHECK_THROWS_AS(parse_config(" = 3\n"), ConfigError);
    CHECK_THROWS_AS(make_plan(parse_config("colour = red\n"), {}), ConfigError);
    CHECK_THROWS_AS(make_plan(parse_config("[a]\nout = same.csv\n[b]\nout = same.csv\n"), {}), ConfigError);
    CHECK_THROWS_AS(read_config_file("/nonexistent/dir/x.cfg"), ConfigUnreadable);
    try {
        parse_config("j0 = 1\nbroken\n");
        FAIL("expected an error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("single run defaults") {
    const auto plan = make_plan(parse_config("state = q14\nname = demo\n"), {}, "stem");
    REQUIRE(plan.runs.size() == 1);
    CHECK(plan.runs[0].out == "demo.csv");
    CHECK(plan.report == "stem.json");
}

TEST_CASE("resolution validates the physics") {
    RunConfig c;
    c.state = "f24";
    auto r = resolve(c);
    CHECK(r.system == SystemKind::Fermionic);
    CHECK(r.params.zero_temperature());
    CHECK(std::holds_alternative<ClosedFormLowT>(r.params.mode));
    CHECK(r.warnings.empty());

    c.temperature_ratio = 1.0 / 60;
    CHECK(resolve(c).params.beta == doctest::Approx(60.0));
    c.mode = ClosedFormZeroT{};
    CHECK_THROWS_AS(resolve(c), ConfigError);
    c.mode = ClosedFormLowT{};
    c.temperature_ratio = 1.0 / 30;
    CHECK(resolve(c).warnings.size() == 1);
    c.temperature_ratio = 0.5;
    CHECK_THROWS_AS(resolve(c), ConfigError);
    c.temperature_ratio = 0.0;

    c.system = SystemKind::Qubit;
    CHECK_THROWS_AS(resolve(c), ConfigError);
    c.system.reset();

    c.alpha = Complex{0.3, 0.0};
    CHECK(resolve(c).warnings.size() == 1);
    c.state = "dfs_fermion";
    CHECK(resolve(c).psi0->amplitudes()[2] == Complex{0.3, 0.0});
    c.alpha = Complex{1.5, 0.0};
    CHECK_THROWS_AS(resolve(c), ConfigError);
    c.alpha.reset();

    c.n_modes = 10;
    CHECK(resolve(c).warnings.size() == 1);
    c.mode = DiscreteModes{};
    CHECK(std::get<DiscreteModes>(resolve(c).params.mode).n_modes == 10);
}

TEST_CASE("explicit amplitudes") {
    RunConfig c;
    c.amplitudes = std::vector<Complex>{1, 0, 0, 0, 0, 0};
    auto r = resolve(c);
    CHECK(r.system == SystemKind::Fermionic);
    CHECK(r.warnings.empty());

    c.amplitudes = std::vector<Complex>{0.5, 0.5, 0.5, 0.5 + 1e-11};
    r = resolve(c);
    CHECK(r.system == SystemKind::Qubit);
    CHECK(r.warnings.size() == 1);
    CHECK(r.psi0->amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-15));

    c.amplitudes = std::vector<Complex>{0.5, 0.5, 0.5, 0.5 + 1e-6};
    CHECK_THROWS_AS(resolve(c), ConfigError);
    c.amplitudes = std::vector<Complex>{1, 0, 0};
    CHECK_THROWS_AS(resolve(c), ConfigError);
    c.amplitudes = std::vector<Complex>{1, 0, 0, 0};
    c.system = SystemKind::Fermionic;
    CHECK_THROWS_AS(resolve(c), ConfigError);
}

TEST_CASE("alpha sweep needs a system") {
    RunConfig c;
    c.task = Task::AlphaSweep;
    CHECK_THROWS_AS(resolve(c), ConfigError);
    c.system = SystemKind::Qubit;
    CHECK_FALSE(resolve(c).psi0.has_value());
}

}
