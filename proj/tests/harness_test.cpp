#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ssga/harness/experiment.hpp"
#include "ssga/harness/output.hpp"
#include "ssga/harness/stats.hpp"

using namespace ssga;
using namespace ssga::harness;

namespace {

ga::AlgorithmConfig cfg(ga::Variant v, std::size_t n, std::size_t mu, double c = 1.0) {
    ga::AlgorithmConfig out;
    out.variant = v;
    out.n = n;
    out.mu = mu;
    out.c = c;
    return out;
}

} // namespace

TEST_CASE("summary statistics") {
    const std::vector<double> v = {2, 4, 4, 4, 5, 5, 7, 9};
    const auto s = summarize(v);
    CHECK(s.mean == doctest::Approx(5.0));
    CHECK(s.std_dev == doctest::Approx(std::sqrt(32.0 / 7.0)));
    CHECK(s.count == 8);

    const std::vector<double> one = {42};
    const auto t = summarize(one);
    CHECK(t.std_dev == 0.0);
    CHECK(t.count == 1);
    CHECK(std::isnan(summarize({}).mean));
}

TEST_CASE("normalization") {
    StatsSummary a;
    a.mean = 75;
    a.std_dev = 10;
    StatsSummary b;
    b.mean = 100;
    const auto r = normalize(a, b);
    CHECK(*r.normalized_mean == doctest::Approx(0.75));
    CHECK(*r.normalized_std == doctest::Approx(0.10));
    CHECK(*normalize(a, a).normalized_mean == 1.0);
    b.mean = 0;
    CHECK_THROWS(normalize(a, b));
}

TEST_CASE("Welch t-test matches reference values") {
    const std::vector<double> a = {10, 12, 9, 11, 13, 10, 12};
    const std::vector<double> b = {14, 15, 13, 16, 12, 15};
    const auto r = welch_t_test(summarize(a), summarize(b));
    CHECK(r.t == doctest::Approx(-3.93739348867529).epsilon(1e-10));
    CHECK(r.df == doctest::Approx(10.542417268470757).epsilon(1e-10));
    CHECK(r.p_two_sided == doctest::Approx(0.00251798409469866).epsilon(1e-8));
    CHECK(r.p_less == doctest::Approx(0.00125899204734933).epsilon(1e-8));
    CHECK(chi_squared_upper_tail(10.0, 4) == doctest::Approx(0.04042768199451279).epsilon(1e-10));
}

TEST_CASE("number formatting") {
    CHECK(format_number(14470.35) == "14470.4");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(1.61803398875) == "1.61803");
    CHECK(format_number(186012.84) == "186013");
    CHECK(format_number(1.302775637, 7) == "1.302776");
    CHECK(format_number(std::nan("")) == "nan");
}

TEST_CASE("builtin specs") {
    const auto specs = builtin_specs();
    std::set<std::string> names;
    for (const auto& s : specs) {
        names.insert(s.name);
        CHECK_NOTHROW(s.validate());
    }
    CHECK(names == std::set<std::string>{"fig1", "fig2", "fig3", "fig4", "fig5", "table1"});

    const auto fig5 = builtin_spec("fig5");
    REQUIRE(fig5.points.size() == 11);
    for (std::size_t i = 0; i < 11; ++i) {
        CHECK(fig5.points[i].config.mu == 5);
        CHECK(fig5.points[i].config.c == doctest::Approx(0.9 + 0.1 * i));
        CHECK(fig5.points[i].runs >= 500);
    }
    CHECK(fig5.normalization == Normalization::VsCEqual1);

    const auto table = builtin_spec("table1");
    std::set<std::size_t> sizes;
    for (const auto& p : table.points) sizes.insert(p.config.n);
    CHECK(sizes.size() == 8);
    CHECK(table.points.size() == 8 * 11);

    std::set<std::string> fig1_series;
    for (const auto& p : builtin_spec("fig1").points) fig1_series.insert(p.series);
    CHECK(fig1_series.size() == 7);

    const auto fig3 = builtin_spec("fig3");
    for (std::size_t i = 0; i < fig3.points.size(); ++i) {
        const auto base = baseline_index(fig3, i);
        REQUIRE(base.has_value());
        CHECK(fig3.points[*base].config.mu == 2);
        CHECK(fig3.points[*base].config.n == fig3.points[i].config.n);
    }
    CHECK(builtin_spec("fig3", Scale::Full).points.front().runs == 1000);
    CHECK(runs_for(Scale::Desk, 2048) == 1000);
    CHECK(runs_for(Scale::Desk, 8192) == 200);
    CHECK(runs_for(Scale::Desk, 16384) == 100);
    CHECK_THROWS_AS(builtin_spec("fig9"), ContractViolation);
}

TEST_CASE("spec validation") {
    ExperimentSpec spec;
    spec.name = "bad";
    CHECK_THROWS_AS(spec.validate(), ContractViolation);
    spec.add_series("a", cfg(ga::Variant::MuPlusOneGA, 8, 2), {16, 8}, 3);
    CHECK_THROWS_AS(spec.validate(), ContractViolation);

    spec.points.clear();
    spec.add_series("a", cfg(ga::Variant::MuPlusOneGA, 8, 2), {8, 16}, 3);
    CHECK_NOTHROW(spec.validate());
    spec.points[0].runs = 0;
    CHECK_THROWS_AS(spec.validate(), ContractViolation);

    spec.points[0].runs = 3;
    spec.normalization = Normalization::Vs1Plus1EA;
    CHECK_THROWS_AS(spec.validate(), ContractViolation);
}

TEST_CASE("normalized sweeps") {
    ExperimentSpec spec;
    spec.name = "mu";
    spec.sweep = SweepVariable::Mu;
    spec.normalization = Normalization::Vs2Plus1GA;
    spec.add_series("ga", cfg(ga::Variant::MuPlusOneGA, 16, 2), {2, 3, 4}, 20);
    const auto r = run_experiment(spec, 1);
    REQUIRE(r.points.size() == 3);
    CHECK(*r.points[0].stats.normalized_mean == 1.0);
    CHECK(*r.points[1].stats.normalized_mean == doctest::Approx(r.points[1].stats.mean / r.points[0].stats.mean));
    CHECK(r.points[0].stats.count == 20);
}

TEST_CASE("results do not depend on the worker count") {
    ExperimentSpec spec;
    spec.name = "det";
    spec.master_seed = 77;
    spec.add_series("ga", cfg(ga::Variant::MuPlusOneGA, 8, 3), {8, 16, 32}, 15);
    spec.add_series("ea", cfg(ga::Variant::OnePlusOneEA, 8, 1), {8, 16, 32}, 15);
    const auto one = to_csv(run_experiment(spec, 1));
    CHECK(one == to_csv(run_experiment(spec, 3)));
    CHECK(one == to_csv(run_experiment(spec, 8)));
    spec.master_seed = 78;
    CHECK(one != to_csv(run_experiment(spec, 2)));
}

TEST_CASE("capped runs are reported separately") {
    ExperimentSpec spec;
    spec.name = "cap";
    auto c = cfg(ga::Variant::OnePlusOneEA, 400, 1);
    c.max_evaluations = 10;
    spec.add_series("ea", c, {400}, 4);
    const auto r = run_experiment(spec, 2);
    CHECK(r.points[0].stats.capped_count == 4);
    CHECK(r.points[0].stats.count == 0);
    CHECK_FALSE(r.points[0].stats.comparable());
    const auto j = to_json(r);
    CHECK(j.contains("warning"));
    CHECK(j["rows"][0]["mean"].is_null());
    CHECK(to_csv(r).find(",nan,nan,,,4\n") != std::string::npos);
}

TEST_CASE("csv and json carry the same fields") {
    ExperimentSpec spec;
    spec.name = "fmt";
    spec.add_series("ga", cfg(ga::Variant::MuPlusOneGA, 10, 5), {10}, 3);
    const auto r = run_experiment(spec, 1);
    std::istringstream csv(to_csv(r));
    std::string header, row;
    std::getline(csv, header);
    std::getline(csv, row);
    CHECK(header == kCsvHeader);
    CHECK(row.rfind("fmt,(5+1) GA,10,5,1,3,", 0) == 0);
    const auto j = to_json(r)["rows"][0];
    std::istringstream fields{std::string(kCsvHeader)};
    for (std::string f; std::getline(fields, f, ',');) CHECK(j.contains(f));
    CHECK_FALSE(to_json(r).contains("warning"));
}

TEST_CASE("atomic file writes") {
    const auto dir = std::filesystem::temp_directory_path() / "ssga_harness_test";
    std::filesystem::remove_all(dir);
    const auto path = dir / "sub" / "out.csv";
    write_file_atomic(path, "a,b\n");
    write_file_atomic(path, "c,d\n");
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    CHECK(text == "c,d\n");
    CHECK_FALSE(std::filesystem::exists(dir / "sub" / "out.csv.tmp"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("derived seeds do not collide on a large grid") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t p = 0; p < 100; ++p)
        for (std::uint64_t r = 0; r < 1000; ++r) seen.insert(derive_seed(1, p, r));
    CHECK(seen.size() == 100000);
}
