#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mutinfo/format.hpp"
#include "mutinfo/optbins.hpp"
#include "support/fixtures.hpp"

#ifndef MUTINFO_BIN
#error "MUTINFO_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = "cli_stdout.tmp";
    const std::string err_path = "cli_stderr.tmp";
    const std::string cmd =
        std::string(MUTINFO_BIN) + " " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string line_csv() {
    std::ostringstream ss;
    ss << "x,y\n";
    for (int i = 0; i < 50; ++i) ss << i << "," << 2 * i + 3 << "\n";
    return ss.str();
}

} // namespace

TEST_CASE("mi subcommand") {
    write_file("line.csv", line_csv());

    SUBCASE("corr on y=2x+3 prints 1, exit 0") {
        const RunResult r = run("mi --input line.csv --method corr");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "corr  1\n");
    }
    SUBCASE("beta = 0 is a usage error (exit 2)") {
        const RunResult r = run("mi --input line.csv --method bayes --beta 0");
        CHECK(r.exit_code == 2);
    }
    SUBCASE("fixed seed gives byte-identical output") {
        const RunResult a = run("mi --input line.csv --method all --seed 7");
        const RunResult b = run("mi --input line.csv --method all --seed 7");
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
    SUBCASE("json output round-trips byte-identically") {
        const RunResult r = run("mi --input line.csv --method all --seed 3 --format json");
        CHECK(r.exit_code == 0);
        const auto parsed = nlohmann::ordered_json::parse(r.out);
        CHECK(parsed.dump(2) + "\n" == r.out);
        CHECK(parsed["params"]["beta"] == 0.5);
        CHECK(parsed["params"]["chi2_threshold"] == 7.815);
    }
    SUBCASE("bits conversion") {
        const RunResult nats = run("mi --input line.csv --method fixed --fixed-bins 4");
        const RunResult bits =
            run("mi --input line.csv --method fixed --fixed-bins 4 --base bits");
        const double v_nats = std::stod(nats.out.substr(nats.out.find("  ")));
        const double v_bits = std::stod(bits.out.substr(bits.out.find("  ")));
        CHECK(v_bits == doctest::Approx(v_nats / std::log(2.0)).epsilon(1e-12));
    }
    SUBCASE("named columns") {
        write_file("named.csv", "junk,a,b\n" + [] {
            std::ostringstream ss;
            for (int i = 0; i < 20; ++i) ss << "text" << i << "," << i << "," << i * i << "\n";
            return ss.str();
        }());
        const RunResult r = run("mi --input named.csv --x a --y b --method corr");
        CHECK(r.exit_code == 0);
    }
    SUBCASE("missing file is a data error (exit 1)") {
        CHECK(run("mi --input does_not_exist.csv --method corr").exit_code == 1);
    }
    SUBCASE("adaptive partition tree dump") {
        const RunResult r =
            run("mi --input line.csv --method adaptive --dump-partition tree.json");
        CHECK(r.exit_code == 0);
        const auto tree = nlohmann::ordered_json::parse(slurp("tree.json"));
        CHECK(tree["count"] == 50);
        CHECK(tree.contains("children"));
        CHECK(tree["u"][1] == 1.0);
        std::remove("tree.json");
    }
    SUBCASE("unknown flag and unknown method are usage errors") {
        CHECK(run("mi --input line.csv --no-such-flag").exit_code == 2);
        CHECK(run("mi --input line.csv --method quantum").exit_code == 2);
    }
}

TEST_CASE("optbins subcommand") {
    write_file("gauss.csv", [] {
        std::ostringstream ss;
        ss << "v\n";
        for (double x : fixtures::gaussian_sample(51, 1000)) ss << mutinfo::format_double(x) << "\n";
        return ss.str();
    }());

    SUBCASE("--max-bins 1 selects M=1") {
        const RunResult r = run("optbins --input gauss.csv --max-bins 1");
        CHECK(r.exit_code == 0);
        CHECK(r.out.rfind("selected_m,1\n", 0) == 0);
    }
    SUBCASE("constant column is a data error (exit 1)") {
        std::ostringstream ss;
        ss << "v\n";
        for (int i = 0; i < 30; ++i) ss << "5.5\n";
        write_file("const.csv", ss.str());
        const RunResult r = run("optbins --input const.csv");
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("error") != std::string::npos);
    }
    SUBCASE("selection matches the library scan") {
        const auto data = fixtures::gaussian_sample(51, 1000);
        const std::int64_t expect = mutinfo::optimal_bins(data, {0.5, 100});
        const RunResult r = run("optbins --input gauss.csv --beta 0.5 --max-bins 100");
        CHECK(r.out.rfind("selected_m," + std::to_string(expect) + "\n", 0) == 0);
        // curve rows: header + selected line + 100 entries
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 102);
    }
}

TEST_CASE("sweep subcommand") {
    SUBCASE("coupling 0 row reports analytic 0") {
        const RunResult r = run("sweep --couplings 0 --n 400 --burn-in 50 --seeds 2 --draws 100");
        CHECK(r.exit_code == 0);
        const std::size_t line2 = r.out.find('\n') + 1;
        CHECK(r.out.substr(line2, 4) == "0,0,");
    }
    SUBCASE("--output writes the three files") {
        const RunResult r = run(
            "sweep --couplings 0.5 --n 400 --burn-in 50 --seeds 2 --draws 100 --output sweep_t");
        CHECK(r.exit_code == 0);
        CHECK_FALSE(slurp("sweep_t.csv").empty());
        CHECK_FALSE(slurp("sweep_t_long.csv").empty());
        const auto j = nlohmann::ordered_json::parse(slurp("sweep_t.json"));
        CHECK(j["rows"].size() == 1);
        CHECK(j["params"]["n"] == 400);
        std::remove("sweep_t.csv");
        std::remove("sweep_t.json");
        std::remove("sweep_t_long.csv");
    }
    SUBCASE("--assert-fig2 passes on the biased-histogram ordering") {
        const RunResult r = run(
            "sweep --couplings 0.1 --n 2000 --burn-in 200 --seeds 3 --draws 300 --assert-fig2");
        CHECK(r.exit_code == 0);
    }
    SUBCASE("usage errors exit 2") {
        CHECK(run("sweep --couplings 0.2 --n 300 --burn-in 10 --seeds 1 --draws 50 "
                  "--methods warp:9").exit_code == 2);
        CHECK(run("sweep --couplings 0.2 --n 300 --burn-in 10 --seeds 1 --draws 50 "
                  "--methods corr --assert-fig2").exit_code == 2);
    }
    SUBCASE("long CSV contains the analytic curve") {
        const RunResult r = run(
            "sweep --couplings 0.2 --n 400 --burn-in 50 --seeds 1 --draws 100 --output sw2");
        CHECK(r.exit_code == 0);
        const std::string longcsv = slurp("sw2_long.csv");
        CHECK(longcsv.rfind("coupling,method,value\n", 0) == 0);
        CHECK(longcsv.find(",analytic,") != std::string::npos);
        std::remove("sw2.csv");
        std::remove("sw2.json");
        std::remove("sw2_long.csv");
    }
}

TEST_CASE("rank subcommand") {
    fixtures::write_table_csv("synth.csv", fixtures::nonlinear_ranking_table(77, 1000));

    SUBCASE("nonlinear fixture: MI top-1 differs from |corr| top-1") {
        const RunResult r =
            run("rank --input synth.csv --target target --draws 300 --seed 5 --format json");
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::ordered_json::parse(r.out);
        std::string mi_top, corr_top;
        for (const auto& row : j["variables"]) {
            if (row["rank_by"]["mi_bayes"] == 1) mi_top = row["variable"];
            if (row["rank_by"]["corr"] == 1) corr_top = row["variable"];
        }
        CHECK(mi_top == "v1");
        CHECK(corr_top != "v1");
        CHECK(j.dump(2) + "\n" == r.out); // round-trip
    }
    SUBCASE("--bias a a yields a degenerate target (exit 1)") {
        const RunResult r = run("rank --input synth.csv --bias v1 v1 --draws 100");
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("constant") != std::string::npos);
    }
    SUBCASE("missing target column (exit 1)") {
        const RunResult r = run("rank --input synth.csv --target nope --draws 100");
        CHECK(r.exit_code == 1);
    }
    SUBCASE("bias column workflow") {
        const RunResult r = run(
            "rank --input synth.csv --bias target v1 --draws 200 --seed 2 --format csv");
        CHECK(r.exit_code == 0);
        CHECK(r.out.rfind("variable,", 0) == 0);
    }
    SUBCASE("deterministic across runs") {
        const RunResult a =
            run("rank --input synth.csv --target target --draws 200 --seed 9 --format csv");
        const RunResult b =
            run("rank --input synth.csv --target target --draws 200 --seed 9 --format csv");
        CHECK(a.out == b.out);
    }
}
