/*
   Copyright 2026 The dzhcp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include "commands.hpp"
#include "config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

using namespace dzhcp::cli;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

int run(const std::string& args) {
    const std::string cmd = std::string(DZHCP_CLI_PATH) + " " + args + " > cli_test_stdout.txt 2> cli_test_stderr.txt";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("sweep grammar") {
    const Sweep s = Sweep::parse({"lambda_p", "1e-6..1e-3", "log", "4"});
    const auto g = s.grid();
    REQUIRE(g.size() == 4);
    CHECK(g[0] == 1e-6);
    CHECK(g[1] == doctest::Approx(1e-5));
    CHECK(g[3] == 1e-3);
    CHECK(Sweep::parse({"R_tx", "10..150", "lin", "29"}).grid()[1] == 15.0);
    CHECK(Sweep::parse({"T_dB", "-10..10", "lin", "3"}).grid()[1] == 0.0);
    CHECK(Sweep::parse({"R_tx", "50..50", "lin", "1"}).grid() == std::vector<double>{50.0});
    CHECK_THROWS_AS(Sweep::parse({"R_tx", "10..5", "lin", "3"}), UsageError);
    CHECK_THROWS_AS(Sweep::parse({"R_tx", "0..5", "log", "3"}), UsageError);
    CHECK_THROWS_AS(Sweep::parse({"R_tx", "0-5", "lin", "3"}), UsageError);
    CHECK_THROWS_AS(Sweep::parse({"R_tx", "0..5", "cubic", "3"}), UsageError);
    CHECK_THROWS_AS(Sweep::parse({"R_tx", "0..5", "lin", "0"}), UsageError);
}

TEST_CASE("parameter resolution") {
    ExperimentConfig cfg;
    cfg.set("P_t_dBm", "20");
    cfg.set("T_dB", "10");
    cfg.set("R_cs_ratio", "1.2");
    cfg.set("R_tx", "50");
    const Params p = resolve_params(cfg, std::nullopt);
    CHECK(p["P_t"] == 0.1);
    CHECK(p["T"] == doctest::Approx(10.0));
    CHECK(p["R_cs"] == doctest::Approx(60.0));
    cfg.sweep = Sweep::parse({"R_tx", "10..20", "lin", "2"});
    CHECK(resolve_params(cfg, 20.0)["R_cs"] == doctest::Approx(24.0));
    cfg.set("alpha", "2");
    CHECK_THROWS_AS(resolve_params(cfg, std::nullopt), UsageError);
    CHECK_THROWS_AS(cfg.set("nope", "1"), UsageError);
    CHECK_THROWS_AS(cfg.set("R_tx", "abc"), UsageError);
    CHECK_THROWS_AS(cfg.set("process", "TypeIII"), UsageError);
}

TEST_CASE("config files") {
    const std::string path = "cli_test_config.txt";
    {
        std::ofstream out(path);
        out << "# reference setup\nR_tx = 80\nprocess = TypeI, MaternII\n\nsweep = lambda_p 1e-5..1e-4 log 2\n"
               "mc.n_reps = 12   # comment\n";
    }
    ExperimentConfig cfg;
    cfg.load_file(path);
    CHECK(cfg.process_list().size() == 2);
    CHECK(cfg.sweep->n == 2);
    CHECK(cfg.mc.n_reps == 12);
    CHECK(resolve_params(cfg, std::nullopt)["R_tx"] == 80.0);
    {
        std::ofstream out(path);
        out << "R_tx 80\n";
    }
    CHECK_THROWS_AS(cfg.load_file(path), UsageError);
    std::remove(path.c_str());
}

TEST_CASE("sweep commands write one row per point and process") {
    ExperimentConfig cfg;
    cfg.sweep = Sweep::parse({"lambda_p", "1e-6..1e-3", "log", "30"});
    std::ostringstream out;
    run_sweep(cfg, Quantity::Intensity, out);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == 1 + 30 * 4);
    CHECK(rows[0] == "sweep_var,value,process,quantity,analytic,quad_error");
    CHECK(rows[1].rfind("lambda_p,1e-06,TypeI,intensity,", 0) == 0);
    CHECK(rows[2].find(",TypeII,") != std::string::npos);
}

TEST_CASE("throughput composes intensity and success") {
    ExperimentConfig cfg;
    cfg.set("process", "TypeII");
    cfg.sweep = Sweep::parse({"R_tx", "60..60", "lin", "1"});
    auto value = [&](Quantity q) {
        std::ostringstream out;
        run_sweep(cfg, q, out);
        const auto rows = lines(out.str());
        REQUIRE(rows.size() == 2);
        const std::string& r = rows[1];
        const auto a = r.find(',', r.find(',', r.find(',', r.find(',') + 1) + 1) + 1);
        return std::stod(r.substr(a + 1, r.find(',', a + 1) - a - 1));
    };
    CHECK(value(Quantity::Throughput) == doctest::Approx(value(Quantity::Intensity) * value(Quantity::Success)).epsilon(1e-14));
}

TEST_CASE("number formatting round trips") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1e-5) == "1e-05");
    CHECK(std::stod(format_number(0.30000000000000004)) == 0.30000000000000004);
}

TEST_CASE("executable exit codes") {
    CHECK(run("intensity --sweep lambda_p 1e-6..1e-3 log 3") == 0);
    CHECK(lines(slurp("cli_test_stdout.txt")).size() == 13);
    CHECK(run("intensity --fix nope=1") == 2);
    CHECK(slurp("cli_test_stderr.txt").find("nope") != std::string::npos);
    CHECK(run("intensity --sweep lambda_p 1..0 lin 3") == 2);
    CHECK(run("bogus") == 2);
    CHECK(run("") == 2);
    CHECK(run("interference --fix R_cs=80 --fix R_tx=50 --process TypeII") == 2);
    CHECK(run("--help") == 0);
}

TEST_CASE("simulate output") {
    CHECK(run("simulate --fix lambda_p=0 --out cli_test_sim.csv") == 0);
    CHECK(slurp("cli_test_sim.csv") == "x,y,theta,mark,e\n");
    CHECK(run("simulate --seed 5 --out cli_test_sim_a.csv") == 0);
    CHECK(run("simulate --seed 5 --threads 1 --out cli_test_sim_b.csv") == 0);
    CHECK(slurp("cli_test_sim_a.csv") == slurp("cli_test_sim_b.csv"));
    CHECK(run("simulate --seed 6 --out cli_test_sim_b.csv") == 0);
    CHECK(slurp("cli_test_sim_a.csv") != slurp("cli_test_sim_b.csv"));
    for (const char* f : {"cli_test_sim.csv", "cli_test_sim_a.csv", "cli_test_sim_b.csv"}) std::remove(f);
}

TEST_CASE("validate negative control") {
    const std::string small = "--process TypeI --fix mc.n_accepted=2000 --fix mc.n_reps=100 --fix mc.success_T_dB=0";
    CHECK(run("validate " + small + " --out cli_test_val.csv") == 0);
    CHECK(run("validate " + small + " --fault-vo-scale 1.5 --out cli_test_val_bad.csv") == 1);
    const auto bad = lines(slurp("cli_test_val_bad.csv"));
    REQUIRE(bad.size() >= 2);
    CHECK(bad[1].rfind("intensity,TypeI,config,", 0) == 0);
    CHECK(bad[1].substr(bad[1].size() - 6) == ",false");
    for (const char* f : {"cli_test_val.csv", "cli_test_val_bad.csv", "cli_test_stdout.txt", "cli_test_stderr.txt"})
        std::remove(f);
}
