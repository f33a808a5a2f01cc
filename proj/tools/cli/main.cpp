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

#include "commands.hpp"
#include "config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

namespace {

using namespace dzhcp::cli;

struct Flags {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::vector<std::string> sweep;
    std::vector<std::string> fix;
    std::vector<std::string> process;
    std::optional<unsigned> threads;
    double fault_vo_scale = 1.0;
    std::string estimates;
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "key = value parameter file");
    cmd->add_option("--seed", f.seed, "master seed for Monte Carlo runs");
    cmd->add_option("--out", f.out, "output CSV path (default stdout)");
    cmd->add_option("--sweep", f.sweep, "VAR LO..HI lin|log N")->expected(4)->allow_extra_args(false);
    cmd->add_option("--fix", f.fix, "KEY=VALUE override, repeatable")->take_all();
    cmd->add_option("--process", f.process, "TypeI, TypeII, MaternI, MaternII (default all)")->delimiter(',');
    cmd->add_option("--threads", f.threads, "worker threads (0 = hardware)");
}

ExperimentConfig build_config(const Flags& f) {
    ExperimentConfig cfg;
    if (!f.config.empty()) cfg.load_file(f.config);
    for (const std::string& kv : f.fix) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--fix expects KEY=VALUE, got '" + kv + "'");
        cfg.set(std::string_view(kv).substr(0, eq), std::string_view(kv).substr(eq + 1));
    }
    if (!f.sweep.empty()) cfg.sweep = Sweep::parse(f.sweep);
    if (!f.process.empty()) {
        std::string joined;
        for (const std::string& p : f.process) joined += p + ",";
        cfg.set("process", joined);
    }
    if (f.seed) cfg.mc.seed = *f.seed;
    if (!f.out.empty()) cfg.out = f.out;
    if (f.threads) cfg.threads = *f.threads;
    return cfg;
}

// Opens --out or falls back to stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw UsageError("cannot open output '" + path + "'");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dual-zone hard-core process analytics and Monte Carlo validation"};
    app.require_subcommand(1);
    Flags flags;

    struct Entry {
        const char* name;
        const char* help;
        std::optional<Quantity> quantity;
    };
    const Entry entries[] = {
        {"intensity", "active transmitter density", Quantity::Intensity},
        {"interference", "mean interference at the typical receiver", Quantity::Interference},
        {"gain", "asymptotic SIR gain over the Poisson reference", Quantity::Gain},
        {"success", "approximate success probability", Quantity::Success},
        {"throughput", "intensity times success probability", Quantity::Throughput},
        {"validate", "compare analytic results against Monte Carlo", std::nullopt},
        {"simulate", "dump one thinned realization", std::nullopt},
    };
    std::vector<std::pair<CLI::App*, const Entry*>> commands;
    for (const Entry& e : entries) {
        CLI::App* cmd = app.add_subcommand(e.name, e.help);
        add_common(cmd, flags);
        commands.emplace_back(cmd, &e);
    }
    CLI::App* validate = commands[5].first;
    validate->add_option("--fault-vo-scale", flags.fault_vo_scale,
                         "test hook: scale the retention area used by the analytic intensity")
        ->group("");
    validate->add_option("--estimates", flags.estimates, "also write Monte Carlo estimates as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const ExperimentConfig cfg = build_config(flags);
        dzhcp_set_threads(cfg.threads);
        Output out(cfg.out);
        for (const auto& [cmd, entry] : commands) {
            if (!cmd->parsed()) continue;
            if (entry->quantity) {
                run_sweep(cfg, *entry->quantity, out.stream());
            } else if (cmd == validate) {
                std::unique_ptr<std::ofstream> est;
                ValidateOptions options;
                options.fault_vo_scale = flags.fault_vo_scale;
                if (!flags.estimates.empty()) {
                    est = std::make_unique<std::ofstream>(flags.estimates, std::ios::binary);
                    if (!*est) throw UsageError("cannot open '" + flags.estimates + "'");
                    options.estimates = est.get();
                }
                const bool ok = run_validate(cfg, options, out.stream());
                out.stream().flush();
                return ok ? 0 : 1;
            } else {
                run_simulate(cfg, out.stream());
            }
        }
        out.stream().flush();
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
