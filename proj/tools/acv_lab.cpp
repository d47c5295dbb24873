// acv-lab: seeded experiment suites and fixture verification.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "acv/lab.hpp"

namespace {

void write_json(const nlohmann::json& j, const std::string& path)
{
    if (path == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw acv::Error(acv::ErrorCode::InvalidConfig, "cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

void summarize(const acv::lab::SuiteReport& rep)
{
    std::cerr << rep.suite << ": " << rep.passed() << "/" << rep.records.size() << " checks passed"
              << (rep.pass() ? "" : " (FAIL)") << '\n';
    for (const auto& r : rep.records)
        if (!r.pass) std::cerr << "  failed: " << r.name << " [" << r.anchor << "]\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact experiments on the almost-commuting variety for sp_2n"};
    app.require_subcommand(1);

    acv::lab::SuiteConfig cfg;
    std::string suite_name;
    auto* suite = app.add_subcommand("suite", "Run a seeded experiment suite");
    suite->add_option("name", suite_name, "smoothness | yn | triangularize | closed-orbits | quotient | levi | wallach | mn")
        ->required();
    suite->add_option("--n", cfg.n, "Rank n of sp_2n")->required();
    suite->add_option("--seed", cfg.seed, "64-bit seed")->required();
    suite->add_option("--trials", cfg.trials, "Number of trials")->required();
    suite->add_option("--degree", cfg.degree_bound, "Degree bound for invariant checks")->capture_default_str();
    suite->add_option("--out", cfg.output_path, "Report path, '-' for stdout")->capture_default_str();

    std::string fixture;
    std::string verify_out = "-";
    auto* verify = app.add_subcommand("verify", "Re-verify a stored point or certificate");
    verify->add_option("path", fixture, "Fixture JSON")->required();
    verify->add_option("--out", verify_out, "Report path, '-' for stdout")->capture_default_str();

    std::size_t sample_n = 1;
    std::uint64_t sample_seed = 0;
    std::string sample_out = "-";
    auto* sample = app.add_subcommand("sample", "Write a seeded sample point");
    sample->add_option("--n", sample_n, "Rank n of sp_2n")->required();
    sample->add_option("--seed", sample_seed, "64-bit seed")->required();
    sample->add_option("--out", sample_out, "Output path, '-' for stdout")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*suite) {
            const auto rep = acv::lab::run_suite(suite_name, cfg);
            write_json(acv::lab::to_json(rep), cfg.output_path);
            summarize(rep);
            return rep.pass() ? 0 : 1;
        }
        if (*verify) {
            const auto rep = acv::lab::verify_fixture(fixture);
            write_json(acv::lab::to_json(rep), verify_out);
            summarize(rep);
            return rep.pass() ? 0 : 1;
        }
        write_json(acv::lab::sample_fixture(sample_n, sample_seed), sample_out);
        return 0;
    } catch (const acv::Error& e) {
        std::cerr << "error (" << acv::to_string(e.code()) << "): " << e.what() << '\n';
        return 2;
    }
}
