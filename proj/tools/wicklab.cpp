// wicklab CLI: verify / sweep / oracle drivers around the header library.
#include <CLI11.hpp>

#include <iostream>

#include "wicklab/harness.hpp"

namespace {

wicklab::RunConfig load_or_default(const std::string& path) {
    if (path.empty()) return wicklab::RunConfig{};
    return wicklab::RunConfig::load(path);
}

int finish(const wicklab::SweepResult& result, const std::string& out,
           const std::string& format) {
    wicklab::write_artifact(result, out, format);
    std::size_t failed = 0;
    for (const auto& row : result.rows)
        if (!row.pass) ++failed;
    std::cerr << "wicklab: " << result.rows.size() << " checks, " << failed << " failed (config "
              << result.config_hash << ")\n";
    return wicklab::all_pass(result.rows) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian Wick calculus verification harness"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "csv", oracle_case;

    CLI::App* verify = app.add_subcommand("verify", "run the full check battery");
    verify->add_option("--config", config_path, "JSON config file");
    verify->add_option("--out", out_path, "output path (default: stdout)");
    verify->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* sweep = app.add_subcommand("sweep", "exponent-grid sweep");
    sweep->add_option("--config", config_path, "JSON config file")->required();
    sweep->add_option("--out", out_path, "output path")->required();
    sweep->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* oracle = app.add_subcommand("oracle", "run one named oracle");
    oracle->add_option("--case", oracle_case, "oracle name")->required();
    oracle->add_option("--config", config_path, "JSON config file");
    oracle->add_option("--out", out_path, "output path (default: stdout)");
    oracle->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        wicklab::RunConfig cfg = load_or_default(config_path);
        if (verify->parsed()) return finish(wicklab::run_verify(cfg), out_path, format);
        if (sweep->parsed()) return finish(wicklab::run_sweep(cfg), out_path, format);
        return finish(wicklab::run_oracle(oracle_case, cfg), out_path, format);
    } catch (const std::exception& ex) {
        std::cerr << "wicklab: " << ex.what() << "\n";
        return 2;
    }
}
