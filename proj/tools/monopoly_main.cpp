// Command-line front end: analyze | volume | project | verify | blowup,
// each driven by a JSON config with reproducible seeds and CSV output.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "monopoly/monopoly.hpp"

namespace fs = std::filesystem;

namespace {

monopoly::json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw monopoly::ConfigError("cannot open config file " + path);
    try {
        return monopoly::json::parse(in);
    } catch (const monopoly::json::parse_error& e) {
        throw monopoly::ConfigError("config parse error in " + path + ": " + e.what());
    }
}

std::string default_out_dir() {
    if (const char* env = std::getenv("MONOPOLY_OUT")) return env;
    return ".";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"monomial-polyhedron Bergman laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = default_out_dir();
    std::uint64_t seed = 0;
    std::size_t samples = 0;

    const std::vector<std::string> commands = {"analyze", "volume", "project", "verify", "blowup"};
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON config file")->required();
        sub->add_option("--out", out_dir, "output directory (default $MONOPOLY_OUT or .)");
        sub->add_option("--seed", seed, "override the config seed");
        sub->add_option("--samples", samples, "override the config sample count");
    }

    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        monopoly::json cfg = load_config(config_path);
        CLI::App* sub = app.get_subcommands().front();
        if (sub->count("--seed") > 0) cfg["seed"] = seed;
        if (sub->count("--samples") > 0) cfg["samples"] = samples;

        const monopoly::RunOutput out = monopoly::run_command(command, cfg);

        fs::create_directories(out_dir);
        for (const auto& [name, content] : out.files) {
            std::ofstream f(fs::path(out_dir) / name, std::ios::binary);
            if (!f) throw monopoly::ConfigError("cannot write output file " + name);
            f << content;
        }
        if (!out.summary.empty()) std::cout << out.summary << "\n";
        return out.exit_code;
    } catch (const monopoly::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
