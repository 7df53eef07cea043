// Command-line surface for the lower-central-series quotient calculator.

#include "CLI11.hpp"
#include "json.hpp"

#include "lcsq/dense_oracle.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitConfig = 2;

struct Instance {
    uint32_t m, n, deg_max;
};

// covers both corollaries and the Remark on B_4(A_2) within minutes
const std::vector<Instance> kDefaultInstances = {
    {2, 2, 8}, {3, 2, 8}, {2, 3, 7}, {3, 3, 7}, {4, 2, 9},
};

ordered_json oracle_b_json(uint32_t m, uint32_t n, uint32_t deg_max) {
    auto dims = lcsq::oracle::b_dims(n, m, deg_max);
    ordered_json j;
    j["generator"] = "dense_oracle";
    j["m"] = m;
    j["n"] = n;
    j["deg_max"] = deg_max;
    ordered_json d;
    for (const auto& [level, v] : dims) d[std::to_string(level)] = v;
    j["dims"] = d;
    return j;
}

ordered_json oracle_z_json(uint32_t n, uint32_t deg_max) {
    ordered_json j;
    j["generator"] = "dense_oracle";
    j["n"] = n;
    j["deg_max"] = deg_max;
    j["b1"] = lcsq::oracle::b1_dims(n, deg_max);
    j["z"] = lcsq::oracle::z_dims(n, deg_max);
    j["bbar1"] = lcsq::oracle::bbar1_dims(n, deg_max);
    return j;
}

void write_json(const ordered_json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded dimensions of lower central series quotients of "
                 "free associative algebras"};
    app.require_subcommand(1);

    uint32_t m = 2, n = 2, deg_max = 6;

    auto* oracle_cmd = app.add_subcommand(
        "oracle", "brute-force dims of B_m(A_n) by dense elimination");
    oracle_cmd->add_option("--m", m, "lower central series level")->required();
    oracle_cmd->add_option("--n", n, "number of generators")->required();
    oracle_cmd->add_option("--deg-max", deg_max, "degree truncation")->required();
    std::string oracle_out;
    oracle_cmd->add_option("--out", oracle_out, "write JSON to file");

    auto* regen_cmd = app.add_subcommand(
        "regen-fixtures", "regenerate oracle golden files for the default instances");
    std::string fixture_dir = "tests/fixtures";
    regen_cmd->add_option("--dir", fixture_dir, "fixture directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (oracle_cmd->parsed()) {
            ordered_json j = oracle_b_json(m, n, deg_max);
            if (!oracle_out.empty())
                write_json(j, oracle_out);
            else
                std::cout << j.dump(2) << "\n";
            return kExitPass;
        }
        if (regen_cmd->parsed()) {
            for (const auto& inst : kDefaultInstances) {
                std::string path = fixture_dir + "/oracle_b_m" +
                                   std::to_string(inst.m) + "_n" +
                                   std::to_string(inst.n) + "_d" +
                                   std::to_string(inst.deg_max) + ".json";
                std::cerr << "generating " << path << "\n";
                write_json(oracle_b_json(inst.m, inst.n, inst.deg_max), path);
            }
            for (auto [zn, zd] : {std::pair{2u, 8u}, std::pair{3u, 7u}}) {
                std::string path = fixture_dir + "/oracle_z_n" +
                                   std::to_string(zn) + "_d" +
                                   std::to_string(zd) + ".json";
                std::cerr << "generating " << path << "\n";
                write_json(oracle_z_json(zn, zd), path);
            }
            return kExitPass;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
