// hgfam: construct the rank-jump families and machine-check the
// combinatorial claims behind them.

#include "hgfam/family.hpp"
#include "hgfam/groebner.hpp"
#include "hgfam/hypergeometric.hpp"
#include "hgfam/io.hpp"
#include "hgfam/polytope.hpp"
#include "hgfam/semigroup.hpp"
#include "hgfam/smith.hpp"
#include "hgfam/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

std::size_t pair_limit_from_env() {
    if (const char* env = std::getenv("HGFAM_PAIR_LIMIT")) {
        const long long v = std::atoll(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return hgfam::kDefaultPairLimit;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
}

struct Options {
    std::size_t d = 2;
    std::string variant = "product";
    std::string beta0 = "0";
    std::string matrix_file;
    std::string beta_csv;
    std::string depth = "quick";
    std::string format = "text";
    std::string out_path;
};

hgfam::FamilyInstance build_instance(const Options& opt) {
    return hgfam::make_instance(hgfam::variant_from_string(opt.variant), opt.d,
                                hgfam::parse_rational(opt.beta0));
}

hgfam::IntegerMatrix input_matrix(const Options& opt) {
    if (!opt.matrix_file.empty()) return hgfam::load_matrix_file(opt.matrix_file);
    return build_instance(opt).matrix;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"A-hypergeometric rank-jump families: construction and verification"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_matrix) {
        cmd->add_option("--d", opt.d, "rank d of the configuration");
        cmd->add_option("--variant", opt.variant,
                        "plain2|plain3|product|hat|hat-h");
        cmd->add_option("--beta0", opt.beta0, "homogenization parameter beta_0");
        cmd->add_option("--format", opt.format, "text|json");
        cmd->add_option("--out", opt.out_path, "write output to FILE");
        if (with_matrix) {
            cmd->add_option("--matrix", opt.matrix_file, "matrix file (text or json)");
        }
    };

    CLI::App* family = app.add_subcommand("family", "emit a family matrix");
    add_common(family, false);

    CLI::App* verify = app.add_subcommand("verify", "run the claim-verification suite");
    add_common(verify, false);
    verify->add_option("--depth", opt.depth, "quick|full");

    CLI::App* volume = app.add_subcommand("volume", "normalized volume of a matrix");
    add_common(volume, true);

    CLI::App* toric = app.add_subcommand("toric", "toric ideal generators");
    add_common(toric, true);

    CLI::App* hole = app.add_subcommand("hole", "test the hole condition for beta");
    add_common(hole, true);
    hole->add_option("--beta", opt.beta_csv, "comma-separated integer vector")->required();

    CLI::App* table = app.add_subcommand("table", "ratio table over a range of d");
    std::size_t d_min = 2, d_max = 12;
    table->add_option("--d-min", d_min, "smallest d");
    table->add_option("--d-max", d_max, "largest d");
    add_common(table, false);

    CLI::App* render = app.add_subcommand("render", "render the hypergeometric system");
    add_common(render, false);
    std::string render_fmt = "text";
    render->add_option("--system-format", render_fmt, "text|script");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::size_t pair_limit = pair_limit_from_env();
    const bool json = opt.format == "json";

    try {
        if (family->parsed()) {
            const hgfam::FamilyInstance instance = build_instance(opt);
            if (json) {
                write_output(hgfam::instance_to_json(instance).dump(2) + "\n",
                             opt.out_path);
            } else {
                write_output(hgfam::to_text(instance.matrix), opt.out_path);
            }
            return kExitOk;
        }
        if (verify->parsed()) {
            const hgfam::Depth depth =
                opt.depth == "full" ? hgfam::Depth::full : hgfam::Depth::quick;
            const hgfam::VerificationReport report =
                hgfam::verify(build_instance(opt), depth, pair_limit);
            write_output(json ? report.to_json().dump(2) + "\n" : report.to_text(),
                         opt.out_path);
            return report.overall_pass() ? kExitOk : kExitVerificationFailed;
        }
        if (volume->parsed()) {
            const hgfam::IntegerMatrix m = input_matrix(opt);
            const hgfam::Int vol = hgfam::normalized_volume(m);
            const hgfam::Int idx = hgfam::lattice_index(m);
            if (json) {
                nlohmann::ordered_json j;
                j["normalized_volume"] = vol.str();
                j["lattice_index"] = idx.str();
                j["volume_dfact"] = hgfam::Int(vol * idx).str();
                write_output(j.dump(2) + "\n", opt.out_path);
            } else {
                std::ostringstream out;
                out << "normalized volume: " << vol << "\nlattice index: " << idx
                    << "\nd! vol: " << vol * idx << '\n';
                write_output(out.str(), opt.out_path);
            }
            return kExitOk;
        }
        if (toric->parsed()) {
            const hgfam::IntegerMatrix m = input_matrix(opt);
            const auto gens = hgfam::toric_generators(m, pair_limit);
            if (json) {
                nlohmann::ordered_json j = nlohmann::ordered_json::array();
                for (const auto& g : gens) j.push_back(hgfam::to_text(g));
                write_output(j.dump(2) + "\n", opt.out_path);
            } else {
                std::ostringstream out;
                for (const auto& g : gens) out << hgfam::to_text(g) << '\n';
                write_output(out.str(), opt.out_path);
            }
            return kExitOk;
        }
        if (hole->parsed()) {
            const hgfam::IntegerMatrix m = input_matrix(opt);
            hgfam::GradedSemigroup sg(m);
            const bool is_hole = sg.is_hole(hgfam::parse_int_csv(opt.beta_csv));
            if (json) {
                write_output(nlohmann::json{{"hole", is_hole}}.dump(2) + "\n",
                             opt.out_path);
            } else {
                write_output(std::string("hole: ") + (is_hole ? "true" : "false") + "\n",
                             opt.out_path);
            }
            return kExitOk;
        }
        if (table->parsed()) {
            const auto rows = hgfam::ratio_table(
                d_min, d_max, hgfam::variant_from_string(opt.variant));
            write_output(json ? hgfam::ratio_table_json(rows).dump(2) + "\n"
                              : hgfam::ratio_table_text(rows),
                         opt.out_path);
            return kExitOk;
        }
        if (render->parsed()) {
            const hgfam::FamilyInstance instance = build_instance(opt);
            const hgfam::HypergeometricSystem sys =
                hgfam::assemble_system(instance.matrix, instance.parameter, pair_limit);
            const hgfam::RenderFormat fmt = render_fmt == "script"
                                                ? hgfam::RenderFormat::script
                                                : hgfam::RenderFormat::text;
            write_output(hgfam::render_system(sys, fmt), opt.out_path);
            return kExitOk;
        }
    } catch (const hgfam::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
