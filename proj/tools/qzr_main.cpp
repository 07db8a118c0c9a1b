#include "qzr/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

namespace {

std::string read_text_file(const std::string& path) {
    std::ifstream ifs(path, std::ios::binary);
    if (!ifs) throw std::invalid_argument("cannot read config file: " + path);
    std::ostringstream os;
    os << ifs.rdbuf();
    return os.str();
}

void parse_j1(const std::string& s, qzr::RunManifest& m) {
    if (s.size() != 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1'))
        throw std::invalid_argument("--j1 expects two bits, e.g. 11");
    m.threshold_i = s[0] - '0';
    m.threshold_j = s[1] - '0';
}

struct SubOptions {
    CLI::Option* config = nullptr;
    CLI::Option* theta = nullptr;
    CLI::Option* j1 = nullptr;
    CLI::Option* n = nullptr;
    CLI::Option* n_max = nullptr;
    CLI::Option* stations = nullptr;
    CLI::Option* outcome = nullptr;
    CLI::Option* fresh_side = nullptr;
    CLI::Option* dump_matrices = nullptr;
    CLI::Option* format = nullptr;
    CLI::Option* out = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum Zeno entanglement-swapping and repeater-chain simulator"};
    app.require_subcommand(1);

    std::string config_path, j1, outcome, fresh_side, format, out;
    double theta = 0.0;
    int fixed_n = 0, n_max = 0, stations = 0;
    bool dump_matrices = false;

    std::map<const CLI::App*, SubOptions> options;

    auto add_subcommand = [&](const char* name, const char* desc, bool with_n, bool chain_flags,
                              bool with_outcome) {
        CLI::App* sub = app.add_subcommand(name, desc);
        SubOptions o;
        o.config = sub->add_option("--config", config_path,
                                   "JSON config file; explicit flags override its values");
        o.theta = sub->add_option("--theta", theta, "rotation angle per iteration, radians");
        o.j1 = sub->add_option("--j1", j1, "threshold projector bits on A2,B2 (e.g. 11)");
        if (with_n) o.n = sub->add_option("--n", fixed_n, "fixed iteration count");
        o.n_max = sub->add_option("--n-max", n_max, "inclusive bound of the best-n search");
        if (with_n) o.n->excludes(o.n_max);
        if (chain_flags) {
            o.stations = sub->add_option("--stations", stations, "number of repeater stations");
            o.fresh_side = sub->add_option("--fresh-side", fresh_side,
                                           "left|right: register side of the fresh Bell pair");
            o.dump_matrices = sub->add_flag("--dump-matrices", dump_matrices,
                                            "also emit each station's 4x4 pair matrix");
        }
        if (with_outcome)
            o.outcome = sub->add_option("--outcome", outcome, "z outcome: 00|01|10|11|best");
        o.format = sub->add_option("--format", format, "csv|json");
        o.out = sub->add_option("--out", out, "output path (stdout when omitted)");
        options[sub] = o;
        return sub;
    };

    add_subcommand("sweep", "negativity and fidelity for every iteration count", false, false,
                   true);
    add_subcommand("chain", "run the repeater chain station by station", true, true, true);
    add_subcommand("oracle", "gate-circuit reference swap and comparison", true, false, false);
    add_subcommand("dump-state", "single swap, full pair matrix as JSON", true, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const CLI::App* sub = app.get_subcommands().front();
    const SubOptions& o = options.at(sub);

    try {
        qzr::RunManifest m;
        m.command = sub->get_name();
        if (m.command == "dump-state") m.format = "json";  // csv has no matrix shape

        if (o.config->count()) qzr::apply_config_json(m, read_text_file(config_path));
        if (o.theta->count()) m.theta = theta;
        if (o.j1->count()) parse_j1(j1, m);
        if (o.n_max->count()) {
            m.n_max = n_max;
            m.fixed_n.reset();
        }
        if (o.n && o.n->count()) m.fixed_n = fixed_n;
        if (o.stations && o.stations->count()) m.stations = stations;
        if (o.outcome && o.outcome->count()) m.outcome = outcome;
        if (o.fresh_side && o.fresh_side->count()) m.fresh_side = fresh_side;
        if (o.dump_matrices && o.dump_matrices->count()) m.dump_matrices = dump_matrices;
        if (o.format->count()) m.format = format;
        if (o.out->count()) m.out = out;

        qzr::run_manifest(m);
        return 0;
    } catch (const qzr::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const qzr::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
}
