#pragma once

#include "qzr/chain.hpp"

#include <stdexcept>
#include <string>

namespace qzr {

// Thrown on filesystem failures; the CLI maps it to exit code 3.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Fully resolved description of one run. Every run serializes this next to
// its results (embedded in JSON output, sidecar file for CSV) so results are
// reproducible from the artifact alone.
struct RunManifest {
    std::string command = "sweep";  // sweep | chain | oracle | dump-state
    double theta = kDefaultTheta;
    int threshold_i = 1;  // j1 projector bits
    int threshold_j = 1;
    std::optional<int> fixed_n;     // exact iteration count; empty = search
    int n_max = 100;
    int stations = 9;
    std::string outcome = "best";    // best | 00 | 01 | 10 | 11
    std::string fresh_side = "left"; // left | right
    bool dump_matrices = false;
    std::string format = "csv";  // csv | json
    std::string out;             // output path; empty = stdout

    friend bool operator==(const RunManifest&, const RunManifest&) = default;

    void validate() const;  // throws std::invalid_argument
    SwapConfig swap_config() const;
    ChainConfig chain_config() const;
};

// Lossless JSON round-trip for manifests.
std::string manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const std::string& text);

// Overlay a partial JSON config (any subset of the manifest's config keys
// plus format/out) onto m. Unknown keys are rejected.
void apply_config_json(RunManifest& m, const std::string& text);

// Execute the run. Results go to m.out (stdout when empty); a one-line
// summary goes to stdout (stderr when results occupy stdout).
void run_manifest(const RunManifest& m);

}  // namespace qzr
