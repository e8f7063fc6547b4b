#pragma once

// Staged, cached experiment runner behind the ddrom command-line tool.

#include "ddrom/closure.hpp"
#include "ddrom/galerkin.hpp"
#include "ddrom/neural.hpp"
#include "ddrom/rom.hpp"
#include "ddrom/snapshots.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ddrom {

enum class CaseKind { taylor_green, synthetic_wake, external };
const char* to_string(CaseKind kind);

/// One learned mapping (G: inputs -> g, M: inputs -> tau).
struct NetworkSpec {
    /// kind plus hidden layout; input and output widths are filled in from the data.
    nlohmann::json architecture = {{"kind", "mlp"}, {"hidden", {20, 20, 20}}, {"activation", "relu"}};
    InputSelection inputs;
    nn::TrainConfig train;

    /// Complete architecture for make_network.
    nlohmann::json concrete(int input_width, int output_width) const;
};

/// Variants solved online: standard | physics | purely | hybrid | exact_hybrid | ansatz.
bool is_known_variant(const std::string& name);

struct RunConfig {
    CaseKind kind = CaseKind::synthetic_wake;
    std::string output_dir = "run";
    int nx = 65, ny = 33;
    double lx = 2.0, ly = 1.0;
    ParameterGrid params;
    WakeConfig wake;
    SmagorinskyConfig smagorinsky;
    std::string external_train, external_test;  ///< snapshot files for the external case
    int r = 1, q = 1, nt = 0, d = 1, h = 1;
    BoundaryConfig boundary;
    SolverConfig solver;  ///< nu, dt and t_end are set per run
    CorrectionFlags corrections;
    NetworkSpec g_net, m_net;
    int ensemble_size = 1;
    std::uint64_t seed = 0;
    bool literal_band = false;
    std::vector<std::string> variants{"standard"};
    std::vector<double> penalty_sweep;

    nlohmann::json source;  ///< the parsed document, used for stage hashing

    /// Throws ConfigError naming the offending field.
    void validate() const;
    bool wants(const std::string& variant) const;
    /// Relative paths are resolved against `base_dir`.
    static RunConfig from_json(const nlohmann::json& j, const std::string& base_dir = ".");
    static RunConfig load(const std::string& path);
};

/// Ordered stage names: generate, pod, assemble, corrections, train, solve, evaluate, report.
const std::vector<std::string>& stage_names();

struct StageRecord {
    std::string name;
    std::string status;  ///< complete | reused | failed | skipped
    std::string hash;
    std::vector<std::pair<std::string, std::string>> artifacts;  ///< relative path, sha256
    std::string error;
};

struct Manifest {
    std::vector<StageRecord> stages;
    nlohmann::json info;  ///< versions, seeds, config hash

    bool ok() const;
    const StageRecord* find(const std::string& name) const;
    nlohmann::json to_json() const;
    static Manifest from_json(const nlohmann::json& j);
};

struct PipelineOptions {
    /// Last stage to run; earlier stages run or are reused first.
    std::string until = "report";
    bool force = false;
    bool verbose = false;
};

/// Runs the stages in order, reusing artifacts whose stage hash and file
/// hashes match the previous manifest. Writes <output_dir>/manifest.json.
Manifest run_pipeline(const RunConfig& config, const PipelineOptions& options = {});

std::string sha256_hex(const std::string& data);
std::string sha256_file(const std::string& path);

/// Summary produced by the report stage, read back for checks.
nlohmann::json read_summary(const RunConfig& config);

}  // namespace ddrom
