#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace phcurv::cli {

inline constexpr const char* kVersion = "1.0.0";
/// Seed used when --seed is absent. Never derived from the clock.
inline constexpr std::uint64_t kDefaultSeed = 20240229;

enum class Command { chi, fvector, index, verify, curvature, classify, sample, epsgraph, embed_curv, experiment };
enum class Format { json, csv };

std::string to_string(Command c);

/// Bad command line: unknown flag, missing input, conflicting modes. Exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help / --version; `text` goes to stdout with exit code 0.
struct HelpRequested {
    std::string text;
};

struct RunConfig {
    Command command = Command::chi;
    std::string graph;      // registry name or file
    std::string coloring;   // coloring JSON
    std::string arcs;       // orientation JSON
    std::string measure;    // measure JSON
    std::string cloud;      // point-cloud CSV
    std::string shape;      // generated point cloud, see io::sample_shape
    std::string experiment; // triangles | irrotational | effective-density
    std::string output;     // report destination; stdout when empty
    std::string plot_data;  // per-vertex / per-trial CSV destination
    std::string save;       // sample: cloud CSV, epsgraph: graph JSON
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::uint64_t> samples; // MC colorings or height directions
    std::uint64_t trials = 1000;
    std::uint64_t instances = 100;
    std::optional<double> epsilon;
    std::optional<std::size_t> max_dim;
    std::uint64_t budget = 0;
    unsigned threads = 1;
    std::size_t n = 0;
    double p = 0;
    bool exact = false;
    bool mc = false;
    bool timing = false;
    Format format = Format::json;
};

/// `args` excludes the program name. Throws UsageError or HelpRequested.
/// The simplex budget comes from --budget, else PHCURV_BUDGET, else the default.
RunConfig parse_args(const std::vector<std::string>& args);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    nlohmann::ordered_json doc;
    /// Per-vertex or per-trial rows; written by emit_plot_data and --format csv.
    Table table;
    bool passed = true;
};

struct RunResult {
    Report report;
    /// 0 success, 2 when a verification failed.
    int exit_code = 0;
};

/// 2 if the report carries a failed verification, else 0.
int exit_code_for(const Report& r);

/// Throws io::InputError, UsageError, BudgetExceeded or std::exception
/// subclasses for invalid input; main_entry maps them to exit code 1.
RunResult run(const RunConfig& cfg);

std::string render_json(const Report& r);
std::string render_csv(const Table& t);

/// Writes the table as CSV; an empty table yields a header-only file.
void emit_plot_data(const Report& r, const std::string& path);

/// Whole tool: parse, run, write outputs. Returns the process exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace phcurv::cli
