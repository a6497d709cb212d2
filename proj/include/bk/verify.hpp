#pragma once

#include "bk/enumerate.hpp"
#include "bk/kempe.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bk {

enum class ClassFilter { All, FourK1Free, FourK1FreeWithApex };
enum class CampaignMode { Exhaustive, Sample };

std::string to_string(ClassFilter f);
std::string to_string(CampaignMode m);

struct CampaignSpec {
    CampaignMode mode = CampaignMode::Exhaustive;
    std::vector<int> n_values{ 10 };
    ClassFilter class_filter = ClassFilter::FourK1Free;
    int min_delta = 9;
    long sample_count = 0;        // sample mode
    std::uint64_t seed = 0;       // sample mode
    double edge_probability = 0.75; // sample mode: density of the base G(n,p)
    int tactic_depth = 4;
    long tactic_max_nodes = 2500;

    // Empty string when valid, else the problem.
    std::string validate() const;

    TacticOptions tactic_options() const { return { tactic_depth, tactic_max_nodes }; }
};

struct GraphRecord {
    std::string graph6;
    int n = 0;
    int max_degree = 0;
    int omega = 0;
    int chi = 0;
    int bound = 0; // max{Delta-1, omega}
    bool four_k1_free = false;
    bool in_hypothesis = false; // 4K1-free and Delta >= min_delta
    bool holds = true;          // chi <= bound

    // bk_color outcome, when run: none | direct | tactic | fallback;
    // "not_run" when the hypothesis does not apply.
    std::string tactic_outcome = "not_run";
    int extensions = 0;
    int ext_direct = 0;
    int ext_tactic = 0;
    int ext_fallback = 0;
    long cascade_nodes = 0;
    int launch_checks = 0;
    int launch_violations = 0;
    bool bk_within_bound = true;

    std::vector<std::vector<std::string>> traces; // per recursion level, on request
    bool has_runtime = false;
    long runtime_us = 0;
};

struct CampaignAggregate {
    long graphs = 0;
    long in_hypothesis = 0;
    long holds_count = 0; // in-hypothesis graphs with chi <= bound
    std::vector<std::string> violations;

    long extension_attempts = 0;
    long extension_direct = 0;
    long extension_tactic = 0;
    long extension_fallback = 0;
    long launch_checks = 0;
    long launch_violations = 0;
    long cascade_nodes = 0;
};

struct VerificationReport {
    CampaignSpec spec;
    std::vector<GraphRecord> records;
    CampaignAggregate aggregate;
};

struct VerifyOptions {
    int jobs = 1;
    bool timing = false; // measured runtimes make reports non-reproducible; opt in
    bool traces = false;
    std::string checkpoint_path; // JSONL sidecar; existing entries are reused
};

// Exact parameters and bound check for one graph; runs bk_color when the
// hypothesis applies (and Delta >= 9). Throws if n exceeds the exact-solver
// scope.
GraphRecord verify_bound(const Graph& g, const CampaignSpec& spec, const VerifyOptions& opts = {});

// Enumerated or sampled sweep per spec; deterministic for a fixed spec
// (sampling included). Verification of distinct graphs is parallel across
// opts.jobs with a deterministic merge.
VerificationReport run_campaign(const CampaignSpec& spec, const VerifyOptions& opts = {});

// Same reporting over externally supplied graphs (files, pipelines).
VerificationReport verify_graphs(const std::vector<Graph>& graphs, const CampaignSpec& spec,
    const VerifyOptions& opts = {});

struct IngestRecord {
    int line_no = 0;
    std::string text;
    std::optional<Graph> graph;
    std::string error; // set when the line failed to parse
};

// One graph6 line per graph; parse failures become diagnostics and the
// stream continues. Lines starting with '>' (header convention) and blank
// lines are skipped.
std::vector<IngestRecord> ingest_graph6_stream(std::istream& in);

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

} // namespace bk
