#include "bk/verify.hpp"

#include "bk/graph6.hpp"
#include "bk/structure.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace bk {

using nlohmann::ordered_json;

std::string to_string(ClassFilter f)
{
    switch (f) {
    case ClassFilter::All:
        return "all";
    case ClassFilter::FourK1Free:
        return "4k1_free";
    case ClassFilter::FourK1FreeWithApex:
        return "4k1_free_with_apex";
    }
    return {};
}

std::string to_string(CampaignMode m)
{
    return m == CampaignMode::Exhaustive ? "exhaustive" : "sample";
}

std::string CampaignSpec::validate() const
{
    if (n_values.empty())
        return "no vertex counts given";
    for (int n : n_values) {
        if (n < 0)
            return "negative vertex count";
        if (n > kChromaticScope)
            return "n=" + std::to_string(n) + " exceeds exact-solver scope "
                + std::to_string(kChromaticScope);
        if (mode == CampaignMode::Exhaustive) {
            const int enum_n = class_filter == ClassFilter::FourK1FreeWithApex ? n - 1 : n;
            if (enum_n > kEnumerationScope)
                return "n=" + std::to_string(n) + " exceeds enumeration scope (max "
                    + std::to_string(class_filter == ClassFilter::FourK1FreeWithApex
                            ? kEnumerationScope + 1
                            : kEnumerationScope)
                    + " for this class)";
            if (class_filter == ClassFilter::FourK1FreeWithApex && n < 1)
                return "apex campaign needs n >= 1";
        }
    }
    if (mode == CampaignMode::Sample) {
        if (sample_count < 1)
            return "sample count must be >= 1";
        if (!(edge_probability > 0.0 && edge_probability < 1.0))
            return "edge probability must be in (0,1)";
    }
    if (min_delta < 0)
        return "min_delta must be >= 0";
    if (tactic_depth < 1)
        return "tactic depth must be >= 1";
    if (tactic_max_nodes < 1)
        return "tactic node budget must be >= 1";
    return {};
}

GraphRecord verify_bound(const Graph& g, const CampaignSpec& spec, const VerifyOptions& opts)
{
    const auto t0 = std::chrono::steady_clock::now();

    GraphRecord r;
    r.graph6 = to_graph6(g);
    r.n = g.vertex_count();
    r.max_degree = g.max_degree();
    r.omega = clique_number(g).first;
    r.chi = chromatic_number(g).first;
    r.bound = std::max(r.max_degree - 1, r.omega);
    r.four_k1_free = is_4k1_free(g);
    r.in_hypothesis = r.four_k1_free && r.max_degree >= spec.min_delta;
    r.holds = r.chi <= r.bound;

    if (r.in_hypothesis && r.max_degree >= 9) {
        const BkColorResult bk = bk_color(g, spec.tactic_options());
        r.extensions = bk.stats.extensions;
        r.ext_direct = bk.stats.direct;
        r.ext_tactic = bk.stats.tactic;
        r.ext_fallback = bk.stats.fallback;
        r.cascade_nodes = bk.stats.cascade_nodes;
        r.launch_checks = bk.stats.launch_checks;
        r.launch_violations = bk.stats.launch_violations;
        r.bk_within_bound = bk.within_bound;
        if (bk.stats.fallback > 0)
            r.tactic_outcome = "fallback";
        else if (bk.stats.tactic > 0)
            r.tactic_outcome = "tactic";
        else if (bk.stats.extensions > 0)
            r.tactic_outcome = "direct";
        else
            r.tactic_outcome = "none";
        if (opts.traces)
            for (const auto& lt : bk.traces) {
                std::vector<std::string> lines = lt.trace.to_lines();
                lines.insert(lines.begin(),
                    "level center=" + std::to_string(lt.center)
                        + " k=" + std::to_string(lt.palette));
                r.traces.push_back(std::move(lines));
            }
    }

    if (opts.timing) {
        r.has_runtime = true;
        r.runtime_us = std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - t0)
                           .count();
    }
    return r;
}

namespace {

    ordered_json record_to_json(const GraphRecord& r)
    {
        ordered_json j;
        j["graph6"] = r.graph6;
        j["n"] = r.n;
        j["max_degree"] = r.max_degree;
        j["omega"] = r.omega;
        j["chi"] = r.chi;
        j["bound"] = r.bound;
        j["4k1_free"] = r.four_k1_free;
        j["in_hypothesis"] = r.in_hypothesis;
        j["holds"] = r.holds;
        j["tactic_outcome"] = r.tactic_outcome;
        if (r.tactic_outcome != "not_run") {
            j["extensions"] = r.extensions;
            j["extension_direct"] = r.ext_direct;
            j["extension_tactic"] = r.ext_tactic;
            j["extension_fallback"] = r.ext_fallback;
            j["cascade_nodes"] = r.cascade_nodes;
            j["launch_checks"] = r.launch_checks;
            j["launch_violations"] = r.launch_violations;
            j["bk_within_bound"] = r.bk_within_bound;
        }
        if (!r.traces.empty())
            j["traces"] = r.traces;
        if (r.has_runtime)
            j["runtime_us"] = r.runtime_us;
        return j;
    }

    GraphRecord record_from_json(const ordered_json& j)
    {
        GraphRecord r;
        r.graph6 = j.at("graph6").get<std::string>();
        r.n = j.at("n").get<int>();
        r.max_degree = j.at("max_degree").get<int>();
        r.omega = j.at("omega").get<int>();
        r.chi = j.at("chi").get<int>();
        r.bound = j.at("bound").get<int>();
        r.four_k1_free = j.at("4k1_free").get<bool>();
        r.in_hypothesis = j.at("in_hypothesis").get<bool>();
        r.holds = j.at("holds").get<bool>();
        r.tactic_outcome = j.at("tactic_outcome").get<std::string>();
        if (j.contains("extensions")) {
            r.extensions = j.at("extensions").get<int>();
            r.ext_direct = j.at("extension_direct").get<int>();
            r.ext_tactic = j.at("extension_tactic").get<int>();
            r.ext_fallback = j.at("extension_fallback").get<int>();
            r.cascade_nodes = j.at("cascade_nodes").get<long>();
            r.launch_checks = j.at("launch_checks").get<int>();
            r.launch_violations = j.at("launch_violations").get<int>();
            r.bk_within_bound = j.at("bk_within_bound").get<bool>();
        }
        if (j.contains("traces"))
            r.traces = j.at("traces").get<std::vector<std::vector<std::string>>>();
        if (j.contains("runtime_us")) {
            r.has_runtime = true;
            r.runtime_us = j.at("runtime_us").get<long>();
        }
        return r;
    }

    ordered_json spec_to_json(const CampaignSpec& s)
    {
        ordered_json j;
        j["mode"] = to_string(s.mode);
        j["n"] = s.n_values;
        j["class_filter"] = to_string(s.class_filter);
        j["min_delta"] = s.min_delta;
        if (s.mode == CampaignMode::Sample) {
            j["sample_count"] = s.sample_count;
            j["seed"] = s.seed;
            j["edge_probability"] = s.edge_probability;
        }
        j["tactic_depth"] = s.tactic_depth;
        j["tactic_max_nodes"] = s.tactic_max_nodes;
        return j;
    }

    void aggregate_record(CampaignAggregate& a, const GraphRecord& r)
    {
        ++a.graphs;
        if (r.in_hypothesis) {
            ++a.in_hypothesis;
            if (r.holds)
                ++a.holds_count;
            else
                a.violations.push_back(r.graph6);
        }
        a.extension_attempts += r.extensions;
        a.extension_direct += r.ext_direct;
        a.extension_tactic += r.ext_tactic;
        a.extension_fallback += r.ext_fallback;
        a.launch_checks += r.launch_checks;
        a.launch_violations += r.launch_violations;
        a.cascade_nodes += r.cascade_nodes;
    }

    // Deterministic parallel map: fixed input order, slot-indexed results.
    void verify_batch(const std::vector<std::string>& batch, const CampaignSpec& spec,
        const VerifyOptions& opts, std::vector<GraphRecord>& out,
        std::unordered_map<std::string, GraphRecord>* cache, std::ofstream* checkpoint)
    {
        const std::size_t base = out.size();
        out.resize(base + batch.size());
        std::vector<char> computed(batch.size(), 0);

        std::atomic<std::size_t> next{ 0 };
        const int jobs = std::max(1, opts.jobs);
        auto worker = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= batch.size())
                    return;
                if (cache) {
                    auto it = cache->find(batch[i]);
                    if (it != cache->end()) {
                        out[base + i] = it->second;
                        continue;
                    }
                }
                out[base + i] = verify_bound(parse_graph6(batch[i]), spec, opts);
                computed[i] = 1;
            }
        };
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(jobs);
            for (int t = 0; t < jobs; ++t)
                pool.emplace_back(worker);
            for (auto& t : pool)
                t.join();
        }

        if (checkpoint) {
            for (std::size_t i = 0; i < batch.size(); ++i)
                if (computed[i])
                    *checkpoint << record_to_json(out[base + i]).dump() << '\n';
            checkpoint->flush();
        }
    }

    // 53-bit threshold comparison keeps sampling independent of library
    // distribution internals.
    bool coin(std::mt19937_64& rng, std::uint64_t threshold53)
    {
        return (rng() >> 11) < threshold53;
    }

    std::vector<std::string> sample_graphs(int n, const CampaignSpec& spec)
    {
        std::mt19937_64 rng(spec.seed * 1000003ull + static_cast<std::uint64_t>(n));
        const auto threshold53 = static_cast<std::uint64_t>(
            std::llround(spec.edge_probability * 9007199254740992.0)); // * 2^53
        std::vector<std::string> out;
        out.reserve(spec.sample_count);
        while (static_cast<long>(out.size()) < spec.sample_count) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (coin(rng, threshold53))
                        edges.emplace_back(i, j);
            const Graph g = Graph::from_edges(n, edges);
            if (g.max_degree() >= spec.min_delta && is_4k1_free(g))
                out.push_back(to_graph6(g));
        }
        return out;
    }

} // namespace

VerificationReport run_campaign(const CampaignSpec& spec, const VerifyOptions& opts)
{
    const std::string problem = spec.validate();
    if (!problem.empty())
        throw std::invalid_argument("invalid campaign spec: " + problem);

    VerificationReport report;
    report.spec = spec;

    // Resume data: graph6 -> finished record.
    std::unordered_map<std::string, GraphRecord> cache;
    std::ofstream checkpoint;
    if (!opts.checkpoint_path.empty()) {
        std::ifstream in(opts.checkpoint_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            const auto j = ordered_json::parse(line, nullptr, false);
            if (j.is_discarded())
                continue;
            GraphRecord r = record_from_json(j);
            cache.emplace(r.graph6, std::move(r));
        }
        in.close();
        checkpoint.open(opts.checkpoint_path, std::ios::app);
        if (!checkpoint)
            throw std::runtime_error("cannot open checkpoint file: " + opts.checkpoint_path);
    }
    std::ofstream* cp = opts.checkpoint_path.empty() ? nullptr : &checkpoint;
    auto* cachep = opts.checkpoint_path.empty() ? nullptr : &cache;

    constexpr std::size_t kBatch = 4096;
    std::vector<std::string> batch;
    batch.reserve(kBatch);
    const auto flush_batch = [&] {
        if (batch.empty())
            return;
        verify_batch(batch, spec, opts, report.records, cachep, cp);
        batch.clear();
    };

    for (int n : spec.n_values) {
        if (spec.mode == CampaignMode::Sample) {
            for (std::string& s : sample_graphs(n, spec)) {
                batch.push_back(std::move(s));
                if (batch.size() == kBatch)
                    flush_batch();
            }
        } else {
            const bool apex = spec.class_filter == ClassFilter::FourK1FreeWithApex;
            const int enum_n = apex ? n - 1 : n;
            const GraphPredicate prune = spec.class_filter == ClassFilter::All
                ? GraphPredicate{}
                : alpha_at_most(3);
            enumerate_graphs(enum_n, prune, [&](const Graph& h) {
                batch.push_back(to_graph6(apex ? add_apex(h) : h));
                if (batch.size() == kBatch)
                    flush_batch();
            });
        }
        flush_batch();
    }

    for (const GraphRecord& r : report.records)
        aggregate_record(report.aggregate, r);
    return report;
}

VerificationReport verify_graphs(const std::vector<Graph>& graphs, const CampaignSpec& spec,
    const VerifyOptions& opts)
{
    VerificationReport report;
    report.spec = spec;
    std::vector<std::string> batch;
    batch.reserve(graphs.size());
    for (const Graph& g : graphs)
        batch.push_back(to_graph6(g));
    verify_batch(batch, spec, opts, report.records, nullptr, nullptr);
    for (const GraphRecord& r : report.records)
        aggregate_record(report.aggregate, r);
    return report;
}

std::vector<IngestRecord> ingest_graph6_stream(std::istream& in)
{
    std::vector<IngestRecord> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '>')
            continue;
        IngestRecord rec;
        rec.line_no = line_no;
        rec.text = line;
        try {
            rec.graph = parse_graph6(line);
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::string report_to_json(const VerificationReport& report)
{
    ordered_json j;
    j["spec"] = spec_to_json(report.spec);
    ordered_json recs = ordered_json::array();
    for (const GraphRecord& r : report.records)
        recs.push_back(record_to_json(r));
    j["records"] = std::move(recs);

    const CampaignAggregate& a = report.aggregate;
    ordered_json agg;
    agg["graphs"] = a.graphs;
    agg["in_hypothesis"] = a.in_hypothesis;
    agg["holds"] = a.holds_count;
    agg["violations"] = a.violations;
    agg["extension_attempts"] = a.extension_attempts;
    agg["extension_direct"] = a.extension_direct;
    agg["extension_tactic"] = a.extension_tactic;
    agg["extension_fallback"] = a.extension_fallback;
    if (a.extension_attempts > 0)
        agg["tactic_success_rate"]
            = static_cast<double>(a.extension_attempts - a.extension_fallback)
            / static_cast<double>(a.extension_attempts);
    else
        agg["tactic_success_rate"] = nullptr;
    agg["launch_checks"] = a.launch_checks;
    agg["launch_violations"] = a.launch_violations;
    agg["cascade_nodes"] = a.cascade_nodes;
    j["aggregate"] = std::move(agg);
    return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report)
{
    const CampaignSpec& s = report.spec;
    const CampaignAggregate& a = report.aggregate;
    std::ostringstream out;
    out << "campaign mode=" << to_string(s.mode) << " class=" << to_string(s.class_filter)
        << " n=";
    for (std::size_t i = 0; i < s.n_values.size(); ++i)
        out << (i ? "," : "") << s.n_values[i];
    out << " min_delta=" << s.min_delta;
    if (s.mode == CampaignMode::Sample)
        out << " sample=" << s.sample_count << " seed=" << s.seed
            << " density=" << s.edge_probability;
    out << " tactic_depth=" << s.tactic_depth << "\n";

    out << "graphs total=" << a.graphs << " in_hypothesis=" << a.in_hypothesis
        << " holds=" << a.holds_count << " violations=" << a.violations.size() << "\n";
    out << "extensions attempts=" << a.extension_attempts << " direct=" << a.extension_direct
        << " tactic=" << a.extension_tactic << " fallback=" << a.extension_fallback;
    if (a.extension_attempts > 0) {
        const double rate = static_cast<double>(a.extension_attempts - a.extension_fallback)
            / static_cast<double>(a.extension_attempts);
        out << " tactic_success_rate=" << rate;
    }
    out << "\n";
    out << "launch checks=" << a.launch_checks << " violations=" << a.launch_violations << "\n";
    if (a.violations.empty()) {
        out << "VERDICT: bound holds on every in-hypothesis graph\n";
    } else {
        out << "VERDICT: BOUND VIOLATED on " << a.violations.size() << " graph(s)\n";
        for (const std::string& g6 : a.violations)
            out << "  violation " << g6 << "\n";
    }
    return out.str();
}

} // namespace bk
