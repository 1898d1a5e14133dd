// domcount: exact counting of domination-type structures, legal neighborhood
// colorings, and existence homomorphisms, with exact bound checks, entropy
// reports, and exhaustive sweeps. Emits one JSON record per line.

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domcount/bounds.hpp"
#include "domcount/catalog.hpp"
#include "domcount/conditions.hpp"
#include "domcount/counting.hpp"
#include "domcount/exact.hpp"
#include "domcount/graph.hpp"

using nlohmann::json;
using namespace domcount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapExceeded = 3;

struct RunConfig {
    std::string command;

    // graph sources (exactly one for graph commands)
    std::string family;
    std::string graph6;
    std::string catalog;
    bool strict = false;

    std::string structure;  // ds | sds | minimal-ds | mis | is
    std::string condition;  // dominating | proper | rainbow | file:PATH
    int colors = 2;
    std::string weights;
    std::string mode = "closed";
    std::string mu;
    std::string image;  // hind | eq:Q | kq:Q | file:PATH
    std::string check;

    int trees = 0;
    int max_n = 0;
    int max_r = 4;

    std::optional<int> cap_bits;
    int workers = 1;
    std::string out;
};

int coloring_cap(const RunConfig& c) { return c.cap_bits.value_or(kDefaultColoringCapBits); }
int subset_cap(const RunConfig& c) { return c.cap_bits.value_or(kDefaultSubsetCapBits); }

ColoringCondition parse_condition(const RunConfig& cfg) {
    const std::string& spec = cfg.condition;
    if (spec == "dominating") return ColoringCondition::dominating();
    if (spec == "proper") return ColoringCondition::proper(cfg.colors);
    if (spec == "rainbow") return ColoringCondition::rainbow(cfg.colors);
    if (spec.rfind("file:", 0) == 0)
        return ColoringCondition::from_json_file(spec.substr(5));
    throw std::invalid_argument("unknown condition '" + spec +
                                "' (expected dominating|proper|rainbow|file:PATH)");
}

int condition_colors(const RunConfig& cfg, const ColoringCondition& cond) {
    if (cfg.condition == "dominating" && cfg.colors != 2 && cfg.colors != 0)
        throw std::invalid_argument("the dominating condition uses exactly 2 colors");
    return cond.colors();
}

ImageGraph parse_image(const std::string& spec) {
    if (spec == "hind") return ImageGraph::h_ind();
    if (spec.rfind("eq:", 0) == 0) return ImageGraph::loops(std::stoi(spec.substr(3)));
    if (spec.rfind("kq:", 0) == 0) return ImageGraph::complete(std::stoi(spec.substr(3)));
    if (spec.rfind("file:", 0) == 0) return ImageGraph::from_json_file(spec.substr(5));
    throw std::invalid_argument("unknown image '" + spec +
                                "' (expected hind|eq:Q|kq:Q|file:PATH)");
}

std::optional<Activation> parse_weights(const RunConfig& cfg) {
    if (cfg.weights.empty()) return std::nullopt;
    return Activation::parse(cfg.weights);
}

struct Input {
    Graph graph;
    int line_number;  // 0 when not from a catalog
};

std::vector<Input> gather_inputs(const RunConfig& cfg) {
    int sources = !cfg.family.empty() + !cfg.graph6.empty() + !cfg.catalog.empty();
    if (sources != 1)
        throw std::invalid_argument("give exactly one of --family, --graph6, --catalog");
    std::vector<Input> inputs;
    if (!cfg.family.empty()) {
        inputs.push_back({make_family(cfg.family), 0});
    } else if (!cfg.graph6.empty()) {
        inputs.push_back({parse_graph6(cfg.graph6), 0});
    } else {
        std::vector<CatalogIssue> issues;
        for (auto& entry : load_catalog_file(cfg.catalog, cfg.strict, &issues))
            inputs.push_back({std::move(entry.graph), entry.line_number});
        for (const auto& issue : issues)
            std::cerr << "warning: " << cfg.catalog << ":" << issue.line_number << ": "
                      << issue.message << " (skipped)\n";
    }
    return inputs;
}

json base_record(const RunConfig& cfg, const Input& in) {
    json rec;
    rec["command"] = cfg.command;
    rec["graph6"] = write_graph6(in.graph);
    rec["n"] = in.graph.order();
    if (in.line_number > 0) rec["line"] = in.line_number;
    return rec;
}

json bound_record(const RunConfig& cfg, const Input& in, const BoundReport& r) {
    json rec = base_record(cfg, in);
    rec["check"] = r.name;
    rec["verdict"] = to_string(r.verdict);
    if (r.verdict != Verdict::not_applicable) {
        rec["lhs_base"] = to_decimal(r.lhs_base);
        rec["lhs_exp"] = r.lhs_exp;
        rec["rhs_base"] = to_decimal(r.rhs_base);
        rec["rhs_exp"] = r.rhs_exp;
        if (r.exact()) {
            rec["lhs_value"] = to_decimal(r.lhs_value);
            rec["rhs_value"] = to_decimal(r.rhs_value);
        }
    }
    if (!r.note.empty()) rec["note"] = r.note;
    return rec;
}

// One JSON line per report; also reports whether any verdict failed.
struct InstanceResult {
    std::string lines;
    bool failed = false;
};

InstanceResult run_count(const RunConfig& cfg, const Input& in) {
    json rec = base_record(cfg, in);
    const Graph& g = in.graph;
    if (!cfg.structure.empty()) {
        rec["structure"] = cfg.structure;
        BigCount value;
        if (cfg.structure == "ds")
            value = count_dominating_sets(g, false, subset_cap(cfg));
        else if (cfg.structure == "sds")
            value = count_dominating_sets(g, true, subset_cap(cfg));
        else if (cfg.structure == "minimal-ds")
            value = count_minimal_dominating_sets(g, subset_cap(cfg));
        else if (cfg.structure == "mis")
            value = count_maximal_independent_sets(g, subset_cap(cfg));
        else if (cfg.structure == "is")
            value = count_independent_sets(g, subset_cap(cfg));
        else
            throw std::invalid_argument("unknown structure '" + cfg.structure + "'");
        rec["value"] = to_decimal(value);
    } else if (!cfg.condition.empty()) {
        ColoringCondition cond = parse_condition(cfg);
        bool closed = cfg.mode == "closed";
        if (!closed && cfg.mode != "open")
            throw std::invalid_argument("mode must be open or closed");
        rec["condition"] = cond.describe();
        rec["mode"] = cfg.mode;
        auto lambda = parse_weights(cfg);
        if (lambda) {
            rec["weights"] = cfg.weights;
            rec["value"] = to_decimal(
                count_legal_colorings_weighted(g, cond, *lambda, closed, coloring_cap(cfg)));
        } else {
            rec["value"] = to_decimal(count_legal_colorings(g, condition_colors(cfg, cond), cond,
                                                            closed, coloring_cap(cfg)));
        }
    } else {
        throw std::invalid_argument("count needs --structure or --condition");
    }
    return {rec.dump(), false};
}

InstanceResult run_poly(const RunConfig& cfg, const Input& in) {
    json rec = base_record(cfg, in);
    bool strong = cfg.structure == "sds";
    if (!strong && !cfg.structure.empty() && cfg.structure != "ds")
        throw std::invalid_argument("poly supports --structure ds or sds");
    rec["structure"] = strong ? "sds" : "ds";
    Polynomial p = dominating_polynomial(in.graph, strong, subset_cap(cfg));
    json coeffs = json::array();
    for (const auto& c : p.coeff) coeffs.push_back(to_decimal(c));
    rec["coefficients"] = coeffs;
    if (!cfg.mu.empty()) {
        BigRational mu = parse_rational(cfg.mu);
        rec["mu"] = cfg.mu;
        rec["value"] = to_decimal(p.eval(mu));
    }
    return {rec.dump(), false};
}

InstanceResult run_xhom(const RunConfig& cfg, const Input& in) {
    if (cfg.image.empty()) throw std::invalid_argument("xhom needs --image");
    json rec = base_record(cfg, in);
    rec["image"] = cfg.image;
    rec["value"] = to_decimal(xhom_count(in.graph, parse_image(cfg.image), coloring_cap(cfg)));
    return {rec.dump(), false};
}

InstanceResult run_bound_check(const RunConfig& cfg, const Input& in) {
    std::vector<BoundReport> reports;
    const Graph& g = in.graph;
    const std::string& check = cfg.check.empty() ? std::string("ds") : cfg.check;
    if (check == "ds") {
        reports.push_back(check_ds_bound(g));
    } else if (check == "legal") {
        if (cfg.condition.empty()) throw std::invalid_argument("legal check needs --condition");
        ColoringCondition cond = parse_condition(cfg);
        auto lambda = parse_weights(cfg);
        auto [open, closed] =
            check_legal_bounds(g, condition_colors(cfg, cond), cond,
                               lambda ? &*lambda : nullptr);
        reports.push_back(open);
        reports.push_back(closed);
    } else if (check == "poly") {
        BigRational mu = cfg.mu.empty() ? BigRational(1) : parse_rational(cfg.mu);
        auto [dom, strong] = check_polynomial_bounds(g, mu);
        reports.push_back(dom);
        reports.push_back(strong);
    } else if (check == "prorain") {
        for (auto& r : check_prorain_bounds(g, cfg.colors)) reports.push_back(r);
    } else if (check == "background") {
        std::optional<ImageGraph> image;
        if (!cfg.image.empty()) image = parse_image(cfg.image);
        auto lambda = parse_weights(cfg);
        for (auto& r : check_background_bounds(g, image ? &*image : nullptr,
                                               lambda ? &*lambda : nullptr))
            reports.push_back(r);
    } else if (check == "cycle-extremal") {
        reports.push_back(cycle_extremal_check(g));
    } else {
        throw std::invalid_argument(
            "unknown check '" + check +
            "' (expected ds|legal|poly|prorain|background|cycle-extremal)");
    }

    InstanceResult result;
    for (size_t i = 0; i < reports.size(); ++i) {
        if (i) result.lines += '\n';
        result.lines += bound_record(cfg, in, reports[i]).dump();
        result.failed = result.failed || reports[i].failed();
    }
    return result;
}

InstanceResult run_entropy(const RunConfig& cfg, const Input& in) {
    json rec = base_record(cfg, in);
    EntropyReport rep;
    if (!cfg.condition.empty()) {
        ColoringCondition cond = parse_condition(cfg);
        bool closed = cfg.mode == "closed";
        rep = shearer_report(in.graph, condition_colors(cfg, cond), cond, closed,
                             coloring_cap(cfg));
        rec["condition"] = cond.describe();
        rec["mode"] = cfg.mode;
    } else {
        std::string structure = cfg.structure.empty() ? std::string("ds") : cfg.structure;
        if (structure == "ds")
            rep = shearer_report(in.graph, Structure::dominating, coloring_cap(cfg));
        else if (structure == "sds")
            rep = shearer_report(in.graph, Structure::strong_dominating, coloring_cap(cfg));
        else
            throw std::invalid_argument("entropy supports --structure ds or sds");
        rec["structure"] = structure;
    }
    rec["family_size"] = to_decimal(rep.family_size);
    rec["k"] = rep.k;
    rec["total_entropy"] = rep.total_entropy;
    rec["shearer_rhs"] = rep.shearer_rhs;
    rec["slack"] = rep.slack;
    rec["projection_entropies"] = rep.projection_entropies;
    json cover = json::array();
    for (VertexSet s : rep.cover) {
        json members = json::array();
        for (VertexSet rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            members.push_back(v);
        }
        cover.push_back(members);
    }
    rec["cover"] = cover;
    return {rec.dump(), false};
}

int run_sweep(const RunConfig& cfg, std::ostream& out) {
    std::string check = cfg.check;
    if (check.empty() && cfg.trees > 0) check = "tree-extremal";
    if (check.empty()) throw std::invalid_argument("sweep needs --check");

    SweepReport rep;
    json params;
    if (check == "tree-extremal") {
        int n = cfg.trees > 0 ? cfg.trees : cfg.max_n;
        if (n < 2) throw std::invalid_argument("tree sweep needs --trees N (n >= 2)");
        rep = tree_extremal_sweep(n, std::max(n, 9));
        params["n"] = n;
    } else if (check == "ds-bound") {
        int n = cfg.max_n > 0 ? cfg.max_n : 8;
        rep = sweep_ds_bound(n, cfg.max_r);
        params["max_n"] = n;
        params["max_r"] = cfg.max_r;
    } else if (check == "legal-bounds") {
        int n = cfg.max_n > 0 ? cfg.max_n : 12;
        rep = sweep_legal_two_regular(n);
        params["max_n"] = n;
    } else if (check == "moon-moser") {
        int n = cfg.max_n > 0 ? cfg.max_n : 6;
        rep = sweep_moon_moser(n);
        params["max_n"] = n;
    } else if (check == "fomin") {
        int n = cfg.max_n > 0 ? cfg.max_n : 6;
        rep = sweep_fomin(n);
        params["max_n"] = n;
    } else if (check == "shearer") {
        int n = cfg.max_n > 0 ? cfg.max_n : 10;
        rep = sweep_shearer_two_regular(n);
        params["max_n"] = n;
    } else if (check == "cycle-extremal") {
        int n = cfg.max_n > 0 ? cfg.max_n : 18;
        rep = sweep_cycle_unions(n);
        params["max_n"] = n;
    } else {
        throw std::invalid_argument("unknown sweep check '" + check + "'");
    }

    json rec;
    rec["command"] = "sweep";
    rec["check"] = rep.name;
    rec["params"] = params;
    rec["instances"] = rep.instances;
    rec["violations"] = rep.violations;
    rec["equalities"] = rep.equalities;
    if (rep.spot_checks > 0) rec["spot_checks"] = rep.spot_checks;
    rec["characterization_ok"] = rep.characterization_ok;
    if (std::isfinite(rep.min_margin) && rep.min_margin != 0.0)
        rec["min_margin"] = rep.min_margin;
    if (!rep.note.empty()) rec["note"] = rep.note;
    out << rec.dump() << '\n';
    return rep.ok() ? kExitOk : kExitViolation;
}

int run_graph_command(const RunConfig& cfg, std::ostream& out) {
    auto inputs = gather_inputs(cfg);
    InstanceResult (*process)(const RunConfig&, const Input&) = nullptr;
    if (cfg.command == "count")
        process = run_count;
    else if (cfg.command == "poly")
        process = run_poly;
    else if (cfg.command == "xhom")
        process = run_xhom;
    else if (cfg.command == "bound-check")
        process = run_bound_check;
    else if (cfg.command == "entropy")
        process = run_entropy;
    else
        throw std::logic_error("unhandled command " + cfg.command);

    std::vector<InstanceResult> results(inputs.size());
    int workers = std::max(1, cfg.workers);
    if (workers == 1 || inputs.size() <= 1) {
        for (size_t i = 0; i < inputs.size(); ++i) results[i] = process(cfg, inputs[i]);
    } else {
        // Results are buffered per instance and flushed in input order, so
        // the stream is byte-identical no matter the worker count.
        std::atomic<size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto work = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= inputs.size()) return;
                try {
                    results[i] = process(cfg, inputs[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    bool any_failed = false;
    for (const auto& r : results) {
        out << r.lines << '\n';
        any_failed = any_failed || r.failed;
    }
    return any_failed ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting and bound verification for domination-type structures"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Config file mirroring every flag (TOML key=value)");

    RunConfig cfg;
    if (const char* env = std::getenv("DOMCOUNT_CAP_BITS")) cfg.cap_bits = std::atoi(env);

    auto add_common = [&](CLI::App* sub, bool graph_source) {
        if (graph_source) {
            sub->add_option("--family", cfg.family, "Graph family spec, e.g. cycle:6");
            sub->add_option("--graph6", cfg.graph6, "graph6 literal");
            sub->add_option("--catalog", cfg.catalog, "File of graph6 lines");
            sub->add_flag("--strict", cfg.strict, "Abort on malformed catalog lines");
        }
        sub->add_option("--cap-bits", cfg.cap_bits, "Enumeration cap as a power of two");
        sub->add_option("--workers", cfg.workers, "Concurrent workers over catalog entries");
        sub->add_option("--out", cfg.out, "Write records to a file instead of stdout");
    };

    CLI::App* count = app.add_subcommand("count", "Count structures or legal colorings");
    count->add_option("--structure", cfg.structure, "ds|sds|minimal-ds|mis|is");
    count->add_option("--condition", cfg.condition, "dominating|proper|rainbow|file:PATH");
    count->add_option("--colors", cfg.colors, "Number of colors");
    count->add_option("--weights", cfg.weights, "Activation weights, e.g. 1,1/2");
    count->add_option("--mode", cfg.mode, "open|closed");
    add_common(count, true);

    CLI::App* poly = app.add_subcommand("poly", "Dominating set polynomial");
    poly->add_option("--structure", cfg.structure, "ds|sds");
    poly->add_option("--mu", cfg.mu, "Evaluate at rational mu");
    add_common(poly, true);

    CLI::App* xhom = app.add_subcommand("xhom", "Existence homomorphism count");
    xhom->add_option("--image", cfg.image, "hind|eq:Q|kq:Q|file:PATH");
    add_common(xhom, true);

    CLI::App* bound = app.add_subcommand("bound-check", "Verify extremal bounds exactly");
    bound->add_option("--check", cfg.check, "ds|legal|poly|prorain|background|cycle-extremal");
    bound->add_option("--condition", cfg.condition, "Condition for the legal check");
    bound->add_option("--colors", cfg.colors, "Number of colors");
    bound->add_option("--weights", cfg.weights, "Activation weights");
    bound->add_option("--mu", cfg.mu, "Rational mu for the polynomial check");
    bound->add_option("--image", cfg.image, "Image graph for Galvin-Tetali");
    add_common(bound, true);

    CLI::App* entropy = app.add_subcommand("entropy", "Shearer entropy report");
    entropy->add_option("--structure", cfg.structure, "ds|sds");
    entropy->add_option("--condition", cfg.condition, "Custom coloring condition");
    entropy->add_option("--colors", cfg.colors, "Number of colors");
    entropy->add_option("--mode", cfg.mode, "open|closed (custom conditions)");
    add_common(entropy, true);

    CLI::App* sweep = app.add_subcommand("sweep", "Exhaustive labeled-graph sweeps");
    sweep->add_option("--check", cfg.check,
                      "tree-extremal|ds-bound|legal-bounds|moon-moser|fomin|shearer|"
                      "cycle-extremal");
    sweep->add_option("--trees", cfg.trees, "Tree sweep size n");
    sweep->add_option("--max-n", cfg.max_n, "Largest vertex count");
    sweep->add_option("--max-r", cfg.max_r, "Largest degree (ds-bound sweep)");
    add_common(sweep, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    cfg.command = app.get_subcommands().front()->get_name();

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!cfg.out.empty()) {
        file_out.open(cfg.out);
        if (!file_out) {
            std::cerr << "error: cannot open output file " << cfg.out << "\n";
            return kExitBadInput;
        }
        out = &file_out;
    }

    try {
        if (cfg.command == "sweep") return run_sweep(cfg, *out);
        return run_graph_command(cfg, *out);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
