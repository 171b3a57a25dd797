#include "tg/extremal.hpp"
#include "tg/io.hpp"
#include "tg/key_edges.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

// Exit codes: 0 success/verified, 1 property violated, 2 usage/format error,
// 3 capacity exceeded.

namespace {

using nlohmann::json;
using namespace tg;

enum class Format { text, json_out, dot, edgelist };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json_out;
    if (s == "dot") return Format::dot;
    if (s == "edgelist") return Format::edgelist;
    throw std::invalid_argument("unknown format '" + s + "' (text|json|dot|edgelist)");
}

void require_text_or_json(Format f, const std::string& verb) {
    if (f != Format::text && f != Format::json_out)
        throw std::invalid_argument(verb + " supports only text and json output");
}

json edges_json(const SimpleGraph& g) {
    json arr = json::array();
    for (const auto& [u, v] : g.edges()) arr.push_back({u, v});
    return arr;
}

void emit_graph(Format f, const SimpleGraph& g, const std::vector<std::string>& comments, json extra) {
    switch (f) {
        case Format::edgelist: write_edge_list(std::cout, g, comments); break;
        case Format::dot: write_dot(std::cout, g, comments); break;
        case Format::json_out: {
            extra["n"] = g.order();
            extra["size"] = g.edge_count();
            extra["edges"] = edges_json(g);
            std::cout << extra.dump(2) << '\n';
            break;
        }
        case Format::text: {
            for (const auto& c : comments) std::cout << c << '\n';
            std::cout << "n " << g.order() << '\n' << "size " << g.edge_count() << '\n';
            break;
        }
    }
}

std::string join(const std::vector<int>& xs, char sep = ' ') {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << sep;
        os << xs[i];
    }
    return os.str();
}

struct LoadedThreshold {
    ThresholdGraph graph;
    std::vector<int> canon_of_orig;
    bool relabeled = false;
};

LoadedThreshold load_threshold(const std::string& path) {
    const SimpleGraph raw = read_edge_list_file(path);
    std::vector<int> perm;
    auto g = ThresholdGraph::from_graph(raw, &perm);
    if (!g) throw std::invalid_argument("input graph is not a threshold graph");
    bool relabeled = false;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) relabeled = true;
    return {*std::move(g), std::move(perm), relabeled};
}

const char* reason_name(HamiltonicityVerdict::Reason r) {
    using Reason = HamiltonicityVerdict::Reason;
    switch (r) {
        case Reason::ok: return "ok";
        case Reason::order_below_3: return "order_below_3";
        case Reason::isolated_vertices: return "isolated_vertices";
        case Reason::prefix_sum_strict: return "prefix_sum_strict";
        case Reason::prefix_sum_middle: return "prefix_sum_middle";
    }
    return "?";
}

int cmd_gn(int n, Format f) {
    const ThresholdGraph g = build_gn(n);
    const std::string seq = g.creation_sequence().str();
    const std::vector<int> degs = g.degree_sequence();
    if (f == Format::text) {
        std::cout << "n " << n << '\n'
                  << "size " << g.size() << '\n'
                  << "degrees " << join(degs) << '\n'
                  << "sequence " << seq << '\n';
        return 0;
    }
    json extra;
    extra["degrees"] = degs;
    extra["sequence"] = seq;
    emit_graph(f, g.graph(), {"G_" + std::to_string(n), "sequence " + seq}, std::move(extra));
    return 0;
}

int cmd_recognize(const std::string& path, Format f) {
    require_text_or_json(f, "recognize");
    const SimpleGraph raw = read_edge_list_file(path);
    const auto part = recognize(raw);
    if (!part) {
        if (f == Format::text) {
            std::cout << "NOT_THRESHOLD\n";
        } else {
            json j;
            j["threshold"] = false;
            std::cout << j.dump(2) << '\n';
        }
        return 1;
    }
    const auto canon = ThresholdGraph::from_graph(raw);
    const std::string seq = canon->creation_sequence().str();
    if (f == Format::text) {
        std::cout << "THRESHOLD\n" << "n " << raw.order() << '\n' << "m " << part->m << '\n';
        std::cout << "delta";
        for (int i = 1; i <= part->m; ++i) std::cout << ' ' << part->delta[i];
        std::cout << '\n';
        for (int i = 0; i <= part->m; ++i)
            std::cout << 'D' << i << (part->sets[i].empty() ? "" : " ") << join(part->sets[i]) << '\n';
        std::cout << "sequence " << seq << '\n';
    } else {
        json j;
        j["threshold"] = true;
        j["n"] = raw.order();
        j["m"] = part->m;
        j["delta"] = std::vector<int>(part->delta.begin() + 1, part->delta.end());
        j["sets"] = part->sets;
        j["sequence"] = seq;
        std::cout << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_hamiltonian(const std::string& path, Format f) {
    require_text_or_json(f, "hamiltonian");
    const LoadedThreshold in = load_threshold(path);
    const HamiltonicityVerdict v = hamiltonicity_from_partition(in.graph.partition());
    if (f == Format::text) {
        if (v.hamiltonian) {
            std::cout << "HAMILTONIAN\n";
        } else {
            std::cout << "NOT_HAMILTONIAN reason=" << reason_name(v.reason);
            if (v.failing_k > 0) std::cout << " failing_k=" << v.failing_k;
            std::cout << '\n';
        }
    } else {
        json j;
        j["hamiltonian"] = v.hamiltonian;
        j["reason"] = reason_name(v.reason);
        j["failing_k"] = v.failing_k > 0 ? json(v.failing_k) : json(nullptr);
        std::cout << j.dump(2) << '\n';
    }
    return v.hamiltonian ? 0 : 1;
}

int cmd_count(const std::string& path, const std::vector<int>& edge, bool serial, int dp_cap, Format f) {
    require_text_or_json(f, "count");
    const SimpleGraph g = read_edge_list_file(path);
    CountOptions opt;
    opt.max_order = dp_cap;
    opt.kernel = serial ? DpKernel::serial : DpKernel::parallel;
    HamiltonCount count;
    if (edge.empty()) {
        count = count_hamilton_cycles(g, opt);
    } else {
        count = count_hamilton_cycles_through_edge(g, edge[0], edge[1], opt);
    }
    if (f == Format::text) {
        std::cout << count.str() << '\n';
    } else {
        json j;
        j["n"] = g.order();
        j["count"] = count.str();
        j["edge"] = edge.empty() ? json(nullptr) : json(edge);
        std::cout << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_keyedges(const std::string& path, Format f) {
    require_text_or_json(f, "keyedges");
    const LoadedThreshold in = load_threshold(path);
    const auto edges = key_edges(in.graph);
    if (f == Format::text) {
        std::cout << "m " << in.graph.partition().m << '\n' << "count " << edges.size() << '\n';
        if (in.relabeled) std::cout << "relabeled canonical ids; orig->canon " << join(in.canon_of_orig) << '\n';
        for (const KeyEdge& e : edges)
            std::cout << e.x << ' ' << e.y << ' ' << e.lower_index << ' ' << e.upper_index << '\n';
    } else {
        json j;
        j["m"] = in.graph.partition().m;
        j["relabeling"] = in.relabeled ? json(in.canon_of_orig) : json(nullptr);
        json arr = json::array();
        for (const KeyEdge& e : edges)
            arr.push_back({{"x", e.x}, {"y", e.y}, {"j", e.lower_index}, {"partner", e.upper_index}});
        j["key_edges"] = arr;
        std::cout << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_delete(const std::string& path, int u, int v, Format f) {
    const LoadedThreshold in = load_threshold(path);
    const int n = in.graph.order();
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
        throw std::invalid_argument("edge endpoints must be distinct in-range vertices");
    int cu = in.canon_of_orig[u], cv = in.canon_of_orig[v];
    const DegreePartition& p = in.graph.partition();
    if (p.index_of[cu] > p.index_of[cv]) std::swap(cu, cv);
    if (p.index_of[cu] == p.index_of[cv] && cu > cv) std::swap(cu, cv);
    const KeyEdge e{cu, cv, p.index_of[cu], p.index_of[cv]};
    const DeletionOutcome out = delete_key_edge(in.graph, e);

    const std::string label = to_string(out.label);
    const std::vector<int> degs = out.result.degree_sequence();
    if (f == Format::text) {
        std::cout << "case " << label << '\n'
                  << "m_delta " << out.m_delta << '\n'
                  << "n " << out.result.order() << '\n'
                  << "size " << out.result.size() << '\n'
                  << "degrees " << join(degs) << '\n';
        if (in.relabeled) std::cout << "relabeled canonical ids; orig->canon " << join(in.canon_of_orig) << '\n';
        return 0;
    }
    json extra;
    extra["case"] = label;
    extra["m_delta"] = out.m_delta;
    extra["degrees"] = degs;
    emit_graph(f, out.result.graph(),
               {"case=" + label + " m_delta=" + std::to_string(out.m_delta)}, std::move(extra));
    return 0;
}

int cmd_enumerate(int n, bool hamiltonian_only, bool no_counts, int enum_cap, int dp_cap, Format f) {
    require_text_or_json(f, "enumerate");
    struct Row {
        std::vector<int> degrees;
        std::string seq;
        bool hamiltonian;
        HamiltonCount count;
    };
    std::vector<Row> rows;
    CountOptions opt;
    opt.max_order = dp_cap;
    enumerate_threshold_graphs(
        n,
        [&](std::uint64_t, const ThresholdGraph& g) {
            const bool ham = is_hamiltonian(g.partition());
            if (hamiltonian_only && !ham) return;
            Row r{g.degree_sequence(), g.creation_sequence().str(), ham, HamiltonCount(0)};
            if (!no_counts) r.count = count_hamilton_cycles(g.graph(), opt);
            rows.push_back(std::move(r));
        },
        enum_cap);
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.degrees < b.degrees; });
    if (f == Format::text) {
        std::cout << "# seq degrees" << (no_counts ? "" : " count") << '\n';
        for (const Row& r : rows) {
            std::cout << (r.seq.empty() ? "-" : r.seq) << ' ' << join(r.degrees, ',');
            if (!no_counts) std::cout << ' ' << r.count.str();
            std::cout << '\n';
        }
    } else {
        for (const Row& r : rows) {
            json j;
            j["seq"] = r.seq;
            j["degrees"] = r.degrees;
            j["hamiltonian"] = r.hamiltonian;
            j["count"] = no_counts ? json(nullptr) : json(r.count.str());
            std::cout << j.dump() << '\n';  // one object per line
        }
    }
    return 0;
}

json report_json(const std::string& what, const ExtremalReport& r, bool sizes) {
    json j;
    j["n"] = r.n;
    j["theorem"] = what;
    j["pass"] = r.pass;
    j["min_count"] = sizes ? std::to_string(r.min_size) : r.min_count.str();
    j["formula_count"] = sizes ? std::to_string(r.formula_size) : r.formula_count.str();
    j["minimizers"] = sizes ? r.size_minimizers : r.minimizers;
    j["unique"] = sizes ? r.size_unique : r.unique;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

void report_text(const std::string& what, const ExtremalReport& r, bool sizes) {
    std::cout << "verify " << what << " n=" << r.n << ": " << (r.pass ? "PASS" : "FAIL") << '\n';
    if (sizes) {
        std::cout << "min_size " << r.min_size << '\n' << "formula_size " << r.formula_size << '\n';
        std::cout << "unique " << (r.size_unique ? "yes" : "no") << '\n';
        for (const auto& d : r.size_minimizers) std::cout << "minimizer " << join(d) << '\n';
    } else {
        std::cout << "min_count " << r.min_count.str() << '\n'
                  << "formula_count " << r.formula_count.str() << '\n';
        std::cout << "unique " << (r.unique ? "yes" : "no") << '\n';
        for (const auto& d : r.minimizers) std::cout << "minimizer " << join(d) << '\n';
    }
    std::cout << "hamiltonian_total " << r.hamiltonian_total << '\n';
    std::cout << "elapsed_ms " << r.elapsed_ms << '\n';
}

json bool_report_json(const std::string& what, int n, bool pass, double elapsed_ms) {
    json j;
    j["n"] = n;
    j["theorem"] = what;
    j["pass"] = pass;
    j["min_count"] = nullptr;
    j["formula_count"] = nullptr;
    j["minimizers"] = json::array();
    j["unique"] = nullptr;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

int cmd_verify(const std::string& what, int n, const SweepOptions& opt, int cycle_cap, Format f) {
    require_text_or_json(f, "verify");
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    };

    if (what == "theorem6" || what == "theorem7") {
        const bool sizes = what == "theorem7";
        const ExtremalReport r = sizes ? verify_min_size(n, opt) : verify_min_cycle_count(n, opt);
        if (f == Format::text)
            report_text(what, r, sizes);
        else
            std::cout << report_json(what, r, sizes).dump(2) << '\n';
        return r.pass ? 0 : 1;
    }
    if (what == "claim") {
        const bool pass = verify_count_recurrence(n, opt.count);
        if (f == Format::text)
            std::cout << "verify claim k_max=" << n << ": " << (pass ? "PASS" : "FAIL") << '\n';
        else
            std::cout << bool_report_json(what, n, pass, elapsed()).dump(2) << '\n';
        return pass ? 0 : 1;
    }
    if (what == "forced-path") {
        bool pass = true;
        for (int k = 2; k <= n; ++k) pass = pass && verify_forced_path(k, cycle_cap);
        if (f == Format::text)
            std::cout << "verify forced-path k_max=" << n << ": " << (pass ? "PASS" : "FAIL") << '\n';
        else
            std::cout << bool_report_json(what, n, pass, elapsed()).dump(2) << '\n';
        return pass ? 0 : 1;
    }
    if (what == "lemmas") {
        const LemmaSuiteReport r = verify_lemma_suite(n, opt.count);
        if (f == Format::text) {
            auto line = [](const char* name, bool ok) {
                std::cout << name << ' ' << (ok ? "PASS" : "FAIL") << '\n';
            };
            std::cout << "verify lemmas max_order=" << n << ": " << (r.pass ? "PASS" : "FAIL") << '\n';
            line("deletion_closure", r.deletion_closure);
            line("key_edges_in_cycles", r.key_edges_in_cycles);
            line("hamiltonicity_oracle", r.hamiltonicity_oracle);
            line("degree_recurrence", r.degree_recurrence);
            line("middle_set_bound", r.middle_set_bound);
            line("weight_soundness", r.weight_soundness);
            line("size_agreement", r.size_agreement);
            line("degree_injectivity", r.degree_injectivity);
            std::cout << "elapsed_ms " << r.elapsed_ms << '\n';
        } else {
            json j = bool_report_json(what, n, r.pass, r.elapsed_ms);
            j["checks"] = {{"deletion_closure", r.deletion_closure},
                           {"key_edges_in_cycles", r.key_edges_in_cycles},
                           {"hamiltonicity_oracle", r.hamiltonicity_oracle},
                           {"degree_recurrence", r.degree_recurrence},
                           {"middle_set_bound", r.middle_set_bound},
                           {"weight_soundness", r.weight_soundness},
                           {"size_agreement", r.size_agreement},
                           {"degree_injectivity", r.degree_injectivity}};
            std::cout << j.dump(2) << '\n';
        }
        return r.pass ? 0 : 1;
    }
    throw std::invalid_argument("unknown verify target '" + what +
                                "' (theorem6|theorem7|claim|forced-path|lemmas)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Threshold-graph toolkit: construction, recognition, exact Hamilton-cycle counting, key-edge deletion, and exhaustive extremal verification."};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    int jobs = 0;
    app.add_option("--format", format, "Output format: text|json|dot|edgelist")->capture_default_str();
    app.add_option("--jobs", jobs, "Worker threads (0 = library default)")->capture_default_str();

    int gn_n = 0;
    auto* gn = app.add_subcommand("gn", "Emit the extremal graph G_N");
    gn->add_option("N", gn_n, "Order (>= 3)")->required();

    std::string rec_file;
    auto* rec = app.add_subcommand("recognize", "Print the degree partition, or NOT_THRESHOLD");
    rec->add_option("FILE", rec_file, "Edge-list file, or - for stdin")->required();

    std::string ham_file;
    auto* ham = app.add_subcommand("hamiltonian", "Hamiltonicity of a threshold graph from its degree partition");
    ham->add_option("FILE", ham_file, "Edge-list file, or - for stdin")->required();

    std::string count_file;
    std::vector<int> count_edge;
    bool count_serial = false;
    int dp_cap = 28;
    auto* count = app.add_subcommand("count", "Exact Hamilton-cycle count (subset DP)");
    count->add_option("FILE", count_file, "Edge-list file, or - for stdin")->required();
    count->add_option("--edge", count_edge, "Count only cycles through edge U V")->expected(2);
    count->add_flag("--serial", count_serial, "Use the serial reference kernel");
    count->add_option("--dp-cap", dp_cap, "Max order for the subset DP")->capture_default_str();

    std::string keyedges_file;
    auto* keyedge = app.add_subcommand("keyedges", "List the key edges with their partition coordinates");
    keyedge->add_option("FILE", keyedges_file, "Edge-list file, or - for stdin")->required();

    std::string delete_file;
    int del_u = 0, del_v = 0;
    auto* del = app.add_subcommand("delete", "Delete a key edge and report the partition case");
    del->add_option("FILE", delete_file, "Edge-list file, or - for stdin")->required();
    del->add_option("U", del_u, "Edge endpoint")->required();
    del->add_option("V", del_v, "Edge endpoint")->required();

    int enum_n = 0, enum_cap = 20;
    bool enum_ham_only = false, enum_no_counts = false;
    auto* enumerate = app.add_subcommand("enumerate", "Stream all threshold graphs of order N as degree sequences");
    enumerate->add_option("N", enum_n, "Order")->required();
    enumerate->add_flag("--hamiltonian-only", enum_ham_only, "Keep only hamiltonian graphs");
    enumerate->add_flag("--no-counts", enum_no_counts, "Skip the per-graph Hamilton-cycle count");
    enumerate->add_option("--enum-cap", enum_cap, "Max order for enumeration")->capture_default_str();
    enumerate->add_option("--dp-cap", dp_cap, "Max order for the subset DP")->capture_default_str();

    std::string verify_what;
    int verify_n = 0, sweep_cap = 14, cycle_cap = 14;
    auto* verify = app.add_subcommand("verify", "Run a verification suite and print a pass/fail report");
    verify->add_option("WHAT", verify_what, "theorem6|theorem7|claim|forced-path|lemmas")->required();
    verify->add_option("N", verify_n, "Order (theorems, lemmas) or k bound (claim, forced-path)")->required();
    verify->add_option("--enum-cap", enum_cap, "Max order for enumeration sweeps")->capture_default_str();
    verify->add_option("--sweep-cap", sweep_cap, "Max order when counting every enumerated graph")->capture_default_str();
    verify->add_option("--dp-cap", dp_cap, "Max order for the subset DP")->capture_default_str();
    verify->add_option("--cycle-cap", cycle_cap, "Max order for cycle enumeration")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (jobs > 0) omp_set_num_threads(jobs);
        const Format f = parse_format(format);
        if (*gn) return cmd_gn(gn_n, f);
        if (*rec) return cmd_recognize(rec_file, f);
        if (*ham) return cmd_hamiltonian(ham_file, f);
        if (*count) return cmd_count(count_file, count_edge, count_serial, dp_cap, f);
        if (*keyedge) return cmd_keyedges(keyedges_file, f);
        if (*del) return cmd_delete(delete_file, del_u, del_v, f);
        if (*enumerate) return cmd_enumerate(enum_n, enum_ham_only, enum_no_counts, enum_cap, dp_cap, f);
        if (*verify) {
            SweepOptions opt;
            opt.max_enum_order = enum_cap;
            opt.max_count_sweep_order = sweep_cap;
            opt.count.max_order = dp_cap;
            return cmd_verify(verify_what, verify_n, opt, cycle_cap, f);
        }
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
