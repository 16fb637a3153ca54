// clawham: structural hamiltonicity toolkit for claw-free graphs.
//
// Graphs come in as graph6 tokens (one per line, '#' comments ignored) or,
// with --format edgelist, as a single "n m" edge list; results leave the
// same way.  Every subcommand is pipe-friendly: generators emit graph6 that
// analyzers read back.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "clawham/closure.hpp"
#include "clawham/cycles.hpp"
#include "clawham/families.hpp"
#include "clawham/graph.hpp"
#include "clawham/patterns.hpp"
#include "clawham/regions.hpp"
#include "clawham/verify.hpp"

namespace {

using namespace clawham;

struct IoConfig {
    std::string input = "-";
    std::string format = "graph6";  // graph6 | edgelist | dot (output only)
};

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<Graph> read_graphs(const IoConfig& io) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (io.input != "-") {
        file.open(io.input);
        if (!file) throw std::runtime_error("cannot open input file: " + io.input);
        in = &file;
    }
    std::vector<Graph> graphs;
    if (io.format == "edgelist") {
        graphs.push_back(parse_edge_list(read_all(*in)));
        return graphs;
    }
    std::string line;
    while (std::getline(*in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

void emit_graph(const Graph& g, const IoConfig& io,
                const std::function<std::string(int)>& dot_attr = {}) {
    if (io.format == "edgelist")
        std::cout << encode_edge_list(g);
    else if (io.format == "dot")
        std::cout << to_dot(g, dot_attr);
    else
        std::cout << encode_graph6(g) << "\n";
}

void emit_labels(const LabeledGraph& lg, const IoConfig& io) {
    if (io.format == "dot") return;  // labels ride on the nodes instead
    for (const auto& [name, index] : lg.labels)
        std::cout << "# label " << name << " " << index << "\n";
}

std::function<std::string(int)> dot_labeler(const LabeledGraph& lg, bool want_labels) {
    if (!want_labels) return {};
    auto names = std::make_shared<std::map<int, std::string>>();
    for (const auto& [name, index] : lg.labels) (*names)[index] = name;
    return [names](int v) {
        auto it = names->find(v);
        return it == names->end() ? std::string() : "label=\"" + it->second + "\"";
    };
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int cmd_info(const IoConfig& io) {
    for (const Graph& g : read_graphs(io)) {
        const bool cf = is_claw_free(g);
        std::cout << "n=" << g.order() << " m=" << g.edge_count() << " degrees="
                  << g.min_degree() << ".." << g.max_degree()
                  << " claw_free=" << yesno(cf)
                  << " two_connected=" << yesno(is_two_connected(g))
                  << " closed=" << (cf ? yesno(is_closed(g)) : std::string("n/a")) << "\n";
    }
    return 0;
}

int cmd_closure(const IoConfig& io, bool trace) {
    for (const Graph& g : read_graphs(io)) {
        const ClosureTrace t = closure(g);
        if (trace)
            for (std::size_t i = 0; i < t.steps.size(); ++i) {
                std::cout << "# step " << i << ": vertex " << t.steps[i].eligible_vertex
                          << " adds";
                for (auto [u, v] : t.steps[i].added_edges) std::cout << " (" << u << "," << v << ")";
                std::cout << "\n";
            }
        emit_graph(t.final, io);
    }
    return 0;
}

int cmd_regions(const IoConfig& io) {
    for (const Graph& g : read_graphs(io)) {
        const RegionDecomposition d = decompose(g);
        if (io.format == "dot") {
            std::cout << to_dot(d.base, [&](int v) {
                return d.is_interior(v) ? std::string("color=blue") : std::string("color=red");
            });
            continue;
        }
        for (std::size_t r = 0; r < d.regions.size(); ++r) {
            std::cout << "region " << r << ":";
            for (int v : d.regions[r]) std::cout << " " << v;
            std::cout << "\n";
        }
        for (int v = 0; v < g.order(); ++v) {
            std::cout << "vertex " << v << ": "
                      << (d.is_interior(v) ? "interior" : "frontier") << " regions";
            for (int r : d.membership[static_cast<std::size_t>(v)]) std::cout << " " << r;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_find(const IoConfig& io, const std::string& pattern_name, bool all) {
    const Pattern p = pattern_from_name(pattern_name);
    for (const Graph& g : read_graphs(io)) {
        const auto embeddings = find_induced(g, p, all ? SearchMode::All : SearchMode::First);
        if (embeddings.empty()) {
            std::cout << "NONE\n";
            continue;
        }
        for (const Embedding& e : embeddings) {
            for (std::size_t i = 0; i < e.map.size(); ++i)
                std::cout << (i ? " " : "") << e.map[i];
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_phi(const IoConfig& io, const std::string& pattern_name, int k) {
    const Pattern p = pattern_from_name(pattern_name);
    for (const Graph& g : read_graphs(io)) {
        const PhiResult r = phi_holds(g, p, k);
        if (r.holds)
            std::cout << "TRUE\n";
        else
            std::cout << "FALSE vertex=" << r.violating_vertex
                      << " degree=" << r.violating_degree << "\n";
    }
    return 0;
}

int cmd_hamilton(const IoConfig& io) {
    for (const Graph& g : read_graphs(io)) {
        if (const auto w = hamilton_cycle(g)) {
            for (std::size_t i = 0; i < w->vertices.size(); ++i)
                std::cout << (i ? " " : "") << w->vertices[i];
            std::cout << "\n";
        } else {
            std::cout << "NONE\n";
        }
    }
    return 0;
}

int cmd_longest_cycle(const IoConfig& io) {
    for (const Graph& g : read_graphs(io)) std::cout << longest_cycle(g) << "\n";
    return 0;
}

int cmd_witness_brousek(const IoConfig& io, int cap) {
    for (const Graph& g : read_graphs(io)) {
        const auto w = brousek_witness(g, cap > 0 ? cap : g.order());
        if (!w) {
            std::cout << "NONE\n";
            continue;
        }
        std::cout << "SPEC " << w->spec.to_string() << " MAP";
        for (int v : w->embedding.map) std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_preimage(const IoConfig& io) {
    for (const Graph& g : read_graphs(io)) emit_graph(preimage(decompose(g)), io);
    return 0;
}

int cmd_verify(const std::string& statement_id, int n_max, const std::string& stream,
               const std::vector<std::string>& filter_names, int jobs,
               std::optional<std::uint64_t> seed, const std::string& json_path) {
    const Statement s = make_statement(statement_id);
    Report report;
    if (!stream.empty()) {
        std::ifstream file;
        std::istream* in = &std::cin;
        std::string name = "stream stdin";
        if (stream != "-") {
            file.open(stream);
            if (!file) throw std::runtime_error("cannot open stream file: " + stream);
            in = &file;
            name = "stream " + stream;
        }
        report = sweep_stream(*in, name, s, jobs);
    } else {
        EnumerationCorpus corpus;
        corpus.n_max = n_max;
        for (const std::string& f : filter_names) {
            if (f == "claw-free")
                corpus.filters.push_back(GraphFilter::ClawFree);
            else if (f == "2-connected")
                corpus.filters.push_back(GraphFilter::TwoConnected);
            else if (f == "connected")
                corpus.filters.push_back(GraphFilter::Connected);
            else
                throw std::runtime_error("unknown filter: " + f);
        }
        report = sweep(corpus, s, jobs);
    }
    report.seed = seed;
    std::cout << "statement " << report.statement_id << "\ncorpus " << report.corpus
              << "\nvacuous " << report.vacuous << "\nconfirmed " << report.confirmed
              << "\ncounterexamples " << report.counterexample_count << "\n";
    for (const std::string& token : report.counterexamples) std::cout << token << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot open json output file: " + json_path);
        out << report.to_json();
    }
    return report.counterexample_count == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural hamiltonicity toolkit for claw-free graphs"};
    app.require_subcommand(1);
    IoConfig io;
    app.add_option("--input", io.input, "input file ('-' for stdin)")->capture_default_str();
    app.add_option("--format", io.format, "graph format: graph6, edgelist, dot")
        ->check(CLI::IsMember({"graph6", "edgelist", "dot"}))
        ->capture_default_str();

    auto* info = app.add_subcommand("info", "order, size, degree range, basic predicates");

    auto* closure_cmd = app.add_subcommand("closure", "neighborhood-completion closure");
    bool trace = false;
    closure_cmd->add_flag("--trace", trace, "print one comment line per completion step");

    auto* regions_cmd = app.add_subcommand("regions", "maximal cliques of the closure");

    auto* find_cmd = app.add_subcommand("find", "induced copies of a pattern");
    std::string find_pattern;
    bool find_all = false;
    find_cmd->add_option("pattern", find_pattern, "P3..P9, C3, Z1..Z6, B, N, W, claw")
        ->required();
    find_cmd->add_flag("--all", find_all, "list every embedding instead of the first");

    auto* phi_cmd = app.add_subcommand("phi", "end-vertex degree condition");
    std::string phi_pattern;
    int phi_k = 3;
    phi_cmd->add_option("pattern", phi_pattern, "pattern whose end-vertices are constrained")
        ->required();
    phi_cmd->add_option("--k", phi_k, "constant in 3*d(v) >= n + k")->capture_default_str();

    auto* hamilton_cmd = app.add_subcommand("hamilton", "hamilton cycle witness or NONE");
    auto* longest_cmd = app.add_subcommand("longest-cycle", "longest cycle length");

    auto* gen = app.add_subcommand("gen", "generate a named graph");
    gen->require_subcommand(1);
    bool labels = false;
    gen->add_flag("--labels", labels, "also print the role-name table");
    auto* gen_brousek = gen->add_subcommand("brousek", "two triangles joined by three connectors");
    std::string brousek_arg;
    gen_brousek->add_option("spec", brousek_arg, "three comma-separated slots, e.g. 3,T,5")
        ->required();
    auto* gen_fig2 = gen->add_subcommand("fig2", "two k-cliques joined through three 2-paths");
    int fig2_k = 6;
    gen_fig2->add_option("--k", fig2_k, "clique size (k >= 3)")->capture_default_str();
    auto* gen_pattern = gen->add_subcommand("pattern", "a catalog pattern as a graph");
    std::string gen_pattern_name;
    gen_pattern->add_option("name", gen_pattern_name, "P3..P9, C3, Z1..Z6, B, N, W, claw")
        ->required();
    auto* gen_linegraph = gen->add_subcommand("linegraph", "line graph of the input graph");

    auto* witness = app.add_subcommand("witness", "structure witnesses");
    witness->require_subcommand(1);
    auto* witness_brousek = witness->add_subcommand(
        "brousek", "induced two-triangle family member, or NONE");
    int witness_cap = 0;
    witness_brousek->add_option("--cap", witness_cap, "max witness order (default: graph order)");

    auto* preimage_cmd = app.add_subcommand("preimage", "triangle-free root of the closure");

    auto* verify_cmd = app.add_subcommand("verify", "sweep a statement over a corpus");
    std::string statement_id;
    verify_cmd->add_option("statement", statement_id, "statement id, e.g. thm_main(N)")
        ->required();
    int n_max = 7;
    std::string stream_file;
    auto* nmax_opt =
        verify_cmd->add_option("--n-max", n_max, "exhaustive corpus bound")->capture_default_str();
    verify_cmd->add_option("--stream", stream_file, "graph6 stream file ('-' for stdin)")
        ->excludes(nmax_opt);
    std::vector<std::string> filter_names;
    verify_cmd->add_option("--filter", filter_names,
                           "corpus filters: claw-free, 2-connected, connected");
    int jobs = 1;
    verify_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    std::optional<std::uint64_t> seed;
    verify_cmd->add_option("--seed", seed, "seed echoed into the report");
    std::string json_path;
    verify_cmd->add_option("--json", json_path, "write the canonical JSON report here");

    // Let global options (--input, --format, --labels) appear after the
    // subcommand name too.
    const std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands({})) {
            sub->fallthrough();
            allow_fallthrough(sub);
        }
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*info) return cmd_info(io);
        if (*closure_cmd) return cmd_closure(io, trace);
        if (*regions_cmd) return cmd_regions(io);
        if (*find_cmd) return cmd_find(io, find_pattern, find_all);
        if (*phi_cmd) return cmd_phi(io, phi_pattern, phi_k);
        if (*hamilton_cmd) return cmd_hamilton(io);
        if (*longest_cmd) return cmd_longest_cycle(io);
        if (*gen) {
            LabeledGraph lg;
            if (*gen_brousek)
                lg = brousek(BrousekSpec::parse(brousek_arg));
            else if (*gen_fig2)
                lg = fig2(fig2_k);
            else if (*gen_pattern) {
                const Pattern p = pattern_from_name(gen_pattern_name);
                lg.graph = p.graph;
                for (int v = 0; v < p.graph.order(); ++v)
                    lg.labels["v" + std::to_string(v)] = v;
            } else if (*gen_linegraph) {
                const auto inputs = read_graphs(io);
                for (const Graph& g : inputs) {
                    const LabeledGraph out = line_graph(g);
                    emit_graph(out.graph, io, dot_labeler(out, labels));
                    if (labels) emit_labels(out, io);
                }
                return 0;
            }
            emit_graph(lg.graph, io, dot_labeler(lg, labels));
            if (labels) emit_labels(lg, io);
            return 0;
        }
        if (*witness) return cmd_witness_brousek(io, witness_cap);
        if (*preimage_cmd) return cmd_preimage(io);
        if (*verify_cmd)
            return cmd_verify(statement_id, n_max, stream_file, filter_names, jobs, seed,
                              json_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
