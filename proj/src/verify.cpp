#include "clawham/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cctype>
#include <istream>
#include <mutex>
#include <thread>

#include "clawham/cycles.hpp"
#include "json.hpp"

namespace clawham {

// ---------------------------------------------------------------------------
// Statement registry
// ---------------------------------------------------------------------------

namespace {

const std::array<PatternKind, 4> iff_list_kinds = {PatternKind::Path, PatternKind::Z,
                                                   PatternKind::Bull, PatternKind::Net};

bool in_iff_list(const Pattern& p) {
    if (p.kind == PatternKind::Path) return p.param >= 3 && p.param <= 6;
    if (p.kind == PatternKind::Z) return p.param == 1;
    return p.kind == PatternKind::Bull || p.kind == PatternKind::Net ||
           p.kind == PatternKind::Wounded;
}

std::string trim_copy(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

Statement make_statement(const std::string& id) {
    const std::string text = trim_copy(id);
    std::string head = text;
    std::vector<std::string> args;
    const std::size_t open = text.find('(');
    if (open != std::string::npos) {
        if (text.back() != ')')
            throw std::invalid_argument("statement id: missing closing parenthesis");
        head = text.substr(0, open);
        std::string inner = text.substr(open + 1, text.size() - open - 2);
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = inner.find(',', start);
            args.push_back(trim_copy(inner.substr(start, comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    auto want_args = [&](std::size_t count) {
        if (args.size() != count)
            throw std::invalid_argument("statement " + head + ": expected " +
                                        std::to_string(count) + " argument(s)");
    };

    Statement s;
    if (head == "dirac") {
        want_args(0);
        s.family = StatementFamily::Dirac;
        s.id = head;
        return s;
    }
    if (head == "matthews_sumner") {
        want_args(0);
        s.family = StatementFamily::MatthewsSumner;
        s.id = head;
        return s;
    }
    if (head == "fujisawa_yamashita") {
        want_args(0);
        s.family = StatementFamily::FujisawaYamashita;
        s.pattern = make_pattern(PatternKind::Z, 1);
        s.k = -2;
        s.id = head;
        return s;
    }
    if (head == "broersma_conjecture") {
        want_args(0);
        s.family = StatementFamily::BroersmaConjecture;
        s.pattern = make_pattern(PatternKind::Net);
        s.k = -2;
        s.id = head;
        return s;
    }
    if (head == "bedrossian_pair") {
        want_args(1);
        s.family = StatementFamily::BedrossianPair;
        s.pattern = pattern_from_name(args[0]);
        s.id = head + "(" + s.pattern->name + ")";
        return s;
    }
    if (head == "problem_1_5") {
        want_args(1);
        s.family = StatementFamily::Problem15;
        s.pattern = pattern_from_name(args[0]);
        const bool allowed = (s.pattern->kind == PatternKind::Path && s.pattern->param == 6) ||
                             s.pattern->kind == PatternKind::Net ||
                             s.pattern->kind == PatternKind::Wounded;
        if (!allowed)
            throw std::invalid_argument("problem_1_5 is stated for P6, N, and W only");
        s.k = -2;
        s.id = head + "(" + s.pattern->name + ")";
        return s;
    }
    if (head == "thm_main" || head == "thm_iff_list") {
        want_args(1);
        s.family = head == "thm_main" ? StatementFamily::ThmMain : StatementFamily::ThmIffList;
        s.pattern = pattern_from_name(args[0]);
        if (s.family == StatementFamily::ThmIffList && !in_iff_list(*s.pattern))
            throw std::invalid_argument(
                "thm_iff_list covers P3, P4, P5, P6, Z1, B, N, W only");
        s.k = 3;
        s.id = head + "(" + s.pattern->name + ")";
        return s;
    }
    if (head == "phi_ham") {
        want_args(2);
        s.family = StatementFamily::PhiHam;
        s.pattern = pattern_from_name(args[0]);
        std::size_t used = 0;
        try {
            s.k = std::stoi(args[1], &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("phi_ham: bad constant \"" + args[1] + "\"");
        }
        if (used != args[1].size())
            throw std::invalid_argument("phi_ham: bad constant \"" + args[1] + "\"");
        s.id = head + "(" + s.pattern->name + "," + std::to_string(s.k) + ")";
        return s;
    }
    throw std::invalid_argument("unknown statement id: " + text);
}

std::vector<std::string> statement_catalog() {
    return {
        "dirac",
        "matthews_sumner",
        "bedrossian_pair(<pattern>)",
        "fujisawa_yamashita",
        "broersma_conjecture",
        "problem_1_5(P6|N|W)",
        "thm_main(<pattern>)",
        "thm_iff_list(P3|P4|P5|P6|Z1|B|N|W)",
        "phi_ham(<pattern>,<k>)",
    };
}

// ---------------------------------------------------------------------------
// Per-graph evaluation
// ---------------------------------------------------------------------------

void EvalCache::reset() {
    claw_free.reset();
    two_connected.reset();
    hamiltonian.reset();
    memo.clear();
}

bool EvalCache::end_vertex(const Graph& g, const Pattern& p, int v) {
    const int key = static_cast<int>(p.kind) * 16 + p.param;
    PatternMemo* slot = nullptr;
    for (auto& m : memo)
        if (m.key == key) slot = &m;
    if (!slot) {
        memo.push_back(PatternMemo{key, 0, 0});
        slot = &memo.back();
    }
    const std::uint64_t bit = 1ull << v;
    if (!(slot->computed & bit)) {
        if (is_phi_end_vertex(g, p, v)) slot->is_end |= bit;
        slot->computed |= bit;
    }
    return (slot->is_end & bit) != 0;
}

namespace {

bool cached_claw_free(const Graph& g, EvalCache& c) {
    if (!c.claw_free) c.claw_free = is_claw_free(g);
    return *c.claw_free;
}

bool cached_two_connected(const Graph& g, EvalCache& c) {
    if (!c.two_connected) c.two_connected = is_two_connected(g);
    return *c.two_connected;
}

bool cached_hamiltonian(const Graph& g, EvalCache& c) {
    if (!c.hamiltonian) c.hamiltonian = hamilton_cycle(g).has_value();
    return *c.hamiltonian;
}

// The end-degree hypothesis: no vertex below the bound is an end-vertex
// image.  Scanning the low-degree vertices first makes the common
// (hypothesis false) case cheap.
bool phi_hypothesis(const Graph& g, const Pattern& p, int k, EvalCache& c) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        if (3 * g.degree(v) >= n + k) continue;
        if (c.end_vertex(g, p, v)) return false;
    }
    return true;
}

bool eval_hypothesis(const Graph& g, const Statement& s, EvalCache& c) {
    switch (s.family) {
        case StatementFamily::Dirac:
            return g.order() >= 3 && degree_threshold_check(g, 0, 2);
        case StatementFamily::MatthewsSumner:
            return cached_two_connected(g, c) && cached_claw_free(g, c) &&
                   degree_threshold_check(g, -2, 3);
        case StatementFamily::BedrossianPair:
            return cached_two_connected(g, c) && cached_claw_free(g, c) &&
                   is_free(g, *s.pattern);
        case StatementFamily::FujisawaYamashita:
        case StatementFamily::BroersmaConjecture:
        case StatementFamily::Problem15:
        case StatementFamily::ThmMain:
        case StatementFamily::ThmIffList:
        case StatementFamily::PhiHam:
            return cached_two_connected(g, c) && cached_claw_free(g, c) &&
                   phi_hypothesis(g, *s.pattern, s.k, c);
    }
    return false;
}

VerdictStatus classify(const Graph& g, const Statement& s, EvalCache& c) {
    if (!eval_hypothesis(g, s, c)) return VerdictStatus::Vacuous;
    return cached_hamiltonian(g, c) ? VerdictStatus::Confirmed : VerdictStatus::Counterexample;
}

}  // namespace

Verdict check_statement(const Graph& g, const Statement& s, EvalCache& cache) {
    Verdict v;
    v.graph6 = g.order() <= 62 ? encode_graph6(g) : "(order " + std::to_string(g.order()) + ")";
    v.hypothesis_holds = eval_hypothesis(g, s, cache);
    if (v.hypothesis_holds) {
        v.conclusion_holds = cached_hamiltonian(g, cache);
        v.status = *v.conclusion_holds ? VerdictStatus::Confirmed : VerdictStatus::Counterexample;
    } else {
        v.status = VerdictStatus::Vacuous;
    }
    return v;
}

Verdict check_statement(const Graph& g, const Statement& s) {
    EvalCache cache;
    return check_statement(g, s, cache);
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

namespace {

std::string filters_description(const std::vector<GraphFilter>& filters) {
    if (filters.empty()) return "";
    std::string out = " filtered ";
    for (std::size_t i = 0; i < filters.size(); ++i) {
        if (i) out += "+";
        switch (filters[i]) {
            case GraphFilter::Connected: out += "connected"; break;
            case GraphFilter::TwoConnected: out += "2-connected"; break;
            case GraphFilter::ClawFree: out += "claw-free"; break;
        }
    }
    return out;
}

struct Tally {
    std::uint64_t vacuous = 0;
    std::uint64_t confirmed = 0;
    std::vector<std::string> counterexamples;
};

void tally_graph(const Graph& g, const std::vector<Statement>& statements, EvalCache& cache,
                 const std::vector<GraphFilter>& established, std::vector<Tally>& tallies) {
    cache.reset();
    for (GraphFilter f : established) {
        if (f == GraphFilter::ClawFree) cache.claw_free = true;
        if (f == GraphFilter::TwoConnected) cache.two_connected = true;
    }
    for (std::size_t i = 0; i < statements.size(); ++i) {
        switch (classify(g, statements[i], cache)) {
            case VerdictStatus::Vacuous: ++tallies[i].vacuous; break;
            case VerdictStatus::Confirmed: ++tallies[i].confirmed; break;
            case VerdictStatus::Counterexample:
                tallies[i].counterexamples.push_back(encode_graph6(g));
                break;
        }
    }
}

// Fixed-size chunks of the edge-mask space, pulled by workers off a shared
// counter.  Merging per-statement tallies is order-independent.
struct EnumChunk {
    int n;
    std::uint64_t begin, end;
};

std::vector<Report> run_enumeration_sweep(const EnumerationCorpus& corpus,
                                          const std::vector<Statement>& statements,
                                          int workers) {
    if (corpus.n_min < 0 || corpus.n_max > 8 || corpus.n_min > corpus.n_max)
        throw SizeError("sweep: enumeration corpora support 0 <= n_min <= n_max <= 8");
    if (workers < 1) throw std::invalid_argument("sweep: workers must be >= 1");

    std::vector<EnumChunk> chunks;
    constexpr std::uint64_t chunk_size = 1ull << 18;
    for (int n = corpus.n_min; n <= corpus.n_max; ++n) {
        const std::uint64_t total = 1ull << edge_bits(n);
        for (std::uint64_t b = 0; b < total; b += chunk_size)
            chunks.push_back({n, b, std::min(total, b + chunk_size)});
    }

    std::vector<std::vector<Tally>> partial(static_cast<std::size_t>(workers),
                                            std::vector<Tally>(statements.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    auto work = [&](int w) {
        try {
            EvalCache cache;
            auto& tallies = partial[static_cast<std::size_t>(w)];
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= chunks.size()) break;
                const EnumChunk& ch = chunks[i];
                enumerate_mask_range(ch.n, ch.begin, ch.end, corpus.filters,
                                     [&](const Graph& g) {
                                         tally_graph(g, statements, cache, corpus.filters,
                                                     tallies);
                                     });
            }
        } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<Report> reports(statements.size());
    for (std::size_t i = 0; i < statements.size(); ++i) {
        Report& r = reports[i];
        r.statement_id = statements[i].id;
        r.corpus = corpus.description();
        r.n_max = corpus.n_max;
        for (const auto& tallies : partial) {
            r.vacuous += tallies[i].vacuous;
            r.confirmed += tallies[i].confirmed;
            r.counterexamples.insert(r.counterexamples.end(), tallies[i].counterexamples.begin(),
                                     tallies[i].counterexamples.end());
        }
        std::sort(r.counterexamples.begin(), r.counterexamples.end());
        r.counterexample_count = r.counterexamples.size();
    }
    return reports;
}

}  // namespace

std::string EnumerationCorpus::description() const {
    return "labeled graphs with " + std::to_string(n_min) + " <= n <= " + std::to_string(n_max) +
           filters_description(filters);
}

Report sweep(const EnumerationCorpus& corpus, const Statement& s, int workers) {
    return run_enumeration_sweep(corpus, {s}, workers).front();
}

std::vector<Report> sweep_many(const EnumerationCorpus& corpus,
                               const std::vector<Statement>& statements, int workers) {
    return run_enumeration_sweep(corpus, statements, workers);
}

Report sweep_stream(std::istream& in, const std::string& corpus_name, const Statement& s,
                    int workers) {
    if (workers < 1) throw std::invalid_argument("sweep: workers must be >= 1");
    Report report;
    report.statement_id = s.id;
    report.corpus = corpus_name;

    // Read in batches so arbitrarily long streams stay bounded in memory;
    // each batch is split across the workers by index.
    constexpr std::size_t batch_size = 4096;
    std::vector<Graph> batch;
    std::string line;
    std::size_t lineno = 0;
    bool eof = false;
    while (!eof) {
        batch.clear();
        while (batch.size() < batch_size) {
            if (!std::getline(in, line)) {
                eof = true;
                break;
            }
            ++lineno;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            try {
                batch.push_back(parse_graph6(line));
            } catch (const FormatError& e) {
                throw FormatError(std::string(e.what()) + " (stream line " +
                                      std::to_string(lineno) + ")",
                                  lineno);
            }
        }
        if (batch.empty()) continue;
        std::vector<Tally> tallies(static_cast<std::size_t>(workers));
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        auto work = [&](int w) {
            try {
                EvalCache cache;
                std::vector<Tally> local(1);
                std::vector<Statement> stmts{s};
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= batch.size()) break;
                    tally_graph(batch[i], stmts, cache, {}, local);
                }
                tallies[static_cast<std::size_t>(w)] = std::move(local.front());
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto& t : tallies) {
            report.vacuous += t.vacuous;
            report.confirmed += t.confirmed;
            report.counterexamples.insert(report.counterexamples.end(),
                                          t.counterexamples.begin(), t.counterexamples.end());
        }
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    report.counterexample_count = report.counterexamples.size();
    return report;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["statement"] = statement_id;
    j["corpus"] = corpus;
    j["counts"] = {{"vacuous", vacuous},
                   {"confirmed", confirmed},
                   {"counterexample", counterexample_count}};
    j["counterexamples"] = counterexamples;
    j["config"]["n_max"] = n_max;
    if (seed)
        j["config"]["seed"] = *seed;
    else
        j["config"]["seed"] = nullptr;
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Brousek witness
// ---------------------------------------------------------------------------

namespace {

struct BrousekSearch {
    const Graph& g;
    int cap;
    std::array<int, 3> a{}, b{};
    std::array<bool, 3> slot_t{};
    std::array<std::vector<int>, 3> interior;
    std::uint64_t used = 0;

    explicit BrousekSearch(const Graph& graph, int cap_) : g(graph), cap(cap_) {}

    int order_so_far() const {
        int total = 6;
        for (const auto& path : interior) total += static_cast<int>(path.size());
        return total;
    }

    // A connector vertex may touch the chosen set only where the family has
    // edges: exactly `required` inside `used`.
    bool fits(int w, std::uint64_t required) const {
        if ((used >> w) & 1u) return false;
        return (g.neighbors(w) & used) == required;
    }

    bool slots(int i) {
        if (i == 3) return true;
        const int remaining_after = 2 - i;
        if (slot_t[static_cast<std::size_t>(i)]) {
            // Triangle connector: one shared neighbor of a_i and b_i.
            if (order_so_far() + 1 + remaining_after > cap) return false;
            const std::uint64_t req = (1ull << a[static_cast<std::size_t>(i)]) |
                                      (1ull << b[static_cast<std::size_t>(i)]);
            for (int w = 0; w < g.order(); ++w) {
                if (!fits(w, req)) continue;
                interior[static_cast<std::size_t>(i)] = {w};
                used |= 1ull << w;
                if (slots(i + 1)) return true;
                used &= ~(1ull << w);
                interior[static_cast<std::size_t>(i)].clear();
            }
            return false;
        }
        // Path connector: interiors of length t = 1, 2, ... in turn.
        for (int t = 1; order_so_far() + t + remaining_after <= cap; ++t) {
            interior[static_cast<std::size_t>(i)].clear();
            if (path_step(i, t, a[static_cast<std::size_t>(i)])) return true;
        }
        return false;
    }

    bool path_step(int i, int t, int prev) {
        auto& path = interior[static_cast<std::size_t>(i)];
        const int placed = static_cast<int>(path.size());
        const bool last = placed + 1 == t;
        std::uint64_t req = 1ull << prev;
        if (last) req |= 1ull << b[static_cast<std::size_t>(i)];
        for (int w = 0; w < g.order(); ++w) {
            if (!fits(w, req)) continue;
            path.push_back(w);
            used |= 1ull << w;
            if (last ? slots(i + 1) : path_step(i, t, w)) return true;
            used &= ~(1ull << w);
            path.pop_back();
        }
        return false;
    }
};

std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j) {
            if (!g.adjacent(i, j)) continue;
            for (int k = j + 1; k < g.order(); ++k)
                if (g.adjacent(i, k) && g.adjacent(j, k)) out.push_back({i, j, k});
        }
    return out;
}

}  // namespace

std::optional<BrousekWitness> brousek_witness(const Graph& g, int cap) {
    require_claw_free(g);
    if (cap > g.order()) cap = g.order();
    if (cap < 9) return std::nullopt;

    const auto triangles = all_triangles(g);
    for (const auto& ta : triangles) {
        const std::uint64_t mask_a = (1ull << ta[0]) | (1ull << ta[1]) | (1ull << ta[2]);
        for (const auto& tb : triangles) {
            const std::uint64_t mask_b = (1ull << tb[0]) | (1ull << tb[1]) | (1ull << tb[2]);
            if (mask_a & mask_b) continue;
            std::array<int, 3> perm = {0, 1, 2};
            do {
                BrousekSearch search(g, cap);
                search.a = ta;
                for (int i = 0; i < 3; ++i)
                    search.b[static_cast<std::size_t>(i)] = tb[perm[static_cast<std::size_t>(i)]];
                // Cross edges between the triangles decide each slot: an
                // a_i b_i edge forces the triangle connector, any other
                // edge rules this pairing out.
                bool viable = true;
                for (int i = 0; i < 3 && viable; ++i)
                    for (int j = 0; j < 3 && viable; ++j) {
                        const bool edge = g.adjacent(search.a[static_cast<std::size_t>(i)],
                                                     search.b[static_cast<std::size_t>(j)]);
                        if (i == j)
                            search.slot_t[static_cast<std::size_t>(i)] = edge;
                        else if (edge)
                            viable = false;
                    }
                if (!viable) continue;
                search.used = mask_a | mask_b;
                if (!search.slots(0)) continue;

                BrousekWitness witness;
                for (int i = 0; i < 3; ++i)
                    witness.spec.x[static_cast<std::size_t>(i)] =
                        search.slot_t[static_cast<std::size_t>(i)]
                            ? std::nullopt
                            : std::optional<int>(
                                  static_cast<int>(search.interior[static_cast<std::size_t>(i)].size()) + 2);
                auto& map = witness.embedding.map;
                map.assign(static_cast<std::size_t>(witness.spec.total_order()), -1);
                for (int i = 0; i < 3; ++i) {
                    map[static_cast<std::size_t>(i)] = search.a[static_cast<std::size_t>(i)];
                    map[static_cast<std::size_t>(3 + i)] = search.b[static_cast<std::size_t>(i)];
                }
                std::size_t next = 6;
                for (const auto& path : search.interior)
                    for (int w : path) map[next++] = w;
                return witness;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hefty triples
// ---------------------------------------------------------------------------

namespace {

bool hefty(const Graph& g, int v) { return 3 * g.degree(v) >= g.order() + 3; }

}  // namespace

HeftyCheck hefty_triple_check(const Graph& g, const HeftyTriple& t,
                              const RegionDecomposition& d) {
    for (int v : t.v)
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("hefty_triple_check: vertex out of range");
    if (t.v[0] == t.v[1] || t.v[0] == t.v[2] || t.v[1] == t.v[2])
        throw std::invalid_argument("hefty_triple_check: vertices must be distinct");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (g.adjacent(t.v[static_cast<std::size_t>(i)], t.v[static_cast<std::size_t>(j)]))
                throw std::invalid_argument(
                    "hefty_triple_check: vertices must be pairwise nonadjacent");
    if (associated(d, t.v[0], t.v[1]) || associated(d, t.v[0], t.v[2]))
        throw std::invalid_argument(
            "hefty_triple_check: v1 must be dissociated from v2 and from v3");
    if (std::popcount(g.neighbors(t.v[1]) & g.neighbors(t.v[2])) > 1)
        throw std::invalid_argument(
            "hefty_triple_check: v2 and v3 may share at most one neighbor");
    for (int v : t.v)
        if (!hefty(g, v)) return {true, v};
    return {false, -1};
}

Claim1Report claim1_sweep(const Graph& g) {
    require_claw_free(g);
    if (!is_two_connected(g))
        throw std::invalid_argument("claim1_sweep requires a 2-connected graph");
    const bool ham = g.order() <= 24 ? hamiltonian_dp(g) : hamilton_cycle(g).has_value();
    if (ham) throw std::invalid_argument("claim1_sweep requires a non-hamiltonian graph");

    const RegionDecomposition d = decompose(g);
    Claim1Report report;
    report.graph6 = encode_graph6(g);
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (associated(d, u, v)) continue;
            for (int w = v + 1; w < n; ++w) {
                if (associated(d, u, w) || associated(d, v, w)) continue;
                ++report.triples_checked;
                if (hefty(g, u) && hefty(g, v) && hefty(g, w))
                    report.violations.push_back({u, v, w});
            }
        }
    return report;
}

// ---------------------------------------------------------------------------
// Random corpora
// ---------------------------------------------------------------------------

namespace {

// True if vertex v is the centre of an induced claw in the adjacency rows.
bool claw_at(const std::array<std::uint64_t, Graph::max_order>& adj, int v) {
    const std::uint64_t nb = adj[static_cast<std::size_t>(v)];
    for (std::uint64_t mu = nb; mu; mu &= mu - 1) {
        const int u = std::countr_zero(mu);
        // Second leaf: a neighbour of v above u and non-adjacent to u.
        std::uint64_t mw = nb & ~adj[static_cast<std::size_t>(u)] &
                           ~(mu ^ (mu - 1));
        for (; mw; mw &= mw - 1) {
            const int w = std::countr_zero(mw);
            // Third leaf: non-adjacent to both u and w.
            const std::uint64_t third =
                nb & ~adj[static_cast<std::size_t>(u)] &
                ~adj[static_cast<std::size_t>(w)] &
                ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << w);
            if (third) return true;
        }
    }
    return false;
}

}  // namespace

Graph sample_claw_free(std::mt19937_64& rng, int n_min, int n_max) {
    if (n_min < 1 || n_min > n_max || n_max > Graph::max_order)
        throw std::invalid_argument("sample_claw_free: bad order range");
    const int n = std::uniform_int_distribution<int>(n_min, n_max)(rng);
    if (n >= 2 && (rng() & 1)) {
        // Line graph of a random bipartite root with exactly n edges.
        // Bipartite roots are triangle-free by construction, so no
        // rejection is needed and every target order is reachable.
        const int a = std::uniform_int_distribution<int>(
            2, std::min(6, n))(rng);
        const int b_min = (n + a - 1) / a;
        const int b = std::uniform_int_distribution<int>(
            b_min, b_min + 3)(rng);
        std::vector<std::pair<int, int>> slots;
        slots.reserve(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v) slots.emplace_back(u, a + v);
        std::shuffle(slots.begin(), slots.end(), rng);
        Graph h(a + b);
        for (int i = 0; i < n; ++i) h.add_edge(slots[static_cast<std::size_t>(i)].first,
                                               slots[static_cast<std::size_t>(i)].second);
        return line_graph(h).graph;
    }
    // Greedy random claw-free graph on exactly n vertices: visit vertex
    // pairs in random order and keep an edge whenever it does not create a
    // claw centred at either endpoint (a new claw must use the new edge).
    // A random per-graph attempt rate varies the density from sparse to
    // near-maximal claw-free.
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    const int attempt_rate = std::uniform_int_distribution<int>(1, 4)(rng);
    std::array<std::uint64_t, Graph::max_order> adj{};
    for (const auto& [u, v] : pairs) {
        if (static_cast<int>(rng() & 3) >= attempt_rate) continue;
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        if (claw_at(adj, u) || claw_at(adj, v)) {
            adj[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
            adj[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
        }
    }
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (std::uint64_t m = adj[static_cast<std::size_t>(u)]; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (v > u) g.add_edge(u, v);
        }
    return g;
}

Graph sample_net_free_claw_free(std::mt19937_64& rng, int n_min, int n_max) {
    const Pattern net = make_pattern(PatternKind::Net);
    for (;;) {
        Graph g = sample_claw_free(rng, n_min, n_max);
        if (is_free(g, net)) return g;
    }
}

}  // namespace clawham
