#ifndef CLAWHAM_VERIFY_HPP
#define CLAWHAM_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <random>

#include "clawham/families.hpp"
#include "clawham/graph.hpp"
#include "clawham/patterns.hpp"
#include "clawham/regions.hpp"

namespace clawham {

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

// Hypothesis -> hamiltonian implications that can be checked per graph.
// Every family concludes "g is hamiltonian"; they differ in the hypothesis:
//   dirac                 n >= 3 and 2 d(v) >= n for all v
//   matthews_sumner       2-connected, claw-free, 3 d(v) >= n - 2 for all v
//   bedrossian_pair(S)    2-connected, claw-free, no induced S
//   fujisawa_yamashita    2-connected, claw-free, end-degree bound k = -2 for Z1
//   broersma_conjecture   2-connected, claw-free, end-degree bound k = -2 for N
//   problem_1_5(H)        2-connected, claw-free, end-degree bound k = -2, H in {P6, N, W}
//   thm_main(H)           2-connected, claw-free, end-degree bound k = 3
//   thm_iff_list(H)       same as thm_main, H restricted to the eight listed kinds
//   phi_ham(H,k)          2-connected, claw-free, end-degree bound with explicit k
enum class StatementFamily {
    Dirac,
    MatthewsSumner,
    BedrossianPair,
    FujisawaYamashita,
    BroersmaConjecture,
    Problem15,
    ThmMain,
    ThmIffList,
    PhiHam,
};

struct Statement {
    StatementFamily family;
    std::optional<Pattern> pattern;
    int k = 0;       // end-degree constant for the phi-style hypotheses
    std::string id;  // canonical text form, e.g. "thm_main(N)" or "phi_ham(Z2,-2)"
};

// Parses ids of the forms listed above; pattern names are case-insensitive.
Statement make_statement(const std::string& id);

// The fixed ids plus one representative per parametrized family, for help
// output and registry tests.
std::vector<std::string> statement_catalog();

// ---------------------------------------------------------------------------
// Per-graph verdicts
// ---------------------------------------------------------------------------

enum class VerdictStatus { Vacuous, Confirmed, Counterexample };

struct Verdict {
    std::string graph6;
    bool hypothesis_holds = false;
    std::optional<bool> conclusion_holds;  // evaluated only when the hypothesis holds
    VerdictStatus status = VerdictStatus::Vacuous;
};

// Caches the expensive per-graph facts so several statements can be
// evaluated against one graph without repeating work.
struct EvalCache {
    std::optional<bool> claw_free;
    std::optional<bool> two_connected;
    std::optional<bool> hamiltonian;
    struct PatternMemo {
        int key;                      // pattern kind/param fingerprint
        std::uint64_t computed = 0;   // vertices with a cached answer
        std::uint64_t is_end = 0;     // cached answers
    };
    std::vector<PatternMemo> memo;

    void reset();
    bool end_vertex(const Graph& g, const Pattern& p, int v);
};

Verdict check_statement(const Graph& g, const Statement& s);
Verdict check_statement(const Graph& g, const Statement& s, EvalCache& cache);

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

// Exhaustive corpus: all labeled graphs with n_min <= n <= n_max that pass
// the filter chain.
struct EnumerationCorpus {
    int n_min = 1;
    int n_max = 7;
    std::vector<GraphFilter> filters;

    std::string description() const;
};

struct Report {
    std::string statement_id;
    std::string corpus;
    std::uint64_t vacuous = 0;
    std::uint64_t confirmed = 0;
    std::uint64_t counterexample_count = 0;
    std::vector<std::string> counterexamples;  // graph6 tokens, sorted
    int n_max = 0;
    std::optional<std::uint64_t> seed;

    // Canonical JSON rendering.  Scheduling facts (worker count) are
    // deliberately not part of it: reports from runs with different worker
    // counts must be byte-identical.
    std::string to_json() const;
};

// Evaluates the statement on every corpus graph.  Work is split into chunks
// handed to `workers` threads; counts are merged and counterexamples sorted,
// so the report does not depend on scheduling.
Report sweep(const EnumerationCorpus& corpus, const Statement& s, int workers = 1);

// Same, evaluating several statements in one pass over the corpus.
std::vector<Report> sweep_many(const EnumerationCorpus& corpus,
                               const std::vector<Statement>& statements, int workers = 1);

// Sweep over a stream of graph6 tokens, one per line (blank lines and lines
// starting with '#' are skipped).  Malformed lines raise FormatError with
// the 1-based line number in byte_offset.
Report sweep_stream(std::istream& in, const std::string& corpus_name, const Statement& s,
                    int workers = 1);

// ---------------------------------------------------------------------------
// Structure witnesses
// ---------------------------------------------------------------------------

struct BrousekWitness {
    BrousekSpec spec;
    Embedding embedding;  // indices follow the brousek() vertex layout
};

// Searches g (claw-free, ClawError otherwise) for an induced copy of a
// two-triangle family member with total order <= cap.  Triangle pairs are
// tried in lexicographic order and each slot tries the triangle connector
// before paths of increasing length, so the first witness is deterministic.
std::optional<BrousekWitness> brousek_witness(const Graph& g, int cap);

// A triple of pairwise nonadjacent vertices; "hefty" means 3 d(v) >= n + 3.
struct HeftyTriple {
    std::array<int, 3> v;
};

struct HeftyCheck {
    bool ok = false;
    int non_hefty_vertex = -1;  // lowest-position witness when ok
};

// Checks the side conditions (v1 dissociated from v2 and v3, and v2, v3
// with at most one common neighbor) and then confirms some v_i is not
// hefty.  Violated preconditions raise invalid_argument naming the
// condition; an all-hefty triple yields ok = false.
HeftyCheck hefty_triple_check(const Graph& g, const HeftyTriple& t,
                              const RegionDecomposition& d);

struct Claim1Report {
    std::string graph6;
    std::uint64_t triples_checked = 0;
    std::vector<std::array<int, 3>> violations;  // all-hefty triples (expected none)
};

// Enumerates every pairwise dissociated triple of g, which must be
// claw-free, 2-connected, and non-hamiltonian (invalid_argument otherwise),
// and records the triples where all three vertices are hefty.
Claim1Report claim1_sweep(const Graph& g);

// ---------------------------------------------------------------------------
// Random corpora
// ---------------------------------------------------------------------------

// A random claw-free graph with order in [n_min, n_max]: half the time the
// line graph of a random triangle-free graph, otherwise a sparse random
// graph resampled until claw-free.
Graph sample_claw_free(std::mt19937_64& rng, int n_min, int n_max);

// As above, additionally resampled until net-free.
Graph sample_net_free_claw_free(std::mt19937_64& rng, int n_min, int n_max);

}  // namespace clawham

#endif  // CLAWHAM_VERIFY_HPP
