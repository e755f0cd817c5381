#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "rsc/complex.hpp"
#include "rsc/homology.hpp"
#include "rsc/point_process.hpp"

namespace rsc {

/// Degree of a k0-simplex: the dimension of its largest stored coface
/// (k0 itself when none is larger).
using DegreeTable = std::unordered_map<Simplex, int, SimplexHash>;

/**
 * Vertex indices: the minimum degree over the k0-simplices containing the
 * vertex, 0 when there are none, -1 when marked. Marks distinguish critical
 * vertices from vertices blocked after a failed trial removal (temporarily
 * in the general mode, permanently under the full domain hypothesis).
 */
struct IndexTable {
    enum class Mark : std::uint8_t { none, critical, blocked_temp, blocked_perm };
    std::map<VertexId, int> index;
    std::map<VertexId, Mark> mark;

    int value(VertexId v) const {
        auto it = index.find(v);
        return it == index.end() ? 0 : it->second;
    }
    Mark mark_of(VertexId v) const {
        auto it = mark.find(v);
        return it == mark.end() ? Mark::none : it->second;
    }
    bool is_candidate(VertexId v) const { return mark_of(v) == Mark::none; }
};

struct OpCounters {
    std::uint64_t degree_inclusion_tests = 0;
    std::uint64_t index_scan_steps = 0;
    std::uint64_t simplices_deleted = 0;
    std::uint64_t trial_removals = 0;
    std::uint64_t rejected_trials = 0;
    std::uint64_t betti_evaluations = 0;
    std::uint64_t simplices_restored = 0;

    /// The total the complexity bound is checked against.
    std::uint64_t audited_total() const {
        return degree_inclusion_tests + index_scan_steps + simplices_deleted;
    }
};

struct ReduceOptions {
    bool full_domain = false;
    FieldChoice field = FieldChoice::rationals();
    /// When set, incremental degree/index tables are checked against full
    /// recomputation after every confirmed removal (throws on mismatch).
    bool audit_tables = false;
};

struct StepRecord {
    VertexId vertex = 0;
    bool accepted = false;
    std::vector<long long> betti; // of the trial complex
};

struct ReductionReport {
    int format_version = 1;
    int k0 = 1;
    bool full_domain = false;
    FieldChoice field;
    std::uint64_t seed = 0;

    std::vector<long long> initial_betti;
    std::vector<std::size_t> initial_s_counts;
    std::size_t initial_vertices = 0;
    int initial_clique_number = 0;
    std::vector<VertexId> critical;
    std::map<int, std::size_t> e_histogram; // initial index -> non-critical count
    int initial_i_max = 0;

    std::vector<StepRecord> draws;
    std::vector<VertexId> removal_order;
    std::size_t removed_count = 0;
    std::size_t bound_lower = 0;
    std::size_t bound_upper = 0;
    std::vector<VertexId> rejected; // blocked when the loop stopped
    bool warned_index_zero = false; // index-0 vertices seen under full domain

    OpCounters counters;

    std::vector<std::vector<VertexId>> final_maximal;
    std::vector<std::size_t> final_s_counts;
    std::vector<long long> final_betti;

    SimplicialComplex rebuild_final(std::size_t cap = SimplicialComplex::kDefaultSimplexCap) const;
};

DegreeTable compute_degrees(const SimplicialComplex& cx, int k0,
                            OpCounters* counters = nullptr);

IndexTable compute_indices(const SimplicialComplex& cx, const DegreeTable& degrees,
                           int k0, OpCounters* counters = nullptr);

/// Marks critical vertices with index -1. Throws ValidationError when a
/// critical id is not a vertex of the complex.
void mark_critical(IndexTable& table, const SimplicialComplex& cx,
                   const std::set<VertexId>& critical);

/**
 * Incremental table maintenance after a confirmed removal; the result is
 * identical to recomputing both tables from scratch. Recomputed indices
 * cover the vertices of maximum index, the temporarily blocked ones (their
 * marks are cleared unless permanent), and the vertices incident to a
 * k0-simplex whose largest coface was destroyed.
 */
void update_tables_after_removal(const SimplicialComplex& cx, VertexId removed,
                                 int i_max_before,
                                 const std::vector<Simplex>& removed_simplices,
                                 DegreeTable& degrees, IndexTable& indices, int k0,
                                 OpCounters* counters = nullptr);

/**
 * One reduction run, stepwise. Draws a vertex of maximum index, trial-removes
 * it, restores and blocks it if any of beta_0..beta_{k0-1} changed, confirms
 * it otherwise. Stops when the maximum index falls below k0 (below k0 + 1
 * under the full domain option).
 */
class Reducer {
public:
    Reducer(SimplicialComplex cx, std::set<VertexId> critical, int k0,
            ReduceOptions options, std::uint64_t seed);

    bool done() const;
    StepRecord step();
    ReductionReport finish();

    const SimplicialComplex& complex() const { return m_cx; }
    const DegreeTable& degrees() const { return m_deg; }
    const IndexTable& indices() const { return m_idx; }
    const BettiVector& initial_betti() const { return m_beta0; }
    const OpCounters& counters() const { return m_ctr; }

private:
    int current_i_max() const;
    int stop_threshold() const { return m_opt.full_domain ? m_k0 + 1 : m_k0; }
    void audit_against_full_recomputation() const;

    SimplicialComplex m_cx;
    std::set<VertexId> m_critical;
    int m_k0;
    ReduceOptions m_opt;
    Rng m_rng;
    DegreeTable m_deg;
    IndexTable m_idx;
    BettiVector m_beta0;
    OpCounters m_ctr;
    ReductionReport m_report;
};

ReductionReport reduce(const SimplicialComplex& cx, const std::set<VertexId>& critical,
                       int k0, const ReduceOptions& options, std::uint64_t seed);

/// Bounds on the number of removed vertices from the initial index
/// histogram: sum over k = k0+1..i_max of [E_k nonempty] and of |E_k|.
std::pair<std::size_t, std::size_t> removal_bounds(
    const std::map<int, std::size_t>& e_histogram, int k0, int i_max);

/**
 * True iff every non-critical vertex of the final complex is needed:
 * its single removal changes some beta_0..beta_{k0-1}, or it has index 0.
 * For full-domain reports the relaxed stop rule applies: vertices of index
 * up to k0 are retained by construction and accepted as needed.
 */
bool verify_nash(const ReductionReport& report, const SimplicialComplex& initial,
                 int k0);

/// True iff every initial vertex is in the final vertex set or adjacent to
/// it in the initial 1-skeleton. Requires a coverage run (k0 = 2, full
/// domain); anything else is a precondition error.
bool verify_dominating(const ReductionReport& report, const SimplicialComplex& initial);

} // namespace rsc
