#pragma once

#include <functional>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "weylmod/arquiver.hpp"

namespace weylmod {

/// Values E(0..m_max) of the recursion
///   E(0) = 1, E(1) = alpha,
///   E(2m) = beta * E(2m-1) - E(2m-2),  E(2m+1) = alpha * E(2m) - E(2m-1),
/// with the convention that the sequence stays at zero once it reaches
/// zero.  For alpha * beta <= 3 it vanishes from index m_ij - 1 on, where
/// m_ij is the braid order derived from the product; for alpha * beta >= 4
/// it stays positive forever.
std::vector<long long> E_values(long long alpha, long long beta, int m_max);
long long E_rec(long long alpha, long long beta, int m);

/// The chain M_0 = (s,i), M_1 = (t,j), M_2 = (s-1,i), M_3 = (t-1,j), ...
/// where t = s when j < i and t = s-1 when j > i: each entry is the
/// j-resp.-i-column neighbour of the previous one in its almost split
/// sequence.  Entries whose row is negative or which name no module are
/// reported as nullopt; later entries may still be present.
std::vector<std::optional<Vertex>> m_chain(const ARQuiver& q, Vertex m0, int j, int count);

/// One record of a rewriting trajectory: which vertex was replaced (none
/// for the initialization), the multiplicity exponent alpha that made it
/// eligible, and the state after the step.
struct TraceStep {
    std::optional<Vertex> chosen;
    long long alpha = 0;
    ModMultiset middle;
    ModMultiset coker;
};

/// State of the rewriting run: the middle term and the cokernel of the
/// exact sequence built so far.  The two never share a vertex.
struct SeqState {
    ModMultiset middle;
    ModMultiset coker;
    std::vector<TraceStep> trace;
};

/// M embeds outright: every summand was available.
struct InitTerminalYes {
    ModMultiset middle;
};

/// An injective summand of M is demanded more often than available; no
/// rewriting can fix that.
struct InitTerminalNo {
    Vertex witness;
    long long required = 0;
    long long available = 0;
};

using InitResult = std::variant<SeqState, InitTerminalYes, InitTerminalNo>;

/// How many copies of a vertex the target provides.  Concrete multisets
/// return counts; subcategories return 0 for excluded vertices and
/// LLONG_MAX for members.
using AvailabilityFn = std::function<long long(Vertex)>;

/// Picks the next vertex to replace from the eligible ones (sorted
/// ascending, never empty).  The default takes the smallest.
using ChoiceFn = std::function<Vertex(const std::vector<Vertex>&)>;

struct EngineOptions {
    size_t step_cap = 10'000;
    bool record_trace = true;
    ChoiceFn choice;  // empty = smallest eligible vertex
};

/// Initialization: summands of M available in the target stay in the
/// middle (greedily matched with multiplicity); each excess copy of a
/// non-injective summand is replaced by its AR middle term, with the
/// tau^{-1}-shift added to the cokernel; common middle/cokernel summands
/// cancel.  Excess copies of an injective summand end the run.
InitResult init_state(const ARQuiver& q, const ModMultiset& M, const AvailabilityFn& avail,
                      bool record_trace = true);

/// One rewriting step: remove one copy of x from the middle, merge in the
/// AR middle Z of x after cancelling Z against the cokernel, then cancel
/// tau^{-1}x against a middle copy if one is present, else add it to the
/// cokernel.  Every vertex this introduces is strictly smaller than x,
/// which is what makes the rewriting terminate.
SeqState step_state(const ARQuiver& q, const SeqState& st, Vertex x, long long alpha,
                    bool record_trace = true);

struct EmbedsOutcome {
    ModMultiset final_middle;
    std::vector<TraceStep> trace;
};

struct NoEmbedOutcome {
    Vertex witness;  // injective, over-demanded
    long long required = 0;
    long long available = 0;
    std::vector<TraceStep> trace;
};

using Outcome = std::variant<EmbedsOutcome, NoEmbedOutcome>;

inline bool embeds(const Outcome& o) { return std::holds_alternative<EmbedsOutcome>(o); }

/// Drive init_state/step_state against an availability function until the
/// middle fits (Embeds) or an injective vertex is over-demanded (NoEmbed).
/// A vertex is eligible for replacement while its middle multiplicity
/// exceeds its availability.
Outcome run_embedding(const ARQuiver& q, const ModMultiset& M, const AvailabilityFn& avail,
                      const EngineOptions& opts = {});

/// Is there a monomorphism M >-> U of the named multisets?
Outcome decide_embedding(const ARQuiver& q, const ModMultiset& M, const ModMultiset& U,
                         const EngineOptions& opts = {});

/// Is there a monomorphism from m into some object of the cofinite
/// subcategory that excludes exactly `excluded`?  Members act as
/// unlimited supply; for Embeds the final middle is a concrete witness
/// object of the subcategory.
Outcome embeds_into_subcat(const ARQuiver& q, Vertex m, const std::set<Vertex>& excluded,
                           const EngineOptions& opts = {});

/// Closed form of the trajectory that always replaces the current chain
/// vertex: after stage m the state is
///   middle = M_m^{E(m)} + U_m,   coker = M_{m+1}^{E(m-1)},
/// where U_m collects the E(k)-weighted side summands (AR middles of the
/// chain vertices minus the chain itself) for k < m.
struct RecSeqResult {
    std::vector<std::optional<Vertex>> chain;  // M_0 .. M_{m+1}
    std::vector<long long> e;                  // E(0) .. E(m)
    ModMultiset side_sum;                      // U_m
    ModMultiset middle;
    ModMultiset coker;
};

RecSeqResult recseq(const ARQuiver& q, Vertex m0, int j, int m);

} // namespace weylmod
