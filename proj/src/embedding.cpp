#include "weylmod/embedding.hpp"

#include <algorithm>
#include <limits>

namespace weylmod {

namespace {

void check_multiset(const ARQuiver& q, const ModMultiset& ms, const char* what) {
    for (const auto& [v, k] : ms.entries()) {
        q.check_vertex(v);
        if (!q.exists(v))
            throw ZeroModuleError(std::string(what) + " contains " + format_vertex_paren(v) +
                                  ", which names the zero module");
    }
}

} // namespace

std::vector<long long> E_values(long long alpha, long long beta, int m_max) {
    require(alpha >= 0 && beta >= 0, "recursion multiplicities must be nonnegative");
    require((alpha == 0) == (beta == 0), "recursion multiplicities must vanish together");
    require(m_max >= 0, "recursion index must be nonnegative");
    std::vector<long long> e;
    e.reserve(static_cast<size_t>(m_max) + 1);
    e.push_back(1);
    bool dead = false;
    for (int m = 1; m <= m_max; ++m) {
        long long val = 0;
        if (!dead) {
            if (m == 1) {
                val = alpha;
            } else {
                long long coef = (m % 2 == 0) ? beta : alpha;
                if (__builtin_mul_overflow(coef, e[static_cast<size_t>(m - 1)], &val) ||
                    __builtin_sub_overflow(val, e[static_cast<size_t>(m - 2)], &val))
                    throw ResourceError("recursion value overflow at index " + std::to_string(m));
            }
            ensure(val >= 0, "recursion dipped below zero before vanishing");
            if (val == 0) dead = true;
        }
        e.push_back(val);
    }
    return e;
}

long long E_rec(long long alpha, long long beta, int m) {
    return E_values(alpha, beta, m)[static_cast<size_t>(m)];
}

std::vector<std::optional<Vertex>> m_chain(const ARQuiver& q, Vertex m0, int j, int count) {
    q.check_vertex(m0);
    check_index(q.cartan(), j, "chain column");
    require(j != m0.i, "chain column must differ from the start column");
    require(count >= 1, "chain length must be >= 1");
    if (!q.exists(m0))
        throw ZeroModuleError("chain start " + format_vertex_paren(m0) + " names the zero module");
    require(m0.r >= 1 || j < m0.i,
            "chain from an injective start is only defined toward a smaller column");
    int s = m0.r, i = m0.i;
    int t = (j < i) ? s : s - 1;
    std::vector<std::optional<Vertex>> chain;
    chain.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        int l = k / 2;
        Vertex v = (k % 2 == 0) ? Vertex{s - l, i} : Vertex{t - l, j};
        if (v.r >= 0 && q.exists(v))
            chain.emplace_back(v);
        else
            chain.emplace_back(std::nullopt);
    }
    return chain;
}

InitResult init_state(const ARQuiver& q, const ModMultiset& M, const AvailabilityFn& avail,
                      bool record_trace) {
    check_multiset(q, M, "the embedded module");

    bool all_within = true;
    for (const auto& [v, k] : M.entries()) {
        long long u = avail(v);
        ensure(u >= 0, "availability must be nonnegative");
        if (k > u) {
            all_within = false;
            // An over-demanded injective can never be rewritten away.
            if (v.r == 0) return InitTerminalNo{v, k, u};
        }
    }
    if (all_within) return InitTerminalYes{M};

    SeqState st;
    for (const auto& [v, k] : M.entries()) {
        long long kept = std::min(k, avail(v));
        st.middle.add(v, kept);
        long long excess = k - kept;
        if (excess > 0) {
            ARSequence seq = q.ar_sequence_start(v);
            st.middle.add_all(seq.middle.scaled(excess));
            st.coker.add(seq.end, excess);
        }
    }
    ModMultiset common = ModMultiset::intersect(st.middle, st.coker);
    st.middle.remove_all(common);
    st.coker.remove_all(common);
    if (record_trace) st.trace.push_back(TraceStep{std::nullopt, 0, st.middle, st.coker});
    return st;
}

SeqState step_state(const ARQuiver& q, const SeqState& st, Vertex x, long long alpha,
                    bool record_trace) {
    ensure(st.middle.contains(x), "step on " + format_vertex_paren(x) + ": not in the middle term");
    SeqState out = st;
    out.middle.remove(x);
    ARSequence seq = q.ar_sequence_start(x);
    // Termination certificate: the step only introduces vertices strictly
    // below x, so the middle decreases in the multiset order.
    for (const auto& [v, k] : seq.middle.entries())
        ensure(v < x, "AR middle of " + format_vertex_paren(x) + " is not below it");
    ensure(seq.end < x, "tau-shift of " + format_vertex_paren(x) + " is not below it");

    ModMultiset cancelled = ModMultiset::intersect(out.coker, seq.middle);
    out.coker.remove_all(cancelled);
    ModMultiset added = seq.middle;
    added.remove_all(cancelled);
    out.middle.add_all(added);
    if (out.middle.contains(seq.end))
        out.middle.remove(seq.end);  // tau^{-1}x cancels against the middle
    else
        out.coker.add(seq.end);  // otherwise it joins the cokernel
    ensure(ModMultiset::intersect(out.middle, out.coker).empty(),
           "middle and cokernel share a summand after a step");
    if (record_trace) out.trace.push_back(TraceStep{x, alpha, out.middle, out.coker});
    return out;
}

Outcome run_embedding(const ARQuiver& q, const ModMultiset& M, const AvailabilityFn& avail,
                      const EngineOptions& opts) {
    InitResult ir = init_state(q, M, avail, opts.record_trace);
    if (auto* yes = std::get_if<InitTerminalYes>(&ir)) {
        std::vector<TraceStep> trace;
        if (opts.record_trace)
            trace.push_back(TraceStep{std::nullopt, 0, yes->middle, ModMultiset{}});
        return EmbedsOutcome{std::move(yes->middle), std::move(trace)};
    }
    if (auto* no = std::get_if<InitTerminalNo>(&ir))
        return NoEmbedOutcome{no->witness, no->required, no->available, {}};

    SeqState st = std::get<SeqState>(std::move(ir));
    for (size_t steps = 0;; ++steps) {
        std::vector<Vertex> eligible;
        for (const auto& [v, k] : st.middle.entries()) {
            long long u = avail(v);
            if (k <= u) continue;
            if (v.r == 0)  // over-demanded injective: no rewriting can help
                return NoEmbedOutcome{v, k, u, std::move(st.trace)};
            eligible.push_back(v);
        }
        if (eligible.empty())  // middle fits into the target
            return EmbedsOutcome{std::move(st.middle), std::move(st.trace)};
        Vertex x = opts.choice ? opts.choice(eligible) : eligible.front();
        ensure(std::find(eligible.begin(), eligible.end(), x) != eligible.end(),
               "choice rule returned an ineligible vertex");
        if (steps >= opts.step_cap)
            throw ResourceError("embedding run exceeded the step cap of " +
                                std::to_string(opts.step_cap));
        st = step_state(q, st, x, avail(x) + 1, opts.record_trace);
    }
}

Outcome decide_embedding(const ARQuiver& q, const ModMultiset& M, const ModMultiset& U,
                         const EngineOptions& opts) {
    check_multiset(q, U, "the target module");
    return run_embedding(
        q, M, [&U](Vertex v) { return U.count(v); }, opts);
}

Outcome embeds_into_subcat(const ARQuiver& q, Vertex m, const std::set<Vertex>& excluded,
                           const EngineOptions& opts) {
    q.check_vertex(m);
    if (!q.exists(m))
        throw ZeroModuleError("module " + format_vertex_paren(m) + " names the zero module");
    if (!excluded.contains(m)) {
        // m lies in the subcategory; the identity is the embedding.
        return EmbedsOutcome{ModMultiset{m}, {}};
    }
    AvailabilityFn avail = [&excluded](Vertex v) {
        return excluded.contains(v) ? 0 : std::numeric_limits<long long>::max();
    };
    return run_embedding(q, ModMultiset{m}, avail, opts);
}

RecSeqResult recseq(const ARQuiver& q, Vertex m0, int j, int m) {
    q.check_vertex(m0);
    check_index(q.cartan(), j, "chain column");
    require(j != m0.i, "chain column must differ from the start column");
    require(m >= 1, "stage index must be >= 1");
    long long alpha = q.arrow_mult(m0.i, j);
    long long beta = q.arrow_mult(j, m0.i);

    RecSeqResult out;
    out.e = E_values(alpha, beta, m);
    require(out.e[static_cast<size_t>(m - 1)] > 0,
            "recursion value E(" + std::to_string(m - 1) + ") vanished: no sequence at stage " +
                std::to_string(m));
    out.chain = m_chain(q, m0, j, m + 2);
    require(out.chain[static_cast<size_t>(m + 1)].has_value(),
            "chain entry M_" + std::to_string(m + 1) + " is zero: no sequence at stage " +
                std::to_string(m));
    for (int k = 0; k <= m - 1; ++k) {
        const auto& mk = out.chain[static_cast<size_t>(k)];
        require(mk.has_value() && mk->r >= 1,
                "chain entry M_" + std::to_string(k) + " cannot be replaced");
    }
    require(out.e[static_cast<size_t>(m)] == 0 || out.chain[static_cast<size_t>(m)].has_value(),
            "chain entry M_" + std::to_string(m) + " is zero but its multiplicity is not");

    for (int k = 0; k <= m - 1; ++k) {
        ARSequence seq = q.ar_sequence_start(*out.chain[static_cast<size_t>(k)]);
        ModMultiset sides = seq.middle;
        if (const auto& next = out.chain[static_cast<size_t>(k + 1)]; next.has_value()) {
            long long expected = (k % 2 == 0) ? alpha : beta;
            ensure(sides.count(*next) == expected,
                   "chain vertex M_" + std::to_string(k + 1) +
                       " has unexpected multiplicity in the AR middle of M_" + std::to_string(k));
            sides.remove(*next, expected);
        }
        out.side_sum.add_all(sides.scaled(out.e[static_cast<size_t>(k)]));
    }
    out.middle = out.side_sum;
    if (out.e[static_cast<size_t>(m)] > 0)
        out.middle.add(*out.chain[static_cast<size_t>(m)], out.e[static_cast<size_t>(m)]);
    out.coker.add(*out.chain[static_cast<size_t>(m + 1)], out.e[static_cast<size_t>(m - 1)]);
    return out;
}

} // namespace weylmod
