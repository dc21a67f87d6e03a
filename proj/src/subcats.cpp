#include "weylmod/subcats.hpp"

#include <algorithm>
#include <map>

namespace weylmod {

namespace {

void check_excluded(const ARQuiver& q, const std::set<Vertex>& excluded) {
    for (Vertex v : excluded) {
        q.check_vertex(v);
        if (!q.exists(v))
            throw ZeroModuleError("excluded vertex " + format_vertex_paren(v) +
                                  " names the zero module");
    }
}

} // namespace

CofiniteSubcat subcat_of_word(const ARQuiver& q, const Word& w) {
    for (int letter : w) check_index(q.cartan(), letter, "word letter");
    CofiniteSubcat c;
    for (Vertex v : rho(w)) {
        if (q.exists(v))
            c.excluded.insert(v);
        else
            c.dropped = true;
    }
    return c;
}

Realizability word_of_excluded_set(const ARQuiver& q, const std::set<Vertex>& excluded) {
    check_excluded(q, excluded);
    Realizability out;
    Word w;
    w.reserve(excluded.size());
    std::optional<Vertex> prev;
    for (Vertex v : excluded) {  // set order is the grid order
        int expected = !prev ? 0 : (v.i > prev->i ? prev->r : prev->r + 1);
        if (v.r != expected) {
            out.violation = NotRealizable{prev, v};
            return out;
        }
        w.push_back(v.i);
        prev = v;
    }
    out.word = std::move(w);
    return out;
}

ClosureReport is_submodule_closed(const ARQuiver& q, const CofiniteSubcat& c,
                                  const EngineOptions& opts) {
    check_excluded(q, c.excluded);
    EngineOptions run = opts;
    run.record_trace = false;
    ClosureReport report;
    for (Vertex m : c.excluded) {
        Outcome o = embeds_into_subcat(q, m, c.excluded, run);
        if (auto* yes = std::get_if<EmbedsOutcome>(&o)) {
            for (const auto& [v, k] : yes->final_middle.entries())
                ensure(!c.excluded.contains(v),
                       "embedding certificate contains the excluded vertex " +
                           format_vertex_paren(v));
            report.witnesses.push_back(ClosureWitness{m, std::move(yes->final_middle)});
        } else {
            const auto& no = std::get<NoEmbedOutcome>(o);
            ensure(no.witness.r == 0 && no.required > no.available,
                   "non-embedding witness is not an over-demanded injective");
        }
    }
    report.closed = report.witnesses.empty();
    return report;
}

bool prefix_leftmost_check(const Word& w, LeftmostCache& cache) {
    Word prefix;
    prefix.reserve(w.size());
    for (int letter : w) {
        prefix.push_back(letter);
        if (cache.leftmost(prefix) != prefix) return false;
    }
    return true;
}

BijectionReport verify_bijection(const CartanData& cartan, const BijectionOptions& opts) {
    require(opts.max_len >= 0, "word length bound must be nonnegative");
    BijectionReport report;
    ARQuiver q(cartan);
    LeftmostCache cache(cartan, opts.bfs_node_cap);
    EngineOptions engine;
    engine.step_cap = opts.step_cap;
    engine.record_trace = false;

    int max_len = opts.max_len;
    // A finite grid means a finite group: extend the sweep to all of it.
    if (q.all_vertices().has_value()) {
        WeylEnumeration en = enumerate_weyl(cartan, opts.element_cap);
        if (en.complete) {
            report.finite_complete = true;
            report.weyl_size = static_cast<long long>(en.elements.size());
            max_len = std::max(max_len, en.max_length);
        }
    }

    auto fail = [&report](const Word& w, const std::string& kind) {
        report.ok = false;
        if (!report.violation) report.violation = BijectionViolation{w, kind};
    };

    std::map<std::set<Vertex>, Word> leftmost_by_set;
    int n = cartan.rank();
    for (int len = 0; len <= max_len; ++len) {
        Word w(static_cast<size_t>(len), 1);
        for (;;) {
            ++report.words_checked;
            CofiniteSubcat c = subcat_of_word(q, w);
            bool left = cache.is_leftmost(w);
            if (c.dropped) {
                ++report.dropped_words;
                // A leftmost word must embed inside the grid.
                if (left) fail(w, "leftmost word maps to a zero module");
            } else {
                Realizability real = word_of_excluded_set(q, c.excluded);
                if (!real.word || *real.word != w)
                    fail(w, "grid embedding does not round-trip");
                ClosureReport closure = is_submodule_closed(q, c, engine);
                if (closure.closed != left)
                    fail(w, closure.closed ? "closed subcategory from a non-leftmost word"
                                           : "leftmost word with a non-closed subcategory");
                if (closure.closed) ++report.closed_count;
                if (left) {
                    ++report.leftmost_count;
                    auto [it, fresh] = leftmost_by_set.emplace(c.excluded, w);
                    if (!fresh) fail(w, "two leftmost words share one excluded set: also " +
                                            format_word(it->second));
                    if (opts.build_table) report.table.emplace_back(w, c.excluded);
                }
            }
            // next word of this length
            int k = len - 1;
            while (k >= 0 && w[static_cast<size_t>(k)] == n) {
                w[static_cast<size_t>(k)] = 1;
                --k;
            }
            if (k < 0) break;
            ++w[static_cast<size_t>(k)];
        }
    }

    if (report.finite_complete) {
        if (report.leftmost_count != report.weyl_size)
            fail(Word{}, "leftmost word count " + std::to_string(report.leftmost_count) +
                             " does not match group order " + std::to_string(report.weyl_size));
        if (report.closed_count != report.leftmost_count)
            fail(Word{}, "closed subcategory count " + std::to_string(report.closed_count) +
                             " does not match leftmost word count " +
                             std::to_string(report.leftmost_count));
    }
    return report;
}

SubalgebraRestriction restrict_to_subalgebra(const ARQuiver& q, const std::vector<int>& J,
                                             const CofiniteSubcat& c) {
    const CartanData& big = q.cartan();
    require(!J.empty(), "subalgebra restriction needs at least one vertex");
    std::vector<int> cols = J;
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    require(cols.size() == J.size(), "subalgebra vertex list has duplicates");
    for (int i : cols) check_index(big, i, "subalgebra vertex");

    std::vector<int> pos(static_cast<size_t>(big.rank()) + 1, 0);  // old column -> new, 0 = absent
    for (size_t k = 0; k < cols.size(); ++k) pos[static_cast<size_t>(cols[k])] = static_cast<int>(k) + 1;

    check_excluded(q, c.excluded);
    for (Vertex v : c.excluded)
        require(pos[static_cast<size_t>(v.i)] != 0,
                "excluded vertex " + format_vertex_paren(v) +
                    " lies outside the subalgebra columns");

    // Build the restricted datum.
    std::optional<CartanData> sub;
    std::vector<ValuationOverride> valuation;
    if (big.mode() == CartanMode::Quiver) {
        std::vector<Arrow> arrows;
        for (const Arrow& a : big.arrows())
            if (pos[static_cast<size_t>(a.src)] != 0 && pos[static_cast<size_t>(a.dst)] != 0)
                arrows.push_back(Arrow{pos[static_cast<size_t>(a.src)], pos[static_cast<size_t>(a.dst)]});
        sub = CartanData::from_quiver(static_cast<int>(cols.size()), std::move(arrows));
    } else {
        std::vector<std::vector<int>> m(cols.size(), std::vector<int>(cols.size()));
        for (size_t a = 0; a < cols.size(); ++a)
            for (size_t b = 0; b < cols.size(); ++b) m[a][b] = big.cartan(cols[a], cols[b]);
        sub = CartanData::from_matrix(m);
        // Carry over redistributed arrow multiplicities between J-columns.
        for (size_t a = 0; a < cols.size(); ++a) {
            for (size_t b = a + 1; b < cols.size(); ++b) {
                int i = cols[a], j = cols[b];
                if (!big.edge(i, j)) continue;
                long long aij = q.arrow_mult(i, j), aji = q.arrow_mult(j, i);
                if (aij != -big.cartan(i, j) || aji != -big.cartan(j, i))
                    valuation.push_back(ValuationOverride{static_cast<int>(a) + 1,
                                                          static_cast<int>(b) + 1,
                                                          static_cast<int>(aij),
                                                          static_cast<int>(aji)});
            }
        }
    }

    ARQuiver sub_q(*sub, valuation);
    CofiniteSubcat mapped;
    bool dropped = false;
    for (Vertex v : c.excluded) {
        Vertex image{v.r, pos[static_cast<size_t>(v.i)]};
        if (sub_q.exists(image))
            mapped.excluded.insert(image);
        else
            dropped = true;
    }
    mapped.dropped = c.dropped || dropped;
    return SubalgebraRestriction{std::move(*sub), std::move(valuation), std::move(mapped), dropped,
                                 std::move(cols)};
}

} // namespace weylmod
