#pragma once

#include <set>
#include <vector>

#include "weylmod/arquiver.hpp"
#include "weylmod/cartan.hpp"
#include "weylmod/word.hpp"

namespace weylmod {

/// Indecomposable representation of a path-shaped quiver: one-dimensional
/// spaces on the path positions lo..hi (1-based along the path), zero
/// elsewhere.  Arrow maps are the identity when both endpoints are
/// supported and zero otherwise.
struct IntervalRep {
    int lo = 1;
    int hi = 1;

    int length() const { return hi - lo + 1; }
    bool covers(int pos) const { return lo <= pos && pos <= hi; }

    auto operator<=>(const IntervalRep&) const = default;
};

/// Basis of the space of representation morphisms M -> N between two
/// direct sums of intervals.  Solved exactly over the rationals and
/// scaled to primitive integer matrices; every basis element satisfies
/// all arrow commutation constraints with zero residual.
struct HomSpace {
    /// Dimensions of M and N at each vertex label (index v-1).
    std::vector<int> dim_m;
    std::vector<int> dim_n;
    /// basis[k][v-1]: row-major (dim_n[v-1] x dim_m[v-1]) matrix of the
    /// k-th basis morphism at vertex label v.
    std::vector<std::vector<std::vector<long long>>> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
};

/// Independent ground truth for quivers whose underlying graph is a path:
/// explicit interval representations, Hom spaces by exact linear algebra,
/// monomorphism existence by finite-field search, and brute-force
/// submodule-closedness.  Used only to validate the combinatorial engine,
/// so it shares no code with the almost-split-sequence rewriting.
class LinearOracle {
public:
    /// Accepts quiver input whose underlying graph is a path with single
    /// arrows; anything else is an input error.
    explicit LinearOracle(CartanData cartan);

    const ARQuiver& quiver() const { return quiver_; }
    int rank() const { return quiver_.rank(); }

    /// Vertex labels read along the path, starting from its
    /// smaller-labelled endpoint.
    const std::vector<int>& path_order() const { return order_; }
    /// 1-based path position of a vertex label.
    int position(int vertex_label) const;

    /// The unique interval whose indicator equals the dimension vector of
    /// grid vertex v (path-quiver dimension vectors are exactly the
    /// interval indicators).
    IntervalRep interval_of_vertex(Vertex v) const;

    /// Interval summands of a multiset of grid vertices, with
    /// multiplicities expanded.
    std::vector<IntervalRep> intervals_of(const ModMultiset& m) const;

    /// Exact basis of Hom(M, N) for direct sums of intervals.
    HomSpace hom_basis(const std::vector<IntervalRep>& m_summands,
                       const std::vector<IntervalRep>& n_summands) const;

    /// Whether some morphism M -> N is injective at every vertex.
    /// Decided by enumerating coefficient vectors of the Hom basis over
    /// the fields with 2 and 3 elements and checking vertex-wise ranks;
    /// the two fields must agree.  Hom dimensions above
    /// kHomEnumerationCap raise a resource error.
    bool has_mono(const std::vector<IntervalRep>& m_summands,
                  const std::vector<IntervalRep>& n_summands) const;

    /// Whether the cofinite subcategory excluding `excluded` is closed
    /// under submodules: for each excluded M, tries has_mono(M, U) over
    /// all multisets U of non-excluded indecomposables with per-summand
    /// multiplicity <= length(M) + bound_bump.  Closed iff every test
    /// fails.  Needs finite representation type.
    bool brute_closed(const std::set<Vertex>& excluded, int bound_bump = 0) const;

    static constexpr int kHomEnumerationCap = 12;

private:
    ARQuiver quiver_;
    std::vector<int> order_;     // vertex labels along the path
    std::vector<int> position_;  // position_[v-1] = path position of label v
};

} // namespace weylmod
