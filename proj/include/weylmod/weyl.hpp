#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "weylmod/word.hpp"

namespace weylmod {

/// A Weyl-group element represented by its integer matrix on the root
/// lattice: the generator s_i sends the basis vector alpha_j to
/// alpha_j - c_ij * alpha_i.  This representation is faithful for every
/// generalized Cartan datum, so matrix equality decides group equality.
class WeylElement {
public:
    static WeylElement identity(int n);
    static WeylElement generator(const CartanData& cartan, int i);

    int rank() const { return n_; }

    WeylElement operator*(const WeylElement& rhs) const;

    /// Column j (1-based) of the matrix: the image of alpha_j.
    std::vector<long long> column(int j) const;

    bool is_identity() const;

    auto operator<=>(const WeylElement&) const = default;

private:
    WeylElement(int n, std::vector<long long> a) : n_(n), a_(std::move(a)) {}

    int n_ = 0;
    std::vector<long long> a_;  // n x n, row-major
};

/// Product s_{i_1} ... s_{i_m} of the generators named by `w`.
WeylElement element_of(const Word& w, const CartanData& cartan);

/// Sign of a root vector: +1 for positive, -1 for negative.  Images of
/// simple roots under group elements are always one or the other, so a
/// zero or mixed-sign vector throws InternalError.
int root_sign(const std::vector<long long>& v);

/// Result of the reduced-word test: the word is reduced iff every root
/// beta_t = s_{i_1} ... s_{i_{t-1}}(alpha_{i_t}) is positive.  All roots
/// are returned; for a reduced word they are pairwise distinct.
struct ReducedCheck {
    bool reduced = false;
    std::vector<std::vector<long long>> roots;
};

ReducedCheck is_reduced(const Word& w, const CartanData& cartan);

/// The minimum of the equivalence class of `w` under nil deletions
/// (s_i s_i -> empty) and braid substitutions, in the length-then-rho
/// order.  Deletions are applied eagerly; breadth-first search over braid
/// substitutions restarts whenever a deletion becomes available, so the
/// search only ever explores words no longer than the current best.
/// `node_cap` bounds the total number of distinct words visited.
Word leftmost_bfs(const Word& w, const CartanData& cartan, size_t node_cap = 1'000'000);

/// The same canonical word, computed greedily: scan the grid positions
/// (0,1), (0,2), ..., (0,n), (1,1), ... in order and emit s_i at (r,i)
/// whenever s_i shortens the remaining element from the left.  Must agree
/// with leftmost_bfs; the test suite verifies this, the implementation
/// does not assume it.
Word leftmost_greedy(const Word& w, const CartanData& cartan);

/// Decide whether u . {s_j s_i}^{m_ij} . v is strictly smaller than
/// w1 = u . {s_i s_j}^{m_ij} . v without constructing the right-hand
/// word: with rho(w1) = rho(u) (p,i) (q,j) (p+1,i) ..., the substitution
/// lowers the word iff q >= 1 and every pair of rho(u) is < (q-1, j).
bool exchange_test(const Word& u, int i, int j, const Word& v, const CartanData& cartan);

/// Breadth-first enumeration of the whole group by right multiplication.
/// `complete` is false when `element_cap` was hit (infinite or huge type).
/// Each element carries one shortest word for it.
struct WeylEnumeration {
    bool complete = false;
    int max_length = 0;
    std::vector<std::pair<WeylElement, Word>> elements;
};

WeylEnumeration enumerate_weyl(const CartanData& cartan, size_t element_cap = 1'000'000);

/// Memoizes the canonical (leftmost) word per group element.  Every cache
/// miss runs both the BFS and the greedy scan and insists they agree.
class LeftmostCache {
public:
    explicit LeftmostCache(const CartanData& cartan, size_t bfs_node_cap = 1'000'000);

    const Word& leftmost(const Word& w);
    bool is_leftmost(const Word& w);

private:
    CartanData cartan_;
    size_t cap_;
    std::map<WeylElement, Word> memo_;
};

} // namespace weylmod
