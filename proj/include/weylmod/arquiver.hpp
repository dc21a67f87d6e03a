#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylmod/cartan.hpp"
#include "weylmod/weyl.hpp"
#include "weylmod/word.hpp"

namespace weylmod {

/// A finite multiset of grid vertices (summands of a module, with
/// multiplicities).  Zero-multiplicity entries are never stored, so two
/// multisets are equal iff their entry maps are.
class ModMultiset {
public:
    ModMultiset() = default;
    ModMultiset(std::initializer_list<Vertex> vs);

    void add(Vertex v, long long k = 1);
    /// Remove k copies; throws InternalError when fewer are present.
    void remove(Vertex v, long long k = 1);
    long long count(Vertex v) const;
    bool contains(Vertex v) const { return count(v) > 0; }
    bool empty() const { return entries_.empty(); }
    /// Sum of all multiplicities.
    long long total() const;
    size_t distinct() const { return entries_.size(); }

    void add_all(const ModMultiset& other);
    void remove_all(const ModMultiset& other);
    ModMultiset scaled(long long k) const;

    /// Pointwise minimum of multiplicities.
    static ModMultiset intersect(const ModMultiset& a, const ModMultiset& b);

    /// True when every multiplicity here is <= the one in `other`.
    bool subset_of(const ModMultiset& other) const;

    const std::map<Vertex, long long>& entries() const { return entries_; }

    std::string to_paren_string() const;  // "(0,3),(0,4)^2"
    std::string to_colon_string() const;  // "0:3,0:4^2"

    friend bool operator==(const ModMultiset&, const ModMultiset&) = default;

private:
    std::map<Vertex, long long> entries_;
};

using DimVector = std::vector<long long>;

/// The almost split sequence starting at X = (r, i), r >= 1:
///   0 -> X -> middle -> end -> 0   with end = (r-1, i).
struct ARSequence {
    ModMultiset middle;
    Vertex end;
};

/// The grid of indecomposables tau^r I_i laid out with rows r >= 0 and
/// columns 1..n, row 0 being the injectives.  Existence of a vertex and
/// the almost split sequences are derived from the Cartan datum alone;
/// dimension vectors additionally need quiver input.
class ARQuiver {
public:
    explicit ARQuiver(CartanData cartan, std::vector<ValuationOverride> valuation = {});

    const CartanData& cartan() const { return cartan_; }
    int rank() const { return cartan_.rank(); }
    CartanMode mode() const { return cartan_.mode(); }

    /// Multiplicity a_ij of arrows between adjacent columns i and j:
    /// -c_ij, unless a valuation override redistributes the product
    /// c_ij * c_ji.  Zero when i and j are not adjacent.
    long long arrow_mult(int i, int j) const;

    /// Whether (r, i) names a nonzero module.  Quiver inputs decide this
    /// by knitting dimension vectors; Cartan-matrix inputs by the
    /// reduced-prefix criterion.  Columns die monotonically: once a row
    /// is missing, all higher rows of that column are missing too.
    bool exists(Vertex v) const;

    /// Existence by scanning the infinite word (s_1 s_2 ... s_n)^infinity
    /// slot by slot: a slot's letter is appended when it keeps the word
    /// spelled by the surviving slots reduced, and a column whose letter
    /// would shorten the word is dead from that row on (its later slots
    /// are skipped).  (r, i) exists iff its slot appended its letter.
    /// Exposed separately so tests can cross-check the knitting route.
    bool exists_by_reduced_prefix(Vertex v) const;

    /// Dimension vector of an existing vertex (quiver inputs only).
    DimVector dim(Vertex v) const;

    /// The almost split sequence starting at v = (r, i): middle term
    ///   sum_{j < i adjacent} (r, j)^{a_ij}  +  sum_{j > i adjacent} (r-1, j)^{a_ij}
    /// restricted to existing vertices, end term (r-1, i).  Throws
    /// InjectiveVertexError when r = 0 and ZeroModuleError when v does
    /// not exist.
    ARSequence ar_sequence_start(Vertex v) const;

    /// All existing vertices in row-major order when the grid is finite;
    /// nullopt when row `row_guard` is still populated.
    std::optional<std::vector<Vertex>> all_vertices(int row_guard = 64) const;

    /// Throw InputError unless r >= 0 and 1 <= i <= rank.
    void check_vertex(Vertex v) const;

private:
    struct Cell {
        bool alive = false;
        DimVector dim;
    };

    void extend_knitting(int row) const;
    void extend_prefix(long long len) const;

    CartanData cartan_;
    std::vector<long long> mult_;          // n x n arrow multiplicities
    std::vector<WeylElement> gens_;

    mutable std::vector<std::vector<Cell>> rows_;  // knitting cache
    mutable WeylElement prefix_;           // product of the surviving letters
    mutable long long prefix_pos_ = 0;     // infinite-word slots processed
    mutable std::vector<std::optional<int>> prefix_dead_row_;  // per column
};

} // namespace weylmod
