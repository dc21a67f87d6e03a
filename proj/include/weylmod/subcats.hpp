#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weylmod/embedding.hpp"
#include "weylmod/weyl.hpp"

namespace weylmod {

/// A cofinite full additive subcategory, named by its finite complement:
/// the grid vertices excluded from it.
struct CofiniteSubcat {
    std::set<Vertex> excluded;
    /// Set by subcat_of_word when some grid pair of the word named the
    /// zero module and was dropped from the excluded set.
    bool dropped = false;
};

/// The subcategory attached to a word: exclude the existing vertices of
/// the word's grid embedding.
CofiniteSubcat subcat_of_word(const ARQuiver& q, const Word& w);

/// Why a vertex set is not the grid embedding of any word.
struct NotRealizable {
    std::optional<Vertex> before;  // vertex preceding the failure; nullopt at the front
    Vertex at;                     // the vertex with the impossible row
};

struct Realizability {
    std::optional<Word> word;  // set iff the vertex set is realizable
    std::optional<NotRealizable> violation;
};

/// Invert the grid embedding: the unique word whose embedding equals the
/// set (sorted ascending), if the rows start at 0 and follow the minimal
/// increment rule.
Realizability word_of_excluded_set(const ARQuiver& q, const std::set<Vertex>& excluded);

struct ClosureWitness {
    Vertex module;            // excluded vertex that embeds back
    ModMultiset certificate;  // a subcategory object it embeds into
};

struct ClosureReport {
    bool closed = true;
    std::vector<ClosureWitness> witnesses;
};

/// A cofinite subcategory is closed under submodules iff none of its
/// excluded vertices admits a monomorphism into a subcategory object.
ClosureReport is_submodule_closed(const ARQuiver& q, const CofiniteSubcat& c,
                                  const EngineOptions& opts = {});

/// True iff every initial subword of w (including w itself) is the
/// canonical leftmost word of its element.
bool prefix_leftmost_check(const Word& w, LeftmostCache& cache);

struct BijectionOptions {
    int max_len = 6;
    bool build_table = false;      // collect the leftmost word <-> excluded set table
    size_t element_cap = 200'000;  // group enumeration bound (finite type only)
    size_t bfs_node_cap = 1'000'000;
    size_t step_cap = 10'000;
};

struct BijectionViolation {
    Word word;
    std::string kind;
};

struct BijectionReport {
    bool ok = true;
    long long words_checked = 0;
    long long dropped_words = 0;   // words whose grid embedding left the grid
    long long leftmost_count = 0;  // distinct leftmost words seen
    long long closed_count = 0;    // closed subcategories seen (each once)
    bool finite_complete = false;  // the whole group was enumerated
    long long weyl_size = 0;       // group order when finite_complete
    std::optional<BijectionViolation> violation;  // first failure, if any
    std::vector<std::pair<Word, std::set<Vertex>>> table;
};

/// Sweep all words up to a length bound (extended to cover the whole
/// group in finite type) and check, word by word, that the subcategory is
/// submodule closed exactly when the word is leftmost, that the grid
/// embedding round-trips, and that distinct leftmost words name distinct
/// subcategories.  In finite type additionally checks that the counts
/// equal the group order.
BijectionReport verify_bijection(const CartanData& cartan, const BijectionOptions& opts = {});

/// Restriction to the subalgebra on the vertex subset J (the result of
/// deleting all other vertices).  Requires every excluded vertex to lie
/// in a J-column; vertices whose reindexed image leaves the restricted
/// grid are dropped and flagged.
struct SubalgebraRestriction {
    CartanData cartan;                         // datum on the J-columns
    std::vector<ValuationOverride> valuation;  // surviving valuation overrides
    CofiniteSubcat subcat;
    bool dropped = false;
    std::vector<int> columns;  // sorted J: columns[k] is the old name of new column k+1
};

SubalgebraRestriction restrict_to_subalgebra(const ARQuiver& q, const std::vector<int>& J,
                                             const CofiniteSubcat& c);

} // namespace weylmod
