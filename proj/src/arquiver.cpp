#include "weylmod/arquiver.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace weylmod {

namespace {

/// acc += a * b with overflow detection.
void acc_mul(long long& acc, long long a, long long b) {
    long long prod = 0;
    if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &acc))
        throw ResourceError("dimension vector entry overflow");
}

std::string entry_string(Vertex v, long long k, bool paren) {
    std::string s = paren ? format_vertex_paren(v) : format_vertex_colon(v);
    if (k > 1) s += "^" + std::to_string(k);
    return s;
}

} // namespace

ModMultiset::ModMultiset(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) add(v);
}

void ModMultiset::add(Vertex v, long long k) {
    ensure(k >= 0, "negative multiplicity added to a multiset");
    if (k == 0) return;
    entries_[v] += k;
}

void ModMultiset::remove(Vertex v, long long k) {
    ensure(k >= 0, "negative multiplicity removed from a multiset");
    if (k == 0) return;
    auto it = entries_.find(v);
    ensure(it != entries_.end() && it->second >= k,
           "multiset underflow removing " + entry_string(v, k, true));
    it->second -= k;
    if (it->second == 0) entries_.erase(it);
}

long long ModMultiset::count(Vertex v) const {
    auto it = entries_.find(v);
    return it == entries_.end() ? 0 : it->second;
}

long long ModMultiset::total() const {
    long long t = 0;
    for (const auto& [v, k] : entries_) t += k;
    return t;
}

void ModMultiset::add_all(const ModMultiset& other) {
    for (const auto& [v, k] : other.entries_) add(v, k);
}

void ModMultiset::remove_all(const ModMultiset& other) {
    for (const auto& [v, k] : other.entries_) remove(v, k);
}

ModMultiset ModMultiset::scaled(long long k) const {
    ensure(k >= 0, "negative multiset scale");
    ModMultiset out;
    if (k == 0) return out;
    for (const auto& [v, c] : entries_) out.add(v, c * k);
    return out;
}

ModMultiset ModMultiset::intersect(const ModMultiset& a, const ModMultiset& b) {
    ModMultiset out;
    for (const auto& [v, k] : a.entries_) out.add(v, std::min(k, b.count(v)));
    return out;
}

bool ModMultiset::subset_of(const ModMultiset& other) const {
    for (const auto& [v, k] : entries_)
        if (k > other.count(v)) return false;
    return true;
}

std::string ModMultiset::to_paren_string() const {
    std::string s;
    for (const auto& [v, k] : entries_) {
        if (!s.empty()) s += ",";
        s += entry_string(v, k, true);
    }
    return s;
}

std::string ModMultiset::to_colon_string() const {
    std::string s;
    for (const auto& [v, k] : entries_) {
        if (!s.empty()) s += ",";
        s += entry_string(v, k, false);
    }
    return s;
}

ARQuiver::ARQuiver(CartanData cartan, std::vector<ValuationOverride> valuation)
    : cartan_(std::move(cartan)), prefix_(WeylElement::identity(cartan_.rank())) {
    int n = cartan_.rank();
    mult_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) mult_[static_cast<size_t>(i - 1) * n + (j - 1)] = -cartan_.cartan(i, j);

    require(valuation.empty() || cartan_.mode() == CartanMode::Valued,
            "valuation overrides apply to Cartan-matrix input only");
    std::set<std::pair<int, int>> seen;
    for (const ValuationOverride& o : valuation) {
        check_index(cartan_, o.i, "valuation index");
        check_index(cartan_, o.j, "valuation index");
        require(o.i != o.j, "valuation override needs two distinct vertices");
        require(cartan_.edge(o.i, o.j), "valuation override on non-adjacent vertices " +
                                            std::to_string(o.i) + ", " + std::to_string(o.j));
        require(o.a_ij >= 1 && o.a_ji >= 1, "valuation multiplicities must be >= 1");
        long long target = static_cast<long long>(cartan_.cartan(o.i, o.j)) * cartan_.cartan(o.j, o.i);
        require(static_cast<long long>(o.a_ij) * o.a_ji == target,
                "valuation product a_ij * a_ji must equal c_ij * c_ji = " + std::to_string(target));
        require(seen.insert({std::min(o.i, o.j), std::max(o.i, o.j)}).second,
                "duplicate valuation override for one pair of vertices");
        mult_[static_cast<size_t>(o.i - 1) * n + (o.j - 1)] = o.a_ij;
        mult_[static_cast<size_t>(o.j - 1) * n + (o.i - 1)] = o.a_ji;
    }

    gens_.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) gens_.push_back(WeylElement::generator(cartan_, i));
    prefix_dead_row_.assign(static_cast<size_t>(n), std::nullopt);
}

long long ARQuiver::arrow_mult(int i, int j) const {
    check_index(cartan_, i, "vertex");
    check_index(cartan_, j, "vertex");
    ensure(i != j, "arrow multiplicity needs two distinct vertices");
    return mult_[static_cast<size_t>(i - 1) * cartan_.rank() + (j - 1)];
}

void ARQuiver::check_vertex(Vertex v) const {
    require(v.r >= 0 && v.i >= 1 && v.i <= cartan_.rank(),
            "vertex " + format_vertex_paren(v) + " out of range: need r >= 0 and 1 <= i <= " +
                std::to_string(cartan_.rank()));
}

void ARQuiver::extend_knitting(int row) const {
    int n = cartan_.rank();
    if (rows_.empty()) {
        // Row 0 holds the injectives: the dimension of I_i at vertex j is
        // the number of paths j -> i, which the ascending arrow order lets
        // us accumulate column by column.
        std::vector<Cell> r0(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            DimVector d(static_cast<size_t>(n), 0);
            d[static_cast<size_t>(i - 1)] = 1;
            for (int k = 1; k < i; ++k) {
                long long m = mult_[static_cast<size_t>(k - 1) * n + (i - 1)];
                if (m == 0) continue;
                for (int t = 0; t < n; ++t)
                    acc_mul(d[static_cast<size_t>(t)], m, r0[static_cast<size_t>(k - 1)].dim[static_cast<size_t>(t)]);
            }
            r0[static_cast<size_t>(i - 1)] = Cell{true, std::move(d)};
        }
        rows_.push_back(std::move(r0));
    }
    while (static_cast<int>(rows_.size()) <= row) {
        const std::vector<Cell>& prev = rows_.back();
        std::vector<Cell> cur(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            const Cell& below = prev[static_cast<size_t>(i - 1)];
            if (!below.alive) continue;  // a column never comes back
            DimVector d(static_cast<size_t>(n), 0);
            for (int j = 1; j < i; ++j) {
                const Cell& c = cur[static_cast<size_t>(j - 1)];
                long long m = mult_[static_cast<size_t>(i - 1) * n + (j - 1)];
                if (m == 0 || !c.alive) continue;
                for (int t = 0; t < n; ++t) acc_mul(d[static_cast<size_t>(t)], m, c.dim[static_cast<size_t>(t)]);
            }
            for (int j = i + 1; j <= n; ++j) {
                const Cell& c = prev[static_cast<size_t>(j - 1)];
                long long m = mult_[static_cast<size_t>(i - 1) * n + (j - 1)];
                if (m == 0 || !c.alive) continue;
                for (int t = 0; t < n; ++t) acc_mul(d[static_cast<size_t>(t)], m, c.dim[static_cast<size_t>(t)]);
            }
            bool nonneg = true, nonzero = false;
            for (int t = 0; t < n; ++t) {
                d[static_cast<size_t>(t)] -= below.dim[static_cast<size_t>(t)];
                if (d[static_cast<size_t>(t)] < 0) nonneg = false;
                if (d[static_cast<size_t>(t)] != 0) nonzero = true;
            }
            if (nonneg && nonzero) cur[static_cast<size_t>(i - 1)] = Cell{true, std::move(d)};
        }
        rows_.push_back(std::move(cur));
    }
}

void ARQuiver::extend_prefix(long long pos) const {
    // Slot p (0-based) of the infinite word carries letter p % n + 1 and
    // sits in grid row p / n.  Dead columns' slots are skipped.
    int n = cartan_.rank();
    while (prefix_pos_ < pos) {
        int letter = static_cast<int>(prefix_pos_ % n) + 1;
        std::optional<int>& dead = prefix_dead_row_[static_cast<size_t>(letter - 1)];
        if (!dead) {
            if (root_sign(prefix_.column(letter)) < 0)
                dead = static_cast<int>(prefix_pos_ / n);
            else
                prefix_ = prefix_ * gens_[static_cast<size_t>(letter - 1)];
        }
        ++prefix_pos_;
    }
}

bool ARQuiver::exists(Vertex v) const {
    check_vertex(v);
    if (cartan_.mode() == CartanMode::Quiver) {
        extend_knitting(v.r);
        return rows_[static_cast<size_t>(v.r)][static_cast<size_t>(v.i - 1)].alive;
    }
    return exists_by_reduced_prefix(v);
}

bool ARQuiver::exists_by_reduced_prefix(Vertex v) const {
    check_vertex(v);
    extend_prefix(static_cast<long long>(v.r) * cartan_.rank() + v.i);
    const std::optional<int>& dead = prefix_dead_row_[static_cast<size_t>(v.i - 1)];
    return !dead || v.r < *dead;
}

DimVector ARQuiver::dim(Vertex v) const {
    require(cartan_.mode() == CartanMode::Quiver, "dimension vectors require quiver input");
    check_vertex(v);
    if (!exists(v))
        throw ZeroModuleError("vertex " + format_vertex_paren(v) + " names the zero module");
    return rows_[static_cast<size_t>(v.r)][static_cast<size_t>(v.i - 1)].dim;
}

ARSequence ARQuiver::ar_sequence_start(Vertex v) const {
    check_vertex(v);
    if (!exists(v))
        throw ZeroModuleError("vertex " + format_vertex_paren(v) +
                              " names the zero module: no almost split sequence");
    if (v.r == 0)
        throw InjectiveVertexError("vertex " + format_vertex_paren(v) +
                                   " is injective: no almost split sequence starts there");
    ARSequence seq;
    for (int j = 1; j < v.i; ++j) {
        long long m = arrow_mult(v.i, j);
        if (m == 0) continue;
        if (Vertex u{v.r, j}; exists(u)) seq.middle.add(u, m);
    }
    for (int j = v.i + 1; j <= rank(); ++j) {
        long long m = arrow_mult(v.i, j);
        if (m == 0) continue;
        if (Vertex u{v.r - 1, j}; exists(u)) seq.middle.add(u, m);
    }
    seq.end = Vertex{v.r - 1, v.i};
    ensure(exists(seq.end), "column existence is not monotone at " + format_vertex_paren(v));

    if (cartan_.mode() == CartanMode::Quiver) {
        // Dimension count of an exact sequence; a failure here means the
        // knitting cache and the sequence disagree.
        DimVector sum(static_cast<size_t>(rank()), 0);
        for (const auto& [u, k] : seq.middle.entries()) {
            DimVector du = dim(u);
            for (size_t t = 0; t < sum.size(); ++t) acc_mul(sum[t], k, du[t]);
        }
        DimVector ds = dim(v), de = dim(seq.end);
        for (size_t t = 0; t < sum.size(); ++t)
            ensure(sum[t] == ds[t] + de[t],
                   "almost split sequence at " + format_vertex_paren(v) + " is not exact");
    }
    return seq;
}

std::optional<std::vector<Vertex>> ARQuiver::all_vertices(int row_guard) const {
    std::vector<Vertex> out;
    for (int r = 0;; ++r) {
        bool any = false;
        for (int i = 1; i <= rank(); ++i) {
            Vertex v{r, i};
            if (exists(v)) {
                any = true;
                out.push_back(v);
            }
        }
        if (!any) return out;
        if (r >= row_guard) return std::nullopt;
    }
}

} // namespace weylmod
