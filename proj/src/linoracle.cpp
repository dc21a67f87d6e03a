#include "weylmod/linoracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "weylmod/errors.hpp"

namespace weylmod {

namespace {

long long checked_mul(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw ResourceError("integer overflow in Hom-space arithmetic");
    return out;
}

long long checked_add(long long a, long long b) {
    long long out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw ResourceError("integer overflow in Hom-space arithmetic");
    return out;
}

/// Exact rational scalar; denominator kept positive, fraction reduced.
struct Rat {
    long long num = 0;
    long long den = 1;
};

Rat make_rat(long long num, long long den) {
    ensure(den != 0, "zero denominator in rational arithmetic");
    if (den < 0) {
        num = checked_mul(num, -1);
        den = checked_mul(den, -1);
    }
    long long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rat{num, den};
}

Rat rat_add(const Rat& a, const Rat& b) {
    return make_rat(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                    checked_mul(a.den, b.den));
}

Rat rat_mul(const Rat& a, const Rat& b) {
    return make_rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

Rat rat_neg(const Rat& a) { return Rat{checked_mul(a.num, -1), a.den}; }

Rat rat_div(const Rat& a, const Rat& b) {
    ensure(b.num != 0, "division by zero in rational arithmetic");
    return make_rat(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(std::vector<std::vector<Rat>>& a, int cols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(a.size()); ++col) {
        int piv = -1;
        for (int r = row; r < static_cast<int>(a.size()); ++r)
            if (a[r][col].num != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[row], a[piv]);
        Rat lead = a[row][col];
        for (int c = col; c < cols; ++c) a[row][c] = rat_div(a[row][c], lead);
        for (int r = 0; r < static_cast<int>(a.size()); ++r) {
            if (r == row || a[r][col].num == 0) continue;
            Rat f = a[r][col];
            for (int c = col; c < cols; ++c)
                a[r][c] = rat_add(a[r][c], rat_neg(rat_mul(f, a[row][c])));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Basis of the kernel of an integer matrix, as rational vectors.
std::vector<std::vector<Rat>> null_space(const std::vector<std::vector<long long>>& rows,
                                         int cols) {
    std::vector<std::vector<Rat>> a(rows.size(), std::vector<Rat>(cols));
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols; ++c) a[r][c] = Rat{rows[r][c], 1};
    std::vector<int> pivots = rref(a, cols);

    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> x(cols, Rat{0, 1});
        x[free] = Rat{1, 1};
        for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = rat_neg(a[k][free]);
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Scale a rational vector to a primitive integer vector (same line).
std::vector<long long> primitive_integer(const std::vector<Rat>& v) {
    long long scale = 1;
    for (const Rat& x : v) scale = checked_mul(scale / std::gcd(scale, x.den), x.den);
    std::vector<long long> out(v.size());
    long long content = 0;
    for (size_t k = 0; k < v.size(); ++k) {
        out[k] = checked_mul(v[k].num, scale / v[k].den);
        content = std::gcd(content, out[k]);
    }
    if (content > 1)
        for (long long& x : out) x /= content;
    return out;
}

int mod_p(long long x, int p) {
    int r = static_cast<int>(x % p);
    return r < 0 ? r + p : r;
}

/// Rank of a row-major (rows x cols) matrix over the field with p elements.
int rank_mod_p(std::vector<int> m, int rows, int cols, int p) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r * cols + col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int c = 0; c < cols; ++c)
            std::swap(m[rank * cols + c], m[piv * cols + c]);
        // Inverse of the pivot by brute force; p is 2 or 3 here.
        int lead = m[rank * cols + col];
        int inv = 1;
        while (lead * inv % p != 1) ++inv;
        for (int c = 0; c < cols; ++c) m[rank * cols + c] = m[rank * cols + c] * inv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            int f = m[r * cols + col];
            if (f == 0) continue;
            for (int c = 0; c < cols; ++c)
                m[r * cols + c] = mod_p(m[r * cols + c] - f * m[rank * cols + c], p);
        }
        ++rank;
    }
    return rank;
}

/// Search for a vertex-wise injective combination of the Hom basis with
/// coefficients in the field with p elements.
bool mono_search(const HomSpace& h, const std::vector<int>& verts, int p) {
    const int d = h.dimension();
    const int n = static_cast<int>(h.dim_m.size());

    // Basis matrices reduced mod p, indexed [k][v-1].
    std::vector<std::vector<std::vector<int>>> red(d, std::vector<std::vector<int>>(n));
    for (int k = 0; k < d; ++k)
        for (int v : verts) {
            const std::vector<long long>& mat = h.basis[k][v - 1];
            std::vector<int> r(mat.size());
            for (size_t t = 0; t < mat.size(); ++t) r[t] = mod_p(mat[t], p);
            red[k][v - 1] = std::move(r);
        }

    std::vector<int> coeff(d, 0);
    for (;;) {
        // Advance the odometer first so the all-zero map is never tested.
        int pos = 0;
        while (pos < d && coeff[pos] == p - 1) coeff[pos++] = 0;
        if (pos == d) return false;
        ++coeff[pos];

        bool injective = true;
        for (int v : verts) {
            const int rows = h.dim_n[v - 1];
            const int cols = h.dim_m[v - 1];
            std::vector<int> s(static_cast<size_t>(rows) * cols, 0);
            for (int k = 0; k < d; ++k) {
                if (coeff[k] == 0) continue;
                const std::vector<int>& b = red[k][v - 1];
                for (size_t t = 0; t < s.size(); ++t) s[t] = (s[t] + coeff[k] * b[t]) % p;
            }
            if (rank_mod_p(std::move(s), rows, cols, p) != cols) {
                injective = false;
                break;
            }
        }
        if (injective) return true;
    }
}

} // namespace

LinearOracle::LinearOracle(CartanData cartan) : quiver_(std::move(cartan)) {
    const CartanData& c = quiver_.cartan();
    require(c.mode() == CartanMode::Quiver,
            "linear oracle needs quiver input, not a valued Cartan matrix");
    const int n = c.rank();

    std::vector<std::vector<int>> adj(n);
    int edges = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            int k = c.quiver_arrows(i, j);
            if (k == 0) continue;
            require(k == 1, "linear oracle needs single arrows, but vertices " +
                                std::to_string(i) + " and " + std::to_string(j) +
                                " are joined by " + std::to_string(k) + " arrows");
            adj[i - 1].push_back(j);
            adj[j - 1].push_back(i);
            ++edges;
        }
    }
    require(edges == n - 1, "underlying graph of the quiver must be a path (expected " +
                                std::to_string(n - 1) + " edges, found " +
                                std::to_string(edges) + ")");
    for (int i = 1; i <= n; ++i)
        require(adj[i - 1].size() <= 2, "underlying graph of the quiver must be a path, but vertex " +
                                            std::to_string(i) + " has " +
                                            std::to_string(adj[i - 1].size()) + " neighbours");

    int start = 0;
    for (int i = 1; i <= n; ++i)
        if (adj[i - 1].size() <= 1) {
            start = i;
            break;
        }
    ensure(start != 0, "a path with single-neighbour degrees has an endpoint");

    order_.reserve(n);
    int prev = 0, cur = start;
    while (order_.size() < static_cast<size_t>(n)) {
        order_.push_back(cur);
        int next = 0;
        for (int nb : adj[cur - 1])
            if (nb != prev) next = nb;
        if (next == 0) break;
        prev = cur;
        cur = next;
    }
    require(order_.size() == static_cast<size_t>(n),
            "underlying graph of the quiver must be connected");

    position_.assign(n, 0);
    for (int p = 1; p <= n; ++p) position_[order_[p - 1] - 1] = p;
}

int LinearOracle::position(int vertex_label) const {
    check_index(quiver_.cartan(), vertex_label, "vertex label");
    return position_[vertex_label - 1];
}

IntervalRep LinearOracle::interval_of_vertex(Vertex v) const {
    DimVector d = quiver_.dim(v);
    std::vector<int> support;
    for (int p = 1; p <= rank(); ++p) {
        long long entry = d[order_[p - 1] - 1];
        ensure(entry == 0 || entry == 1,
               "path-quiver dimension vector has an entry outside {0,1}");
        if (entry == 1) support.push_back(p);
    }
    ensure(!support.empty(), "existing vertex has empty support");
    ensure(support.back() - support.front() + 1 == static_cast<int>(support.size()),
           "path-quiver dimension vector is not an interval indicator");
    return IntervalRep{support.front(), support.back()};
}

std::vector<IntervalRep> LinearOracle::intervals_of(const ModMultiset& m) const {
    std::vector<IntervalRep> out;
    for (const auto& [v, k] : m.entries()) {
        IntervalRep rep = interval_of_vertex(v);
        for (long long c = 0; c < k; ++c) out.push_back(rep);
    }
    return out;
}

HomSpace LinearOracle::hom_basis(const std::vector<IntervalRep>& m_summands,
                                 const std::vector<IntervalRep>& n_summands) const {
    const int n = rank();
    for (const IntervalRep& s : m_summands)
        require(1 <= s.lo && s.lo <= s.hi && s.hi <= n, "interval out of range");
    for (const IntervalRep& s : n_summands)
        require(1 <= s.lo && s.lo <= s.hi && s.hi <= n, "interval out of range");

    // Coordinate layout: at vertex label v, the coordinates are the summand
    // indices whose interval covers position(v), in summand order.
    std::vector<std::vector<int>> mcoord(n), ncoord(n);
    for (int v = 1; v <= n; ++v) {
        int p = position_[v - 1];
        for (size_t s = 0; s < m_summands.size(); ++s)
            if (m_summands[s].covers(p)) mcoord[v - 1].push_back(static_cast<int>(s));
        for (size_t t = 0; t < n_summands.size(); ++t)
            if (n_summands[t].covers(p)) ncoord[v - 1].push_back(static_cast<int>(t));
    }

    HomSpace h;
    h.dim_m.resize(n);
    h.dim_n.resize(n);
    std::vector<int> offset(n, 0);
    int total = 0;
    for (int v = 1; v <= n; ++v) {
        h.dim_m[v - 1] = static_cast<int>(mcoord[v - 1].size());
        h.dim_n[v - 1] = static_cast<int>(ncoord[v - 1].size());
        offset[v - 1] = total;
        total += h.dim_m[v - 1] * h.dim_n[v - 1];
    }
    auto idx = [&](int v, int row, int col) {
        return offset[v - 1] + row * h.dim_m[v - 1] + col;
    };

    // One commutation constraint phi_w . M_a = N_a . phi_u per arrow a: u -> w
    // and per entry (row of N_w, column of M_u).  The arrow map of an interval
    // summand is 1 exactly when the summand covers both endpoints, so each
    // constraint has at most two unit coefficients.
    std::vector<std::vector<long long>> rows;
    for (const Arrow& a : quiver_.cartan().arrows()) {
        const int u = a.src, w = a.dst;
        for (int r = 0; r < h.dim_n[w - 1]; ++r) {
            for (int c = 0; c < h.dim_m[u - 1]; ++c) {
                std::vector<long long> row(total, 0);
                bool nonzero = false;
                for (int k = 0; k < h.dim_m[w - 1]; ++k)
                    if (mcoord[w - 1][k] == mcoord[u - 1][c]) {
                        row[idx(w, r, k)] += 1;
                        nonzero = true;
                    }
                for (int k = 0; k < h.dim_n[u - 1]; ++k)
                    if (ncoord[u - 1][k] == ncoord[w - 1][r]) {
                        row[idx(u, k, c)] -= 1;
                        nonzero = true;
                    }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
    }

    for (const std::vector<Rat>& vec : null_space(rows, total)) {
        std::vector<long long> flat = primitive_integer(vec);
        std::vector<std::vector<long long>> mats(n);
        for (int v = 1; v <= n; ++v) {
            mats[v - 1].assign(static_cast<size_t>(h.dim_n[v - 1]) * h.dim_m[v - 1], 0);
            for (size_t t = 0; t < mats[v - 1].size(); ++t)
                mats[v - 1][t] = flat[offset[v - 1] + static_cast<int>(t)];
        }
        h.basis.push_back(std::move(mats));
    }

    // Residual check: rebuild the arrow matrices explicitly and verify each
    // basis element commutes, as exact integers.
    for (const auto& elem : h.basis) {
        for (const Arrow& a : quiver_.cartan().arrows()) {
            const int u = a.src, w = a.dst;
            for (int r = 0; r < h.dim_n[w - 1]; ++r) {
                for (int c = 0; c < h.dim_m[u - 1]; ++c) {
                    long long lhs = 0, rhs = 0;
                    for (int k = 0; k < h.dim_m[w - 1]; ++k)
                        if (mcoord[w - 1][k] == mcoord[u - 1][c])
                            lhs = checked_add(lhs, elem[w - 1][r * h.dim_m[w - 1] + k]);
                    for (int k = 0; k < h.dim_n[u - 1]; ++k)
                        if (ncoord[u - 1][k] == ncoord[w - 1][r])
                            rhs = checked_add(rhs, elem[u - 1][k * h.dim_m[u - 1] + c]);
                    ensure(lhs == rhs, "Hom-space basis element violates an arrow constraint");
                }
            }
        }
    }
    return h;
}

bool LinearOracle::has_mono(const std::vector<IntervalRep>& m_summands,
                            const std::vector<IntervalRep>& n_summands) const {
    if (m_summands.empty()) return true;

    HomSpace h = hom_basis(m_summands, n_summands);
    std::vector<int> verts;
    for (int v = 1; v <= rank(); ++v) {
        if (h.dim_m[v - 1] == 0) continue;
        if (h.dim_m[v - 1] > h.dim_n[v - 1]) return false;
        verts.push_back(v);
    }
    if (h.dimension() == 0) return false;

    // No combination can be injective at a vertex where every basis element
    // vanishes; skip the search outright.
    for (int v : verts) {
        bool all_zero = true;
        for (int k = 0; k < h.dimension() && all_zero; ++k)
            for (long long x : h.basis[k][v - 1])
                if (x != 0) {
                    all_zero = false;
                    break;
                }
        if (all_zero) return false;
    }

    if (h.dimension() > kHomEnumerationCap)
        throw ResourceError("Hom dimension " + std::to_string(h.dimension()) +
                            " exceeds the enumeration cap " +
                            std::to_string(kHomEnumerationCap));

    bool over_two = mono_search(h, verts, 2);
    bool over_three = mono_search(h, verts, 3);
    ensure(over_two == over_three,
           "monomorphism searches over the 2- and 3-element fields disagree");
    return over_two;
}

bool LinearOracle::brute_closed(const std::set<Vertex>& excluded, int bound_bump) const {
    require(bound_bump >= 0, "bound bump must be nonnegative");
    std::optional<std::vector<Vertex>> all = quiver_.all_vertices();
    require(all.has_value(),
            "brute-force closedness needs finite representation type");
    for (Vertex v : excluded) {
        quiver_.check_vertex(v);
        if (!quiver_.exists(v))
            throw ZeroModuleError("excluded vertex " + format_vertex_paren(v) +
                                  " names the zero module");
    }

    std::vector<Vertex> candidates;
    std::vector<IntervalRep> cand_rep;
    for (Vertex v : *all) {
        if (excluded.count(v)) continue;
        candidates.push_back(v);
        cand_rep.push_back(interval_of_vertex(v));
    }
    const int nc = static_cast<int>(candidates.size());

    for (Vertex m : excluded) {
        const IntervalRep target = interval_of_vertex(m);
        const long long bound = target.length() + bound_bump;

        // A summand with no morphisms from the target contributes only zero
        // components, so the verdict depends on the multiplicities of the
        // Hom-relevant candidates alone; memoise on that restriction.
        std::vector<int> relevant;
        for (int t = 0; t < nc; ++t)
            if (hom_basis({target}, {cand_rep[t]}).dimension() > 0) relevant.push_back(t);

        std::map<std::vector<long long>, bool> memo;
        std::vector<long long> mult(nc, 0);
        for (;;) {
            std::vector<long long> key;
            key.reserve(relevant.size());
            for (int t : relevant) key.push_back(mult[t]);

            bool found;
            if (auto it = memo.find(key); it != memo.end()) {
                found = it->second;
            } else {
                std::vector<IntervalRep> u;
                for (int t : relevant)
                    for (long long c = 0; c < mult[t]; ++c) u.push_back(cand_rep[t]);
                found = has_mono({target}, u);
                memo.emplace(std::move(key), found);
            }
            if (found) return false;

            int pos = 0;
            while (pos < nc && mult[pos] == bound) mult[pos++] = 0;
            if (pos == nc) break;
            ++mult[pos];
        }
    }
    return true;
}

} // namespace weylmod
