#include "weylmod/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace weylmod {

namespace {

void check_word(const Word& w, const CartanData& cartan) {
    for (int i : w) check_index(cartan, i, "word letter");
}

bool has_nil(const Word& w) {
    for (size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] == w[k + 1]) return true;
    return false;
}

/// Remove adjacent equal pairs until none remain.  Each deletion can
/// expose a new pair across the cut, so rescan from just before it.
void delete_nils(Word& w) {
    size_t k = 0;
    while (k + 1 < w.size()) {
        if (w[k] == w[k + 1]) {
            w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
            if (k > 0) --k;
        } else {
            ++k;
        }
    }
}

} // namespace

WeylElement WeylElement::identity(int n) {
    std::vector<long long> a(static_cast<size_t>(n) * n, 0);
    for (int k = 0; k < n; ++k) a[static_cast<size_t>(k) * n + k] = 1;
    return WeylElement(n, std::move(a));
}

WeylElement WeylElement::generator(const CartanData& cartan, int i) {
    check_index(cartan, i, "generator index");
    int n = cartan.rank();
    WeylElement m = identity(n);
    // Row i becomes delta_ij - c_ij, so column j (the image of alpha_j)
    // reads alpha_j - c_ij alpha_i.
    for (int j = 1; j <= n; ++j)
        m.a_[static_cast<size_t>(i - 1) * n + (j - 1)] = (i == j ? 1 : 0) - cartan.cartan(i, j);
    return m;
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
    ensure(n_ == rhs.n_, "multiplying elements of different ranks");
    int n = n_;
    std::vector<long long> out(static_cast<size_t>(n) * n, 0);
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            long long lhs_rk = a_[static_cast<size_t>(r) * n + k];
            if (lhs_rk == 0) continue;
            for (int c = 0; c < n; ++c) {
                long long prod = 0;
                long long& acc = out[static_cast<size_t>(r) * n + c];
                if (__builtin_mul_overflow(lhs_rk, rhs.a_[static_cast<size_t>(k) * n + c], &prod) ||
                    __builtin_add_overflow(acc, prod, &acc))
                    throw ResourceError("matrix entry overflow in Weyl-group arithmetic");
            }
        }
    }
    return WeylElement(n, std::move(out));
}

std::vector<long long> WeylElement::column(int j) const {
    require(j >= 1 && j <= n_, "column index out of range");
    std::vector<long long> v(static_cast<size_t>(n_));
    for (int r = 0; r < n_; ++r) v[static_cast<size_t>(r)] = a_[static_cast<size_t>(r) * n_ + (j - 1)];
    return v;
}

bool WeylElement::is_identity() const {
    return *this == identity(n_);
}

int root_sign(const std::vector<long long>& v) {
    bool has_pos = false, has_neg = false;
    for (long long x : v) {
        if (x > 0) has_pos = true;
        if (x < 0) has_neg = true;
    }
    ensure(has_pos != has_neg, "root vector is zero or has mixed signs");
    return has_pos ? 1 : -1;
}

WeylElement element_of(const Word& w, const CartanData& cartan) {
    check_word(w, cartan);
    WeylElement e = WeylElement::identity(cartan.rank());
    for (int i : w) e = e * WeylElement::generator(cartan, i);
    return e;
}

ReducedCheck is_reduced(const Word& w, const CartanData& cartan) {
    check_word(w, cartan);
    ReducedCheck out;
    out.reduced = true;
    out.roots.reserve(w.size());
    WeylElement prefix = WeylElement::identity(cartan.rank());
    for (int i : w) {
        std::vector<long long> beta = prefix.column(i);
        if (root_sign(beta) < 0) out.reduced = false;
        out.roots.push_back(std::move(beta));
        prefix = prefix * WeylElement::generator(cartan, i);
    }
    if (out.reduced) {
        std::set<std::vector<long long>> distinct(out.roots.begin(), out.roots.end());
        ensure(distinct.size() == out.roots.size(), "reduced word produced repeated roots");
    }
    return out;
}

Word leftmost_bfs(const Word& w, const CartanData& cartan, size_t node_cap) {
    check_word(w, cartan);
    CoxeterMatrix cox = build_coxeter_matrix(cartan);
    Word current = w;
    delete_nils(current);
    size_t visited_total = 1;
    // Outer loop restarts whenever some braid neighbor exposes an s_i s_i
    // pair: the word shrinks, so this happens at most |w|/2 times.
    for (;;) {
        std::set<Word> seen{current};
        std::deque<const Word*> queue{&*seen.begin()};
        Word best = current;
        bool restarted = false;
        while (!queue.empty() && !restarted) {
            const Word& u = *queue.front();
            queue.pop_front();
            for (Word& nb : braid_neighbors(u, cox)) {
                if (has_nil(nb)) {
                    delete_nils(nb);
                    current = std::move(nb);
                    restarted = true;
                    break;
                }
                auto [it, fresh] = seen.insert(std::move(nb));
                if (!fresh) continue;
                if (++visited_total > node_cap)
                    throw ResourceError("leftmost word search exceeded the node cap of " +
                                        std::to_string(node_cap));
                if (word_compare(*it, best) < 0) best = *it;
                queue.push_back(&*it);
            }
        }
        if (!restarted) return best;
    }
}

Word leftmost_greedy(const Word& w, const CartanData& cartan) {
    check_word(w, cartan);
    int n = cartan.rank();
    // inv tracks the inverse of the element still to be spelled out;
    // generators are involutions, so reversing the word inverts it.
    Word rev(w.rbegin(), w.rend());
    WeylElement inv = element_of(rev, cartan);
    Word out;
    int start = 1;
    while (!inv.is_identity()) {
        bool emitted = false;
        for (int i = start; i <= n; ++i) {
            // s_i shortens the remainder v from the left iff v^{-1}(alpha_i)
            // is a negative root.
            if (root_sign(inv.column(i)) < 0) {
                out.push_back(i);
                inv = inv * WeylElement::generator(cartan, i);
                start = i + 1;
                emitted = true;
                break;
            }
        }
        if (!emitted) {
            ensure(start > 1, "non-identity element has no left descent");
            start = 1;  // wrap to the next grid row
        }
    }
    return out;
}

bool exchange_test(const Word& u, int i, int j, const Word& v, const CartanData& cartan) {
    check_word(u, cartan);
    check_word(v, cartan);
    check_index(cartan, i, "exchange letter");
    check_index(cartan, j, "exchange letter");
    require(i != j, "exchange test needs two distinct letters");
    CoxeterMatrix cox = build_coxeter_matrix(cartan);
    int m = cox.order(i, j);
    require(m != kInfiniteOrder, "letters " + std::to_string(i) + " and " + std::to_string(j) +
                                     " generate an infinite dihedral group: no substitution");
    Word w1 = u;
    Word window = alternating_word(i, j, m);
    w1.insert(w1.end(), window.begin(), window.end());
    w1.insert(w1.end(), v.begin(), v.end());
    PairSeq r1 = rho(w1);
    // Row of the window's first j-letter (the second window position).
    // Starting the window with j instead moves that letter to row q-1
    // exactly when q >= 1 and the whole prefix embeds strictly below
    // (q-1, j); otherwise the substitution does not lower the word.
    int q = r1[u.size() + 1].r;
    if (q < 1) return false;
    Vertex bound{q - 1, j};
    for (size_t k = 0; k < u.size(); ++k)
        if (!(r1[k] < bound)) return false;
    return true;
}

WeylEnumeration enumerate_weyl(const CartanData& cartan, size_t element_cap) {
    int n = cartan.rank();
    std::vector<WeylElement> gens;
    gens.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) gens.push_back(WeylElement::generator(cartan, i));

    WeylEnumeration out;
    out.complete = true;
    std::map<WeylElement, Word> found;
    std::deque<const std::pair<const WeylElement, Word>*> queue;
    queue.push_back(&*found.emplace(WeylElement::identity(n), Word{}).first);
    while (!queue.empty() && out.complete) {
        const auto& [cur, word] = *queue.front();
        queue.pop_front();
        out.max_length = std::max(out.max_length, static_cast<int>(word.size()));
        for (int i = 1; i <= n; ++i) {
            WeylElement nxt = cur * gens[static_cast<size_t>(i - 1)];
            if (found.contains(nxt)) continue;
            if (found.size() >= element_cap) {
                out.complete = false;
                break;
            }
            Word w2 = word;
            w2.push_back(i);
            queue.push_back(&*found.emplace(std::move(nxt), std::move(w2)).first);
        }
    }
    out.elements.assign(found.begin(), found.end());
    return out;
}

LeftmostCache::LeftmostCache(const CartanData& cartan, size_t bfs_node_cap)
    : cartan_(cartan), cap_(bfs_node_cap) {}

const Word& LeftmostCache::leftmost(const Word& w) {
    WeylElement e = element_of(w, cartan_);
    if (auto it = memo_.find(e); it != memo_.end()) return it->second;
    Word by_search = leftmost_bfs(w, cartan_, cap_);
    Word by_scan = leftmost_greedy(w, cartan_);
    ensure(by_search == by_scan, "search and greedy scan disagree on the leftmost word of " +
                                     format_word(w));
    return memo_.emplace(std::move(e), std::move(by_search)).first->second;
}

bool LeftmostCache::is_leftmost(const Word& w) {
    return leftmost(w) == w;
}

} // namespace weylmod
