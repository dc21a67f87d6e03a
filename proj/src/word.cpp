#include "weylmod/word.hpp"

#include <set>

namespace weylmod {

PairSeq rho(const Word& w) {
    PairSeq out;
    out.reserve(w.size());
    int r = 0;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k > 0 && w[k] <= w[k - 1]) ++r;
        out.push_back(Vertex{r, w[k]});
    }
    return out;
}

std::strong_ordering word_compare(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    // Same length: compare the grid embeddings lexicographically.  The
    // letters are recoverable from rho, so equality means identical words.
    PairSeq ra = rho(a), rb = rho(b);
    for (size_t k = 0; k < ra.size(); ++k) {
        if (auto c = ra[k] <=> rb[k]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Word alternating_word(int i, int j, int len) {
    Word w(static_cast<size_t>(len));
    for (int k = 0; k < len; ++k) w[k] = (k % 2 == 0) ? i : j;
    return w;
}

std::vector<Word> braid_neighbors(const Word& w, const CoxeterMatrix& cox) {
    std::set<Word> out;
    int n = cox.rank();
    for (size_t p = 0; p < w.size(); ++p) {
        int i = w[p];
        require(i >= 1 && i <= n, "word letter " + std::to_string(i) + " out of range");
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            int m = cox.order(i, j);
            if (m == kInfiniteOrder || p + m > w.size()) continue;
            bool match = true;
            for (int t = 0; t < m && match; ++t)
                match = w[p + t] == ((t % 2 == 0) ? i : j);
            if (!match) continue;
            Word v = w;
            for (int t = 0; t < m; ++t) v[p + t] = (t % 2 == 0) ? j : i;
            out.insert(std::move(v));
        }
    }
    return {out.begin(), out.end()};
}

std::string format_word(const Word& w) {
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(w[k]);
    }
    return s;
}

std::string format_vertex_paren(Vertex v) {
    return "(" + std::to_string(v.r) + "," + std::to_string(v.i) + ")";
}

std::string format_vertex_colon(Vertex v) {
    return std::to_string(v.r) + ":" + std::to_string(v.i);
}

std::string format_pairseq(const PairSeq& p) {
    std::string s;
    for (size_t k = 0; k < p.size(); ++k) {
        if (k) s += ' ';
        s += format_vertex_paren(p[k]);
    }
    return s;
}

} // namespace weylmod
