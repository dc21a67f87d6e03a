#pragma once

#include <compare>
#include <string>
#include <vector>

#include "weylmod/cartan.hpp"

namespace weylmod {

/// A word in the generators s_1 .. s_n, stored as 1-based letter indices.
using Word = std::vector<int>;

/// A grid point (r, i): row r >= 0 (power of the translation tau) and
/// column i (vertex index, 1-based).  Ordered lexicographically, rows
/// first; this is the total order the whole library leans on.
struct Vertex {
    int r = 0;
    int i = 0;
    auto operator<=>(const Vertex&) const = default;
};

using PairSeq = std::vector<Vertex>;

/// Embed a word into the grid: letter k gets the smallest row r_k such
/// that the pairs (r_1, i_1) < (r_2, i_2) < ... strictly increase, with
/// r_1 = 0.  Concretely r_{k+1} = r_k when i_{k+1} > i_k, else r_k + 1.
PairSeq rho(const Word& w);

/// Total order on words: shorter first, ties broken lexicographically on
/// the rho embeddings.  Equal only for identical words.
std::strong_ordering word_compare(const Word& a, const Word& b);

/// All words obtained from `w` by a single braid substitution
/// {s_i s_j}^{m_ij} <-> {s_j s_i}^{m_ij} with m_ij finite, deduplicated.
/// Length-preserving by construction; nil moves are not included.
std::vector<Word> braid_neighbors(const Word& w, const CoxeterMatrix& cox);

/// The alternating word s_i s_j s_i ... with `len` letters.
Word alternating_word(int i, int j, int len);

std::string format_word(const Word& w);
std::string format_vertex_paren(Vertex v);  // "(r,i)"
std::string format_vertex_colon(Vertex v);  // "r:i"
std::string format_pairseq(const PairSeq& p);

} // namespace weylmod
