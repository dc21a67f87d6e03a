#pragma once

#include <set>
#include <string>
#include <vector>

#include "weylmod/arquiver.hpp"
#include "weylmod/cartan.hpp"
#include "weylmod/word.hpp"

namespace weylmod {

/// A parsed input description: the Cartan datum plus any explicit
/// valuation overrides (valued input only).
struct InputSpec {
    CartanData cartan;
    std::vector<ValuationOverride> valuation;
};

/// Parse an input description.  Two formats, chosen by header line:
///
///   quiver input            Cartan-matrix input
///   -------------           -------------------
///   n 4                     cartan:
///   arrows: 1 3; 1 4;       2 -1
///           2 3; 2 4        -2 2
///                           valuation: 1 2 1 2
///
/// '#' starts a comment; blank lines are ignored.  Arrows must go from a
/// smaller to a larger index; "valuation:" lists "i j a_ij a_ji"
/// quadruples separated by semicolons and is only meaningful for
/// Cartan-matrix input.  Every rejection names the offending line and
/// token.  `name` is used as the location prefix in messages.
InputSpec parse_input_text(const std::string& text, const std::string& name);

/// Read and parse a file; the path becomes the location prefix.
InputSpec parse_input_file(const std::string& path);

/// Parse a word given as whitespace-separated generator indices, e.g.
/// "2 3 1 3 4 1".  An empty string is the empty word.
Word parse_word(const std::string& text);

/// Parse one vertex in colon syntax, e.g. "1:3" for (1,3).
Vertex parse_vertex(const std::string& token);

/// Parse a comma-separated multiset of vertices with optional
/// multiplicities, e.g. "0:2,0:3,0:4^2".  Empty string = empty multiset.
ModMultiset parse_vertex_multiset(const std::string& text);

/// Parse a comma-separated set of vertices (no multiplicities, no
/// repeats), e.g. "0:3,1:1,1:3".
std::set<Vertex> parse_vertex_set(const std::string& text);

/// DOT digraph of the grid restricted to rows 0..slices-1: one node per
/// existing vertex (labelled with its dimension vector for quiver input),
/// one edge per irreducible-morphism class, labelled with its
/// multiplicity (the pair "a,b" when the two directions differ).
std::string dot_export(const ARQuiver& q, int slices);

/// Dimension-vector table of rows 0..slices-1, one existing vertex per
/// line: "r:i (d_1,...,d_n)".  Quiver input only.
std::string dims_table(const ARQuiver& q, int slices);

} // namespace weylmod
