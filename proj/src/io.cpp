#include "weylmod/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "weylmod/errors.hpp"

namespace weylmod {

namespace {

std::string loc(const std::string& name, int line) {
    return name + ":" + std::to_string(line) + ": ";
}

/// Strip a '#' comment and surrounding whitespace.
std::string strip(const std::string& raw) {
    std::string s = raw.substr(0, raw.find('#'));
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

long long parse_int(const std::string& token, const std::string& where) {
    size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || token.empty())
        throw InputError(where + "expected an integer, got '" + token + "'");
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> tokens_of(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

} // namespace

InputSpec parse_input_text(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    int n = 0;
    bool have_n = false;
    bool have_arrows = false;
    bool in_cartan = false;
    std::vector<Arrow> arrows;
    std::vector<std::vector<int>> cartan_rows;
    std::vector<ValuationOverride> valuation;
    int cartan_line = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty()) continue;
        const std::string where = loc(name, line_no);
        std::vector<std::string> toks = tokens_of(line);

        if (toks[0] == "n") {
            if (toks.size() != 2)
                throw InputError(where + "expected 'n <count>', got '" + line + "'");
            long long value = parse_int(toks[1], where);
            require(value >= 1, where + "rank must be at least 1, got " + toks[1]);
            n = static_cast<int>(value);
            have_n = true;
            in_cartan = false;
        } else if (toks[0] == "arrows:" || line.rfind("arrows:", 0) == 0) {
            have_arrows = true;
            in_cartan = false;
            if (!have_n)
                throw InputError(where + "'arrows:' needs a preceding 'n <count>' line");
            std::string rest = line.substr(line.find(':') + 1);
            for (const std::string& chunk : split(rest, ';')) {
                std::vector<std::string> pair = tokens_of(chunk);
                if (pair.empty()) continue;  // permits a trailing semicolon
                if (pair.size() != 2)
                    throw InputError(where + "arrow '" + strip(chunk) +
                                     "' is not a 'src dst' pair");
                int src = static_cast<int>(parse_int(pair[0], where));
                int dst = static_cast<int>(parse_int(pair[1], where));
                if (src < 1 || src > n || dst < 1 || dst > n)
                    throw InputError(where + "arrow '" + pair[0] + " " + pair[1] +
                                     "' has an endpoint outside 1.." + std::to_string(n));
                if (src >= dst)
                    throw InputError(where + "arrow '" + pair[0] + " " + pair[1] +
                                     "' does not go from a smaller to a larger index");
                arrows.push_back(Arrow{src, dst});
            }
        } else if (toks[0] == "cartan:") {
            if (toks.size() != 1)
                throw InputError(where + "'cartan:' takes its rows on the following lines");
            in_cartan = true;
            cartan_line = line_no;
        } else if (toks[0] == "valuation:" || line.rfind("valuation:", 0) == 0) {
            in_cartan = false;
            std::string rest = line.substr(line.find(':') + 1);
            for (const std::string& chunk : split(rest, ';')) {
                std::vector<std::string> quad = tokens_of(chunk);
                if (quad.empty()) continue;
                if (quad.size() != 4)
                    throw InputError(where + "valuation entry '" + strip(chunk) +
                                     "' is not an 'i j a_ij a_ji' quadruple");
                ValuationOverride o;
                o.i = static_cast<int>(parse_int(quad[0], where));
                o.j = static_cast<int>(parse_int(quad[1], where));
                o.a_ij = static_cast<int>(parse_int(quad[2], where));
                o.a_ji = static_cast<int>(parse_int(quad[3], where));
                valuation.push_back(o);
            }
        } else if (in_cartan) {
            std::vector<int> row;
            row.reserve(toks.size());
            for (const std::string& t : toks) row.push_back(static_cast<int>(parse_int(t, where)));
            if (!cartan_rows.empty() && row.size() != cartan_rows.front().size())
                throw InputError(where + "Cartan row has " + std::to_string(row.size()) +
                                 " entries, expected " +
                                 std::to_string(cartan_rows.front().size()));
            cartan_rows.push_back(std::move(row));
        } else {
            throw InputError(where + "unrecognized directive '" + toks[0] + "'");
        }
    }

    if (have_arrows && !cartan_rows.empty())
        throw InputError(name + ": input mixes 'arrows:' and 'cartan:' sections");

    if (!cartan_rows.empty() || in_cartan) {
        const std::string where = loc(name, cartan_line);
        if (cartan_rows.empty())
            throw InputError(where + "'cartan:' has no rows");
        if (cartan_rows.size() != cartan_rows.front().size())
            throw InputError(where + "Cartan table is not square: " +
                             std::to_string(cartan_rows.size()) + " rows of " +
                             std::to_string(cartan_rows.front().size()) + " entries");
        if (have_n && cartan_rows.size() != static_cast<size_t>(n))
            throw InputError(where + "Cartan table has " + std::to_string(cartan_rows.size()) +
                             " rows but the 'n' line says " + std::to_string(n));
        try {
            return InputSpec{CartanData::from_matrix(cartan_rows), std::move(valuation)};
        } catch (const InputError& e) {
            throw InputError(where + e.what());
        }
    }

    if (!have_n) throw InputError(name + ": input has no 'n <count>' or 'cartan:' section");
    if (!valuation.empty())
        throw InputError(name + ": 'valuation:' is only meaningful for Cartan-matrix input");
    try {
        return InputSpec{CartanData::from_quiver(n, std::move(arrows)), {}};
    } catch (const InputError& e) {
        throw InputError(name + ": " + e.what());
    }
}

InputSpec parse_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input_text(buf.str(), path);
}

Word parse_word(const std::string& text) {
    Word w;
    for (const std::string& t : tokens_of(text)) {
        long long letter = parse_int(t, "word: ");
        require(letter >= 1, "word: generator index must be positive, got '" + t + "'");
        w.push_back(static_cast<int>(letter));
    }
    return w;
}

Vertex parse_vertex(const std::string& token) {
    const std::string where = "vertex '" + token + "': ";
    std::vector<std::string> parts = split(token, ':');
    if (parts.size() != 2) throw InputError(where + "expected 'r:i'");
    long long r = parse_int(strip(parts[0]), where);
    long long i = parse_int(strip(parts[1]), where);
    return Vertex{static_cast<int>(r), static_cast<int>(i)};
}

ModMultiset parse_vertex_multiset(const std::string& text) {
    ModMultiset m;
    if (strip(text).empty()) return m;
    for (const std::string& chunk : split(text, ',')) {
        std::string entry = strip(chunk);
        const std::string where = "multiset entry '" + entry + "': ";
        long long count = 1;
        size_t caret = entry.find('^');
        if (caret != std::string::npos) {
            count = parse_int(strip(entry.substr(caret + 1)), where);
            require(count >= 1, where + "multiplicity must be at least 1");
            entry = strip(entry.substr(0, caret));
        }
        m.add(parse_vertex(entry), count);
    }
    return m;
}

std::set<Vertex> parse_vertex_set(const std::string& text) {
    std::set<Vertex> out;
    if (strip(text).empty()) return out;
    for (const std::string& chunk : split(text, ',')) {
        std::string entry = strip(chunk);
        if (entry.find('^') != std::string::npos)
            throw InputError("set entry '" + entry + "': sets take each vertex once");
        Vertex v = parse_vertex(entry);
        if (!out.insert(v).second)
            throw InputError("set entry '" + entry + "' is repeated");
    }
    return out;
}

std::string dot_export(const ARQuiver& q, int slices) {
    require(slices >= 1, "slice count must be at least 1");
    const int n = q.rank();
    std::ostringstream out;
    out << "digraph grid {\n  rankdir=RL;\n  node [shape=box];\n";

    for (int r = 0; r < slices; ++r) {
        for (int i = 1; i <= n; ++i) {
            Vertex v{r, i};
            if (!q.exists(v)) continue;
            out << "  \"" << format_vertex_colon(v) << "\" [label=\""
                << format_vertex_colon(v);
            if (q.mode() == CartanMode::Quiver) {
                DimVector d = q.dim(v);
                out << " [";
                for (int k = 0; k < n; ++k) out << (k ? "," : "") << d[k];
                out << "]";
            }
            out << "\"];\n";
        }
    }

    // Each mesh contributes start -> middle arrows; middle -> end arrows
    // are duplicates of those unless the middle vertex is injective, so
    // collect into a set keyed by endpoints.
    std::map<std::pair<Vertex, Vertex>, std::pair<long long, long long>> edges;
    auto add_edge = [&](Vertex from, Vertex to) {
        edges.emplace(std::make_pair(from, to),
                      std::make_pair(q.arrow_mult(from.i, to.i), q.arrow_mult(to.i, from.i)));
    };
    for (int r = 1; r < slices; ++r) {
        for (int i = 1; i <= n; ++i) {
            Vertex v{r, i};
            if (!q.exists(v)) continue;
            ARSequence seq = q.ar_sequence_start(v);
            for (const auto& [m, count] : seq.middle.entries()) {
                (void)count;
                add_edge(v, m);
                add_edge(m, seq.end);
            }
        }
    }
    for (const auto& [key, mult] : edges) {
        out << "  \"" << format_vertex_colon(key.first) << "\" -> \""
            << format_vertex_colon(key.second) << "\" [label=\"" << mult.first;
        if (mult.second != mult.first) out << "," << mult.second;
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string dims_table(const ARQuiver& q, int slices) {
    require(slices >= 1, "slice count must be at least 1");
    require(q.mode() == CartanMode::Quiver,
            "dimension vectors need quiver input, not a valued Cartan matrix");
    const int n = q.rank();
    std::ostringstream out;
    for (int r = 0; r < slices; ++r) {
        for (int i = 1; i <= n; ++i) {
            Vertex v{r, i};
            if (!q.exists(v)) continue;
            DimVector d = q.dim(v);
            out << format_vertex_colon(v) << " (";
            for (int k = 0; k < n; ++k) out << (k ? "," : "") << d[k];
            out << ")\n";
        }
    }
    return out.str();
}

} // namespace weylmod
