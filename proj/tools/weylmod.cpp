// weylmod: batch calculator for words, grids of indecomposables, and
// submodule-closed subcategories of hereditary module categories.
//
// Exit codes: 0 success / predicate true, 1 predicate false, 2 input
// error, 3 resource cap exceeded, 4 internal consistency failure.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "weylmod/arquiver.hpp"
#include "weylmod/cartan.hpp"
#include "weylmod/embedding.hpp"
#include "weylmod/errors.hpp"
#include "weylmod/io.hpp"
#include "weylmod/linoracle.hpp"
#include "weylmod/subcats.hpp"
#include "weylmod/weyl.hpp"
#include "weylmod/word.hpp"

namespace {

using nlohmann::json;
using namespace weylmod;

struct Options {
    bool json_output = false;
    std::string input_path;
    std::string word;
    std::string w1, w2;
    std::string method = "bfs";
    std::string m_list, u_list;
    std::string excluded;
    bool trace = false;
    bool verify = false;
    int max_len = 0;
    int slices = 0;
};

void emit(const Options& opt, const std::string& text, const json& j) {
    if (opt.json_output)
        std::cout << j.dump(2) << "\n";
    else if (!text.empty())
        std::cout << text << "\n";
}

json json_word(const Word& w) {
    json a = json::array();
    for (int letter : w) a.push_back(letter);
    return a;
}

json json_vertex(Vertex v) { return json{{"r", v.r}, {"i", v.i}}; }

json json_pairseq(const PairSeq& p) {
    json a = json::array();
    for (Vertex v : p) a.push_back(json_vertex(v));
    return a;
}

json json_multiset(const ModMultiset& m) {
    json a = json::array();
    for (const auto& [v, k] : m.entries()) {
        json e = json_vertex(v);
        e["count"] = k;
        a.push_back(e);
    }
    return a;
}

json json_trace(const std::vector<TraceStep>& steps) {
    json a = json::array();
    for (const TraceStep& s : steps) {
        json e;
        if (s.chosen) {
            e["replaced"] = json_vertex(*s.chosen);
            e["alpha"] = s.alpha;
        }
        e["middle"] = json_multiset(s.middle);
        e["coker"] = json_multiset(s.coker);
        a.push_back(e);
    }
    return a;
}

void check_letters(const Word& w, const CartanData& cartan) {
    for (int letter : w) check_index(cartan, letter, "word letter");
}

std::string trace_text(const std::vector<TraceStep>& steps) {
    std::string out;
    int step_no = 0;
    for (const TraceStep& s : steps) {
        if (s.chosen)
            out += "step " + std::to_string(++step_no) + ": replace " +
                   format_vertex_colon(*s.chosen);
        else
            out += "init:";
        out += " -> middle {" + s.middle.to_colon_string() + "} coker {" +
               s.coker.to_colon_string() + "}\n";
    }
    return out;
}

int cmd_coxmat(const Options& opt, const InputSpec& in) {
    CoxeterMatrix m = build_coxeter_matrix(in.cartan);
    std::string text;
    json rows = json::array();
    for (int i = 1; i <= m.rank(); ++i) {
        json row = json::array();
        for (int j = 1; j <= m.rank(); ++j) {
            int v = m.order(i, j);
            bool inf = v == kInfiniteOrder;
            text += (j > 1 ? " " : "") + (inf ? std::string("inf") : std::to_string(v));
            if (inf)
                row.push_back("inf");
            else
                row.push_back(v);
        }
        text += "\n";
        rows.push_back(row);
    }
    if (!text.empty()) text.pop_back();
    emit(opt, text, json{{"rank", m.rank()}, {"coxeter", rows}});
    return 0;
}

int cmd_rho(const Options& opt, const InputSpec& in) {
    Word w = parse_word(opt.word);
    check_letters(w, in.cartan);
    PairSeq p = rho(w);
    emit(opt, format_pairseq(p), json{{"word", json_word(w)}, {"rho", json_pairseq(p)}});
    return 0;
}

int cmd_cmp(const Options& opt, const InputSpec& in) {
    Word a = parse_word(opt.w1), b = parse_word(opt.w2);
    check_letters(a, in.cartan);
    check_letters(b, in.cartan);
    auto c = word_compare(a, b);
    std::string verdict = c < 0 ? "less" : c > 0 ? "greater" : "equal";
    emit(opt, verdict,
         json{{"w1", json_word(a)}, {"w2", json_word(b)}, {"order", verdict}});
    return 0;
}

int cmd_leftmost(const Options& opt, const InputSpec& in) {
    Word w = parse_word(opt.word);
    check_letters(w, in.cartan);
    Word result;
    if (opt.method == "bfs") {
        result = leftmost_bfs(w, in.cartan);
    } else if (opt.method == "greedy") {
        result = leftmost_greedy(w, in.cartan);
    } else if (opt.method == "both") {
        result = leftmost_bfs(w, in.cartan);
        Word greedy = leftmost_greedy(w, in.cartan);
        ensure(result == greedy, "descent sweep and word-graph search disagree on " +
                                     format_word(w));
    } else {
        throw InputError("unknown method '" + opt.method + "' (use bfs, greedy or both)");
    }
    emit(opt, format_word(result),
         json{{"word", json_word(w)},
              {"leftmost", json_word(result)},
              {"already_leftmost", result == w}});
    return 0;
}

int cmd_reduced(const Options& opt, const InputSpec& in) {
    Word w = parse_word(opt.word);
    check_letters(w, in.cartan);
    ReducedCheck check = is_reduced(w, in.cartan);
    json roots = json::array();
    for (const auto& root : check.roots) {
        json r = json::array();
        for (long long x : root) r.push_back(x);
        roots.push_back(r);
    }
    emit(opt, check.reduced ? "reduced" : "not reduced",
         json{{"word", json_word(w)}, {"reduced", check.reduced}, {"roots", roots}});
    return check.reduced ? 0 : 1;
}

int cmd_embed(const Options& opt, const InputSpec& in) {
    ARQuiver q(in.cartan, in.valuation);
    ModMultiset m = parse_vertex_multiset(opt.m_list);
    ModMultiset u = parse_vertex_multiset(opt.u_list);
    EngineOptions eng;
    eng.record_trace = opt.trace;
    Outcome outcome = decide_embedding(q, m, u, eng);

    std::string text;
    json j{{"m", json_multiset(m)}, {"u", json_multiset(u)}};
    int code;
    if (const auto* yes = std::get_if<EmbedsOutcome>(&outcome)) {
        if (opt.trace) text += trace_text(yes->trace);
        text += "YES: M embeds; final middle " +
                (yes->final_middle.empty() ? "-" : yes->final_middle.to_paren_string());
        j["embeds"] = true;
        j["final_middle"] = json_multiset(yes->final_middle);
        if (opt.trace) j["trace"] = json_trace(yes->trace);
        code = 0;
    } else {
        const auto& no = std::get<NoEmbedOutcome>(outcome);
        if (opt.trace) text += trace_text(no.trace);
        text += "NO: requires " + format_vertex_paren(no.witness) + "^" +
                std::to_string(no.required) + ", U provides " + std::to_string(no.available);
        j["embeds"] = false;
        j["witness"] = json_vertex(no.witness);
        j["required"] = no.required;
        j["available"] = no.available;
        if (opt.trace) j["trace"] = json_trace(no.trace);
        code = 1;
    }
    emit(opt, text, j);
    return code;
}

int cmd_closed(const Options& opt, const InputSpec& in, bool from_word) {
    ARQuiver q(in.cartan, in.valuation);
    CofiniteSubcat sub;
    if (from_word) {
        Word w = parse_word(opt.word);
        check_letters(w, in.cartan);
        sub = subcat_of_word(q, w);
    } else {
        sub.excluded = parse_vertex_set(opt.excluded);
    }

    ClosureReport report = is_submodule_closed(q, sub);
    json ex = json::array();
    for (Vertex v : sub.excluded) ex.push_back(json_vertex(v));
    json j{{"excluded", ex}, {"dropped", sub.dropped}, {"closed", report.closed}};
    std::string text;
    if (report.closed) {
        text = "closed";
    } else {
        text = "not closed:";
        json ws = json::array();
        for (const ClosureWitness& w : report.witnesses) {
            text += " " + format_vertex_paren(w.module) + " embeds into " +
                    w.certificate.to_paren_string() + ";";
            ws.push_back(json{{"module", json_vertex(w.module)},
                              {"certificate", json_multiset(w.certificate)}});
        }
        text.pop_back();
        j["witnesses"] = ws;
    }
    emit(opt, text, j);
    return report.closed ? 0 : 1;
}

int cmd_enumerate(const Options& opt, const InputSpec& in) {
    require(opt.max_len >= 0, "maximum length must be nonnegative");
    BijectionOptions bopt;
    bopt.max_len = opt.max_len;
    bopt.build_table = !opt.verify;
    BijectionReport report = verify_bijection(in.cartan, bopt);

    json j{{"max_len", opt.max_len},
           {"words_checked", report.words_checked},
           {"dropped_words", report.dropped_words},
           {"leftmost_count", report.leftmost_count},
           {"closed_count", report.closed_count},
           {"ok", report.ok}};
    if (report.finite_complete) j["weyl_size"] = report.weyl_size;

    std::string text;
    if (opt.verify) {
        text += "words checked: " + std::to_string(report.words_checked) + "\n";
        text += "dropped: " + std::to_string(report.dropped_words) + "\n";
        text += "leftmost: " + std::to_string(report.leftmost_count) + "\n";
        text += "closed: " + std::to_string(report.closed_count) + "\n";
        if (report.finite_complete)
            text += "weyl group size: " + std::to_string(report.weyl_size) + "\n";
    } else {
        json table = json::array();
        for (const auto& [w, excluded] : report.table) {
            std::string line = format_word(w);
            std::string set;
            for (Vertex v : excluded) set += (set.empty() ? "" : ",") + format_vertex_colon(v);
            text += (w.empty() ? "-" : line) + " -> " + (set.empty() ? "-" : set) + "\n";
            json ex = json::array();
            for (Vertex v : excluded) ex.push_back(json_vertex(v));
            table.push_back(json{{"word", json_word(w)}, {"excluded", ex}});
        }
        j["table"] = table;
    }
    if (!report.ok && report.violation) {
        text += "violation (" + report.violation->kind + "): " +
                format_word(report.violation->word) + "\n";
        j["violation"] = json{{"kind", report.violation->kind},
                              {"word", json_word(report.violation->word)}};
    } else if (opt.verify) {
        text += "ok\n";
    }
    if (!text.empty()) text.pop_back();
    emit(opt, text, j);
    return report.ok ? 0 : 1;
}

int cmd_ar_dot(const Options& opt, const InputSpec& in) {
    ARQuiver q(in.cartan, in.valuation);
    std::string dot = dot_export(q, opt.slices);
    if (opt.json_output)
        emit(opt, "", json{{"slices", opt.slices}, {"dot", dot}});
    else
        std::cout << dot;
    return 0;
}

int cmd_dims(const Options& opt, const InputSpec& in) {
    ARQuiver q(in.cartan, in.valuation);
    std::string table = dims_table(q, opt.slices);
    if (opt.json_output) {
        json rows = json::array();
        for (int r = 0; r < opt.slices; ++r)
            for (int i = 1; i <= q.rank(); ++i) {
                Vertex v{r, i};
                if (!q.exists(v)) continue;
                json d = json::array();
                for (long long x : q.dim(v)) d.push_back(x);
                rows.push_back(json{{"r", v.r}, {"i", v.i}, {"dim", d}});
            }
        emit(opt, "", json{{"slices", opt.slices}, {"dims", rows}});
    } else {
        std::cout << table;
    }
    return 0;
}

int cmd_oracle_check(const Options& opt, const InputSpec& in) {
    LinearOracle oracle(in.cartan);
    auto all = oracle.quiver().all_vertices();
    require(all.has_value(), "oracle check needs finite representation type");
    const size_t count = all->size();
    if (count > 12)
        throw ResourceError("oracle check over " + std::to_string(count) +
                            " indecomposables exceeds the exhaustive-subset cap of 12");

    long long subsets = 0, closed = 0;
    for (size_t mask = 0; mask < (size_t{1} << count); ++mask) {
        std::set<Vertex> excluded;
        for (size_t b = 0; b < count; ++b)
            if (mask & (size_t{1} << b)) excluded.insert((*all)[b]);
        bool brute = oracle.brute_closed(excluded);
        bool engine = is_submodule_closed(oracle.quiver(), {excluded, false}).closed;
        if (brute != engine) {
            std::string set;
            for (Vertex v : excluded) set += (set.empty() ? "" : ",") + format_vertex_colon(v);
            throw InternalError("engine and linear oracle disagree on excluded set {" + set + "}");
        }
        ++subsets;
        if (engine) ++closed;
    }
    emit(opt,
         "indecomposables: " + std::to_string(count) + "\nsubsets: " +
             std::to_string(subsets) + "\nclosed: " + std::to_string(closed) +
             "\nagreement: " + std::to_string(subsets) + "/" + std::to_string(subsets),
         json{{"indecomposables", count},
              {"subsets", subsets},
              {"closed", closed},
              {"agree", true}});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Weyl-group words and submodule-closed subcategories of hereditary algebras"};
    app.require_subcommand(1);
    app.add_flag("--json", opt.json_output, "structured output with identical information");
    app.fallthrough();

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", opt.input_path, "quiver or Cartan-matrix description file")
            ->required();
    };

    CLI::App* coxmat = app.add_subcommand("coxmat", "print the Coxeter matrix");
    add_input(coxmat);

    CLI::App* rho_cmd = app.add_subcommand("rho", "grid pairs of a word");
    add_input(rho_cmd);
    rho_cmd->add_option("--word", opt.word, "space-separated generator indices")->required();

    CLI::App* cmp = app.add_subcommand("cmp", "compare two words by length, then by rho");
    add_input(cmp);
    cmp->add_option("--w1", opt.w1, "first word")->required();
    cmp->add_option("--w2", opt.w2, "second word")->required();

    CLI::App* leftmost = app.add_subcommand("leftmost", "minimal word of the element");
    add_input(leftmost);
    leftmost->add_option("--word", opt.word, "space-separated generator indices")->required();
    leftmost->add_option("--method", opt.method, "bfs, greedy or both")
        ->check(CLI::IsMember({"bfs", "greedy", "both"}));

    CLI::App* reduced = app.add_subcommand("reduced", "is the word reduced?");
    add_input(reduced);
    reduced->add_option("--word", opt.word, "space-separated generator indices")->required();

    CLI::App* embed = app.add_subcommand("embed", "does M embed into add(U)?");
    add_input(embed);
    embed->add_option("--m", opt.m_list, "module, e.g. 1:3 or 0:2,1:1^2")->required();
    embed->add_option("--u", opt.u_list, "target summands, e.g. 0:2,0:3,0:4");
    embed->add_flag("--trace", opt.trace, "print every rewriting state");

    CLI::App* closed = app.add_subcommand("closed", "is the subcategory submodule closed?");
    add_input(closed);
    CLI::Option* closed_word =
        closed->add_option("--word", opt.word, "word whose grid pairs are excluded");
    closed->add_option("--excluded", opt.excluded, "excluded vertices, e.g. 0:3,1:1")
        ->excludes(closed_word);

    CLI::App* enumerate = app.add_subcommand("enumerate", "leftmost words up to a length");
    add_input(enumerate);
    enumerate->add_option("--max-len", opt.max_len, "maximum word length")->required();
    enumerate->add_flag("--verify", opt.verify,
                        "check closed = leftmost over all words instead of listing");

    CLI::App* ar_dot = app.add_subcommand("ar-dot", "DOT export of the grid");
    add_input(ar_dot);
    ar_dot->add_option("--slices", opt.slices, "number of rows, starting at 0")->required();

    CLI::App* dims = app.add_subcommand("dims", "dimension vectors of the grid");
    add_input(dims);
    dims->add_option("--slices", opt.slices, "number of rows, starting at 0")->required();

    CLI::App* oracle = app.add_subcommand("oracle-check", "cross-validate the engine on type A");
    add_input(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        InputSpec in = parse_input_file(opt.input_path);
        if (coxmat->parsed()) return cmd_coxmat(opt, in);
        if (rho_cmd->parsed()) return cmd_rho(opt, in);
        if (cmp->parsed()) return cmd_cmp(opt, in);
        if (leftmost->parsed()) return cmd_leftmost(opt, in);
        if (reduced->parsed()) return cmd_reduced(opt, in);
        if (embed->parsed()) return cmd_embed(opt, in);
        if (closed->parsed()) {
            bool has_word = closed->count("--word") > 0;
            bool has_excluded = closed->count("--excluded") > 0;
            if (has_word == has_excluded)
                throw InputError("closed needs exactly one of --word or --excluded");
            return cmd_closed(opt, in, has_word);
        }
        if (enumerate->parsed()) return cmd_enumerate(opt, in);
        if (ar_dot->parsed()) return cmd_ar_dot(opt, in);
        if (dims->parsed()) return cmd_dims(opt, in);
        if (oracle->parsed()) return cmd_oracle_check(opt, in);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
