#include "posetmorse/io.hpp"

#include <set>
#include <sstream>

namespace posetmorse {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

void check_identifier(const std::string& id, int line_no) {
    if (id.empty() || id.find('<') != std::string::npos)
        fail(ErrorCode::SyntaxError,
             "line " + std::to_string(line_no) + ": invalid identifier '" + id + "'",
             line_no);
}

// Calls fn(line_number, tokens) for every non-comment, non-blank line.
template <class Fn>
void for_each_line(const std::string& text, Fn&& fn) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        fn(line_no, tokens);
    }
}

}  // namespace

Poset parse_poset(const std::string& text) {
    std::set<std::string> declared;
    std::set<std::pair<std::string, std::string>> covers;
    std::vector<std::pair<std::string, std::string>> cover_list;

    for_each_line(text, [&](int line_no, const std::vector<std::string>& tokens) {
        if (tokens[0] == "elements:") {
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                check_identifier(tokens[i], line_no);
                if (!declared.insert(tokens[i]).second)
                    fail(ErrorCode::SyntaxError,
                         "line " + std::to_string(line_no) + ": element '" + tokens[i] +
                             "' declared twice",
                         line_no);
            }
            return;
        }
        if (tokens.size() != 3 || tokens[1] != "<")
            fail(ErrorCode::SyntaxError,
                 "line " + std::to_string(line_no) + ": expected 'x < y'", line_no);
        check_identifier(tokens[0], line_no);
        check_identifier(tokens[2], line_no);
        if (!covers.insert({tokens[0], tokens[2]}).second)
            fail(ErrorCode::SyntaxError,
                 "line " + std::to_string(line_no) + ": duplicate cover '" + tokens[0] +
                     " < " + tokens[2] + "'",
                 line_no);
        cover_list.push_back({tokens[0], tokens[2]});
    });

    std::set<std::string> ids = declared;
    for (const auto& [lo, hi] : cover_list) {
        ids.insert(lo);
        ids.insert(hi);
    }
    return Poset::from_covers({ids.begin(), ids.end()}, cover_list);
}

Matching parse_matching(const std::string& text) {
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<std::pair<std::string, std::string>> pairs;
    for_each_line(text, [&](int line_no, const std::vector<std::string>& tokens) {
        if (tokens.size() != 3 || tokens[1] != "--")
            fail(ErrorCode::SyntaxError,
                 "line " + std::to_string(line_no) + ": expected 'x -- y'", line_no);
        check_identifier(tokens[0], line_no);
        check_identifier(tokens[2], line_no);
        if (!seen.insert({tokens[0], tokens[2]}).second)
            fail(ErrorCode::SyntaxError,
                 "line " + std::to_string(line_no) + ": duplicate pair '" + tokens[0] +
                     " -- " + tokens[2] + "'",
                 line_no);
        pairs.push_back({tokens[0], tokens[2]});
    });
    return Matching::from_pairs(std::move(pairs));
}

SimplicialComplex parse_complex(const std::string& text) {
    std::vector<Simplex> facets;
    for_each_line(text, [&](int line_no, const std::vector<std::string>& tokens) {
        Simplex s;
        for (const std::string& v : tokens) {
            check_identifier(v, line_no);
            s.push_back(v);
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            fail(ErrorCode::SyntaxError,
                 "line " + std::to_string(line_no) + ": repeated vertex in facet", line_no);
        facets.push_back(std::move(s));
    });
    return SimplicialComplex::from_facets(facets);
}

std::string serialize_poset(const Poset& x) {
    std::string out = "elements:";
    for (const std::string& id : x.ids()) out += " " + id;
    out += "\n";
    for (auto& [lo, hi] : x.cover_pairs()) out += x.id(lo) + " < " + x.id(hi) + "\n";
    return out;
}

std::string serialize_matching(const Matching& m) {
    std::string out;
    for (const auto& [lo, hi] : m.pairs) out += lo + " -- " + hi + "\n";
    return out;
}

std::string serialize_complex(const SimplicialComplex& k) {
    std::string out;
    for (const Simplex& f : k.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) out += (i ? " " : "") + f[i];
        out += "\n";
    }
    return out;
}

std::string matched_digraph_dot(const Poset& x, const Matching& m) {
    std::set<std::pair<std::string, std::string>> matched(m.pairs.begin(), m.pairs.end());
    std::string out = "digraph matched_hasse {\n";
    for (const std::string& id : x.ids()) out += "  \"" + id + "\";\n";
    for (auto& [lo, hi] : x.cover_pairs()) {
        if (matched.count({x.id(lo), x.id(hi)}))
            out += "  \"" + x.id(lo) + "\" -> \"" + x.id(hi) + "\" [style=dashed];\n";
        else
            out += "  \"" + x.id(hi) + "\" -> \"" + x.id(lo) + "\";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace posetmorse
