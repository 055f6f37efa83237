#pragma once

#include <string>

#include "posetmorse/morse.hpp"
#include "posetmorse/poset.hpp"
#include "posetmorse/simplicial.hpp"

namespace posetmorse {

// Text formats (UTF-8, LF). Lines starting with '#' are comments, blank lines
// are ignored. Posets: optional `elements: id1 id2 ...` header plus one cover
// `x < y` per line. Matchings: one pair `x -- y` per line, lower element
// first. Complexes: one facet per line, vertex names whitespace-separated.
// Identifiers are nonempty, contain no whitespace and no '<'.
//
// serialize(parse(t)) is canonical (sorted, comment-stripped) and
// parse(serialize(v)) == v.

Poset parse_poset(const std::string& text);
Matching parse_matching(const std::string& text);
SimplicialComplex parse_complex(const std::string& text);

std::string serialize_poset(const Poset& x);
std::string serialize_matching(const Matching& m);
std::string serialize_complex(const SimplicialComplex& k);

/// Matched digraph in DOT form (matched covers up, dashed; others down).
std::string matched_digraph_dot(const Poset& x, const Matching& m);

}  // namespace posetmorse
