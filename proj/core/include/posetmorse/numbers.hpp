#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace posetmorse {

// All chain-level arithmetic is exact; entries of unimodular transforms can
// outgrow any fixed width even for small inputs.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

/// Canonical rational rendering: lowest terms, "n" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace posetmorse
