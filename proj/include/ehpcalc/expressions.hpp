#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ehpcalc/forms.hpp"
#include "ehpcalc/milnor_witt.hpp"
#include "ehpcalc/simplicial.hpp"

namespace ehpcalc {

// Space expressions: S<n>, pt, A + B (wedge), A ^ B (smash), A x B (product), J(K,n) for the
// James truncation and Q(K,n) for its filtration quotient J_n/J_{n-1}. Precedence, tightest
// first: ^, x, +.
SSet parse_space(std::string_view text);

// Rational or symbolic unit: "-1", "3/2", "g" (a fixed nonsquare).
Unit parse_unit(const Field& f, std::string_view text);

// "<1> + <-1> - 2<g>", "h", "eps", "3".
GWElement parse_gw(const Field& f, std::string_view text);

// "[2]*[3] + eta*[-1]", "<a>", "h", "eps", integers, parentheses.
KMWSymbol parse_kmw(const Field& f, std::string_view text);

// "x|y|z" -> {"x", "y", "z"}; "" -> {}.
std::vector<std::string> parse_word_letters(std::string_view text);

}  // namespace ehpcalc
