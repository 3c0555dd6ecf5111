#pragma once

#include "demazure/hopping.hpp"
#include "demazure/permutation.hpp"
#include "demazure/signed_permutation.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace demazure {

/// Integers separated by whitespace and/or commas; surrounding brackets optional.
std::vector<int> parse_int_list(std::string_view text);

/// "6 5 4 1 7 2 3", "6,5,4,1,7,2,3" or, for n <= 9, "6541723".
Permutation parse_permutation(std::string_view text);

/// "[-5,3,1,-2,4]" or "-5 3 1 -2 4".
SignedPermutation parse_signed(std::string_view text);

/// Compact digit string when n <= 9, otherwise space separated.
std::string format_permutation(const Permutation& w);
std::string format_signed(const SignedPermutation& w);
std::string format_list(std::span<const int> values);

/// One line per snapshot of a type-A trace. The tracked value and the value it
/// is about to swap with are bracketed; the last line is the final word.
std::vector<std::string> render_trace(const HopTrace& trace);

/// Same for a type-B trace, printed as signed unfolded words.
std::vector<std::string> render_trace_b(const HopTrace& trace);

/// Parses a rendered trace line back to the word it shows (brackets ignored).
Permutation parse_trace_line(std::string_view line);
/// Type-B variant; returns the unfolded word in embedded form.
Permutation parse_trace_line_b(std::string_view line);

} // namespace demazure
