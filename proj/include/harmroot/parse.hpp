#pragma once

#include <string_view>

#include "harmroot/jets.hpp"

namespace harmroot {

/// Parses the expression grammar
///   expr    := term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := '-' factor | power
///   power   := atom ('^' integer)?
///   atom    := 'z' | literal | name '(' expr ')' | '(' expr ')'
///   name    := exp | log | sin | cos
///   literal := decimal ['i']      ('i' alone is the imaginary unit)
/// with left-associative +,-,*,/ and '^' binding tighter than unary minus.
/// Throws ParseError carrying the byte offset and the expected-token set.
AnalyticFn parse_expression(std::string_view text);

/// Parses a constant such as "1.5-0.5i", "i", or "2" by parsing an
/// expression and requiring it to be z-free.
Complex parse_complex(std::string_view text);

}  // namespace harmroot
