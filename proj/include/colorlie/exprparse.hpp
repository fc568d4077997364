#ifndef COLORLIE_EXPRPARSE_HPP
#define COLORLIE_EXPRPARSE_HPP

#include <string>
#include <vector>

#include "colorlie/scalar.hpp"
#include "colorlie/uea.hpp"

namespace colorlie {

/// Parses the noncommutative expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' int)?
///   atom   := ident | scalar | '(' expr ')'
/// over the given generator names. The result is the expanded distributive
/// form: a list of scalar-prefixed generator words, ready for PBW
/// normalization. q is the field parameter, never a generator. Division and
/// negative powers are only defined for purely scalar subexpressions.
std::vector<Word> parse_expression(const std::string& text,
                                   const std::vector<std::string>& generator_names);

/// Scalar-only expressions; any generator identifier is an error.
Scalar parse_scalar(const std::string& text);

}  // namespace colorlie

#endif
