#pragma once

#include <map>
#include <optional>
#include <string>

#include "leviscope/poly.hpp"

namespace leviscope {

/// Expression text plus an optional declared variable space. When no space
/// is declared, identifiers are collected from the text and sorted by the
/// coordinate conventions (x < y1 < .. < z < w1 < ..); the space is paired
/// so that `~v` / `conj(v)` resolve. Aliases map extra identifiers to
/// declared variables (the `vars:` header binds z -> ~x, w<j> -> ~y<j>).
struct ExprSource {
    std::string text;
    VarSpacePtr declared_vars;  // may be null
    std::map<std::string, std::string> aliases;
};

/// Grammar (conjugates as `~v` or `conj(v)`, `i` the imaginary unit,
/// rationals `p/q`, exponents nonnegative integers):
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := primary ['^' INT]
///   primary:= INT ['/' INT] | 'i' | IDENT | '~' IDENT
///           | 'conj' '(' IDENT ')' | '(' expr ')' | '-' primary
Poly parse_poly(const ExprSource& src);

/// Deterministic canonical form: terms in descending graded-reverse-lex
/// order, normalized coefficients, conjugates printed as `~v`.
std::string print_poly(const Poly& p);

/// Parse a single Gaussian-rational constant (e.g. "2/3", "1+i", "-i/2").
GaussianRational parse_gaussian(const std::string& text);

/// A `.poly` file: optional `vars: n=<k>` / `coords: <list>` headers, then
/// one expression.
struct PolyFile {
    VarSpacePtr space;
    Poly poly;
};

PolyFile read_poly_file(const std::string& path);
PolyFile parse_poly_file_text(const std::string& content);

}  // namespace leviscope
