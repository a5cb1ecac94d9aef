#pragma once

#include <string>

#include "totlab/folio/ast.hpp"

namespace totlab::folio {

// Grammar (ASCII forms; the unicode symbols are accepted too):
//
//   formula := ('forall'|'exists') var '.' formula | implication
//   impl    := disj ['->' impl]                      (right-assoc)
//   disj    := conj { '\/' conj }
//   conj    := neg  { '/\' neg }
//   neg     := '!' neg | atom
//   atom    := '(' formula ')' | pred '(' args ')' | term rel term
//   rel     := '=' | '<' | '<=' | '>' | '|'
//   term    := factor { '+' factor }
//   factor  := primary { '*' primary }
//   primary := var | numeral | '(' term ')'
//
// Numerals are decimal literals and expand to ((1+1)+...)+1. The sugar
// forms <=, >, | and the predicates pi1, pi2, prime (= pi2), rho, sigma
// expand into the core language; the printer only emits core syntax.
FormulaPtr parse(const std::string& text);   // throws ParseError with position
TermPtr parse_term_text(const std::string& text);

std::string pretty(const FormulaPtr& f);
std::string pretty(const TermPtr& t);

}  // namespace totlab::folio
