#pragma once

#include <string>
#include <utility>
#include <vector>

#include "totlab/folio/ast.hpp"

namespace totlab::folio {

// Defined predicates of the axiom system, expanded into the core language.
// Bound variables are picked fresh against the free variables of the
// arguments, so instantiating with any terms is capture-safe.
FormulaPtr p_leq(TermPtr a, TermPtr b);                     // a < b \/ a = b
FormulaPtr p_divides(TermPtr a, TermPtr b);                 // exists z. a*z = b
FormulaPtr p_rho(TermPtr m, TermPtr n);                     // relatively prime
FormulaPtr p_pi1(TermPtr x);                                // irreducible
FormulaPtr p_pi2(TermPtr x);                                // prime
FormulaPtr p_sigma(TermPtr u, TermPtr a, TermPtr b);        // consecutive-prime matrix, u free
FormulaPtr p_consecutive(TermPtr a, TermPtr b);             // forall u. sigma_u(a, b)

// The 23 axioms, universally closed: A1..A21, GSw, GSs (in that order).
const std::vector<std::pair<std::string, FormulaPtr>>& axiom_catalog();

// Catalog lookup; also serves "Eq3" (forall x. pi2(x) -> pi1(x)).
FormulaPtr catalog_formula(const std::string& name);
std::vector<std::string> catalog_names();  // the 23 axiom names

}  // namespace totlab::folio
