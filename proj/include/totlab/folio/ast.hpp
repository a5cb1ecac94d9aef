#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>

namespace totlab::folio {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Terms over the signature {+, ., 0, 1}. Numerals are left-nested sums of
// ones, ((1+1)+...)+1, and are recognized back by the printer.
struct Term {
    enum class Kind { variable, zero, one, sum, product };

    Kind kind = Kind::zero;
    std::string name;  // variable
    TermPtr lhs, rhs;  // sum / product
};

TermPtr t_var(std::string name);
TermPtr t_zero();
TermPtr t_one();
TermPtr t_sum(TermPtr a, TermPtr b);
TermPtr t_prod(TermPtr a, TermPtr b);
TermPtr t_numeral(std::uint64_t u);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { equals, less, logical_not, logical_and, logical_or, implies, forall, exists };

    Kind kind = Kind::equals;
    TermPtr t1, t2;    // equals / less
    FormulaPtr f1, f2; // connectives; quantifier body in f1
    std::string var;   // quantifiers
};

FormulaPtr f_eq(TermPtr a, TermPtr b);
FormulaPtr f_lt(TermPtr a, TermPtr b);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_forall(std::string var, FormulaPtr body);
FormulaPtr f_exists(std::string var, FormulaPtr body);

bool term_equal(const TermPtr& a, const TermPtr& b);
bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

// Recognizes 0, 1 and left-nested ((1+1)+...)+1 shapes.
std::optional<std::uint64_t> as_numeral(const TermPtr& t);

void collect_free_vars(const TermPtr& t, std::set<std::string>& out);
std::set<std::string> free_vars(const FormulaPtr& f);
bool has_quantifier(const FormulaPtr& f);

// A name not appearing in avoid: base itself, else base0, base1, ...
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

}  // namespace totlab::folio
