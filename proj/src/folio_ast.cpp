#include "totlab/folio/ast.hpp"

#include "totlab/error.hpp"

namespace totlab::folio {

namespace {

TermPtr make_term(Term t) { return std::make_shared<const Term>(std::move(t)); }
FormulaPtr make_formula(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

}  // namespace

TermPtr t_var(std::string name) {
    if (name.empty()) fail(Errc::bad_format, "empty variable name");
    Term t;
    t.kind = Term::Kind::variable;
    t.name = std::move(name);
    return make_term(std::move(t));
}

TermPtr t_zero() {
    static const TermPtr z = make_term(Term{Term::Kind::zero, "", nullptr, nullptr});
    return z;
}

TermPtr t_one() {
    static const TermPtr o = make_term(Term{Term::Kind::one, "", nullptr, nullptr});
    return o;
}

TermPtr t_sum(TermPtr a, TermPtr b) {
    return make_term(Term{Term::Kind::sum, "", std::move(a), std::move(b)});
}

TermPtr t_prod(TermPtr a, TermPtr b) {
    return make_term(Term{Term::Kind::product, "", std::move(a), std::move(b)});
}

TermPtr t_numeral(std::uint64_t u) {
    if (u == 0) return t_zero();
    TermPtr acc = t_one();
    for (std::uint64_t i = 1; i < u; ++i) acc = t_sum(std::move(acc), t_one());
    return acc;
}

FormulaPtr f_eq(TermPtr a, TermPtr b) {
    Formula f;
    f.kind = Formula::Kind::equals;
    f.t1 = std::move(a);
    f.t2 = std::move(b);
    return make_formula(std::move(f));
}

FormulaPtr f_lt(TermPtr a, TermPtr b) {
    Formula f;
    f.kind = Formula::Kind::less;
    f.t1 = std::move(a);
    f.t2 = std::move(b);
    return make_formula(std::move(f));
}

FormulaPtr f_not(FormulaPtr g) {
    Formula f;
    f.kind = Formula::Kind::logical_not;
    f.f1 = std::move(g);
    return make_formula(std::move(f));
}

namespace {

FormulaPtr binary(Formula::Kind kind, FormulaPtr a, FormulaPtr b) {
    Formula f;
    f.kind = kind;
    f.f1 = std::move(a);
    f.f2 = std::move(b);
    return make_formula(std::move(f));
}

FormulaPtr quantifier(Formula::Kind kind, std::string var, FormulaPtr body) {
    if (var.empty()) fail(Errc::bad_format, "empty quantifier variable");
    Formula f;
    f.kind = kind;
    f.var = std::move(var);
    f.f1 = std::move(body);
    return make_formula(std::move(f));
}

}  // namespace

FormulaPtr f_and(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::logical_and, std::move(a), std::move(b)); }
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::logical_or, std::move(a), std::move(b)); }
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) { return binary(Formula::Kind::implies, std::move(a), std::move(b)); }
FormulaPtr f_forall(std::string var, FormulaPtr body) { return quantifier(Formula::Kind::forall, std::move(var), std::move(body)); }
FormulaPtr f_exists(std::string var, FormulaPtr body) { return quantifier(Formula::Kind::exists, std::move(var), std::move(body)); }

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Term::Kind::variable: return a->name == b->name;
        case Term::Kind::zero:
        case Term::Kind::one: return true;
        case Term::Kind::sum:
        case Term::Kind::product: return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
    }
    return false;
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Formula::Kind::equals:
        case Formula::Kind::less:
            return term_equal(a->t1, b->t1) && term_equal(a->t2, b->t2);
        case Formula::Kind::logical_not:
            return formula_equal(a->f1, b->f1);
        case Formula::Kind::logical_and:
        case Formula::Kind::logical_or:
        case Formula::Kind::implies:
            return formula_equal(a->f1, b->f1) && formula_equal(a->f2, b->f2);
        case Formula::Kind::forall:
        case Formula::Kind::exists:
            return a->var == b->var && formula_equal(a->f1, b->f1);
    }
    return false;
}

std::optional<std::uint64_t> as_numeral(const TermPtr& t) {
    if (!t) return std::nullopt;
    if (t->kind == Term::Kind::zero) return 0;
    std::uint64_t count = 0;
    const Term* cur = t.get();
    while (cur->kind == Term::Kind::sum) {
        if (cur->rhs->kind != Term::Kind::one) return std::nullopt;
        ++count;
        cur = cur->lhs.get();
    }
    if (cur->kind != Term::Kind::one) return std::nullopt;
    return count + 1;
}

void collect_free_vars(const TermPtr& t, std::set<std::string>& out) {
    if (!t) return;
    switch (t->kind) {
        case Term::Kind::variable: out.insert(t->name); break;
        case Term::Kind::sum:
        case Term::Kind::product:
            collect_free_vars(t->lhs, out);
            collect_free_vars(t->rhs, out);
            break;
        default: break;
    }
}

namespace {

void free_vars_rec(const FormulaPtr& f, std::set<std::string> bound, std::set<std::string>& out) {
    if (!f) return;
    switch (f->kind) {
        case Formula::Kind::equals:
        case Formula::Kind::less: {
            std::set<std::string> vars;
            collect_free_vars(f->t1, vars);
            collect_free_vars(f->t2, vars);
            for (const auto& v : vars) {
                if (!bound.count(v)) out.insert(v);
            }
            break;
        }
        case Formula::Kind::logical_not:
            free_vars_rec(f->f1, bound, out);
            break;
        case Formula::Kind::logical_and:
        case Formula::Kind::logical_or:
        case Formula::Kind::implies:
            free_vars_rec(f->f1, bound, out);
            free_vars_rec(f->f2, bound, out);
            break;
        case Formula::Kind::forall:
        case Formula::Kind::exists:
            bound.insert(f->var);
            free_vars_rec(f->f1, std::move(bound), out);
            break;
    }
}

}  // namespace

std::set<std::string> free_vars(const FormulaPtr& f) {
    std::set<std::string> out;
    free_vars_rec(f, {}, out);
    return out;
}

bool has_quantifier(const FormulaPtr& f) {
    if (!f) return false;
    switch (f->kind) {
        case Formula::Kind::equals:
        case Formula::Kind::less: return false;
        case Formula::Kind::logical_not: return has_quantifier(f->f1);
        case Formula::Kind::logical_and:
        case Formula::Kind::logical_or:
        case Formula::Kind::implies: return has_quantifier(f->f1) || has_quantifier(f->f2);
        case Formula::Kind::forall:
        case Formula::Kind::exists: return true;
    }
    return false;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
    if (!avoid.count(base)) return base;
    for (int i = 0;; ++i) {
        std::string candidate = base + std::to_string(i);
        if (!avoid.count(candidate)) return candidate;
    }
}

}  // namespace totlab::folio
