#include "totlab/folio/catalog.hpp"

#include <map>

#include "totlab/error.hpp"

namespace totlab::folio {

namespace {

std::set<std::string> avoid_of(std::initializer_list<TermPtr> terms) {
    std::set<std::string> avoid;
    for (const auto& t : terms) collect_free_vars(t, avoid);
    return avoid;
}

FormulaPtr conj_all(std::initializer_list<FormulaPtr> fs) {
    FormulaPtr acc;
    for (const auto& f : fs) acc = acc ? f_and(std::move(acc), f) : f;
    return acc;
}

}  // namespace

FormulaPtr p_leq(TermPtr a, TermPtr b) { return f_or(f_lt(a, b), f_eq(a, b)); }

FormulaPtr p_divides(TermPtr a, TermPtr b) {
    auto avoid = avoid_of({a, b});
    std::string z = fresh_name("z", avoid);
    return f_exists(z, f_eq(t_prod(a, t_var(z)), b));
}

FormulaPtr p_rho(TermPtr m, TermPtr n) {
    auto avoid = avoid_of({m, n});
    std::string d = fresh_name("d", avoid);
    TermPtr dv = t_var(d);
    return f_forall(d, f_implies(f_and(p_divides(dv, m), p_divides(dv, n)), f_eq(dv, t_one())));
}

FormulaPtr p_pi1(TermPtr x) {
    auto avoid = avoid_of({x});
    std::string a = fresh_name("a", avoid), b = fresh_name("b", avoid);
    TermPtr av = t_var(a), bv = t_var(b);
    FormulaPtr body = f_and(f_lt(t_one(), x),
                            f_implies(f_eq(x, t_prod(av, bv)),
                                      f_or(f_eq(av, t_one()), f_eq(bv, t_one()))));
    return f_forall(a, f_forall(b, std::move(body)));
}

FormulaPtr p_pi2(TermPtr x) {
    auto avoid = avoid_of({x});
    std::string a = fresh_name("a", avoid), b = fresh_name("b", avoid);
    std::string c = fresh_name("c", avoid), d = fresh_name("d", avoid);
    TermPtr av = t_var(a), bv = t_var(b), cv = t_var(c), dv = t_var(d);
    FormulaPtr body = f_and(f_lt(t_one(), x),
                            f_implies(f_eq(t_prod(x, cv), t_prod(av, bv)),
                                      f_or(f_eq(t_prod(x, dv), av), f_eq(t_prod(x, dv), bv))));
    return f_forall(a, f_forall(b, f_forall(c, f_exists(d, std::move(body)))));
}

FormulaPtr p_sigma(TermPtr u, TermPtr a, TermPtr b) {
    return conj_all({p_pi2(a), p_pi2(b), f_lt(a, b),
                     f_implies(f_and(f_lt(a, u), p_pi2(u)), p_leq(b, u))});
}

FormulaPtr p_consecutive(TermPtr a, TermPtr b) {
    auto avoid = avoid_of({a, b});
    std::string u = fresh_name("u", avoid);
    return f_forall(u, p_sigma(t_var(u), a, b));
}

namespace {

std::vector<std::pair<std::string, FormulaPtr>> build_catalog() {
    std::vector<std::pair<std::string, FormulaPtr>> out;
    TermPtr x = t_var("x"), y = t_var("y"), z = t_var("z");
    TermPtr n = t_var("n"), m = t_var("m"), p = t_var("p"), q = t_var("q"), r = t_var("r");
    TermPtr k = t_var("k"), t = t_var("t"), v = t_var("v"), u = t_var("u");
    TermPtr zero = t_zero(), one = t_one();

    auto closed3 = [&](FormulaPtr f) { return f_forall("x", f_forall("y", f_forall("z", std::move(f)))); };
    auto closed2 = [&](FormulaPtr f) { return f_forall("x", f_forall("y", std::move(f))); };
    auto closed1 = [&](FormulaPtr f) { return f_forall("x", std::move(f)); };

    out.emplace_back("A1", closed3(f_eq(t_sum(t_sum(x, y), z), t_sum(x, t_sum(y, z)))));
    out.emplace_back("A2", closed2(f_eq(t_sum(x, y), t_sum(y, x))));
    out.emplace_back("A3", closed3(f_eq(t_prod(t_prod(x, y), z), t_prod(x, t_prod(y, z)))));
    out.emplace_back("A4", closed2(f_eq(t_prod(x, y), t_prod(y, x))));
    out.emplace_back("A5", closed3(f_eq(t_prod(x, t_sum(y, z)), t_sum(t_prod(x, y), t_prod(x, z)))));
    out.emplace_back("A6", closed1(f_and(f_eq(t_sum(x, zero), x), f_eq(t_prod(x, zero), zero))));
    out.emplace_back("A7", closed1(f_eq(t_prod(x, one), x)));
    out.emplace_back("A8", closed3(f_implies(f_and(f_lt(x, y), f_lt(y, z)), f_lt(x, z))));
    out.emplace_back("A9", closed1(f_not(f_lt(x, x))));
    out.emplace_back("A10", closed2(f_or(f_or(f_lt(x, y), f_eq(x, y)), f_lt(y, x))));
    out.emplace_back("A11", closed3(f_implies(f_lt(x, y), f_lt(t_sum(x, z), t_sum(y, z)))));
    out.emplace_back("A12", closed3(f_implies(f_and(f_lt(zero, z), f_lt(x, y)),
                                              f_lt(t_prod(x, z), t_prod(y, z)))));
    out.emplace_back("A13", f_forall("x", f_forall("y", f_exists("z",
                     f_implies(f_lt(x, y), f_eq(t_sum(x, z), y))))));
    out.emplace_back("A14", closed1(f_and(f_lt(zero, one),
                     f_implies(f_lt(zero, x), f_or(f_lt(one, x), f_eq(x, one))))));
    out.emplace_back("A15", closed1(f_or(f_lt(zero, x), f_eq(x, zero))));

    // A16/A17 carry the intended minimality reading: the "q <= u" clause
    // sits inside the consequent, conditioned only on u being a prime on
    // the relevant side of p.
    out.emplace_back("A16", f_forall("p", f_exists("q", f_forall("u",
                     f_implies(p_pi2(p),
                               conj_all({f_lt(p, q), p_pi2(q),
                                         f_implies(f_and(p_pi2(u), f_lt(p, u)), p_leq(q, u))}))))));
    out.emplace_back("A17", f_forall("p", f_exists("q", f_forall("u",
                     f_implies(p_pi2(p),
                               conj_all({f_lt(q, p), p_pi2(q),
                                         f_implies(f_and(p_pi2(u), f_lt(u, p)), p_leq(u, q))}))))));
    out.emplace_back("A18", f_forall("n", f_exists("p", f_forall("q",
                     f_implies(f_lt(t_numeral(4), n),
                               conj_all({p_pi2(p), f_lt(t_prod(p, p), n),
                                         f_implies(f_and(f_lt(p, q), p_pi2(q)),
                                                   p_leq(n, t_prod(q, q)))}))))));
    out.emplace_back("A19", f_forall("r", f_forall("p", f_forall("q",
                     f_implies(conj_all({f_lt(t_numeral(17), q), p_consecutive(r, p), p_consecutive(p, q)}),
                               f_lt(t_prod(q, q), t_prod(t_prod(t_numeral(2), p), r)))))));
    out.emplace_back("A20", f_forall("n", f_exists("p",
                     f_implies(f_lt(one, n), f_and(p_pi2(p), p_divides(p, n))))));
    out.emplace_back("A21", f_forall("p", f_forall("q", f_exists("k",
                     f_implies(p_consecutive(p, q),
                               f_and(f_lt(t_prod(k, p), t_prod(q, q)),
                                     f_lt(t_prod(q, q), t_prod(t_sum(k, one), p))))))));

    FormulaPtr gs_matrix = conj_all({p_rho(q, m), f_lt(q, m), f_lt(one, q),
                                     f_implies(f_and(p_leq(u, p), p_pi2(u)), p_rho(u, q)),
                                     f_not(p_pi2(q))});
    out.emplace_back("GSw", f_forall("p", f_exists("n", f_forall("m", f_exists("q", f_forall("u",
                     f_implies(f_and(p_pi2(p), p_leq(n, m)), gs_matrix)))))));

    FormulaPtr gss_first = f_implies(conj_all({f_lt(one, t), f_lt(t, n), p_rho(t, n),
                                               f_implies(f_and(p_leq(v, p), p_pi2(v)), p_rho(v, t))}),
                                     p_pi2(t));
    FormulaPtr gss_second = f_implies(p_leq(n, m), gs_matrix);
    out.emplace_back("GSs", f_forall("p", f_exists("n", f_forall("t", f_forall("v", f_forall("m",
                     f_exists("q", f_forall("u",
                     f_implies(p_pi2(p), f_and(gss_first, gss_second))))))))));

    return out;
}

}  // namespace

const std::vector<std::pair<std::string, FormulaPtr>>& axiom_catalog() {
    static const auto catalog = build_catalog();
    return catalog;
}

FormulaPtr catalog_formula(const std::string& name) {
    for (const auto& [n, f] : axiom_catalog()) {
        if (n == name) return f;
    }
    if (name == "Eq3") {
        static const FormulaPtr eq3 =
            f_forall("x", f_implies(p_pi2(t_var("x")), p_pi1(t_var("x"))));
        return eq3;
    }
    fail(Errc::bad_format, "unknown catalog entry: " + name);
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& [n, f] : axiom_catalog()) out.push_back(n);
    return out;
}

}  // namespace totlab::folio
