#include <doctest.h>

#include <random>

#include "totlab/folio/catalog.hpp"
#include "totlab/folio/check.hpp"
#include "totlab/folio/parse.hpp"

using namespace totlab;
using namespace totlab::folio;

namespace {

// Finite test structure: the ring Z mod m with representative order.
// Operations are total and the carrier enumerates, so quantifiers decide.
struct ModRing {
    using Value = std::uint64_t;
    std::uint64_t m = 5;

    std::string name() const { return "Z" + std::to_string(m); }
    Value add(Value a, Value b) const { return (a + b) % m; }
    Value mul(Value a, Value b) const { return (a * b) % m; }
    Value zero() const { return 0; }
    Value one() const { return 1 % m; }
    bool less(Value a, Value b) const { return a < b; }
    bool equal(Value a, Value b) const { return a == b; }
    std::string print(Value v) const { return std::to_string(v); }
    std::vector<Value> sample(std::uint64_t, std::size_t) const { return all(); }
    std::optional<std::vector<Value>> exhaustive() const { return all(); }
    std::vector<Value> all() const {
        std::vector<Value> out;
        for (std::uint64_t i = 0; i < m; ++i) out.push_back(i);
        return out;
    }
};

struct Fuzzer {
    std::mt19937_64 rng;
    std::vector<std::string> names{"x", "y", "z"};

    explicit Fuzzer(std::uint64_t seed) : rng(seed) {}

    TermPtr term(int depth) {
        switch (rng() % (depth > 0 ? 5 : 3)) {
            case 0: return t_var(names[rng() % names.size()]);
            case 1: return t_numeral(rng() % 7);
            case 2: return t_one();
            case 3: return t_sum(term(depth - 1), term(depth - 1));
            default: return t_prod(term(depth - 1), term(depth - 1));
        }
    }

    FormulaPtr quantifier_free(int depth) {
        if (depth > 0 && rng() % 3 == 0) {
            switch (rng() % 4) {
                case 0: return f_not(quantifier_free(depth - 1));
                case 1: return f_and(quantifier_free(depth - 1), quantifier_free(depth - 1));
                case 2: return f_or(quantifier_free(depth - 1), quantifier_free(depth - 1));
                default: return f_implies(quantifier_free(depth - 1), quantifier_free(depth - 1));
            }
        }
        TermPtr a = term(2), b = term(2);
        return rng() % 2 == 0 ? f_eq(a, b) : f_lt(a, b);
    }

    FormulaPtr formula() {
        FormulaPtr f = quantifier_free(2);
        std::size_t prefix = rng() % 3;
        for (std::size_t i = 0; i < prefix; ++i) {
            std::string var = names[rng() % names.size()];
            f = rng() % 2 == 0 ? f_forall(var, f) : f_exists(var, f);
        }
        return f;
    }
};

// Walk the decisive-instance chain: each stripped quantifier must
// re-evaluate to the same definite verdict, ending exact at the matrix.
template <Structure S>
void recheck_evidence(const S& s, const FormulaPtr& f, Env<typename S::Value> env,
                      const EvalOptions<typename S::Value>& opts, const EvalResult<typename S::Value>& r) {
    if (r.verdict == TriBool::Unknown) return;
    FormulaPtr cur = f;
    auto verdict = r.verdict;
    auto instance = r.root_instance;
    while ((cur->kind == Formula::Kind::forall || cur->kind == Formula::Kind::exists) && instance) {
        env.emplace_back(cur->var, *instance);
        cur = cur->f1;
        auto sub = eval_bounded(cur, s, env, opts);
        REQUIRE(sub.verdict == verdict);
        instance = sub.root_instance;
    }
    if (!has_quantifier(cur)) {
        auto exact = eval_bounded(cur, s, env, opts);
        REQUIRE(exact.verdict == verdict);
    }
}

}  // namespace

TEST_CASE("parse examples") {
    FormulaPtr f1 = parse("x + 0 = x");
    CHECK(formula_equal(f1, f_eq(t_sum(t_var("x"), t_zero()), t_var("x"))));

    FormulaPtr f2 = parse("forall x. exists z. x < z");
    CHECK(formula_equal(f2, f_forall("x", f_exists("z", f_lt(t_var("x"), t_var("z"))))));

    FormulaPtr f3 = parse("x*(y+z) = x*y + x*z");
    FormulaPtr a5 = catalog_formula("A5");
    FormulaPtr matrix = a5;
    while (matrix->kind == Formula::Kind::forall) matrix = matrix->f1;
    CHECK(formula_equal(f3, matrix));

    SUBCASE("sugar expands into the core language") {
        CHECK(formula_equal(parse("x <= y"), f_or(f_lt(t_var("x"), t_var("y")), f_eq(t_var("x"), t_var("y")))));
        CHECK(formula_equal(parse("x > 0"), f_lt(t_zero(), t_var("x"))));
        CHECK(formula_equal(parse("x | y"), p_divides(t_var("x"), t_var("y"))));
        CHECK(formula_equal(parse("pi2(x)"), p_pi2(t_var("x"))));
        CHECK(formula_equal(parse("prime(x)"), p_pi2(t_var("x"))));
        CHECK(formula_equal(parse("rho(x, y)"), p_rho(t_var("x"), t_var("y"))));
    }

    SUBCASE("unicode forms") {
        CHECK(formula_equal(parse("∀x. ¬(x < x)"), catalog_formula("A9")));
        CHECK(formula_equal(parse("forall x. not (x < x)"), catalog_formula("A9")));
    }

    SUBCASE("numerals expand to left-nested sums of ones") {
        CHECK(term_equal(parse_term_text("3"), t_sum(t_sum(t_one(), t_one()), t_one())));
        CHECK(as_numeral(parse_term_text("290")) == 290);
        CHECK(as_numeral(parse_term_text("0")) == 0);
    }

    SUBCASE("syntax errors carry a position") {
        CHECK_THROWS_WITH_AS(parse("x + = y"), doctest::Contains("position"), Error);
        CHECK_THROWS_AS(parse("forall . x = x"), Error);
        CHECK_THROWS_AS(parse("(x < y"), Error);
    }
}

TEST_CASE("pretty examples") {
    CHECK(pretty(catalog_formula("A9")) == "forall x. !(x < x)");
    CHECK(pretty(f_eq(t_var("x"), t_var("x"))) == "x = x");
    CHECK(pretty(catalog_formula("A14")).find("0 < 1") != std::string::npos);
    CHECK(pretty(catalog_formula("A19")).find("17") != std::string::npos);
}

TEST_CASE("catalog shape") {
    const auto& cat = axiom_catalog();
    CHECK(cat.size() == 23);  // A1..A21, GSw, GSs
    CHECK(cat.front().first == "A1");
    CHECK(cat[20].first == "A21");
    CHECK(cat[21].first == "GSw");
    CHECK(cat[22].first == "GSs");
    for (const auto& [name, f] : cat) {
        CAPTURE(name);
        CHECK(free_vars(f).empty());  // universally closed
    }
    CHECK(free_vars(catalog_formula("Eq3")).empty());
    CHECK_THROWS_AS(catalog_formula("A22"), Error);

    SUBCASE("defined predicates pick capture-safe bound names") {
        // pi2 applied to a term that mentions its usual bound names
        FormulaPtr f = p_pi2(t_sum(t_var("a"), t_var("d")));
        auto fv = free_vars(f);
        CHECK(fv == std::set<std::string>{"a", "d"});
    }
}

TEST_CASE("round trip: parse(pretty(f)) = f on the full catalog") {
    for (const auto& [name, f] : axiom_catalog()) {
        CAPTURE(name);
        REQUIRE(formula_equal(parse(pretty(f)), f));
    }
    FormulaPtr eq3 = catalog_formula("Eq3");
    CHECK(formula_equal(parse(pretty(eq3)), eq3));
}

TEST_CASE("eval over N") {
    NatStructure nat;
    EvalOptions<Nat> opts;
    opts.budget = 10;

    auto witness = eval_bounded(parse("exists z. 3 + z = 5"), nat, {}, opts);
    CHECK(witness.verdict == TriBool::True);
    REQUIRE(witness.root_instance.has_value());
    CHECK(*witness.root_instance == 2);

    EvalOptions<Nat> wide;
    wide.pool_size = 100;
    auto a9 = eval_bounded(catalog_formula("A9"), nat, {}, wide);
    CHECK(a9.verdict == TriBool::Unknown);  // no counterexample, carrier infinite
    CHECK_FALSE(a9.root_instance.has_value());

    auto refuted = eval_bounded(parse("forall x. x < 5"), nat, {}, wide);
    CHECK(refuted.verdict == TriBool::False);
    REQUIRE(refuted.root_instance.has_value());
    CHECK(*refuted.root_instance >= 5);

    SUBCASE("free variables come from the environment") {
        Env<Nat> env{{"x", Nat(4)}};
        CHECK(eval_bounded(parse("x * x = 16"), nat, env, opts).verdict == TriBool::True);
        CHECK_THROWS_AS(eval_bounded(parse("y = 0"), nat, env, opts), Error);
    }
}

TEST_CASE("exhaustive finite structure decides quantifiers") {
    ModRing ring{7};
    EvalOptions<std::uint64_t> opts;
    auto comm = eval_bounded(parse("forall x. forall y. x + y = y + x"), ring, {}, opts);
    CHECK(comm.verdict == TriBool::True);
    auto bad = eval_bounded(parse("forall x. x * x = x"), ring, {}, opts);
    CHECK(bad.verdict == TriBool::False);
    auto nofix = eval_bounded(parse("exists x. x + 1 = x"), ring, {}, opts);
    CHECK(nofix.verdict == TriBool::False);  // refuted exhaustively
}

TEST_CASE("budget exhaustion reports Unknown, distinct in diagnostics") {
    NatStructure nat;
    EvalOptions<Nat> tiny;
    tiny.pool_size = 50;
    tiny.budget = 3;
    auto r = eval_bounded(parse("forall x. forall y. x + y = y + x"), nat, {}, tiny);
    CHECK(r.verdict == TriBool::Unknown);
    CHECK(r.budget_exhausted);
}

TEST_CASE("soundness fuzz: definite verdicts re-check exactly") {
    NatStructure nat;
    Fuzzer fz(20250810);
    EvalOptions<Nat> opts;
    opts.pool_size = 12;
    opts.budget = 4000;
    std::uniform_int_distribution<long> val(0, 12);
    int definite = 0;
    for (int i = 0; i < 2000; ++i) {
        FormulaPtr f = fz.formula();
        Env<Nat> env;
        for (const auto& v : free_vars(f)) env.emplace_back(v, Nat(val(fz.rng)));
        auto r = eval_bounded(f, nat, env, opts);
        if (!has_quantifier(f)) REQUIRE(r.verdict != TriBool::Unknown);  // exact on matrices
        if (r.verdict != TriBool::Unknown) {
            recheck_evidence(nat, f, env, opts, r);
            ++definite;
        }
    }
    CHECK(definite > 500);
}

TEST_CASE("monotonicity: a larger budget never flips a definite verdict") {
    NatStructure nat;
    Fuzzer fz(777);
    std::uniform_int_distribution<long> val(0, 12);
    for (int i = 0; i < 500; ++i) {
        FormulaPtr f = fz.formula();
        Env<Nat> env;
        for (const auto& v : free_vars(f)) env.emplace_back(v, Nat(val(fz.rng)));
        EvalOptions<Nat> small, large;
        small.pool_size = large.pool_size = 10;
        small.seed = large.seed = 3;
        small.budget = 20;
        large.budget = 100000;
        auto rs = eval_bounded(f, nat, env, small);
        auto rl = eval_bounded(f, nat, env, large);
        if (rs.verdict != TriBool::Unknown && rl.verdict != TriBool::Unknown) {
            REQUIRE(rs.verdict == rl.verdict);
        }
    }
}

TEST_CASE("check_structure: N satisfies A1..A15 on 10^4 sampled triples") {
    NatStructure nat;
    CheckOptions<Nat> opts;
    opts.seed = 1;
    opts.samples = 10000;
    opts.hooks = nat.hooks();
    std::vector<std::string> names;
    for (int i = 1; i <= 15; ++i) names.push_back("A" + std::to_string(i));
    auto report = check_structure(nat, names, opts);
    REQUIRE(report.axioms.size() == 15);
    for (const auto& a : report.axioms) {
        CAPTURE(a.name);
        CHECK(a.definite_false == 0);
        CHECK(a.counterexamples.empty());
    }
    // A13's witness hints make every sample definitely true
    CHECK(report.axioms[12].definite_true == 10000);
}

TEST_CASE("check_structure: QZX sampling does not refute A1-A15, A19, A20") {
    QZXStructure qz;
    CheckOptions<poly::QZPoly> opts;
    opts.seed = 1;
    opts.samples = 150;
    opts.pool = 4;
    opts.budget = 1500;
    opts.hooks = qz.hooks();
    std::vector<std::string> names;
    for (int i = 1; i <= 15; ++i) names.push_back("A" + std::to_string(i));
    names.push_back("A19");
    names.push_back("A20");
    auto report = check_structure(qz, names, opts);
    for (const auto& a : report.axioms) {
        CAPTURE(a.name);
        CHECK(a.definite_false == 0);
    }
}

TEST_CASE("check_structure: guided A18 exploration over Z[X] refutes every candidate") {
    ZXStructure zx;
    CheckOptions<poly::IntPoly> opts;
    opts.seed = 9;
    opts.samples = 60;
    opts.pool = 3;
    opts.budget = 400;
    opts.hooks = zx.hooks();
    opts.guided["n"] = {poly::IntPoly::parse("X^3")};
    auto report = check_structure(zx, {"A18"}, opts);
    REQUIRE(report.axioms.size() == 1);
    const auto& a18 = report.axioms.front();
    CHECK(a18.verdict == TriBool::Unknown);  // sampling cannot disprove an exists
    CHECK(!a18.refutations.empty());         // but every candidate prime is beaten
    for (const auto& entry : a18.refutations) {
        CHECK(entry.count("p") == 1);
        CHECK(entry.count("q") == 1);
    }
}

TEST_CASE("check_structure: guided A16 exploration over Q_Z[X] refutes successor candidates") {
    QZXStructure qz;
    CheckOptions<poly::QZPoly> opts;
    opts.seed = 4;
    opts.samples = 40;
    opts.pool = 3;
    opts.budget = 400;
    opts.hooks = qz.hooks();
    opts.guided["p"] = {poly::QZPoly::parse("X + 1")};
    opts.guided["q"] = {poly::QZPoly::parse("2X + 1"), poly::QZPoly::parse("3/2X + 1"),
                        poly::QZPoly::parse("3X - 1")};
    auto report = check_structure(qz, {"A16"}, opts);
    const auto& a16 = report.axioms.front();
    CHECK(a16.refutations.size() == 3);  // every candidate beaten by a closer prime
}
