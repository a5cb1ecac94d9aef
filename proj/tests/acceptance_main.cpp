// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Stated runtime limits are enforced here, not just observed.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "totlab/folio/catalog.hpp"
#include "totlab/folio/check.hpp"
#include "totlab/folio/parse.hpp"
#include "totlab/ineq.hpp"
#include "totlab/irreducible.hpp"
#include "totlab/models.hpp"
#include "totlab/pgood.hpp"
#include "totlab/primes.hpp"

using namespace totlab;
using poly::Cmp;
using poly::IntPoly;
using poly::QZPoly;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

struct Criterion {
    const char* name;
    double time_limit_s;  // 0: no stated limit
    Outcome (*run)();
};

Outcome c1_largest_7_good() {
    pgood::Scanner scanner(290);
    std::uint64_t best = 0;
    for (std::uint64_t n = 1; n <= 290; ++n) {
        if (scanner.good(n, 7)) best = n;
    }
    return {best == 286, "brute force over n <= 290 gives " + std::to_string(best)};
}

Outcome c2_classic_schatunowsky() {
    pgood::Scanner scanner(10000);
    std::uint64_t best = 0;
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        if (scanner.good(n, 0)) best = n;
    }
    return {best == 30, "largest all-totatives-prime n <= 10^4 is " + std::to_string(best)};
}

Outcome c3_closed_form_vs_oracle() {
    auto primes = nt::sieve_primes_u32(100);
    std::uint64_t verified = 0;
    for (auto p : primes) {
        if (p <= 7) continue;
        std::uint64_t sb = to_u64(pgood::strong_bound(nat_from_u64(p))).value();
        std::uint64_t wb = to_u64(pgood::weak_bound(nat_from_u64(p))).value();
        pgood::Scanner scanner(static_cast<std::uint32_t>(wb));
        if (!scanner.good(sb, p)) {
            return {false, "strong bound " + std::to_string(sb) + " not " + std::to_string(p) + "-good"};
        }
        for (std::uint64_t m = sb + 1; m < wb; ++m) {
            if (scanner.good(m, p)) {
                return {false, std::to_string(m) + " is " + std::to_string(p) + "-good above the strong bound"};
            }
        }
        ++verified;
    }
    return {verified == 21, "verified S(p)*k_p as the gap-free maximum for " + std::to_string(verified) +
                                " primes in (7, 100]"};
}

Outcome c4_weak_bound_ceiling() {
    auto primes = nt::sieve_primes_u32(50);
    std::uint64_t checked = 0;
    for (auto p : primes) {
        if (p < 7) continue;
        std::uint64_t wb = to_u64(pgood::weak_bound(nat_from_u64(p))).value();
        pgood::Scanner scanner(static_cast<std::uint32_t>(wb + 1000));
        for (std::uint64_t m = wb; m <= wb + 1000; ++m) {
            if (scanner.good(m, p)) {
                return {false, std::to_string(m) + " is " + std::to_string(p) + "-good at or above the weak bound"};
            }
            ++checked;
        }
    }
    return {checked > 0, std::to_string(checked) + " values at or above weak bounds, none p-good"};
}

Outcome c5_a19_scan() {
    auto report = ineq::scan(ineq::Which::a19, 10000000, 2);
    std::ostringstream out;
    out << "checked " << report.checked << " consecutive triples, " << report.failures.size() << " failures";
    return {report.failures.empty() && report.checked > 600000, out.str()};
}

Outcome c6_eq4_and_chebyshev_scans() {
    auto eq4 = ineq::scan(ineq::Which::eq4, 10000000, 2);
    auto cheb = ineq::scan(ineq::Which::chebyshev, 10000000, 2);
    std::ostringstream out;
    out << "eq4 checked " << eq4.checked << " (" << eq4.failures.size() << " failures), chebyshev checked "
        << cheb.checked << " (" << cheb.failures.size() << " failures)";
    return {eq4.failures.empty() && cheb.failures.empty() && eq4.checked > 600000 && cheb.checked > 600000,
            out.str()};
}

Outcome c7_bonse_scan() {
    auto report = ineq::scan(ineq::Which::bonse, 1000, 1);
    std::ostringstream out;
    out << "checked k in [4, 1000]: " << report.checked << " instances, " << report.failures.size() << " failures";
    return {report.failures.empty() && report.checked == 997, out.str()};
}

Outcome c8_lemma51_suite() {
    std::mt19937_64 rng(0x5EED51);
    std::uniform_int_distribution<int> deg(1, 4);
    std::uniform_int_distribution<long> coef(-10, 10);
    auto next_prime_above = [](Nat x) {
        ++x;
        while (!nt::is_prime(x)) ++x;
        return x;
    };
    int confirmed = 0;
    while (confirmed < 1000) {
        int d = deg(rng);
        std::vector<Int> c(static_cast<std::size_t>(d) + 1);
        for (int i = 1; i < d; ++i) c[static_cast<std::size_t>(i)] = Int(coef(rng));
        c[static_cast<std::size_t>(d)] = Int(std::max(1L, std::abs(coef(rng))));
        Int sum = 0;
        for (int i = 1; i <= d; ++i) sum += abs(c[static_cast<std::size_t>(i)]);
        Nat p = next_prime_above(sum + (rng() % 7));
        c[0] = (rng() % 2 == 0) ? p : -p;
        IntPoly f = IntPoly::from_coeffs(c);
        if (poly::lemma51(f) != poly::Lemma51::applies_irreducible) continue;
        if (poly::factor_split_int(f).has_value()) {
            return {false, "exhaustive search split a lemma-certified polynomial: " + f.str()};
        }
        ++confirmed;
    }
    return {true, "1000 certified polynomials confirmed irreducible by the exhaustive search"};
}

Outcome c9_qz_model_suite() {
    folio::QZXStructure qz;
    folio::CheckOptions<QZPoly> opts;
    opts.seed = 1;
    opts.samples = 10000;
    opts.pool = 3;
    opts.budget = 300;
    opts.hooks = qz.hooks();
    std::vector<std::string> names;
    for (int i = 1; i <= 15; ++i) names.push_back("A" + std::to_string(i));
    names.push_back("A19");
    names.push_back("A20");
    auto report = folio::check_structure(qz, names, opts);
    std::uint64_t counterexamples = 0;
    for (const auto& a : report.axioms) counterexamples += a.definite_false;
    if (counterexamples != 0) return {false, "sampling refuted an axiom that must hold"};

    // X + z composite witnesses for 0 <= |z| <= 50, z != +-1 (z = +-1 prime)
    for (long z = -50; z <= 50; ++z) {
        QZPoly f = QZPoly::from_coeffs({Rat(Int(z)), Rat(1)});
        auto r = poly::is_irreducible_qz(f);
        if (z == 1 || z == -1) {
            if (!r.irreducible) return {false, "X + " + std::to_string(z) + " misclassified"};
            continue;
        }
        if (r.irreducible || !r.witness) return {false, "X + " + std::to_string(z) + " should be composite"};
        if (r.witness->first * r.witness->second != f) {
            return {false, "witness product mismatch at z = " + std::to_string(z)};
        }
        if (r.witness->first.is_one() || r.witness->second.is_one()) {
            return {false, "unit factor at z = " + std::to_string(z)};
        }
    }

    // 100 seeded degree-1 prime candidates above X+1, each refuted
    QZPoly a = QZPoly::parse("X + 1");
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> num(2, 60), den(1, 20);
    int refuted = 0;
    while (refuted < 100) {
        Rat c = make_rat(num(rng), den(rng));
        if (c <= 1) continue;
        QZPoly b = QZPoly::from_coeffs({Rat((refuted % 2 == 0) ? 1 : -1), c});
        QZPoly mid = poly::between_prime_qz(a, b);
        if (a.compare(mid) != Cmp::less || mid.compare(b) != Cmp::less) {
            return {false, "refuter out of range for candidate " + b.str()};
        }
        if (!poly::is_irreducible_qz(mid).irreducible) return {false, "refuter not prime for " + b.str()};
        ++refuted;
    }
    std::ostringstream out;
    out << "A1-A15, A19, A20 over 10^4 samples: 0 counterexamples; 99 composite X+z witnesses verified; "
        << "100 successor candidates refuted";
    return {true, out.str()};
}

Outcome c10_zx_model_suite() {
    std::mt19937_64 rng(314159);
    for (int i = 0; i < 100; ++i) {
        IntPoly f = poly::sample_irreducible_int(rng, 3, 9);
        IntPoly s = poly::successor_prime_int(f);
        if (poly::predecessor_prime_int(s) != f) return {false, "round trip failed at " + f.str()};
        if (!poly::a19_check_int(f)) return {false, "a19 check failed at " + f.str()};
    }
    IntPoly x3 = IntPoly::parse("X^3");
    for (int i = 0; i < 50; ++i) {
        IntPoly p = poly::sample_irreducible_int(rng, 1, 9);
        IntPoly q = poly::a18_bigger_prime(x3, p);
        if (p.compare(q) != Cmp::less || (q * q).compare(x3) != Cmp::less) {
            return {false, "a18 refuter out of range for " + p.str()};
        }
    }
    auto k = poly::floor_div_int(IntPoly::parse("X^2 + 4X + 4"), IntPoly::parse("X + 1"));
    if (!k || *k != IntPoly::parse("X + 3")) return {false, "floor_div_int((X+2)^2, X+1) != X+3"};
    IntPoly n = poly::strong_bound_int(IntPoly::variable());
    if (n != IntPoly::parse("X^2 + 4X + 3")) return {false, "strong_bound_int(X) != X^2+4X+3"};
    // defining inequalities of k_p, exactly: k*S < S(S)^2 < (k+1)*S
    IntPoly s = IntPoly::parse("X + 1"), ss = IntPoly::parse("X + 2");
    if ((*k * s).compare(ss * ss) != Cmp::less || (ss * ss).compare((*k + IntPoly(1)) * s) != Cmp::less) {
        return {false, "k_p inequalities violated"};
    }
    return {true, "100 round trips + a19 checks, 50 a18 refutations vs X^3, k_p inequalities exact"};
}

Outcome c11_formula_layer() {
    for (const auto& [name, f] : folio::axiom_catalog()) {
        if (!folio::formula_equal(folio::parse(folio::pretty(f)), f)) {
            return {false, "round trip failed on " + name};
        }
    }

    folio::NatStructure nat;
    folio::EvalOptions<Nat> opts;
    opts.pool_size = 12;
    opts.budget = 4000;
    std::mt19937_64 rng(0xF0110);
    std::uniform_int_distribution<long> val(0, 12);
    std::vector<std::string> vars{"x", "y", "z"};

    struct Fuzz {
        std::mt19937_64& rng;
        std::vector<std::string>& vars;
        folio::TermPtr term(int depth) {
            switch (rng() % (depth > 0 ? 5 : 3)) {
                case 0: return folio::t_var(vars[rng() % vars.size()]);
                case 1: return folio::t_numeral(rng() % 7);
                case 2: return folio::t_one();
                case 3: return folio::t_sum(term(depth - 1), term(depth - 1));
                default: return folio::t_prod(term(depth - 1), term(depth - 1));
            }
        }
        folio::FormulaPtr qf(int depth) {
            if (depth > 0 && rng() % 3 == 0) {
                switch (rng() % 4) {
                    case 0: return folio::f_not(qf(depth - 1));
                    case 1: return folio::f_and(qf(depth - 1), qf(depth - 1));
                    case 2: return folio::f_or(qf(depth - 1), qf(depth - 1));
                    default: return folio::f_implies(qf(depth - 1), qf(depth - 1));
                }
            }
            auto a = term(2), b = term(2);
            return rng() % 2 == 0 ? folio::f_eq(a, b) : folio::f_lt(a, b);
        }
        folio::FormulaPtr formula() {
            auto f = qf(2);
            std::size_t prefix = rng() % 3;
            for (std::size_t i = 0; i < prefix; ++i) {
                std::string var = vars[rng() % vars.size()];
                f = rng() % 2 == 0 ? folio::f_forall(var, f) : folio::f_exists(var, f);
            }
            return f;
        }
    } fuzz{rng, vars};

    std::uint64_t definite = 0;
    for (int i = 0; i < 10000; ++i) {
        folio::FormulaPtr f = fuzz.formula();
        folio::Env<Nat> env;
        for (const auto& v : folio::free_vars(f)) env.emplace_back(v, Nat(val(rng)));
        auto r = folio::eval_bounded(f, nat, env, opts);
        if (!folio::has_quantifier(f) && r.verdict == folio::TriBool::Unknown) {
            return {false, "quantifier-free formula evaluated Unknown"};
        }
        if (r.verdict == folio::TriBool::Unknown) continue;
        ++definite;
        // every decisive instance re-checks exactly
        folio::FormulaPtr cur = f;
        auto verdict = r.verdict;
        auto instance = r.root_instance;
        auto env2 = env;
        while ((cur->kind == folio::Formula::Kind::forall || cur->kind == folio::Formula::Kind::exists) &&
               instance) {
            env2.emplace_back(cur->var, *instance);
            cur = cur->f1;
            auto sub = folio::eval_bounded(cur, nat, env2, opts);
            if (sub.verdict != verdict) {
                return {false, "evidence failed to re-check: " + folio::pretty(f)};
            }
            instance = sub.root_instance;
        }
    }
    std::ostringstream out;
    out << "23 catalog round trips; 10^4 fuzzed pairs, " << definite << " definite verdicts all re-checked";
    return {true, out.str()};
}

const Criterion kCriteria[] = {
    {"C01 largest 7-good number is 286", 5.0, c1_largest_7_good},
    {"C02 classic bound: 30 is the last all-prime-totative number", 5.0, c2_classic_schatunowsky},
    {"C03 strong bound matches exhaustive scan for 7 < p <= 100", 120.0, c3_closed_form_vs_oracle},
    {"C04 nothing at or above the weak bound is p-good (7 <= p <= 50)", 60.0, c4_weak_bound_ceiling},
    {"C05 A19 scan to 10^7", 60.0, c5_a19_scan},
    {"C06 eq.(4) and Chebyshev scans to 10^7", 60.0, c6_eq4_and_chebyshev_scans},
    {"C07 Bonse scan for 4 <= k <= 1000", 5.0, c7_bonse_scan},
    {"C08 1000 Lemma-5.1 certificates confirmed by exhaustive search", 120.0, c8_lemma51_suite},
    {"C09 Q_Z[X] model suite", 0.0, c9_qz_model_suite},
    {"C10 Z[X] model suite", 0.0, c10_zx_model_suite},
    {"C11 formula layer round trip and soundness fuzz", 0.0, c11_formula_layer},
};

}  // namespace

int main() {
    int failures = 0;
    for (const auto& c : kCriteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = c.time_limit_s == 0.0 || seconds < c.time_limit_s;
        bool pass = outcome.ok && in_time;
        if (!pass) ++failures;
        std::printf("%s  %s (%.2fs%s)\n    %s\n", pass ? "PASS" : "FAIL", c.name, seconds,
                    in_time ? "" : " OVER TIME LIMIT", outcome.detail.c_str());
    }
    if (failures == 0) std::printf("all %zu acceptance criteria pass\n", std::size(kCriteria));
    else std::printf("%d criteria FAILED\n", failures);
    return failures;
}
