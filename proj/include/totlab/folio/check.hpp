#pragma once

#include <map>
#include <string>
#include <vector>

#include "totlab/folio/catalog.hpp"
#include "totlab/folio/eval.hpp"
#include "totlab/folio/structures.hpp"

namespace totlab::folio {

struct AxiomCheck {
    std::string name;
    TriBool verdict = TriBool::Unknown;
    std::uint64_t samples = 0;
    std::uint64_t definite_true = 0;
    std::uint64_t definite_false = 0;
    std::uint64_t undecided = 0;
    // printed outer assignments that falsify the matrix (capped)
    std::vector<std::map<std::string, std::string>> counterexamples;
    // exploration layer: candidate -> refuter evidence (A16/A17/A18)
    std::vector<std::map<std::string, std::string>> refutations;
    std::string note;
};

struct StructureReport {
    std::string structure;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::uint64_t budget = 0;
    std::size_t pool = 0;
    std::vector<AxiomCheck> axioms;
};

template <class V>
struct CheckOptions {
    std::uint64_t seed = 1;
    std::uint64_t samples = 1000;  // outer instantiations per axiom
    std::size_t pool = 8;          // inner quantifier pool
    std::uint64_t budget = 20000;  // inner instantiation budget per sample
    std::size_t max_counterexamples = 5;
    bool enrich = true;
    std::map<std::string, std::vector<V>> guided;  // instantiation for peeled universals
    ModelHooks<V> hooks;                           // optional exploration certificates
};

template <Structure S>
bool exhaustive_carrier(const S& s) {
    if constexpr (HasExhaustive<S>) return s.exhaustive().has_value();
    else return false;
}

namespace detail {

// Peels up to max_peel leading universal quantifiers.
inline FormulaPtr peel_universals(const FormulaPtr& f, std::size_t max_peel, std::vector<std::string>& vars) {
    FormulaPtr cur = f;
    while (vars.size() < max_peel && cur->kind == Formula::Kind::forall) {
        vars.push_back(cur->var);
        cur = cur->f1;
    }
    return cur;
}

}  // namespace detail

// Guided exploration for the minimality/existence axioms. Each entry pairs
// an instantiation with an exact refuting element checked through the
// model's own decision procedures (not through sampling).
template <Structure S>
void explore_axiom(const S& s, const std::string& name, const CheckOptions<typename S::Value>& opts,
                   AxiomCheck& out) {
    using V = typename S::Value;
    const auto& hooks = opts.hooks;
    auto sampled = s.sample(opts.seed + 17, std::max<std::size_t>(opts.samples, 8));

    auto guided_pool = [&](const std::string& var) -> std::vector<V> {
        auto it = opts.guided.find(var);
        if (it != opts.guided.end()) return it->second;
        return {};
    };

    if (name == "A16" || name == "A17") {
        if (!hooks.between_prime || !hooks.is_prime) return;
        std::vector<V> ps = guided_pool("p");
        if (ps.empty()) return;
        const V& p = ps.front();
        std::vector<V> candidates = guided_pool("q");
        if (candidates.empty()) {
            for (const auto& v : sampled) {
                bool side_ok = name == "A16" ? s.less(p, v) : s.less(v, p);
                if (side_ok && hooks.is_prime(v)) candidates.push_back(v);
            }
        }
        for (const auto& q : candidates) {
            auto u = name == "A16" ? hooks.between_prime(p, q) : hooks.between_prime(q, p);
            if (!u) continue;
            bool ordered = name == "A16" ? (s.less(p, *u) && s.less(*u, q)) : (s.less(q, *u) && s.less(*u, p));
            if (!ordered || !hooks.is_prime(*u)) continue;
            out.refutations.push_back({{"p", s.print(p)}, {"q", s.print(q)}, {"u", s.print(*u)}});
        }
        out.note = "every listed candidate q is beaten by a strictly closer prime u";
        return;
    }
    if (name == "A18") {
        if (!hooks.bigger_prime_sq_below || !hooks.is_prime) return;
        std::vector<V> ns = guided_pool("n");
        if (ns.empty()) return;
        const V& n = ns.front();
        std::vector<V> candidates = guided_pool("p");
        if (candidates.empty()) {
            for (const auto& v : sampled) {
                if (hooks.is_prime(v) && s.less(s.mul(v, v), n)) candidates.push_back(v);
            }
        }
        for (const auto& p : candidates) {
            auto q = hooks.bigger_prime_sq_below(n, p);
            if (!q) continue;
            if (!s.less(p, *q) || !s.less(s.mul(*q, *q), n) || !hooks.is_prime(*q)) continue;
            out.refutations.push_back({{"n", s.print(n)}, {"p", s.print(p)}, {"q", s.print(*q)}});
        }
        out.note = "every listed candidate p is beaten by a larger prime with square still below n";
        return;
    }
}

template <Structure S>
StructureReport check_structure(const S& s, const std::vector<std::string>& names,
                                const CheckOptions<typename S::Value>& opts) {
    using V = typename S::Value;
    StructureReport report;
    report.structure = s.name();
    report.seed = opts.seed;
    report.samples = opts.samples;
    report.budget = opts.budget;
    report.pool = opts.pool;

    const bool exhaustive = exhaustive_carrier(s);

    for (const auto& name : names) {
        FormulaPtr axiom = catalog_formula(name);
        AxiomCheck check;
        check.name = name;

        EvalOptions<V> inner;
        inner.pool_size = opts.pool;
        inner.budget = opts.budget;
        inner.seed = opts.seed;
        inner.enrich = opts.enrich;
        inner.guided = opts.guided;
        Evaluator<S> ev(s, inner);

        if (exhaustive) {
            // finite carrier: the evaluator itself enumerates every
            // quantifier completely, so a single run is decisive
            auto r = ev.run(axiom);
            check.samples = 1;
            check.verdict = r.verdict;
            if (r.verdict == TriBool::True) check.definite_true = 1;
            else if (r.verdict == TriBool::Unknown) check.undecided = 1;
            else {
                check.definite_false = 1;
                if (r.root_instance && axiom->kind == Formula::Kind::forall) {
                    check.counterexamples.push_back({{axiom->var, s.print(*r.root_instance)}});
                }
            }
        } else {
            std::vector<std::string> outer;
            FormulaPtr matrix = detail::peel_universals(axiom, 3, outer);

            // one deterministic stream per outer variable
            std::vector<std::vector<V>> pools(outer.size());
            for (std::size_t j = 0; j < outer.size(); ++j) {
                auto it = opts.guided.find(outer[j]);
                if (it != opts.guided.end()) pools[j] = it->second;
                else pools[j] = s.sample(opts.seed + 101 * (j + 1), opts.samples);
            }

            std::uint64_t rounds = outer.empty() ? 1 : opts.samples;
            for (std::uint64_t i = 0; i < rounds; ++i) {
                Env<V> env;
                for (std::size_t j = 0; j < outer.size(); ++j) {
                    const auto& pool = pools[j];
                    if (pool.empty()) continue;
                    env.emplace_back(outer[j], pool[i % pool.size()]);
                }
                auto r = ev.run(matrix, env);
                ++check.samples;
                switch (r.verdict) {
                    case TriBool::True: ++check.definite_true; break;
                    case TriBool::Unknown: ++check.undecided; break;
                    case TriBool::False: {
                        ++check.definite_false;
                        if (check.counterexamples.size() < opts.max_counterexamples) {
                            std::map<std::string, std::string> printed;
                            for (const auto& [var, val] : env) printed[var] = s.print(val);
                            check.counterexamples.push_back(std::move(printed));
                        }
                        break;
                    }
                }
            }
            // sampling can refute, never affirm
            check.verdict = check.definite_false > 0 ? TriBool::False : TriBool::Unknown;
        }

        explore_axiom(s, name, opts, check);
        report.axioms.push_back(std::move(check));
    }
    return report;
}

}  // namespace totlab::folio
