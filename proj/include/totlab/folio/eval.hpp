#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "totlab/error.hpp"
#include "totlab/folio/ast.hpp"

namespace totlab::folio {

// Three-valued verdicts. Sampling over an infinite carrier can refute a
// universal or witness an existential, never the other way around; True and
// False are only ever returned with checked evidence or full enumeration.
enum class TriBool { False, True, Unknown };

inline const char* tri_name(TriBool v) {
    switch (v) {
        case TriBool::False: return "false";
        case TriBool::True: return "true";
        case TriBool::Unknown: return "unknown";
    }
    return "?";
}

inline TriBool tri_not(TriBool a) {
    if (a == TriBool::True) return TriBool::False;
    if (a == TriBool::False) return TriBool::True;
    return TriBool::Unknown;
}

inline TriBool tri_and(TriBool a, TriBool b) {
    if (a == TriBool::False || b == TriBool::False) return TriBool::False;
    if (a == TriBool::True && b == TriBool::True) return TriBool::True;
    return TriBool::Unknown;
}

inline TriBool tri_or(TriBool a, TriBool b) {
    if (a == TriBool::True || b == TriBool::True) return TriBool::True;
    if (a == TriBool::False && b == TriBool::False) return TriBool::False;
    return TriBool::Unknown;
}

inline TriBool tri_implies(TriBool a, TriBool b) { return tri_or(tri_not(a), b); }

template <class S>
concept Structure = requires(const S s, const typename S::Value& v, std::uint64_t seed, std::size_t n) {
    typename S::Value;
    { s.add(v, v) } -> std::convertible_to<typename S::Value>;
    { s.mul(v, v) } -> std::convertible_to<typename S::Value>;
    { s.zero() } -> std::convertible_to<typename S::Value>;
    { s.one() } -> std::convertible_to<typename S::Value>;
    { s.less(v, v) } -> std::convertible_to<bool>;
    { s.equal(v, v) } -> std::convertible_to<bool>;
    { s.sample(seed, n) } -> std::convertible_to<std::vector<typename S::Value>>;
    { s.print(v) } -> std::convertible_to<std::string>;
    { s.name() } -> std::convertible_to<std::string>;
};

template <class S>
concept HasDiffHint = requires(const S s, const typename S::Value& v) {
    { s.diff_hint(v, v) } -> std::convertible_to<std::optional<typename S::Value>>;
};

template <class S>
concept HasQuotHint = requires(const S s, const typename S::Value& v) {
    { s.quot_hint(v, v) } -> std::convertible_to<std::optional<typename S::Value>>;
};

template <class S>
concept HasExhaustive = requires(const S s) {
    { s.exhaustive() } -> std::convertible_to<std::optional<std::vector<typename S::Value>>>;
};

template <class V>
struct EvalOptions {
    std::size_t pool_size = 16;
    std::uint64_t budget = 100000;  // quantifier instantiations
    std::uint64_t seed = 1;
    bool enrich = true;  // derive existential witness hints from the environment
    std::map<std::string, std::vector<V>> guided;  // per-variable pool overrides
};

template <class V>
struct EvalResult {
    TriBool verdict = TriBool::Unknown;
    bool budget_exhausted = false;
    std::uint64_t instantiations = 0;
    // Decisive instance for the outermost quantifier: the counterexample of
    // a refuted forall or the witness of an affirmed exists.
    std::optional<V> root_instance;
};

template <class V>
using Env = std::vector<std::pair<std::string, V>>;

template <Structure S>
class Evaluator {
public:
    using V = typename S::Value;

    Evaluator(const S& s, EvalOptions<V> opts) : s_(s), opts_(std::move(opts)) {
        if constexpr (HasExhaustive<S>) {
            if (auto all = s_.exhaustive()) {
                carrier_ = std::move(*all);
                carrier_exhaustive_ = true;
            }
        }
        if (!carrier_exhaustive_) carrier_ = s_.sample(opts_.seed, opts_.pool_size);
    }

    EvalResult<V> run(const FormulaPtr& f, const Env<V>& env = {}) {
        instantiations_ = 0;
        budget_exhausted_ = false;
        Env<V> e = env;
        Res r = eval(f, e);
        EvalResult<V> out;
        out.verdict = r.v;
        out.budget_exhausted = budget_exhausted_;
        out.instantiations = instantiations_;
        out.root_instance = std::move(r.inst);
        return out;
    }

    V eval_term(const TermPtr& t, const Env<V>& env) const {
        switch (t->kind) {
            case Term::Kind::zero: return s_.zero();
            case Term::Kind::one: return s_.one();
            case Term::Kind::variable: {
                for (auto it = env.rbegin(); it != env.rend(); ++it) {
                    if (it->first == t->name) return it->second;
                }
                fail(Errc::out_of_range, "unbound variable: " + t->name);
            }
            case Term::Kind::sum: return s_.add(eval_term(t->lhs, env), eval_term(t->rhs, env));
            case Term::Kind::product: return s_.mul(eval_term(t->lhs, env), eval_term(t->rhs, env));
        }
        fail(Errc::out_of_range, "bad term");
    }

private:
    struct Res {
        TriBool v;
        std::optional<V> inst;
    };

    // number of quantifier nodes in the subtree; the cheap side of a
    // connective is evaluated first so exact atoms short-circuit before any
    // sampling starts
    std::size_t qcount(const FormulaPtr& f) {
        auto it = qcount_.find(f.get());
        if (it != qcount_.end()) return it->second;
        std::size_t n = 0;
        switch (f->kind) {
            case Formula::Kind::equals:
            case Formula::Kind::less: n = 0; break;
            case Formula::Kind::logical_not: n = qcount(f->f1); break;
            case Formula::Kind::logical_and:
            case Formula::Kind::logical_or:
            case Formula::Kind::implies: n = qcount(f->f1) + qcount(f->f2); break;
            case Formula::Kind::forall:
            case Formula::Kind::exists: n = 1 + qcount(f->f1); break;
        }
        qcount_.emplace(f.get(), n);
        return n;
    }

    std::vector<V> pool_for(const std::string& var, const Env<V>& env, bool existential, bool& exhaustive) {
        auto g = opts_.guided.find(var);
        if (g != opts_.guided.end()) {
            exhaustive = false;  // a guided pool is never known to cover the carrier
            return g->second;
        }
        exhaustive = carrier_exhaustive_;
        if (!existential || !opts_.enrich || carrier_exhaustive_) return carrier_;
        // witness hints: environment values and their differences/quotients
        std::vector<V> pool;
        auto push = [&](const V& v) {
            for (const auto& seen : pool) {
                if (s_.equal(seen, v)) return;
            }
            pool.push_back(v);
        };
        for (const auto& [name, v] : env) push(v);
        for (const auto& [n1, a] : env) {
            for (const auto& [n2, b] : env) {
                if constexpr (HasDiffHint<S>) {
                    if (auto d = s_.diff_hint(a, b)) push(*d);
                }
                if constexpr (HasQuotHint<S>) {
                    if (auto q = s_.quot_hint(a, b)) push(*q);
                }
            }
        }
        push(s_.zero());
        push(s_.one());
        for (const auto& v : carrier_) push(v);
        return pool;
    }

    Res quantify(bool universal, const FormulaPtr& f, Env<V>& env) {
        bool exhaustive = false;
        std::vector<V> pool = pool_for(f->var, env, !universal, exhaustive);
        bool undecided = false;
        for (const V& val : pool) {
            if (instantiations_ >= opts_.budget) {
                budget_exhausted_ = true;
                undecided = true;
                break;
            }
            ++instantiations_;
            env.emplace_back(f->var, val);
            Res r = eval(f->f1, env);
            env.pop_back();
            if (universal && r.v == TriBool::False) return Res{TriBool::False, val};
            if (!universal && r.v == TriBool::True) return Res{TriBool::True, val};
            if (r.v == TriBool::Unknown) undecided = true;
        }
        if (exhaustive && !undecided) return Res{universal ? TriBool::True : TriBool::False, std::nullopt};
        return Res{TriBool::Unknown, std::nullopt};
    }

    Res eval(const FormulaPtr& f, Env<V>& env) {
        switch (f->kind) {
            case Formula::Kind::equals: {
                V a = eval_term(f->t1, env), b = eval_term(f->t2, env);
                return Res{s_.equal(a, b) ? TriBool::True : TriBool::False, std::nullopt};
            }
            case Formula::Kind::less: {
                V a = eval_term(f->t1, env), b = eval_term(f->t2, env);
                return Res{s_.less(a, b) ? TriBool::True : TriBool::False, std::nullopt};
            }
            case Formula::Kind::logical_not:
                return Res{tri_not(eval(f->f1, env).v), std::nullopt};
            case Formula::Kind::logical_and: {
                // Kleene-and is symmetric; evaluate the cheaper side first
                // and let False short-circuit
                FormulaPtr first = f->f1, second = f->f2;
                if (qcount(first) > qcount(second)) std::swap(first, second);
                TriBool a = eval(first, env).v;
                if (a == TriBool::False) return Res{TriBool::False, std::nullopt};
                return Res{tri_and(a, eval(second, env).v), std::nullopt};
            }
            case Formula::Kind::logical_or: {
                FormulaPtr first = f->f1, second = f->f2;
                if (qcount(first) > qcount(second)) std::swap(first, second);
                TriBool a = eval(first, env).v;
                if (a == TriBool::True) return Res{TriBool::True, std::nullopt};
                return Res{tri_or(a, eval(second, env).v), std::nullopt};
            }
            case Formula::Kind::implies: {
                if (qcount(f->f1) <= qcount(f->f2)) {
                    TriBool a = eval(f->f1, env).v;
                    if (a == TriBool::False) return Res{TriBool::True, std::nullopt};
                    return Res{tri_implies(a, eval(f->f2, env).v), std::nullopt};
                }
                TriBool b = eval(f->f2, env).v;
                if (b == TriBool::True) return Res{TriBool::True, std::nullopt};
                return Res{tri_implies(eval(f->f1, env).v, b), std::nullopt};
            }
            case Formula::Kind::forall:
                return quantify(true, f, env);
            case Formula::Kind::exists:
                return quantify(false, f, env);
        }
        fail(Errc::out_of_range, "bad formula");
    }

    const S& s_;
    EvalOptions<V> opts_;
    std::vector<V> carrier_;
    bool carrier_exhaustive_ = false;
    std::uint64_t instantiations_ = 0;
    bool budget_exhausted_ = false;
    std::unordered_map<const Formula*, std::size_t> qcount_;
};

template <Structure S>
EvalResult<typename S::Value> eval_bounded(const FormulaPtr& f, const S& s,
                                           const Env<typename S::Value>& env,
                                           const EvalOptions<typename S::Value>& opts) {
    Evaluator<S> ev(s, opts);
    return ev.run(f, env);
}

}  // namespace totlab::folio
