#pragma once

#include <functional>
#include <optional>
#include <random>

#include "totlab/folio/eval.hpp"
#include "totlab/models.hpp"
#include "totlab/nat.hpp"
#include "totlab/poly.hpp"
#include "totlab/primes.hpp"

namespace totlab::folio {

// Exact decision procedures and refutation generators a structure can
// expose to the exploration layer of check_structure. These are model-level
// certificates, separate from formula-level sampling, which cannot affirm
// pi2 over an infinite carrier.
template <class V>
struct ModelHooks {
    std::function<bool(const V&)> is_prime;
    // a prime strictly between a and b, when the model has one
    std::function<std::optional<V>(const V&, const V&)> between_prime;
    // for A18: a prime q > p with q^2 < n
    std::function<std::optional<V>(const V&, const V&)> bigger_prime_sq_below;
};

struct NatStructure {
    using Value = Nat;

    std::string name() const { return "N"; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value zero() const { return Nat(0); }
    Value one() const { return Nat(1); }
    bool less(const Value& a, const Value& b) const { return a < b; }
    bool equal(const Value& a, const Value& b) const { return a == b; }
    std::string print(const Value& v) const { return to_string(v); }

    std::vector<Value> sample(std::uint64_t seed, std::size_t n) const {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> small(0, 30);
        std::uniform_int_distribution<long> wide(0, 2000);
        std::vector<Value> out;
        out.reserve(n);
        // small naturals first: most counterexamples live there
        for (long v = 0; out.size() < n && v < 8; ++v) out.emplace_back(v);
        while (out.size() < n) {
            out.emplace_back(out.size() % 3 == 0 ? wide(rng) : small(rng));
        }
        return out;
    }

    std::optional<Value> diff_hint(const Value& a, const Value& b) const {
        if (a > b) return std::nullopt;
        return Value(b - a);
    }
    std::optional<Value> quot_hint(const Value& a, const Value& b) const {
        if (a == 0 || b % a != 0) return std::nullopt;
        return Value(b / a);
    }

    ModelHooks<Value> hooks() const {
        ModelHooks<Value> h;
        h.is_prime = [](const Value& v) { return nt::is_prime(v); };
        h.between_prime = [](const Value& a, const Value& b) -> std::optional<Value> {
            if (!(a < b) || !nt::is_prime(a)) return std::nullopt;
            Value s = nt::successor_prime(a);
            if (s < b) return s;
            return std::nullopt;
        };
        h.bigger_prime_sq_below = [](const Value& n, const Value& p) -> std::optional<Value> {
            if (!nt::is_prime(p)) return std::nullopt;
            Value q = nt::successor_prime(p);
            if (q * q < n) return q;
            return std::nullopt;
        };
        return h;
    }
};

struct ZXStructure {
    using Value = poly::IntPoly;

    int sample_degree = 3;
    int sample_coeff_bound = 9;
    poly::IrredOptions irred{};

    std::string name() const { return "ZX"; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value zero() const { return Value(); }
    Value one() const { return Value(1); }
    bool less(const Value& a, const Value& b) const { return a.compare(b) == poly::Cmp::less; }
    bool equal(const Value& a, const Value& b) const { return a == b; }
    std::string print(const Value& v) const { return v.str(); }

    std::vector<Value> sample(std::uint64_t seed, std::size_t n) const {
        std::mt19937_64 rng(seed);
        std::vector<Value> out;
        out.reserve(n);
        const Value landmarks[] = {Value(), Value(1), Value(2), Value(3), Value::variable(),
                                   Value::variable() + Value(1)};
        for (const auto& v : landmarks) {
            if (out.size() < n) out.push_back(v);
        }
        while (out.size() < n) {
            out.push_back(poly::sample_cone_int(rng, sample_degree, sample_coeff_bound));
        }
        return out;
    }

    std::optional<Value> diff_hint(const Value& a, const Value& b) const {
        if (a.compare(b) == poly::Cmp::greater) return std::nullopt;
        return b - a;
    }
    std::optional<Value> quot_hint(const Value& a, const Value& b) const {
        if (a.is_zero()) return std::nullopt;
        return b.divide_exact(a);
    }

    ModelHooks<Value> hooks() const {
        poly::IrredOptions opt = irred;
        ModelHooks<Value> h;
        h.is_prime = [opt](const Value& v) {
            if (!v.in_cone() || v.compare(Value(1)) != poly::Cmp::greater) return false;
            return poly::is_irreducible_int(v, opt);
        };
        h.between_prime = [opt](const Value& a, const Value& b) -> std::optional<Value> {
            if (a.compare(b) != poly::Cmp::less) return std::nullopt;
            Value s = poly::successor_prime_int(a, opt);
            if (s.compare(b) == poly::Cmp::less) return s;
            return std::nullopt;
        };
        h.bigger_prime_sq_below = [opt](const Value& n, const Value& p) -> std::optional<Value> {
            try {
                return poly::a18_bigger_prime(n, p, opt);
            } catch (const Error&) {
                return std::nullopt;
            }
        };
        return h;
    }
};

struct QZXStructure {
    using Value = poly::QZPoly;

    int sample_degree = 3;
    poly::IrredOptions irred{};

    std::string name() const { return "QZX"; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value zero() const { return Value(); }
    Value one() const { return Value(1); }
    bool less(const Value& a, const Value& b) const { return a.compare(b) == poly::Cmp::less; }
    bool equal(const Value& a, const Value& b) const { return a == b; }
    std::string print(const Value& v) const { return v.str(); }

    std::vector<Value> sample(std::uint64_t seed, std::size_t n) const {
        std::mt19937_64 rng(seed);
        std::vector<Value> out;
        out.reserve(n);
        const Value landmarks[] = {Value(), Value(1), Value(2), Value(3),
                                   Value::from_coeffs({Rat(1), Rat(1)}),          // X + 1
                                   Value::from_coeffs({Rat(1), make_rat(1, 2)})}; // 1/2 X + 1
        for (const auto& v : landmarks) {
            if (out.size() < n) out.push_back(v);
        }
        while (out.size() < n) {
            out.push_back(poly::sample_cone_qz(rng, sample_degree));
        }
        return out;
    }

    std::optional<Value> diff_hint(const Value& a, const Value& b) const {
        if (a.compare(b) == poly::Cmp::greater) return std::nullopt;
        return b - a;
    }
    std::optional<Value> quot_hint(const Value& a, const Value& b) const {
        if (a.is_zero() || a.degree() > 0) return std::nullopt;
        Rat c(a.constant_term());
        Value q = Value();
        try {
            q = b.divide_by(c);
        } catch (const Error&) {
            return std::nullopt;  // constant term would leave Z
        }
        return q;
    }

    ModelHooks<Value> hooks() const {
        poly::IrredOptions opt = irred;
        ModelHooks<Value> h;
        h.is_prime = [opt](const Value& v) {
            if (!v.in_cone() || v.is_zero() || v.is_one()) return false;
            return poly::is_irreducible_qz(v, opt).irreducible;
        };
        h.between_prime = [opt](const Value& a, const Value& b) -> std::optional<Value> {
            // the documented X+1 successor refuter; other shapes are not
            // needed by the exploration layer
            try {
                return poly::between_prime_qz(a, b);
            } catch (const Error&) {
                return std::nullopt;
            }
        };
        return h;
    }
};

}  // namespace totlab::folio
