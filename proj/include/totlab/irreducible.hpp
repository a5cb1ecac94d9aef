#pragma once

#include <optional>
#include <utility>

#include "totlab/poly.hpp"

namespace totlab::poly {

struct IrredOptions {
    int max_degree = 6;  // exhaustive search budget; beyond it only the fast path certifies
};

enum class Lemma51 { applies_irreducible, not_applicable };

// Fast certificate: a_n X^n + ... + a_1 X +- p with p prime and
// p > sum |a_i| (i >= 1) is irreducible. Requires degree >= 1.
Lemma51 lemma51(const IntPoly& f);

struct IntFactorSplit {
    IntPoly a, b;  // f = a * b, both in the cone, neither equal to 1
};

// Exhaustive bounded search (rational roots + Kronecker interpolation),
// independent of the lemma51 fast path. Requires f in the cone with f > 1.
// Returns a nontrivial split, or nullopt when f is irreducible.
// Throws DegreeBudget above opt.max_degree.
std::optional<IntFactorSplit> factor_split_int(const IntPoly& f, const IrredOptions& opt = {});

// lemma51 first, then the exhaustive search. Throws DegreeBudget only when
// the degree exceeds the budget and the fast path does not apply.
bool is_irreducible_int(const IntPoly& f, const IrredOptions& opt = {});

struct QZIrredResult {
    bool irreducible = false;
    // When composite: factors multiply back to the input exactly, both lie
    // in the cone and neither is 1. In the unit-constant-term case both
    // factors have constant term +-1.
    std::optional<std::pair<QZPoly, QZPoly>> witness;
};

// Requires f in the cone, f != 0, f != 1.
QZIrredResult is_irreducible_qz(const QZPoly& f, const IrredOptions& opt = {});

// Complete factorization of f into irreducibles of Q_Z[X] (cone elements).
std::vector<QZPoly> factor_qz(const QZPoly& f, const IrredOptions& opt = {});

}  // namespace totlab::poly
