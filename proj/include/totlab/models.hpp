#pragma once

#include <optional>
#include <random>

#include "totlab/irreducible.hpp"
#include "totlab/poly.hpp"

namespace totlab::poly {

// Least irreducible above f / greatest irreducible below f in the cone of
// Z[X]. The order is discrete, so stepping by integer constants is
// complete; Lemma 5.1 shapes bound the number of steps.
IntPoly successor_prime_int(const IntPoly& f, const IrredOptions& opt = {});
IntPoly predecessor_prime_int(const IntPoly& f, const IrredOptions& opt = {});

// Greatest k in the cone with k*d <= m < (k+1)*d, or nullopt (NoFloor) when
// no such k exists (possible in a discretely ordered polynomial ring, e.g.
// m = X, d = 2).
std::optional<IntPoly> floor_div_int(const IntPoly& m, const IntPoly& d);

// For n of odd degree >= 3 and irreducible p with p^2 < n: the least
// irreducible q > p, whose square is still below n. Every p is beaten, which
// is how A18 fails in this cone.
IntPoly a18_bigger_prime(const IntPoly& n, const IntPoly& p, const IrredOptions& opt = {});

// q^2 < 2 * P(q) * P(P(q)) for an irreducible q of degree >= 1.
bool a19_check_int(const IntPoly& q, const IrredOptions& opt = {});

// S(p) * floor(S(S(p))^2 / S(p)): the largest p-good element of the cone.
IntPoly strong_bound_int(const IntPoly& p, const IrredOptions& opt = {});

// A prime element of the Q_Z[X] cone dividing f (f > 1). Ties resolved by
// returning the least under compare.
QZPoly prime_divisor_qz(const QZPoly& f, const IrredOptions& opt = {});

// For a = X + 1 and a degree-1 prime b = cX +- 1 with b > a: a prime
// strictly between, ((c+1)/2) X + 1. Refutes b as a successor prime of a.
QZPoly between_prime_qz(const QZPoly& a, const QZPoly& b);

// Seeded samplers (deterministic under the seed).
// Z[X] cone: degree 0..max_deg, coefficients in [-coef_bound, coef_bound],
// positive leading coefficient.
IntPoly sample_cone_int(std::mt19937_64& rng, int max_deg, int coef_bound);
IntPoly sample_irreducible_int(std::mt19937_64& rng, int max_deg, int coef_bound, const IrredOptions& opt = {});
// Q_Z[X] cone: numerators/denominators up to 20, integer constant terms up
// to 50 in magnitude.
QZPoly sample_cone_qz(std::mt19937_64& rng, int max_deg);

}  // namespace totlab::poly
