#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "totlab/nat.hpp"

namespace totlab::ineq {

// Consecutive primes r < p < q.
struct Triple {
    Nat r, p, q;
};

enum class Which { a19, eq4, chebyshev, bonse };

Which which_from_name(const std::string& name);  // throws BadFormat
std::string which_name(Which w);

struct Failure {
    std::vector<Nat> inputs;  // a19: r,p,q; eq4/chebyshev: q; bonse: k
    Nat lhs, rhs;             // the violated inequality, lhs < rhs expected
};

struct ScanReport {
    Which which;
    std::uint64_t limit = 0;
    std::uint64_t checked = 0;
    std::vector<Failure> failures;
};

// Every triple of consecutive primes with q <= limit, ascending in q.
void for_each_triple_u64(std::uint64_t limit, const std::function<bool(std::uint64_t, std::uint64_t, std::uint64_t)>& fn);
std::vector<Triple> consecutive_triples(const Nat& limit);  // limit >= 5

// True if q <= 17 (the axiom's guard fails, vacuous) or q^2 < 2*p*r.
bool check_a19(const Triple& t);

// S(q)^2 < 2*q*P(q); requires prime q >= 17.
bool check_eq4(const Nat& q);

// q < 2*P(q); requires prime q >= 3.
bool check_chebyshev(const Nat& q);

// p_{k+1}^2 < p_1 * ... * p_k; requires k >= 4. Exact product.
bool check_bonse(std::uint64_t k);

// Bulk certification. a19/eq4/chebyshev check every instance with the
// relevant prime <= limit; bonse checks 4 <= k <= limit. jobs > 1 splits
// the range; the merged report does not depend on the partitioning.
ScanReport scan(Which which, std::uint64_t limit, int jobs = 1);

}  // namespace totlab::ineq
