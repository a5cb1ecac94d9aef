#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "totlab/nat.hpp"

namespace totlab::pgood {

// Verdict for "n is p-good". p absent encodes the classic unfiltered case
// (every totative must be prime). When good is false, witness is the least
// totative that violates the requirement: composite, coprime to n, and not
// divisible by any prime <= p (no filter in the classic case).
struct PGoodReport {
    Nat n;
    std::optional<Nat> p;
    bool good = false;
    std::optional<Nat> witness;
};

// n is p-good iff every totative t of n with smallest_prime_factor(t) > p
// is prime. p must be prime. n in {1,2,3} are vacuously good.
PGoodReport is_p_good(const Nat& n, const Nat& p);

// Classic predicate: every totative of n is prime.
PGoodReport all_totatives_prime(const Nat& n);

// All n <= limit with is_p_good(n, p).good, ascending.
std::vector<Nat> enumerate_p_good(const Nat& p, const Nat& limit);

// S(S(S(p)))^2 + 1 for p >= 7, else 290. No n at or above this bound is
// p-good.
Nat weak_bound(const Nat& p);

// S(p) * k_p, the claimed largest p-good number; requires p > 7.
Nat strong_bound(const Nat& p);

// The certified largest p-good number. For p > 7 this re-verifies the
// closed form by brute force: strong_bound(p) must be p-good and nothing in
// (strong_bound(p), weak_bound(p)) may be. For p <= 7 it scans up to 290.
// Throws CertificationFailed if the brute force disagrees (an
// implementation bug, not a math failure).
Nat largest_p_good(const Nat& p);

// Bulk scanner backed by a smallest-prime-factor sieve; the table covers
// values up to its limit.
class Scanner {
public:
    explicit Scanner(std::uint32_t limit);

    // Least bad totative of n under filter p (p = 0 means no filter).
    std::optional<std::uint64_t> least_bad_totative(std::uint64_t n, std::uint64_t p) const;
    bool good(std::uint64_t n, std::uint64_t p) const { return !least_bad_totative(n, p).has_value(); }

    std::uint32_t limit() const { return limit_; }

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
};

}  // namespace totlab::pgood
