#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <numeric>
#include <vector>

#include "totlab/nat.hpp"

namespace totlab::nt {

// Deterministic primality by trial division (30-wheel). Desk scale; bulk
// scans should use sieve tables instead.
bool is_prime_u64(std::uint64_t n);
bool is_prime(const Nat& n);

std::uint64_t smallest_prime_factor_u64(std::uint64_t n);  // n > 1
Nat smallest_prime_factor(const Nat& n);                   // throws TooSmall for n <= 1

Nat gcd(const Nat& a, const Nat& b);  // gcd(0,0) = 0 by convention
bool coprime(const Nat& a, const Nat& b);

Nat successor_prime(const Nat& p);    // least prime > p; throws NotPrime
Nat predecessor_prime(const Nat& p);  // greatest prime < p; throws NoPredecessor for p = 2
Nat nth_successor(const Nat& p, const Nat& k);

// Largest prime p with p^2 < n (requires n > 4).
Nat max_prime_sq_below(const Nat& n);

// Greatest k with k*S(p) < S(S(p))^2. S(p) never divides S(S(p))^2; this is
// asserted, a violation is a bug.
Nat kp_floor(const Nat& p);

// All primes <= limit (simple odd-only sieve).
std::vector<std::uint32_t> sieve_primes_u32(std::uint32_t limit);
// spf[i] = smallest prime factor of i (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> sieve_spf_u32(std::uint32_t limit);

// Increasing stream of totatives of n: { t : 1 < t < n, gcd(t, n) = 1 }.
// Lazy; nothing is materialized.
class TotativeRange {
public:
    explicit TotativeRange(Nat n) : n_(std::move(n)) {}

    class iterator {
    public:
        iterator() = default;
        iterator(const Nat* n, Nat t) : n_(n), t_(std::move(t)) { settle(); }

        const Nat& operator*() const { return t_; }
        iterator& operator++() {
            ++t_;
            settle();
            return *this;
        }
        bool operator==(const iterator& o) const { return done() == o.done() && (done() || t_ == o.t_); }
        bool operator!=(const iterator& o) const { return !(*this == o); }

    private:
        bool done() const { return n_ == nullptr || t_ >= *n_; }
        void settle();

        const Nat* n_ = nullptr;
        Nat t_;
    };

    iterator begin() const { return iterator(&n_, Nat(2)); }
    iterator end() const { return iterator(); }

private:
    Nat n_;
};

inline TotativeRange totatives(Nat n) { return TotativeRange(std::move(n)); }

// Visits totatives of n in increasing order; fn returning false stops early.
template <class F>
void for_each_totative_u64(std::uint64_t n, F&& fn) {
    for (std::uint64_t t = 2; t < n; ++t) {
        if (std::gcd(t, n) == 1 && !fn(t)) return;
    }
}

// Cached prime table with geometric on-demand growth. Extension is the only
// mutation and is serialized by an internal mutex.
class PrimeCtx {
public:
    explicit PrimeCtx(std::uint64_t initial_limit = 1024);

    std::uint64_t limit() const;
    std::size_t count() const;
    void ensure(std::uint64_t n);  // grow table until limit >= n (doubling)

    bool is_prime_cached(std::uint64_t n);     // extends on demand
    std::uint64_t successor_u64(std::uint64_t p);
    std::uint64_t predecessor_u64(std::uint64_t p);
    std::vector<std::uint64_t> primes_upto(std::uint64_t n);  // snapshot copy

    // Flat text cache: header (format version, limit) then one prime per line.
    void save(const std::filesystem::path& path) const;
    static PrimeCtx load(const std::filesystem::path& path);

    static PrimeCtx& global();

private:
    PrimeCtx(std::uint64_t limit, std::vector<std::uint64_t> primes)
        : limit_(limit), primes_(std::move(primes)) {}
    void rebuild_locked(std::uint64_t new_limit);

    mutable std::mutex mu_;
    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
};

struct CacheInfo {
    std::uint32_t version;
    std::uint64_t limit;
    std::uint64_t count;
    std::uint64_t largest;
};

CacheInfo cache_info(const std::filesystem::path& path);

}  // namespace totlab::nt
