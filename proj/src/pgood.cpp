#include "totlab/pgood.hpp"

#include <numeric>

#include "totlab/primes.hpp"

namespace totlab::pgood {

namespace {

// Desk-scale guard: single checks walk all totatives, so n is capped where
// that stays tractable.
std::uint64_t narrow(const Nat& n, const char* what) {
    auto u = to_u64(n);
    if (!u || *u > (1ull << 40)) fail(Errc::budget_exceeded, std::string(what) + " too large for a totative walk");
    return *u;
}

// Least totative of n that is composite and free of prime factors <= p
// (p = 0: no filter). Uses trial-division spf; for bulk work prefer Scanner.
std::optional<std::uint64_t> least_bad_direct(std::uint64_t n, std::uint64_t p) {
    std::optional<std::uint64_t> found;
    nt::for_each_totative_u64(n, [&](std::uint64_t t) {
        std::uint64_t s = nt::smallest_prime_factor_u64(t);
        if (s == t) return true;  // prime totative, fine
        if (p == 0 || s > p) {
            found = t;
            return false;
        }
        return true;
    });
    return found;
}

PGoodReport report_from(Nat n, std::optional<Nat> p, std::optional<std::uint64_t> bad) {
    PGoodReport r;
    r.n = std::move(n);
    r.p = std::move(p);
    r.good = !bad.has_value();
    if (bad) r.witness = nat_from_u64(*bad);
    return r;
}

}  // namespace

PGoodReport is_p_good(const Nat& n, const Nat& p) {
    if (!nt::is_prime(p)) fail(Errc::not_prime, "is_p_good filter: " + to_string(p));
    std::uint64_t un = narrow(n, "n");
    std::uint64_t up = to_u64_or_fail(p, "p");
    return report_from(n, p, least_bad_direct(un, up));
}

PGoodReport all_totatives_prime(const Nat& n) {
    std::uint64_t un = narrow(n, "n");
    return report_from(n, std::nullopt, least_bad_direct(un, 0));
}

std::vector<Nat> enumerate_p_good(const Nat& p, const Nat& limit) {
    if (!nt::is_prime(p)) fail(Errc::not_prime, "enumerate_p_good filter: " + to_string(p));
    std::uint64_t lim = narrow(limit, "limit");
    if (lim > (1u << 20)) fail(Errc::budget_exceeded, "enumeration limit beyond 2^20");
    std::uint64_t up = to_u64_or_fail(p, "p");
    Scanner scanner(static_cast<std::uint32_t>(lim));
    std::vector<Nat> out;
    for (std::uint64_t n = 1; n <= lim; ++n) {
        if (scanner.good(n, up)) out.push_back(nat_from_u64(n));
    }
    return out;
}

Nat weak_bound(const Nat& p) {
    if (!nt::is_prime(p)) fail(Errc::not_prime, "weak_bound: " + to_string(p));
    if (p < 7) return 290;
    Nat s3 = nt::nth_successor(p, 3);
    return s3 * s3 + 1;
}

Nat strong_bound(const Nat& p) {
    if (!nt::is_prime(p)) fail(Errc::not_prime, "strong_bound: " + to_string(p));
    if (p <= 7) fail(Errc::out_of_range, "strong_bound needs p > 7; use largest_p_good");
    return nt::successor_prime(p) * nt::kp_floor(p);
}

Nat largest_p_good(const Nat& p) {
    if (!nt::is_prime(p)) fail(Errc::not_prime, "largest_p_good: " + to_string(p));
    std::uint64_t up = to_u64_or_fail(p, "p");
    if (p <= 7) {
        Scanner scanner(290);
        std::uint64_t best = 0;
        for (std::uint64_t n = 1; n <= 290; ++n) {
            if (scanner.good(n, up)) best = n;
        }
        return nat_from_u64(best);
    }
    Nat sb = strong_bound(p);
    Nat wb = weak_bound(p);
    std::uint64_t usb = to_u64_or_fail(sb, "strong bound");
    std::uint64_t uwb = to_u64_or_fail(wb, "weak bound");
    if (uwb > (1u << 26)) fail(Errc::budget_exceeded, "certification range beyond 2^26");
    Scanner scanner(static_cast<std::uint32_t>(uwb));
    if (!scanner.good(usb, up)) {
        fail(Errc::certification_failed, "strong bound " + to_string(sb) + " is not " + to_string(p) + "-good");
    }
    for (std::uint64_t m = usb + 1; m < uwb; ++m) {
        if (scanner.good(m, up)) {
            fail(Errc::certification_failed,
                 "found p-good " + std::to_string(m) + " above the strong bound for p = " + to_string(p));
        }
    }
    return sb;
}

Scanner::Scanner(std::uint32_t limit) : limit_(limit), spf_(nt::sieve_spf_u32(limit)) {}

std::optional<std::uint64_t> Scanner::least_bad_totative(std::uint64_t n, std::uint64_t p) const {
    if (n > limit_) fail(Errc::out_of_range, "Scanner table too small for n");
    for (std::uint64_t t = 2; t < n; ++t) {
        if (std::gcd(t, n) != 1) continue;
        std::uint64_t s = spf_[t];
        if (s == t) continue;  // prime
        if (p == 0 || s > p) return t;
    }
    return std::nullopt;
}

}  // namespace totlab::pgood
