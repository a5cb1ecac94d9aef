#include "totlab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

namespace totlab::nt {

namespace {

constexpr std::uint32_t kWheel[8] = {1, 7, 11, 13, 17, 19, 23, 29};

std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    using u128 = unsigned __int128;
    while (r > 0 && u128(r) * r > n) --r;
    while (u128(r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull}) {
        if (n % d == 0) return n == d;
    }
    std::uint64_t limit = isqrt_u64(n);
    for (std::uint64_t base = 0; base <= limit; base += 30) {
        for (std::uint32_t off : kWheel) {
            std::uint64_t d = base + off;
            if (d <= 5) continue;
            if (d > limit) return true;
            if (n % d == 0) return false;
        }
    }
    return true;
}

bool is_prime(const Nat& n) {
    if (n < 2) return false;
    if (auto u = to_u64(n)) return is_prime_u64(*u);
    // Beyond 64 bits: plain trial division. Factoring past ~10^12 is a
    // non-goal, so this path only ever sees small divisors in practice.
    for (Nat d : {Nat(2), Nat(3), Nat(5)}) {
        if (n % d == 0) return n == d;
    }
    Nat limit = isqrt(n);
    for (Nat base = 0; base <= limit; base += 30) {
        for (std::uint32_t off : kWheel) {
            Nat d = base + off;
            if (d <= 5) continue;
            if (d > limit) return true;
            if (n % d == 0) return false;
        }
    }
    return true;
}

std::uint64_t smallest_prime_factor_u64(std::uint64_t n) {
    if (n < 2) fail(Errc::too_small, "smallest_prime_factor needs n > 1");
    for (std::uint64_t d : {2ull, 3ull, 5ull}) {
        if (n % d == 0) return d;
    }
    std::uint64_t limit = isqrt_u64(n);
    for (std::uint64_t base = 0; base <= limit; base += 30) {
        for (std::uint32_t off : kWheel) {
            std::uint64_t d = base + off;
            if (d <= 5) continue;
            if (d > limit) return n;
            if (n % d == 0) return d;
        }
    }
    return n;
}

Nat smallest_prime_factor(const Nat& n) {
    if (n <= 1) fail(Errc::too_small, "smallest_prime_factor needs n > 1");
    if (auto u = to_u64(n)) return nat_from_u64(smallest_prime_factor_u64(*u));
    Nat limit = isqrt(n);
    for (Nat d : {Nat(2), Nat(3), Nat(5)}) {
        if (n % d == 0) return d;
    }
    for (Nat base = 0; base <= limit; base += 30) {
        for (std::uint32_t off : kWheel) {
            Nat d = base + off;
            if (d <= 5) continue;
            if (d > limit) return n;
            if (n % d == 0) return d;
        }
    }
    return n;
}

Nat gcd(const Nat& a, const Nat& b) {
    Nat g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool coprime(const Nat& a, const Nat& b) { return gcd(a, b) == 1; }

Nat successor_prime(const Nat& p) {
    if (!is_prime(p)) fail(Errc::not_prime, "successor_prime: " + to_string(p));
    Nat q = p + 1;
    if (q % 2 == 0) {
        if (q == 2) return q;
        ++q;
    }
    while (!is_prime(q)) q += 2;
    return q;
}

Nat predecessor_prime(const Nat& p) {
    if (!is_prime(p)) fail(Errc::not_prime, "predecessor_prime: " + to_string(p));
    if (p == 2) fail(Errc::no_predecessor, "no prime below 2");
    if (p == 3) return 2;
    Nat q = p - 2;
    if (q % 2 == 0) --q;
    while (!is_prime(q)) q -= 2;
    return q;
}

Nat nth_successor(const Nat& p, const Nat& k) {
    if (!is_prime(p)) fail(Errc::not_prime, "nth_successor: " + to_string(p));
    Nat q = p;
    for (Nat i = 0; i < k; ++i) q = successor_prime(q);
    return q;
}

Nat max_prime_sq_below(const Nat& n) {
    if (n <= 4) fail(Errc::too_small, "max_prime_sq_below needs n > 4");
    Nat s = isqrt(n - 1);  // p^2 < n  <=>  p <= floor(sqrt(n-1))
    while (!is_prime(s)) --s;
    return s;
}

Nat kp_floor(const Nat& p) {
    if (!is_prime(p)) fail(Errc::not_prime, "kp_floor: " + to_string(p));
    Nat s = successor_prime(p);
    Nat ss = successor_prime(s);
    Nat sq = ss * ss;
    if (sq % s == 0) fail(Errc::certification_failed, "S(p) divides S(S(p))^2; impossible for distinct primes");
    return sq / s;
}

std::vector<std::uint32_t> sieve_primes_u32(std::uint32_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    primes.push_back(2);
    if (limit < 3) return primes;
    // odd-only bitmap: bit i represents 2i+3
    std::size_t bits = (static_cast<std::size_t>(limit) - 1) / 2;
    std::vector<std::uint8_t> composite(bits, 0);
    std::size_t root = (isqrt_u64(limit) >= 3) ? (isqrt_u64(limit) - 3) / 2 + 1 : 0;
    for (std::size_t i = 0; i < root; ++i) {
        if (composite[i]) continue;
        std::uint64_t p = 2 * i + 3;
        for (std::uint64_t j = (p * p - 3) / 2; j < bits; j += p) composite[j] = 1;
    }
    for (std::size_t i = 0; i < bits; ++i) {
        if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(2 * i + 3));
    }
    return primes;
}

std::vector<std::uint32_t> sieve_spf_u32(std::uint32_t limit) {
    std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (std::uint64_t j = i; j <= limit; j += i) {
                if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
            }
        }
    }
    return spf;
}

void TotativeRange::iterator::settle() {
    if (n_ == nullptr) return;
    while (t_ < *n_ && gcd(t_, *n_) != 1) ++t_;
}

// --- PrimeCtx ---------------------------------------------------------

PrimeCtx::PrimeCtx(std::uint64_t initial_limit) : limit_(0) {
    rebuild_locked(std::max<std::uint64_t>(initial_limit, 16));
}

std::uint64_t PrimeCtx::limit() const {
    std::lock_guard<std::mutex> lock(mu_);
    return limit_;
}

std::size_t PrimeCtx::count() const {
    std::lock_guard<std::mutex> lock(mu_);
    return primes_.size();
}

void PrimeCtx::rebuild_locked(std::uint64_t new_limit) {
    if (new_limit > UINT32_MAX) fail(Errc::out_of_range, "prime table limit beyond 2^32");
    auto ps = sieve_primes_u32(static_cast<std::uint32_t>(new_limit));
    primes_.assign(ps.begin(), ps.end());
    limit_ = new_limit;
}

void PrimeCtx::ensure(std::uint64_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    if (n <= limit_) return;
    std::uint64_t new_limit = limit_;
    while (new_limit < n) new_limit *= 2;
    rebuild_locked(new_limit);
}

bool PrimeCtx::is_prime_cached(std::uint64_t n) {
    ensure(n);
    std::lock_guard<std::mutex> lock(mu_);
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

std::uint64_t PrimeCtx::successor_u64(std::uint64_t p) {
    if (!is_prime_u64(p)) fail(Errc::not_prime, "successor_u64");
    ensure(2 * p);  // Bertrand: the next prime is below 2p
    std::lock_guard<std::mutex> lock(mu_);
    auto it = std::upper_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end()) fail(Errc::out_of_range, "prime table lookup failed");
    return *it;
}

std::uint64_t PrimeCtx::predecessor_u64(std::uint64_t p) {
    if (!is_prime_u64(p)) fail(Errc::not_prime, "predecessor_u64");
    if (p == 2) fail(Errc::no_predecessor, "no prime below 2");
    ensure(p);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    return *(it - 1);
}

std::vector<std::uint64_t> PrimeCtx::primes_upto(std::uint64_t n) {
    ensure(n);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = std::upper_bound(primes_.begin(), primes_.end(), n);
    return std::vector<std::uint64_t>(primes_.begin(), it);
}

void PrimeCtx::save(const std::filesystem::path& path) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::ofstream out(path, std::ios::trunc);
    if (!out) fail(Errc::io_error, "cannot open cache for writing: " + path.string());
    out << "totlab-prime-cache 1\n";
    out << "limit " << limit_ << "\n";
    out << "count " << primes_.size() << "\n";
    for (auto p : primes_) out << p << "\n";
    if (!out) fail(Errc::io_error, "write failed: " + path.string());
}

PrimeCtx PrimeCtx::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::io_error, "cannot open cache: " + path.string());
    std::string tag;
    std::uint32_t version = 0;
    in >> tag >> version;
    if (tag != "totlab-prime-cache" || version != 1) fail(Errc::bad_format, "unrecognized cache header");
    std::string key;
    std::uint64_t limit = 0, count = 0;
    in >> key >> limit;
    if (key != "limit") fail(Errc::bad_format, "missing limit");
    in >> key >> count;
    if (key != "count") fail(Errc::bad_format, "missing count");
    std::vector<std::uint64_t> primes;
    primes.reserve(count);
    std::uint64_t prev = 0, p = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (!(in >> p)) fail(Errc::bad_format, "truncated prime list");
        if (p <= prev) fail(Errc::bad_format, "prime list not strictly increasing");
        primes.push_back(p);
        prev = p;
    }
    if (prev > limit) fail(Errc::bad_format, "prime exceeds declared limit");
    return PrimeCtx(limit, std::move(primes));
}

PrimeCtx& PrimeCtx::global() {
    static PrimeCtx ctx(1 << 16);
    return ctx;
}

CacheInfo cache_info(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::io_error, "cannot open cache: " + path.string());
    std::string tag;
    CacheInfo info{};
    in >> tag >> info.version;
    if (tag != "totlab-prime-cache" || info.version != 1) fail(Errc::bad_format, "unrecognized cache header");
    std::string key;
    in >> key >> info.limit >> key >> info.count;
    std::uint64_t p = 0, last = 0;
    for (std::uint64_t i = 0; i < info.count && (in >> p); ++i) last = p;
    info.largest = last;
    return info;
}

}  // namespace totlab::nt
