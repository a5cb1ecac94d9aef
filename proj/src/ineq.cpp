#include "totlab/ineq.hpp"

#include <algorithm>
#include <thread>

#include "totlab/kernels.hpp"
#include "totlab/primes.hpp"

namespace totlab::ineq {

namespace {

constexpr std::uint64_t kScanCap = (1ull << 31) - 1;  // keeps kernel math in 64 bits

void require_scan_limit(std::uint64_t limit) {
    if (limit > kScanCap) fail(Errc::budget_exceeded, "scan limit beyond 2^31-1");
}

// Splits [0, n) into roughly equal chunks, runs fn(chunk, begin, end) on a
// pool of threads, deterministic chunk order for the caller's merge.
void run_chunked(std::size_t n, int jobs, const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    jobs = std::max(1, jobs);
    std::size_t chunks = static_cast<std::size_t>(jobs);
    if (n == 0) return;
    chunks = std::min(chunks, n);
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    std::size_t per = n / chunks, extra = n % chunks, begin = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t len = per + (c < extra ? 1 : 0);
        workers.emplace_back(fn, c, begin, begin + len);
        begin += len;
    }
    for (auto& w : workers) w.join();
}

}  // namespace

Which which_from_name(const std::string& name) {
    if (name == "a19") return Which::a19;
    if (name == "eq4") return Which::eq4;
    if (name == "chebyshev") return Which::chebyshev;
    if (name == "bonse") return Which::bonse;
    fail(Errc::bad_format, "unknown inequality: " + name);
}

std::string which_name(Which w) {
    switch (w) {
        case Which::a19: return "a19";
        case Which::eq4: return "eq4";
        case Which::chebyshev: return "chebyshev";
        case Which::bonse: return "bonse";
    }
    return "?";
}

void for_each_triple_u64(std::uint64_t limit, const std::function<bool(std::uint64_t, std::uint64_t, std::uint64_t)>& fn) {
    require_scan_limit(limit);
    if (limit < 5) return;
    auto primes = nt::sieve_primes_u32(static_cast<std::uint32_t>(limit));
    for (std::size_t i = 0; i + 2 < primes.size(); ++i) {
        if (!fn(primes[i], primes[i + 1], primes[i + 2])) return;
    }
}

std::vector<Triple> consecutive_triples(const Nat& limit) {
    if (limit < 5) fail(Errc::out_of_range, "triple stream needs limit >= 5");
    std::vector<Triple> out;
    for_each_triple_u64(to_u64_or_fail(limit, "limit"), [&](std::uint64_t r, std::uint64_t p, std::uint64_t q) {
        out.push_back(Triple{nat_from_u64(r), nat_from_u64(p), nat_from_u64(q)});
        return true;
    });
    return out;
}

bool check_a19(const Triple& t) {
    if (t.q <= 17) return true;  // guard fails, the implication is vacuous
    return t.q * t.q < 2 * t.p * t.r;
}

bool check_eq4(const Nat& q) {
    if (!nt::is_prime(q)) fail(Errc::not_prime, "check_eq4: " + to_string(q));
    if (q < 17) fail(Errc::out_of_range, "check_eq4 needs q >= 17");
    Nat s = nt::successor_prime(q);
    Nat pr = nt::predecessor_prime(q);
    return s * s < 2 * q * pr;
}

bool check_chebyshev(const Nat& q) {
    if (!nt::is_prime(q)) fail(Errc::not_prime, "check_chebyshev: " + to_string(q));
    if (q < 3) fail(Errc::out_of_range, "check_chebyshev needs q >= 3");
    return q < 2 * nt::predecessor_prime(q);
}

bool check_bonse(std::uint64_t k) {
    if (k < 4) fail(Errc::out_of_range, "check_bonse needs k >= 4");
    auto& ctx = nt::PrimeCtx::global();
    ctx.ensure(1 << 16);
    std::vector<std::uint64_t> primes = ctx.primes_upto(ctx.limit());
    while (primes.size() < k + 1) {
        ctx.ensure(ctx.limit() * 2);
        primes = ctx.primes_upto(ctx.limit());
    }
    Nat product = 1;
    for (std::uint64_t i = 0; i < k; ++i) product *= nat_from_u64(primes[i]);
    Nat next = nat_from_u64(primes[k]);
    return next * next < product;
}

namespace {

ScanReport scan_triples(Which which, std::uint64_t limit, int jobs) {
    // a19 checks triples (r, p, q) with q <= limit; eq4 checks primes
    // q in [17, limit] via the same kernel over (P(q), q, S(q)), which
    // needs the sieve to run past limit to reach S(limit).
    require_scan_limit(limit);
    ScanReport report{which, limit, 0, {}};
    std::uint32_t sieve_to = static_cast<std::uint32_t>(limit);
    if (which == Which::eq4) {
        std::uint64_t padded = std::min<std::uint64_t>(kScanCap, limit + 2048);
        sieve_to = static_cast<std::uint32_t>(padded);
    }
    auto primes = nt::sieve_primes_u32(sieve_to);

    const std::uint32_t* base = primes.data();
    std::vector<std::vector<std::size_t>> fails(static_cast<std::size_t>(std::max(jobs, 1)));

    if (which == Which::a19) {
        // every triple (primes[i], primes[i+1], primes[i+2]); the sieve runs
        // to limit, so q <= limit holds for all of them
        std::size_t n = (primes.size() >= 3) ? primes.size() - 2 : 0;
        report.checked = n;
        run_chunked(n, jobs, [&](std::size_t c, std::size_t b, std::size_t e) {
            simd::sq_lt_2ab(base + b, base + b + 1, base + b + 2, e - b, 17, fails[c]);
            for (auto& idx : fails[c]) idx += b;
        });
    } else {
        // eq4 rows: for prime q = primes[i+1] in [17, limit], check
        // S(q)^2 < 2 * q * P(q): a = P(q), b = q, c = S(q).
        std::size_t first = 0;
        while (first + 2 < primes.size() && primes[first + 1] < 17) ++first;
        std::size_t n = 0;
        while (first + n + 2 < primes.size() && primes[first + n + 1] <= limit) ++n;
        report.checked = n;
        run_chunked(n, jobs, [&](std::size_t c, std::size_t b, std::size_t e) {
            simd::sq_lt_2ab(base + first + b, base + first + b + 1, base + first + b + 2, e - b, 0, fails[c]);
            for (auto& idx : fails[c]) idx += first + b;
        });
    }

    for (auto& chunk : fails) {
        for (std::size_t idx : chunk) {
            Failure f;
            if (which == Which::a19) {
                f.inputs = {nat_from_u64(primes[idx]), nat_from_u64(primes[idx + 1]), nat_from_u64(primes[idx + 2])};
                f.lhs = nat_from_u64(primes[idx + 2]) * nat_from_u64(primes[idx + 2]);
                f.rhs = 2 * nat_from_u64(primes[idx + 1]) * nat_from_u64(primes[idx]);
            } else {
                f.inputs = {nat_from_u64(primes[idx + 1])};
                f.lhs = nat_from_u64(primes[idx + 2]) * nat_from_u64(primes[idx + 2]);
                f.rhs = 2 * nat_from_u64(primes[idx + 1]) * nat_from_u64(primes[idx]);
            }
            report.failures.push_back(std::move(f));
        }
    }
    return report;
}

ScanReport scan_chebyshev(std::uint64_t limit, int jobs) {
    require_scan_limit(limit);
    ScanReport report{Which::chebyshev, limit, 0, {}};
    auto primes = nt::sieve_primes_u32(static_cast<std::uint32_t>(limit));
    // instances: primes q >= 3 -> pairs (P(q), q) = (primes[i], primes[i+1])
    std::size_t n = (primes.size() >= 2) ? primes.size() - 1 : 0;
    report.checked = n;
    std::vector<std::vector<std::size_t>> fails(std::max<std::size_t>(1, static_cast<std::size_t>(std::max(jobs, 1))));
    const std::uint32_t* base = primes.data();
    run_chunked(n, jobs, [&](std::size_t c, std::size_t b, std::size_t e) {
        simd::lt_2a(base + b, base + b + 1, e - b, fails[c]);
        for (auto& idx : fails[c]) idx += b;
    });
    for (auto& chunk : fails) {
        for (std::size_t idx : chunk) {
            Failure f;
            f.inputs = {nat_from_u64(primes[idx + 1])};
            f.lhs = nat_from_u64(primes[idx + 1]);
            f.rhs = 2 * nat_from_u64(primes[idx]);
            report.failures.push_back(std::move(f));
        }
    }
    return report;
}

ScanReport scan_bonse(std::uint64_t limit) {
    if (limit > 100000) fail(Errc::budget_exceeded, "bonse scan limit beyond 10^5");
    ScanReport report{Which::bonse, limit, 0, {}};
    if (limit < 4) return report;
    auto& ctx = nt::PrimeCtx::global();
    std::uint64_t want = 32;
    while (want < (limit + 1) * 32) want *= 2;  // crude upper bound on p_{k+1}
    std::vector<std::uint64_t> primes = ctx.primes_upto(want);
    while (primes.size() < limit + 1) {
        ctx.ensure(ctx.limit() * 2);
        primes = ctx.primes_upto(ctx.limit());
    }
    Nat product = 1;
    for (std::uint64_t i = 0; i < 3; ++i) product *= nat_from_u64(primes[i]);
    for (std::uint64_t k = 4; k <= limit; ++k) {
        product *= nat_from_u64(primes[k - 1]);
        Nat next = nat_from_u64(primes[k]);
        ++report.checked;
        if (!(next * next < product)) {
            report.failures.push_back(Failure{{nat_from_u64(k)}, next * next, product});
        }
    }
    return report;
}

}  // namespace

ScanReport scan(Which which, std::uint64_t limit, int jobs) {
    switch (which) {
        case Which::a19:
        case Which::eq4:
            return scan_triples(which, limit, jobs);
        case Which::chebyshev:
            return scan_chebyshev(limit, jobs);
        case Which::bonse:
            return scan_bonse(limit);
    }
    fail(Errc::bad_format, "unknown scan kind");
}

}  // namespace totlab::ineq
