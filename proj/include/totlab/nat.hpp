#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "totlab/error.hpp"

namespace totlab {

// Exact integer/rational carriers. Nat values are nonnegative by contract;
// functions taking a Nat validate where it matters.
using Int = mpz_class;
using Nat = mpz_class;
using Rat = mpq_class;

inline bool fits_u64(const Int& v) { return v >= 0 && v.fits_ulong_p(); }

inline std::optional<std::uint64_t> to_u64(const Int& v) {
    if (!fits_u64(v)) return std::nullopt;
    return static_cast<std::uint64_t>(v.get_ui());
}

inline std::uint64_t to_u64_or_fail(const Int& v, const char* what) {
    auto u = to_u64(v);
    if (!u) fail(Errc::out_of_range, std::string(what) + " does not fit in 64 bits");
    return *u;
}

inline Nat nat_from_u64(std::uint64_t v) {
    Nat n;
    mpz_import(n.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return n;
}

// Floor square root (exact, arbitrary precision).
inline Nat isqrt(const Nat& n) {
    if (n < 0) fail(Errc::out_of_range, "isqrt of negative value");
    Nat r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// a - b over Nat; throws Underflow instead of going negative.
inline Nat monus(const Nat& a, const Nat& b) {
    if (a < b) fail(Errc::underflow, "monus would be negative");
    return a - b;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) fail(Errc::bad_format, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace totlab
