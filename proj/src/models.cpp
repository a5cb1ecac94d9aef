#include "totlab/models.hpp"

#include <algorithm>

#include "totlab/primes.hpp"

namespace totlab::poly {

namespace {

void require_irreducible(const IntPoly& f, const IrredOptions& opt, const char* who) {
    if (!is_irreducible_int(f, opt)) fail(Errc::not_irreducible, std::string(who) + ": " + f.str());
}

// A prime P with P > sum_{i>=1} |a_i| and P > |a_0|. Then f - a0 + P and
// f - a0 - P are irreducible (Lemma 5.1 shape), bounding the stepping.
Int step_certificate_prime(const IntPoly& f) {
    Int sum = 0;
    for (int i = 1; i <= f.degree(); ++i) sum += abs(f.coeff(static_cast<std::size_t>(i)));
    Int floor = std::max(sum, Int(abs(f.constant_term())));
    Int p = floor + 1;
    while (!nt::is_prime(p)) ++p;
    return p;
}

}  // namespace

IntPoly successor_prime_int(const IntPoly& f, const IrredOptions& opt) {
    require_irreducible(f, opt, "successor_prime_int");
    if (f.is_constant()) return IntPoly(nt::successor_prime(f.constant_term()));
    Int cert = step_certificate_prime(f);
    Int cmax = cert - f.constant_term();  // f + cmax has constant +cert: irreducible
    for (Int c = 1; c <= cmax; ++c) {
        IntPoly candidate = f + IntPoly(c);
        if (is_irreducible_int(candidate, opt)) return candidate;
    }
    fail(Errc::certification_failed, "successor stepping exceeded its certificate");
}

IntPoly predecessor_prime_int(const IntPoly& f, const IrredOptions& opt) {
    require_irreducible(f, opt, "predecessor_prime_int");
    if (f.is_constant()) return IntPoly(nt::predecessor_prime(f.constant_term()));
    Int cert = step_certificate_prime(f);
    Int cmax = cert + f.constant_term();  // f - cmax has constant -cert: irreducible
    for (Int c = 1; c <= cmax; ++c) {
        IntPoly candidate = f - IntPoly(c);
        if (is_irreducible_int(candidate, opt)) return candidate;
    }
    fail(Errc::certification_failed, "predecessor stepping exceeded its certificate");
}

std::optional<IntPoly> floor_div_int(const IntPoly& m, const IntPoly& d) {
    if (!m.in_cone() || !d.in_cone()) fail(Errc::out_of_range, "floor_div_int needs cone elements");
    if (d.compare(IntPoly(1)) == Cmp::less) fail(Errc::out_of_range, "floor_div_int needs d >= 1");

    // Rational long division m = d*Q + R with deg R < deg d. In the lex
    // order m/d = Q + R/d and R/d is infinitesimal, so the floor is decided
    // by the integrality of Q and the sign of R.
    std::vector<Rat> rem;
    rem.reserve(m.coeffs().size());
    for (const auto& v : m.coeffs()) rem.emplace_back(v);
    int dm = m.degree(), dd = d.degree();
    std::vector<Rat> quot(dm >= dd ? static_cast<std::size_t>(dm - dd) + 1 : 0, Rat(0));
    for (int qi = static_cast<int>(quot.size()) - 1; qi >= 0; --qi) {
        Rat top = rem[static_cast<std::size_t>(qi + dd)];
        if (top == 0) continue;
        Rat q = top / Rat(d.leading());
        quot[static_cast<std::size_t>(qi)] = q;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(qi + j)] -= q * Rat(d.coeff(static_cast<std::size_t>(j)));
        }
    }
    // sign of R (zero / lex-positive / lex-negative)
    int rsign = 0;
    for (int i = dd - 1; i >= 0 && rsign == 0; --i) {
        if (static_cast<std::size_t>(i) < rem.size() && rem[static_cast<std::size_t>(i)] != 0) {
            rsign = rem[static_cast<std::size_t>(i)] > 0 ? 1 : -1;
        }
    }

    // Any non-integer coefficient of Q above the constant slot leaves the
    // lower slots of a candidate k unconstrained: no greatest k exists.
    for (std::size_t i = 1; i < quot.size(); ++i) {
        if (!rat_is_integer(quot[i])) return std::nullopt;
    }

    std::vector<Int> kc(quot.size(), Int(0));
    for (std::size_t i = 1; i < quot.size(); ++i) kc[i] = Int(quot[i].get_num());
    IntPoly k;
    if (!quot.empty() && !rat_is_integer(quot[0])) {
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), Int(quot[0].get_num()).get_mpz_t(), Int(quot[0].get_den()).get_mpz_t());
        kc[0] = fl;
        k = IntPoly::from_coeffs(std::move(kc));
    } else {
        if (!quot.empty()) kc[0] = Int(quot[0].get_num());
        k = IntPoly::from_coeffs(std::move(kc));
        if (rsign < 0) k = k - IntPoly(1);
    }

    if (!k.in_cone()) fail(Errc::certification_failed, "floor below the cone");
    IntPoly lower = k * d, upper = (k + IntPoly(1)) * d;
    if (lower.compare(m) == Cmp::greater || m.compare(upper) != Cmp::less) {
        fail(Errc::certification_failed, "floor_div_int verification failed");
    }
    return k;
}

IntPoly a18_bigger_prime(const IntPoly& n, const IntPoly& p, const IrredOptions& opt) {
    if (n.degree() < 3 || n.degree() % 2 == 0 || !n.in_cone()) {
        fail(Errc::bad_shape, "a18_bigger_prime needs a cone element of odd degree >= 3");
    }
    if (!is_irreducible_int(p, opt)) fail(Errc::not_irreducible, "a18_bigger_prime: " + p.str());
    if ((p * p).compare(n) != Cmp::less) fail(Errc::out_of_range, "need p^2 < n");
    IntPoly q = successor_prime_int(p, opt);
    if ((q * q).compare(n) != Cmp::less) {
        // cannot happen: deg q = deg p <= (deg n - 1) / 2 since deg n is odd
        fail(Errc::certification_failed, "successor's square escaped n");
    }
    return q;
}

bool a19_check_int(const IntPoly& q, const IrredOptions& opt) {
    if (q.degree() < 1) fail(Errc::bad_shape, "a19_check_int expects a nonstandard prime (degree >= 1)");
    IntPoly p1 = predecessor_prime_int(q, opt);
    IntPoly p2 = predecessor_prime_int(p1, opt);
    IntPoly lhs = q * q;
    IntPoly rhs = IntPoly(2) * p1 * p2;
    return lhs.compare(rhs) == Cmp::less;
}

IntPoly strong_bound_int(const IntPoly& p, const IrredOptions& opt) {
    if (p.degree() < 1) fail(Errc::bad_shape, "strong_bound_int expects degree >= 1");
    IntPoly s = successor_prime_int(p, opt);
    IntPoly ss = successor_prime_int(s, opt);
    auto k = floor_div_int(ss * ss, s);
    if (!k) fail(Errc::no_floor, "k_p does not exist for " + p.str() + "; log as a finding");
    return s * *k;
}

QZPoly prime_divisor_qz(const QZPoly& f, const IrredOptions& opt) {
    if (!f.in_cone() || f.compare(QZPoly(1)) != Cmp::greater) {
        fail(Errc::out_of_range, "prime_divisor_qz needs a cone element > 1");
    }
    if (f.degree() == 0) return QZPoly(nt::smallest_prime_factor(f.constant_term()));
    Int c0 = f.constant_term();
    if (c0 == 0) return QZPoly(Int(2));
    if (abs(c0) >= 2) return QZPoly(nt::smallest_prime_factor(abs(c0)));
    auto factors = factor_qz(f, opt);
    QZPoly best = factors.front();
    for (const auto& g : factors) {
        if (g.compare(best) == Cmp::less) best = g;
    }
    return best;
}

QZPoly between_prime_qz(const QZPoly& a, const QZPoly& b) {
    QZPoly x_plus_1 = QZPoly::from_coeffs({Rat(1), Rat(1)});
    if (a != x_plus_1) fail(Errc::bad_shape, "between_prime_qz expects a = X + 1");
    if (b.degree() != 1 || abs(b.constant_term()) != 1) {
        fail(Errc::bad_shape, "between_prime_qz expects b = cX +- 1");
    }
    if (b.compare(a) != Cmp::greater) fail(Errc::bad_shape, "between_prime_qz expects b > a");
    Rat c = b.leading();
    Rat mid_lead = (c + 1) / 2;
    QZPoly mid = QZPoly::from_coeffs({Rat(1), mid_lead});
    if (a.compare(mid) != Cmp::less || mid.compare(b) != Cmp::less) {
        fail(Errc::certification_failed, "midpoint escaped (a, b)");
    }
    if (!is_irreducible_qz(mid).irreducible) fail(Errc::certification_failed, "midpoint not prime");
    return mid;
}

IntPoly sample_cone_int(std::mt19937_64& rng, int max_deg, int coef_bound) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<long> coef(-coef_bound, coef_bound);
    std::uniform_int_distribution<long> lead(1, coef_bound);
    int deg = deg_dist(rng);
    if (deg == 0) {
        std::uniform_int_distribution<long> c(0, 3L * coef_bound);
        return IntPoly(Int(c(rng)));
    }
    std::vector<Int> coeffs(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i) coeffs[static_cast<std::size_t>(i)] = Int(coef(rng));
    coeffs[static_cast<std::size_t>(deg)] = Int(lead(rng));
    return IntPoly::from_coeffs(std::move(coeffs));
}

IntPoly sample_irreducible_int(std::mt19937_64& rng, int max_deg, int coef_bound, const IrredOptions& opt) {
    std::uniform_int_distribution<int> deg_dist(1, std::max(1, max_deg));
    std::uniform_int_distribution<long> coef(-coef_bound, coef_bound);
    std::uniform_int_distribution<long> lead(1, coef_bound);
    for (;;) {
        int deg = deg_dist(rng);
        std::vector<Int> coeffs(static_cast<std::size_t>(deg) + 1);
        for (int i = 0; i < deg; ++i) coeffs[static_cast<std::size_t>(i)] = Int(coef(rng));
        coeffs[static_cast<std::size_t>(deg)] = Int(lead(rng));
        IntPoly f = IntPoly::from_coeffs(std::move(coeffs));
        if (f.degree() < 1) continue;
        if (is_irreducible_int(f, opt)) return f;
    }
}

QZPoly sample_cone_qz(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    std::uniform_int_distribution<long> c0(-50, 50);
    int deg = deg_dist(rng);
    if (deg == 0) {
        std::uniform_int_distribution<long> c(0, 50);
        return QZPoly(Int(c(rng)));
    }
    std::vector<Rat> coeffs(static_cast<std::size_t>(deg) + 1);
    coeffs[0] = Rat(Int(c0(rng)));
    for (int i = 1; i <= deg; ++i) coeffs[static_cast<std::size_t>(i)] = make_rat(Int(num(rng)), Int(den(rng)));
    while (coeffs[static_cast<std::size_t>(deg)] <= 0) {
        coeffs[static_cast<std::size_t>(deg)] = make_rat(Int(std::max(1L, num(rng))), Int(den(rng)));
    }
    return QZPoly::from_coeffs(std::move(coeffs));
}

}  // namespace totlab::poly
