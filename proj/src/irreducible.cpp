#include "totlab/irreducible.hpp"

#include <algorithm>

#include "totlab/primes.hpp"

namespace totlab::poly {

namespace {

std::vector<Int> divisors_of(const Int& v) {
    Int a = abs(v);
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// signed divisors: +d and -d for every positive divisor
std::vector<Int> signed_divisors(const Int& v) {
    auto pos = divisors_of(v);
    std::vector<Int> out;
    out.reserve(2 * pos.size());
    for (auto& d : pos) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

IntFactorSplit oriented(IntPoly a, IntPoly b) {
    // flip signs so both live in the cone (their product already does)
    if (!a.in_cone()) {
        a = -a;
        b = -b;
    }
    return IntFactorSplit{std::move(a), std::move(b)};
}

// Linear factors via the rational root theorem: a root a/b (reduced) gives
// the primitive factor bX - a.
std::optional<IntFactorSplit> rational_root_split(const IntPoly& f) {
    const Int lead = f.leading();
    const Int c0 = f.constant_term();
    for (const Int& b : divisors_of(lead)) {
        for (const Int& a : signed_divisors(c0)) {
            Int g;
            Int aa = abs(a);
            mpz_gcd(g.get_mpz_t(), aa.get_mpz_t(), b.get_mpz_t());
            if (g != 1) continue;
            // f(a/b) = 0  <=>  sum c_i a^i b^(n-i) = 0
            Int acc = 0, apow = 1;
            std::size_t n = static_cast<std::size_t>(f.degree());
            std::vector<Int> bpow(n + 1, Int(1));
            for (std::size_t i = 1; i <= n; ++i) bpow[i] = bpow[i - 1] * b;
            for (std::size_t i = 0; i <= n; ++i) {
                acc += f.coeff(i) * apow * bpow[n - i];
                apow *= a;
            }
            if (acc != 0) continue;
            IntPoly factor = IntPoly::from_coeffs({-a, b});
            auto quot = f.divide_exact(factor);
            if (!quot) continue;  // non-primitive interplay; cannot happen for reduced a/b
            return oriented(std::move(factor), std::move(*quot));
        }
    }
    return std::nullopt;
}

struct KroneckerPoint {
    Int x;
    std::vector<Int> divisors;  // signed divisors of f(x)
};

// Lagrange interpolation through (x_i, y_i); nullopt unless the result has
// integer coefficients.
std::optional<IntPoly> interpolate_int(const std::vector<Int>& xs, const std::vector<Int>& ys) {
    std::size_t k = xs.size();
    std::vector<Rat> acc(k, Rat(0));
    for (std::size_t j = 0; j < k; ++j) {
        // basis polynomial prod_{i != j} (X - x_i) / (x_j - x_i)
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (std::size_t i = 0; i < k; ++i) {
            if (i == j) continue;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t t = 0; t < basis.size(); ++t) {
                next[t + 1] += basis[t];
                next[t] -= basis[t] * Rat(xs[i]);
            }
            basis = std::move(next);
            denom *= Rat(xs[j] - xs[i]);
        }
        Rat w = Rat(ys[j]) / denom;
        for (std::size_t t = 0; t < basis.size(); ++t) acc[t] += basis[t] * w;
    }
    std::vector<Int> out;
    out.reserve(k);
    for (const auto& v : acc) {
        if (!rat_is_integer(v)) return std::nullopt;
        out.emplace_back(v.get_num());
    }
    return IntPoly::from_coeffs(std::move(out));
}

// Kronecker search for a factor of degree exactly d (2 <= d <= deg f / 2).
// f is primitive with no rational roots, so f(x) != 0 for integer x.
std::optional<IntFactorSplit> kronecker_degree(const IntPoly& f, int d) {
    // candidate evaluation points, cheapest (fewest divisors) first
    std::vector<KroneckerPoint> points;
    std::vector<Int> probe;
    for (int m = 0; static_cast<int>(probe.size()) < d + 5; ++m) {
        probe.push_back(m == 0 ? Int(0) : (m % 2 == 1 ? Int((m + 1) / 2) : Int(-(m / 2))));
    }
    for (const Int& x : probe) {
        Int y = f.eval(x);
        if (y == 0) fail(Errc::certification_failed, "unexpected integer root in Kronecker search");
        points.push_back(KroneckerPoint{x, signed_divisors(y)});
    }
    std::sort(points.begin(), points.end(),
              [](const KroneckerPoint& a, const KroneckerPoint& b) { return a.divisors.size() < b.divisors.size(); });

    std::size_t k = static_cast<std::size_t>(d) + 1;
    std::vector<Int> xs(k), ys(k);
    for (std::size_t i = 0; i < k; ++i) xs[i] = points[i].x;
    // spare points used as a cheap divisibility filter before dividing
    std::vector<Int> spare_x, spare_y;
    for (std::size_t i = k; i < points.size(); ++i) {
        spare_x.push_back(points[i].x);
        spare_y.push_back(f.eval(points[i].x));
    }

    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) ys[i] = points[i].divisors[idx[i]];
        // sign symmetry: force the first chosen divisor positive
        if (ys[0] > 0) {
            auto g = interpolate_int(xs, ys);
            if (g && g->degree() == d) {
                bool plausible = true;
                for (std::size_t s = 0; s < spare_x.size() && plausible; ++s) {
                    Int gv = g->eval(spare_x[s]);
                    if (gv == 0 || spare_y[s] % gv != 0) plausible = false;
                }
                if (plausible) {
                    auto quot = f.divide_exact(*g);
                    if (quot) return oriented(std::move(*g), std::move(*quot));
                }
            }
        }
        // advance the odometer
        std::size_t pos = 0;
        while (pos < k) {
            if (++idx[pos] < points[pos].divisors.size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    return std::nullopt;
}

std::optional<IntFactorSplit> constant_split(const Int& v) {
    if (nt::is_prime(v)) return std::nullopt;
    Int d = nt::smallest_prime_factor(v);
    return IntFactorSplit{IntPoly(d), IntPoly(v / d)};
}

}  // namespace

Lemma51 lemma51(const IntPoly& f) {
    if (f.degree() < 1) fail(Errc::bad_shape, "lemma51 needs degree >= 1");
    Int p = abs(f.constant_term());
    if (!nt::is_prime(p)) return Lemma51::not_applicable;
    Int sum = 0;
    for (int i = 1; i <= f.degree(); ++i) sum += abs(f.coeff(static_cast<std::size_t>(i)));
    return p > sum ? Lemma51::applies_irreducible : Lemma51::not_applicable;
}

std::optional<IntFactorSplit> factor_split_int(const IntPoly& f, const IrredOptions& opt) {
    if (!f.in_cone() || f.compare(IntPoly(1)) != Cmp::greater) {
        fail(Errc::out_of_range, "factor search needs a cone element > 1");
    }
    if (f.degree() == 0) return constant_split(f.constant_term());
    if (f.degree() > opt.max_degree) fail(Errc::degree_budget, "degree beyond exhaustive budget");

    Int cont = f.content();
    if (cont > 1) return IntFactorSplit{IntPoly(cont), f.primitive_part()};
    if (f.degree() == 1) return std::nullopt;
    if (f.constant_term() == 0) {
        IntPoly x = IntPoly::variable();
        return IntFactorSplit{x, *f.divide_exact(x)};
    }
    if (auto split = rational_root_split(f)) return split;
    for (int d = 2; 2 * d <= f.degree(); ++d) {
        if (auto split = kronecker_degree(f, d)) return split;
    }
    return std::nullopt;
}

bool is_irreducible_int(const IntPoly& f, const IrredOptions& opt) {
    if (!f.in_cone() || f.compare(IntPoly(1)) != Cmp::greater) {
        fail(Errc::out_of_range, "irreducibility needs a cone element > 1");
    }
    if (f.degree() >= 1 && lemma51(f) == Lemma51::applies_irreducible) return true;
    return !factor_split_int(f, opt).has_value();
}

namespace {

QZIrredResult composite(QZPoly a, QZPoly b) {
    QZIrredResult r;
    r.irreducible = false;
    r.witness = std::make_pair(std::move(a), std::move(b));
    return r;
}

}  // namespace

QZIrredResult is_irreducible_qz(const QZPoly& f, const IrredOptions& opt) {
    if (!f.in_cone() || f.is_zero() || f.is_one()) {
        fail(Errc::out_of_range, "irreducibility needs a cone element other than 0 and 1");
    }
    if (f.degree() == 0) {
        Int v = f.constant_term();
        if (nt::is_prime(v)) return QZIrredResult{true, std::nullopt};
        Int d = nt::smallest_prime_factor(v);
        return composite(QZPoly(d), QZPoly(v / d));
    }
    Int c0 = f.constant_term();
    if (c0 == 0) return composite(QZPoly(Int(2)), f.divide_by(Rat(2)));
    if (abs(c0) >= 2) {
        Int d = nt::smallest_prime_factor(abs(c0));
        return composite(QZPoly(d), f.divide_by(Rat(d)));
    }
    // |c0| = 1: irreducible in Q_Z[X] iff irreducible over Q. Scale to an
    // integer polynomial and search there.
    auto [scaled, s] = f.scaled_int();
    IntPoly prim = scaled.primitive_part();
    if (!prim.in_cone()) prim = -prim;  // f is in the cone, keep orientation
    if (prim.degree() >= 1 && lemma51(prim) == Lemma51::applies_irreducible) return QZIrredResult{true, std::nullopt};
    if (prim.degree() > opt.max_degree) fail(Errc::degree_budget, "degree beyond exhaustive budget");
    auto split = factor_split_int(prim, opt);
    if (!split) return QZIrredResult{true, std::nullopt};
    // rescale the rational factors so both constant terms are +-1
    const IntPoly& big = split->a;
    Int g0 = big.eval(0);
    if (g0 == 0) fail(Errc::certification_failed, "factor with zero constant term despite unit c0");
    QZPoly g = QZPoly::from_int(big).divide_by(Rat(g0));
    // h = f / g computed exactly: f = lambda * a * b with
    // lambda = lead(f) / (lead(a) * lead(b))
    Rat lambda = f.leading() / (Rat(split->a.leading()) * Rat(split->b.leading()));
    QZPoly h = QZPoly::from_int(split->b);
    {
        Rat scale = lambda * Rat(g0);
        std::vector<Rat> hc;
        hc.reserve(h.coeffs().size());
        for (const auto& v : h.coeffs()) hc.push_back(v * scale);
        h = QZPoly::from_coeffs(std::move(hc));
    }
    if (!g.in_cone()) {
        g = -g;
        h = -h;
    }
    if (g * h != f) fail(Errc::certification_failed, "witness does not multiply back");
    if (g.constant_term() == -1 && h.constant_term() == 1) std::swap(g, h);
    return composite(std::move(g), std::move(h));
}

std::vector<QZPoly> factor_qz(const QZPoly& f, const IrredOptions& opt) {
    if (f.degree() >= 1 && f.constant_term() == 0) {
        // X/2, X/4, ... divide without end; there is no factorization into
        // irreducibles when the constant term is 0.
        fail(Errc::out_of_range, "no irreducible factorization for zero constant term");
    }
    auto r = is_irreducible_qz(f, opt);
    if (r.irreducible) return {f};
    auto left = factor_qz(r.witness->first, opt);
    auto right = factor_qz(r.witness->second, opt);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

}  // namespace totlab::poly
