#pragma once

#include <optional>
#include <string>
#include <vector>

#include "totlab/nat.hpp"

namespace totlab::poly {

enum class Cmp { less, equal, greater };

// Element of Z[X], canonical form: empty coefficient vector is the zero
// polynomial, otherwise the top coefficient is nonzero. Cone membership
// (zero or positive leading coefficient) is a predicate, not an invariant:
// ring arithmetic is closed over all of Z[X].
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long v) : IntPoly(Int(v)) {}
    explicit IntPoly(Int v) {
        if (v != 0) c_.push_back(std::move(v));
    }

    static IntPoly from_coeffs(std::vector<Int> coeffs);
    static IntPoly monomial(Int coef, std::size_t deg);
    static IntPoly variable() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;  // nonzero poly only
    Int constant_term() const { return coeff(0); }

    bool in_cone() const { return is_zero() || leading() > 0; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    Cmp compare(const IntPoly& o) const;  // order: f < g iff g - f has positive leading coefficient
    bool less_than(const IntPoly& o) const { return compare(o) == Cmp::less; }

    // The unique z with o + z = *this; throws Underflow if *this < o.
    IntPoly monus(const IntPoly& o) const;

    Int eval(const Int& x) const;
    Int content() const;  // gcd of coefficients (0 for the zero polynomial)
    IntPoly primitive_part() const;
    std::optional<IntPoly> divide_exact(const IntPoly& d) const;  // quotient in Z[X] or nullopt

    std::string str() const;
    static IntPoly parse(const std::string& text);  // throws ParseError

private:
    void canonicalize();
    std::vector<Int> c_;
};

// Element of Q_Z[X]: rational coefficients with an integer constant term.
// The invariant is enforced on construction and by every operation that
// could break it.
class QZPoly {
public:
    QZPoly() = default;
    QZPoly(long v) : QZPoly(Int(v)) {}
    explicit QZPoly(Int v) {
        if (v != 0) c_.push_back(Rat(std::move(v)));
    }

    static QZPoly from_coeffs(std::vector<Rat> coeffs);  // throws BadFormat if c0 not integer
    static QZPoly from_int(const IntPoly& f);
    static QZPoly monomial(Rat coef, std::size_t deg);  // deg 0 requires integer coef

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const;
    Int constant_term() const { return is_zero() ? Int(0) : Int(c_[0].get_num()); }

    bool in_cone() const { return is_zero() || leading() > 0; }

    QZPoly operator+(const QZPoly& o) const;
    QZPoly operator-(const QZPoly& o) const;
    QZPoly operator*(const QZPoly& o) const;
    QZPoly operator-() const;
    bool operator==(const QZPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QZPoly& o) const { return c_ != o.c_; }

    Cmp compare(const QZPoly& o) const;
    bool less_than(const QZPoly& o) const { return compare(o) == Cmp::less; }

    QZPoly monus(const QZPoly& o) const;

    // Divide every coefficient by r; throws BadFormat if the constant term
    // would leave Z.
    QZPoly divide_by(const Rat& r) const;

    // Scale by the lcm of denominators: returns (F, s) with F integral and
    // F = s * this.
    std::pair<IntPoly, Int> scaled_int() const;

    std::string str() const;
    static QZPoly parse(const std::string& text);

private:
    void canonicalize();
    std::vector<Rat> c_;
};

}  // namespace totlab::poly
