#include "totlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace totlab::poly {

// --- IntPoly ------------------------------------------------------------

void IntPoly::canonicalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::from_coeffs(std::vector<Int> coeffs) {
    IntPoly f;
    f.c_ = std::move(coeffs);
    f.canonicalize();
    return f;
}

IntPoly IntPoly::monomial(Int coef, std::size_t deg) {
    IntPoly f;
    if (coef != 0) {
        f.c_.assign(deg + 1, Int(0));
        f.c_[deg] = std::move(coef);
    }
    return f;
}

const Int& IntPoly::leading() const {
    if (c_.empty()) fail(Errc::out_of_range, "leading coefficient of zero");
    return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> out(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return from_coeffs(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> out(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return from_coeffs(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> out(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return from_coeffs(std::move(out));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> out(c_);
    for (auto& v : out) v = -v;
    return from_coeffs(std::move(out));
}

Cmp IntPoly::compare(const IntPoly& o) const {
    IntPoly d = o - *this;
    if (d.is_zero()) return Cmp::equal;
    return d.leading() > 0 ? Cmp::less : Cmp::greater;
}

IntPoly IntPoly::monus(const IntPoly& o) const {
    if (compare(o) == Cmp::less) fail(Errc::underflow, "monus: minuend below subtrahend");
    return *this - o;
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& v : c_) {
        Int av = abs(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), av.get_mpz_t());
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    Int g = content();
    if (g <= 1) return *this;
    std::vector<Int> out(c_);
    for (auto& v : out) v /= g;
    return from_coeffs(std::move(out));
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d) const {
    if (d.is_zero()) fail(Errc::out_of_range, "division by zero polynomial");
    if (is_zero()) return IntPoly();
    if (degree() < d.degree()) return std::nullopt;
    std::vector<Int> rem(c_);
    std::vector<Int> quot(static_cast<std::size_t>(degree() - d.degree()) + 1, Int(0));
    for (std::size_t qi = quot.size(); qi-- > 0;) {
        Int top = rem[qi + d.c_.size() - 1];
        if (top == 0) continue;
        if (top % d.leading() != 0) return std::nullopt;
        Int q = top / d.leading();
        quot[qi] = q;
        for (std::size_t j = 0; j < d.c_.size(); ++j) rem[qi + j] -= q * d.c_[j];
    }
    for (const auto& v : rem) {
        if (v != 0) return std::nullopt;
    }
    return from_coeffs(std::move(quot));
}

// --- QZPoly --------------------------------------------------------------

void QZPoly::canonicalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QZPoly QZPoly::from_coeffs(std::vector<Rat> coeffs) {
    QZPoly f;
    f.c_ = std::move(coeffs);
    f.canonicalize();
    if (!f.c_.empty() && !rat_is_integer(f.c_[0])) {
        fail(Errc::bad_format, "constant term of a Q_Z[X] element must be an integer");
    }
    return f;
}

QZPoly QZPoly::from_int(const IntPoly& f) {
    std::vector<Rat> out;
    out.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) out.emplace_back(v);
    return from_coeffs(std::move(out));
}

QZPoly QZPoly::monomial(Rat coef, std::size_t deg) {
    std::vector<Rat> out(deg + 1, Rat(0));
    out[deg] = std::move(coef);
    return from_coeffs(std::move(out));
}

const Rat& QZPoly::leading() const {
    if (c_.empty()) fail(Errc::out_of_range, "leading coefficient of zero");
    return c_.back();
}

QZPoly QZPoly::operator+(const QZPoly& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return from_coeffs(std::move(out));
}

QZPoly QZPoly::operator-(const QZPoly& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return from_coeffs(std::move(out));
}

QZPoly QZPoly::operator*(const QZPoly& o) const {
    if (is_zero() || o.is_zero()) return QZPoly();
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return from_coeffs(std::move(out));
}

QZPoly QZPoly::operator-() const {
    std::vector<Rat> out(c_);
    for (auto& v : out) v = -v;
    QZPoly f;
    f.c_ = std::move(out);
    f.canonicalize();
    return f;
}

Cmp QZPoly::compare(const QZPoly& o) const {
    QZPoly d = o - *this;
    if (d.is_zero()) return Cmp::equal;
    return d.leading() > 0 ? Cmp::less : Cmp::greater;
}

QZPoly QZPoly::monus(const QZPoly& o) const {
    if (compare(o) == Cmp::less) fail(Errc::underflow, "monus: minuend below subtrahend");
    return *this - o;
}

QZPoly QZPoly::divide_by(const Rat& r) const {
    if (r == 0) fail(Errc::out_of_range, "division by zero");
    std::vector<Rat> out(c_);
    for (auto& v : out) v /= r;
    return from_coeffs(std::move(out));
}

std::pair<IntPoly, Int> QZPoly::scaled_int() const {
    Int s = 1;
    for (const auto& v : c_) {
        Int den = v.get_den();
        Int l;
        mpz_lcm(l.get_mpz_t(), s.get_mpz_t(), den.get_mpz_t());
        s = l;
    }
    std::vector<Int> out;
    out.reserve(c_.size());
    for (const auto& v : c_) {
        Rat scaled = v * Rat(s);
        out.push_back(Int(scaled.get_num()));
    }
    return {IntPoly::from_coeffs(std::move(out)), s};
}

// --- text form ------------------------------------------------------------

namespace {

void append_term(std::ostringstream& out, bool first, bool negative, const std::string& mag) {
    if (first) {
        if (negative) out << "-";
    } else {
        out << (negative ? " - " : " + ");
    }
    out << mag;
}

std::string coeff_str(const Rat& r) {
    std::string num = Int(r.get_num()).get_str();
    if (r.get_den() == 1) return num;
    return num + "/" + Int(r.get_den()).get_str();
}

std::string poly_str(const std::vector<Rat>& c) {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        Rat a = c[i];
        bool neg = a < 0;
        Rat mag = neg ? Rat(-a) : a;
        std::string body;
        if (i == 0) {
            body = coeff_str(mag);
        } else {
            if (mag != 1) body = coeff_str(mag);
            body += "X";
            if (i > 1) body += "^" + std::to_string(i);
        }
        append_term(out, first, neg, body);
        first = false;
    }
    return out.str();
}

struct PolyParser {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void die(const std::string& msg) const {
        fail(Errc::parse_error, msg + " at position " + std::to_string(pos) + " in \"" + text + "\"");
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool peek_var() {
        skip_ws();
        return pos < text.size() && (text[pos] == 'X' || text[pos] == 'x');
    }

    Int parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) die("expected a number");
        return Int(text.substr(start, pos - start));
    }

    // term := coefficient? [*]? X [^ exp] | coefficient
    void parse_term(std::vector<Rat>& acc, bool negative) {
        Rat coef(1);
        bool have_coef = false;
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            Int num = parse_uint();
            Int den = 1;
            if (eat('/')) den = parse_uint();
            if (den == 0) die("zero denominator");
            coef = make_rat(num, den);
            have_coef = true;
        }
        std::size_t deg = 0;
        bool star = eat('*');
        if (peek_var()) {
            ++pos;
            deg = 1;
            if (eat('^')) {
                Int e = parse_uint();
                if (e > 64) die("exponent too large");
                deg = e.get_ui();
            }
        } else if (star) {
            die("expected X after '*'");
        } else if (!have_coef) {
            die("expected a term");
        }
        if (negative) coef = -coef;
        if (acc.size() < deg + 1) acc.resize(deg + 1, Rat(0));
        acc[deg] += coef;
    }

    std::vector<Rat> parse_poly() {
        std::vector<Rat> acc;
        bool negative = false;
        if (eat('-')) negative = true;
        else eat('+');
        parse_term(acc, negative);
        for (;;) {
            skip_ws();
            if (pos >= text.size()) break;
            if (eat('-')) negative = true;
            else if (eat('+')) negative = false;
            else die("expected '+' or '-'");
            parse_term(acc, negative);
        }
        return acc;
    }
};

}  // namespace

std::string IntPoly::str() const {
    std::vector<Rat> rc;
    rc.reserve(c_.size());
    for (const auto& v : c_) rc.emplace_back(v);
    return poly_str(rc);
}

std::string QZPoly::str() const { return poly_str(c_); }

QZPoly QZPoly::parse(const std::string& text) {
    PolyParser p{text};
    return from_coeffs(p.parse_poly());
}

IntPoly IntPoly::parse(const std::string& text) {
    PolyParser p{text};
    auto coeffs = p.parse_poly();
    std::vector<Int> out;
    out.reserve(coeffs.size());
    for (const auto& v : coeffs) {
        if (!rat_is_integer(v)) fail(Errc::parse_error, "fractional coefficient in a Z[X] element: " + text);
        out.emplace_back(v.get_num());
    }
    return from_coeffs(std::move(out));
}

}  // namespace totlab::poly
