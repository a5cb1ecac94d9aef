#include "totlab/folio/parse.hpp"

#include <cctype>
#include <cstring>
#include <sstream>
#include <vector>

#include "totlab/error.hpp"
#include "totlab/folio/catalog.hpp"

namespace totlab::folio {

namespace {

enum class Tok {
    lparen, rparen, dot, comma,
    ident, number,
    plus, star,
    eq, lt, le, gt, pipe,
    bang, amp_and, bar_or, arrow,
    kw_forall, kw_exists,
    end,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;
    std::vector<Token> tokens;

    [[noreturn]] void die(const std::string& msg) const {
        fail(Errc::parse_error, msg + " at position " + std::to_string(pos));
    }

    bool match(const char* s) {
        std::size_t n = std::strlen(s);
        if (src.compare(pos, n, s) == 0) {
            pos += n;
            return true;
        }
        return false;
    }

    void push(Tok kind, std::size_t at, std::string text = {}) {
        tokens.push_back(Token{kind, std::move(text), at});
    }

    void run() {
        while (pos < src.size()) {
            char c = src[pos];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
                continue;
            }
            std::size_t at = pos;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos;
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
                push(Tok::number, at, src.substr(start, pos - start));
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos;
                while (pos < src.size() &&
                       (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' || src[pos] == '\'')) {
                    ++pos;
                }
                std::string word = src.substr(start, pos - start);
                if (word == "forall") push(Tok::kw_forall, at);
                else if (word == "exists") push(Tok::kw_exists, at);
                else if (word == "not") push(Tok::bang, at);
                else if (word == "and") push(Tok::amp_and, at);
                else if (word == "or") push(Tok::bar_or, at);
                else push(Tok::ident, at, std::move(word));
                continue;
            }
            // multi-byte symbols first
            if (match("∀")) { push(Tok::kw_forall, at); continue; }  // forall sign
            if (match("∃")) { push(Tok::kw_exists, at); continue; }  // exists sign
            if (match("¬")) { push(Tok::bang, at); continue; }       // negation sign
            if (match("∧")) { push(Tok::amp_and, at); continue; }    // wedge
            if (match("∨")) { push(Tok::bar_or, at); continue; }     // vee
            if (match("→")) { push(Tok::arrow, at); continue; }      // right arrow
            if (match("·")) { push(Tok::star, at); continue; }       // center dot
            if (match("->")) { push(Tok::arrow, at); continue; }
            if (match("/\\")) { push(Tok::amp_and, at); continue; }
            if (match("\\/")) { push(Tok::bar_or, at); continue; }
            if (match("&&")) { push(Tok::amp_and, at); continue; }
            if (match("||")) { push(Tok::bar_or, at); continue; }
            if (match("<=")) { push(Tok::le, at); continue; }
            switch (c) {
                case '(': push(Tok::lparen, at); break;
                case ')': push(Tok::rparen, at); break;
                case '.': push(Tok::dot, at); break;
                case ',': push(Tok::comma, at); break;
                case '+': push(Tok::plus, at); break;
                case '*': push(Tok::star, at); break;
                case '=': push(Tok::eq, at); break;
                case '<': push(Tok::lt, at); break;
                case '>': push(Tok::gt, at); break;
                case '|': push(Tok::pipe, at); break;
                case '!': push(Tok::bang, at); break;
                default: die(std::string("unexpected character '") + c + "'");
            }
            ++pos;
        }
        push(Tok::end, pos);
    }
};

// Internal backtracking signal; never escapes parse().
struct Backtrack {};

struct Parser {
    const std::string& src;
    std::vector<Token> toks;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : src(text) {
        Lexer lx{text, 0, {}};
        lx.run();
        toks = std::move(lx.tokens);
    }

    const Token& peek() const { return toks[i]; }
    Token take() { return toks[i++]; }
    bool at(Tok k) const { return toks[i].kind == k; }
    bool eat(Tok k) {
        if (at(k)) {
            ++i;
            return true;
        }
        return false;
    }

    [[noreturn]] void die(const std::string& msg) const {
        fail(Errc::parse_error, msg + " at position " + std::to_string(peek().pos) + " in \"" + src + "\"");
    }

    void expect(Tok k, const char* what) {
        if (!eat(k)) die(std::string("expected ") + what);
    }

    // ---- terms ----

    TermPtr primary() {
        if (at(Tok::ident)) return t_var(take().text);
        if (at(Tok::number)) {
            Token t = take();
            if (t.text.size() > 7) die("numeral too large to expand");
            unsigned long long v = std::stoull(t.text);
            if (v > 1000000) die("numeral too large to expand");
            return t_numeral(v);
        }
        if (eat(Tok::lparen)) {
            TermPtr t = term();
            if (!eat(Tok::rparen)) throw Backtrack{};
            return t;
        }
        throw Backtrack{};
    }

    TermPtr factor() {
        TermPtr t = primary();
        while (eat(Tok::star)) t = t_prod(std::move(t), primary());
        return t;
    }

    TermPtr term() {
        TermPtr t = factor();
        while (eat(Tok::plus)) t = t_sum(std::move(t), factor());
        return t;
    }

    // ---- formulas ----

    FormulaPtr comparison() {
        TermPtr a = term();
        if (eat(Tok::eq)) return f_eq(std::move(a), term());
        if (eat(Tok::lt)) return f_lt(std::move(a), term());
        if (eat(Tok::le)) {
            TermPtr b = term();
            return f_or(f_lt(a, b), f_eq(a, b));
        }
        if (eat(Tok::gt)) {
            TermPtr b = term();
            return f_lt(std::move(b), std::move(a));
        }
        if (eat(Tok::pipe)) return p_divides(std::move(a), term());
        throw Backtrack{};
    }

    FormulaPtr predicate_call() {
        if (!at(Tok::ident)) throw Backtrack{};
        std::string name = peek().text;
        if (name != "pi1" && name != "pi2" && name != "prime" && name != "rho" && name != "sigma") throw Backtrack{};
        if (toks[i + 1].kind != Tok::lparen) throw Backtrack{};
        take();
        take();
        std::vector<TermPtr> args;
        args.push_back(term());
        while (eat(Tok::comma)) args.push_back(term());
        expect(Tok::rparen, "')'");
        if ((name == "pi1" || name == "pi2" || name == "prime") && args.size() == 1) {
            return name == "pi1" ? p_pi1(args[0]) : p_pi2(args[0]);
        }
        if (name == "rho" && args.size() == 2) return p_rho(args[0], args[1]);
        if (name == "sigma" && args.size() == 3) return p_sigma(args[0], args[1], args[2]);
        die("wrong arity for " + name);
    }

    FormulaPtr atom() {
        // predicate sugar first (ident followed by '(')
        std::size_t save = i;
        try {
            return predicate_call();
        } catch (const Backtrack&) {
            i = save;
        }
        // term-vs-formula parenthesis: try a comparison, fall back to a
        // parenthesized formula
        try {
            return comparison();
        } catch (const Backtrack&) {
            i = save;
        }
        if (eat(Tok::lparen)) {
            FormulaPtr f = formula();
            expect(Tok::rparen, "')'");
            return f;
        }
        die("expected a formula");
    }

    FormulaPtr negation() {
        if (eat(Tok::bang)) return f_not(negation());
        return atom();
    }

    FormulaPtr conjunction() {
        FormulaPtr f = negation();
        while (eat(Tok::amp_and)) f = f_and(std::move(f), negation());
        return f;
    }

    FormulaPtr disjunction() {
        FormulaPtr f = conjunction();
        while (eat(Tok::bar_or)) f = f_or(std::move(f), conjunction());
        return f;
    }

    FormulaPtr implication() {
        FormulaPtr f = disjunction();
        if (eat(Tok::arrow)) return f_implies(std::move(f), implication());
        return f;
    }

    FormulaPtr formula() {
        if (at(Tok::kw_forall) || at(Tok::kw_exists)) {
            bool universal = take().kind == Tok::kw_forall;
            if (!at(Tok::ident)) die("expected a variable after the quantifier");
            std::string var = take().text;
            expect(Tok::dot, "'.'");
            FormulaPtr body = formula();
            return universal ? f_forall(std::move(var), std::move(body))
                             : f_exists(std::move(var), std::move(body));
        }
        return implication();
    }

    FormulaPtr parse_formula() {
        FormulaPtr f = formula();
        if (!at(Tok::end)) die("trailing input");
        return f;
    }

    TermPtr parse_only_term() {
        TermPtr t = term();
        if (!at(Tok::end)) die("trailing input");
        return t;
    }
};

// ---- printer ----

// term levels: sum 1, product 2, primary 3
void print_term(std::ostringstream& out, const TermPtr& t, int level) {
    if (auto n = as_numeral(t)) {
        out << *n;
        return;
    }
    switch (t->kind) {
        case Term::Kind::variable: out << t->name; return;
        case Term::Kind::zero: out << "0"; return;
        case Term::Kind::one: out << "1"; return;
        case Term::Kind::sum: {
            bool parens = level > 1;
            if (parens) out << "(";
            print_term(out, t->lhs, 1);
            out << " + ";
            print_term(out, t->rhs, 2);
            if (parens) out << ")";
            return;
        }
        case Term::Kind::product: {
            bool parens = level > 2;
            if (parens) out << "(";
            print_term(out, t->lhs, 2);
            out << " * ";
            print_term(out, t->rhs, 3);
            if (parens) out << ")";
            return;
        }
    }
}

// formula levels: quantifier 0, implies 1, or 2, and 3, not 4, atom 5
void print_formula(std::ostringstream& out, const FormulaPtr& f, int level) {
    switch (f->kind) {
        case Formula::Kind::equals:
        case Formula::Kind::less:
            print_term(out, f->t1, 1);
            out << (f->kind == Formula::Kind::equals ? " = " : " < ");
            print_term(out, f->t2, 1);
            return;
        case Formula::Kind::logical_not:
            out << "!";
            if (f->f1->kind == Formula::Kind::equals || f->f1->kind == Formula::Kind::less) {
                out << "(";
                print_formula(out, f->f1, 0);
                out << ")";
            } else {
                print_formula(out, f->f1, 4);
            }
            return;
        case Formula::Kind::logical_and: {
            bool parens = level > 3;
            if (parens) out << "(";
            print_formula(out, f->f1, 3);
            out << " /\\ ";
            print_formula(out, f->f2, 4);
            if (parens) out << ")";
            return;
        }
        case Formula::Kind::logical_or: {
            bool parens = level > 2;
            if (parens) out << "(";
            print_formula(out, f->f1, 2);
            out << " \\/ ";
            print_formula(out, f->f2, 3);
            if (parens) out << ")";
            return;
        }
        case Formula::Kind::implies: {
            bool parens = level > 1;
            if (parens) out << "(";
            print_formula(out, f->f1, 2);
            out << " -> ";
            print_formula(out, f->f2, 1);
            if (parens) out << ")";
            return;
        }
        case Formula::Kind::forall:
        case Formula::Kind::exists: {
            bool parens = level > 0;
            if (parens) out << "(";
            out << (f->kind == Formula::Kind::forall ? "forall " : "exists ") << f->var << ". ";
            print_formula(out, f->f1, 0);
            if (parens) out << ")";
            return;
        }
    }
}

}  // namespace

FormulaPtr parse(const std::string& text) {
    try {
        Parser p(text);
        return p.parse_formula();
    } catch (const Backtrack&) {
        fail(Errc::parse_error, "malformed formula: \"" + text + "\"");
    }
}

TermPtr parse_term_text(const std::string& text) {
    try {
        Parser p(text);
        return p.parse_only_term();
    } catch (const Backtrack&) {
        fail(Errc::parse_error, "malformed term: \"" + text + "\"");
    }
}

std::string pretty(const FormulaPtr& f) {
    std::ostringstream out;
    print_formula(out, f, 0);
    return out.str();
}

std::string pretty(const TermPtr& t) {
    std::ostringstream out;
    print_term(out, t, 1);
    return out.str();
}

}  // namespace totlab::folio
