#pragma once

#include <stdexcept>
#include <string>

namespace totlab {

enum class Errc {
    not_prime,
    no_predecessor,
    too_small,
    out_of_range,
    underflow,
    bad_shape,
    not_irreducible,
    degree_budget,
    certification_failed,
    no_floor,
    parse_error,
    bad_format,
    budget_exceeded,
    io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::not_prime: return "NotPrime";
        case Errc::no_predecessor: return "NoPredecessor";
        case Errc::too_small: return "TooSmall";
        case Errc::out_of_range: return "OutOfRange";
        case Errc::underflow: return "Underflow";
        case Errc::bad_shape: return "BadShape";
        case Errc::not_irreducible: return "NotIrreducible";
        case Errc::degree_budget: return "DegreeBudget";
        case Errc::certification_failed: return "CertificationFailed";
        case Errc::no_floor: return "NoFloor";
        case Errc::parse_error: return "ParseError";
        case Errc::bad_format: return "BadFormat";
        case Errc::budget_exceeded: return "BudgetExceeded";
        case Errc::io_error: return "IoError";
    }
    return "Error";
}

}  // namespace totlab
