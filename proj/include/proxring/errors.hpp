#pragma once

#include <stdexcept>
#include <string>

namespace proxring {

enum class ErrorCode {
    domain_mismatch,   // arguments drawn from different spaces
    degenerate_input,  // empty subset where a non-empty one is required
    ambiguity,         // more than one identity candidate in an AG3 scan
    missing_unity,     // operation needs ctx.one and none is identified
    missing_zero,      // operation needs ctx.zero and none is identified
    containment,       // subset not contained where required
    closure,           // named rule maps outside the carrier
    not_a_grid,        // grid rule on a carrier without coordinates
    incomplete_table,  // extensional table missing or duplicating a pair
    unknown_element,   // label or coordinate does not resolve
    precondition,      // a checker precondition failed
    structure,         // structural precondition (e.g. groupoid closure) failed
    budget,            // enumeration budget exceeded
    schema,            // fixture document violates the schema
    usage,             // bad command-line usage
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace proxring
