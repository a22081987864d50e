#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "nilclean/ring_spec.hpp"

namespace nilclean {

// Ring expression mini-language:
//
//   spec := prod
//   prod := atom { "x" atom }                    (left-associative product)
//   atom := "Z" nat | "M" nat "(" spec ")" | "nilquo(" spec ")" | "(" spec ")"
//   nat  := nonzero digit { digit }
//
// Keywords are case-sensitive; whitespace is optional around "x" and
// parentheses. Examples: "Z12", "M2(Z2) x Z3", "nilquo(Z12)".

struct ParseError {
    enum class Kind { Syntax, InvalidSpec };
    Kind kind;
    std::size_t offset;  // byte offset into the input, always in range
    std::string message;
};

class ParseResult {
public:
    static ParseResult success(RingSpec spec) { return ParseResult(std::move(spec)); }
    static ParseResult failure(ParseError error) { return ParseResult(std::move(error)); }

    bool ok() const { return std::holds_alternative<RingSpec>(value_); }
    const RingSpec& spec() const { return std::get<RingSpec>(value_); }
    const ParseError& error() const { return std::get<ParseError>(value_); }

private:
    explicit ParseResult(RingSpec spec) : value_(std::move(spec)) {}
    explicit ParseResult(ParseError error) : value_(std::move(error)) {}
    std::variant<RingSpec, ParseError> value_;
};

ParseResult parse_ring_spec(std::string_view text);

// Canonical text: parse(format(s)) == s. Right-nested products are
// parenthesized; products render with " x ".
std::string format_ring_spec(const RingSpec& spec);

}  // namespace nilclean
