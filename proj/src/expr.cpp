#include "nilclean/expr.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>

namespace nilclean {

namespace {

// Recursive-descent parser over raw bytes. Keywords are case-sensitive;
// "nilquo(" is a single token, so no whitespace may split it.
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParseResult run() {
        auto spec = parse_prod();
        if (!spec) return ParseResult::failure(std::move(*error_));
        skip_ws();
        if (pos_ != text_.size())
            return fail_syntax(pos_, "expected end of input");
        return ParseResult::success(std::move(*spec));
    }

private:
    std::optional<RingSpec> parse_prod() {
        auto left = parse_atom();
        if (!left) return std::nullopt;
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != 'x') break;
            ++pos_;
            auto right = parse_atom();
            if (!right) return std::nullopt;
            left = RingSpec::product(std::move(*left), std::move(*right));
        }
        return left;
    }

    std::optional<RingSpec> parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) {
            set_syntax(clamp_offset(pos_), "expected a ring expression");
            return std::nullopt;
        }
        const char c = text_[pos_];
        if (c == 'Z') {
            ++pos_;
            auto n = parse_nat("modulus");
            if (!n) return std::nullopt;
            return RingSpec::zn(*n);
        }
        if (c == 'M') {
            ++pos_;
            auto k = parse_nat("matrix size");
            if (!k) return std::nullopt;
            if (*k > std::numeric_limits<std::uint32_t>::max()) {
                set_invalid(last_nat_start_, "matrix size out of range");
                return std::nullopt;
            }
            if (!expect('(', "expected '(' after matrix size")) return std::nullopt;
            auto base = parse_prod();
            if (!base) return std::nullopt;
            if (!expect(')', "expected ')'")) return std::nullopt;
            return RingSpec::matrix(static_cast<std::uint32_t>(*k), std::move(*base));
        }
        if (text_.substr(pos_).rfind("nilquo(", 0) == 0) {
            pos_ += 7;
            auto base = parse_prod();
            if (!base) return std::nullopt;
            if (!expect(')', "expected ')'")) return std::nullopt;
            return RingSpec::nil_quotient(std::move(*base));
        }
        if (c == '(') {
            ++pos_;
            auto inner = parse_prod();
            if (!inner) return std::nullopt;
            if (!expect(')', "expected ')'")) return std::nullopt;
            return inner;
        }
        set_syntax(pos_, "expected 'Z', 'M', 'nilquo(' or '('");
        return std::nullopt;
    }

    // nat := nonzero digit { digit }, immediately adjacent to its keyword
    std::optional<std::uint64_t> parse_nat(const char* what) {
        const std::size_t start = pos_;
        last_nat_start_ = start;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            set_syntax(clamp_offset(pos_), std::string("expected a number for the ") + what);
            return std::nullopt;
        }
        std::uint64_t value = 0;
        bool overflow = false;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
                overflow = true;
            else
                value = value * 10 + digit;
            ++pos_;
        }
        if (text_[start] == '0') {
            if (pos_ - start == 1) {
                set_invalid(start, std::string("zero ") + what);
                return std::nullopt;
            }
            set_syntax(start, "leading zero in number");
            return std::nullopt;
        }
        if (overflow) {
            set_invalid(start, std::string(what) + " out of range");
            return std::nullopt;
        }
        return value;
    }

    bool expect(char c, const char* message) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            set_syntax(clamp_offset(pos_), message);
            return false;
        }
        ++pos_;
        return true;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    // Error offsets always point inside the input (the last byte for errors
    // at end of input on a nonempty string).
    std::size_t clamp_offset(std::size_t offset) const {
        if (text_.empty()) return 0;
        return offset < text_.size() ? offset : text_.size() - 1;
    }

    void set_syntax(std::size_t offset, std::string message) {
        error_ = ParseError{ParseError::Kind::Syntax, offset, std::move(message)};
    }

    void set_invalid(std::size_t offset, std::string message) {
        error_ = ParseError{ParseError::Kind::InvalidSpec, offset, std::move(message)};
    }

    ParseResult fail_syntax(std::size_t offset, std::string message) {
        set_syntax(clamp_offset(offset), std::move(message));
        return ParseResult::failure(std::move(*error_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t last_nat_start_ = 0;
    std::optional<ParseError> error_;
};

}  // namespace

ParseResult parse_ring_spec(std::string_view text) { return Parser(text).run(); }

std::string format_ring_spec(const RingSpec& spec) {
    switch (spec.kind()) {
        case RingSpec::Kind::Zn:
            return "Z" + std::to_string(spec.modulus());
        case RingSpec::Kind::Matrix:
            return "M" + std::to_string(spec.dim()) + "(" +
                   format_ring_spec(spec.base()) + ")";
        case RingSpec::Kind::NilQuotient:
            return "nilquo(" + format_ring_spec(spec.base()) + ")";
        case RingSpec::Kind::Product: {
            // product is left-associative: parenthesize a product on the right
            std::string left = format_ring_spec(spec.left());
            std::string right = format_ring_spec(spec.right());
            if (spec.right().kind() == RingSpec::Kind::Product)
                right = "(" + right + ")";
            return left + " x " + right;
        }
    }
    return "";
}

}  // namespace nilclean
