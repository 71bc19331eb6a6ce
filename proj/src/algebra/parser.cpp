#include "realchern/algebra/parser.hpp"

#include <cctype>

#include "realchern/algebra/error.hpp"

namespace realchern {
namespace {

constexpr unsigned kMaxExponent = 4096;

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const RingPtr& ring, const ParseOptions& options)
        : text_(text), ring_(ring), options_(options)
    {
    }

    Poly parse()
    {
        skip_space();
        if (at_end())
            fail(ErrorCode::SyntaxError, "empty expression");
        Poly result = expr();
        skip_space();
        if (!at_end())
            fail(ErrorCode::SyntaxError, std::string("unexpected '") + text_[pos_] + "'");
        return result;
    }

private:
    Poly expr()
    {
        skip_space();
        const bool negate = peek('-');
        if (negate)
            ++pos_;
        Poly acc = negate ? -term() : term();
        for (;;) {
            skip_space();
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term()
    {
        Poly acc = factor();
        for (;;) {
            skip_space();
            if (!peek('*'))
                return acc;
            const std::size_t at = pos_;
            ++pos_;
            Poly rhs = factor();
            acc = multiply(acc, rhs, at);
        }
    }

    Poly factor()
    {
        Poly base = atom();
        skip_space();
        if (!peek('^'))
            return base;
        const std::size_t at = pos_;
        ++pos_;
        skip_space();
        const std::size_t digits_at = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(ErrorCode::SyntaxError, "expected exponent after '^'");
        Integer e = natural();
        if (e > kMaxExponent)
            fail(ErrorCode::SyntaxError, "exponent too large", digits_at);
        Poly result = Poly::one(ring_);
        for (unsigned long i = 0; i < e.get_ui(); ++i)
            result = multiply(result, base, at);
        return result;
    }

    Poly atom()
    {
        skip_space();
        if (at_end())
            fail(ErrorCode::SyntaxError, "unexpected end of expression");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(ring_, natural());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            auto index = ring_->index_of(name);
            if (!index)
                fail(ErrorCode::UnknownGenerator, "unknown generator '" + name + "'", start);
            if (ring_->generators()[*index].degree > ring_->truncation_degree() && !options_.allow_truncation)
                fail(ErrorCode::DegreeOverflow, "generator '" + name + "' exceeds the truncation degree", start);
            return Poly::generator(ring_, *index);
        }
        if (c == '(') {
            const std::size_t open = pos_;
            ++pos_;
            Poly inner = expr();
            skip_space();
            if (!peek(')'))
                fail(ErrorCode::SyntaxError, "unbalanced '('", open);
            ++pos_;
            return inner;
        }
        fail(ErrorCode::SyntaxError, std::string("unexpected '") + c + "'");
    }

    Integer natural()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Poly multiply(const Poly& a, const Poly& b, std::size_t at)
    {
        bool overflow = false;
        Poly out = multiply_tracking_overflow(a, b, overflow);
        if (overflow && !options_.allow_truncation)
            fail(ErrorCode::DegreeOverflow,
                 "product exceeds the truncation degree " + std::to_string(ring_->truncation_degree()), at);
        return out;
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    bool peek(char c) const { return !at_end() && text_[pos_] == c; }

    [[noreturn]] void fail(ErrorCode code, const std::string& message) { fail(code, message, pos_); }
    [[noreturn]] void fail(ErrorCode code, const std::string& message, std::size_t at)
    {
        int line = options_.line;
        int column = options_.column;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(code, message, line, column);
    }

    std::string_view text_;
    const RingPtr& ring_;
    const ParseOptions& options_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring, const ParseOptions& options)
{
    return ExpressionParser(text, ring, options).parse();
}

}  // namespace realchern
