#include "heis/affine.hpp"
#include "heis/errors.hpp"

#include <cctype>

namespace heis {

namespace {

// expr   := term (('+'|'-') term)*
// term   := unary (('*')? unary)*       juxtaposition multiplies
// unary  := '-' unary | power
// power  := atom ('^' integer)?
// atom   := 's'<i> | 'x'<i> | rational | '(' expr ')'
class Parser {
public:
    Parser(const std::string& t, int n) : text_(t), n_(n) {}

    AffineElement parse()
    {
        AffineElement e = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected character");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw input_error("hecke expression: " + what + " at position " + std::to_string(pos_));
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool starts_atom()
    {
        skip();
        if (pos_ >= text_.size())
            return false;
        char c = text_[pos_];
        return c == 's' || c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    int integer()
    {
        skip();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    AffineElement expr()
    {
        AffineElement acc = term();
        while (true) {
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

    AffineElement term()
    {
        AffineElement acc = unary();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = acc * unary();
            } else if (starts_atom()) {
                acc = acc * unary();
            } else {
                return acc;
            }
        }
    }

    AffineElement unary()
    {
        if (peek('-')) {
            ++pos_;
            return Q(-1) * unary();
        }
        AffineElement a = atom();
        if (peek('^')) {
            ++pos_;
            int p = integer();
            AffineElement r = AffineElement::scalar(n_, Q(1));
            for (int i = 0; i < p; ++i)
                r = r * a;
            return r;
        }
        return a;
    }

    AffineElement atom()
    {
        skip();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            AffineElement e = expr();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            return e;
        }
        if (c == 's' || c == 'x') {
            ++pos_;
            size_t at = pos_;
            int i = integer();
            try {
                return c == 's' ? AffineElement::s(n_, i) : AffineElement::x(n_, i);
            } catch (const input_error& err) {
                pos_ = at;
                fail(err.what());
            }
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
                ++pos_;
            return AffineElement::scalar(n_, parse_rational(text_.substr(start, pos_ - start)));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& text_;
    int n_;
    size_t pos_ = 0;
};

} // namespace

AffineElement affine_normal_form(const std::string& word, int n)
{
    if (n < 0)
        throw input_error("negative rank");
    return Parser(word, n).parse();
}

} // namespace heis
