#include "folindex/parser.hpp"

#include <cctype>

#include "folindex/errors.hpp"

namespace folindex {

namespace {

class Parser {
   public:
    Parser(const std::string& text, const std::vector<std::string>& vars, const FieldPtr& field)
        : s_(normalize(text)), vars_(vars), field_(field) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

   private:
    // Accept the unicode minus sign as '-'.
    static std::string normalize(const std::string& t) {
        std::string out;
        for (size_t i = 0; i < t.size(); ++i) {
            if (i + 2 < t.size() && static_cast<unsigned char>(t[i]) == 0xE2 &&
                static_cast<unsigned char>(t[i + 1]) == 0x88 && static_cast<unsigned char>(t[i + 2]) == 0x92) {
                out += '-';
                i += 2;
            } else {
                out += t[i];
            }
        }
        return out;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("cannot parse \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                MultiPoly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
                acc = d.constant_term().inverse() * acc;
            } else {
                return acc;
            }
        }
    }

    MultiPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (eat('^')) {
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a nonnegative integer");
            const std::string digits = s_.substr(start, pos_ - start);
            if (digits.size() > 6) fail("exponent too large");
            base = base.pow(std::stoi(digits));
        }
        return base;
    }

    MultiPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!eat(')')) fail("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class z(s_.substr(start, pos_ - start));
            return MultiPoly::constant(vars_, FieldElem(mpq_class(z)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            for (size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) return MultiPoly::variable(vars_, static_cast<int>(i));
            if (!field_->is_rational() && name == field_->generator())
                return MultiPoly::constant(vars_, FieldElem::generator(field_));
            fail("unknown name '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    size_t pos_ = 0;
    const std::vector<std::string>& vars_;
    FieldPtr field_;
};

}  // namespace

bool is_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars, const FieldPtr& field) {
    for (const auto& v : vars) {
        if (!is_identifier(v)) throw ParseError("invalid variable name '" + v + "'");
        if (!field->is_rational() && v == field->generator())
            throw ParseError("variable '" + v + "' clashes with the field generator");
    }
    return Parser(text, vars, field).parse().promoted(field);
}

QPoly parse_qpoly(const std::string& text, const std::string& var) {
    MultiPoly p = parse_poly(text, {var});
    std::vector<mpq_class> c(static_cast<size_t>(std::max(0, p.total_degree() + 1)));
    for (const auto& [e, v] : p.terms()) c[static_cast<size_t>(e[0])] = v.rational_value();
    return QPoly(std::move(c));
}

}  // namespace folindex
