#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "qmat/ncpoly.hpp"

namespace qmat {

namespace detail {

// Grammar: expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
// unary := '-' unary | power ; power := atom ('^' int)? ;
// atom := integer | 'q' | a[i,j] | x[i,j] | '(' expr ')'
class Parser {
  public:
    Parser(std::string_view s, std::optional<Algebra> alg) : s_(s), alg_(alg) {}

    Terms run() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty input", pos_);
        Terms t = expr();
        skip();
        if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return t;
    }

    std::optional<Algebra> algebra() const { return alg_; }
    int max_index() const { return max_index_; }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;
    std::optional<Algebra> alg_;
    int max_index_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    static Terms scalar(const RatFunc& c) {
        Terms t;
        add_into(t, Word{}, c);
        return t;
    }
    static bool is_scalar(const Terms& t) { return t.empty() || (t.size() == 1 && t.begin()->first.empty()); }
    static RatFunc scalar_value(const Terms& t) { return t.empty() ? RatFunc(0) : t.begin()->second; }

    static Terms mul(const Terms& a, const Terms& b) {
        Terms r;
        for (auto& [w1, c1] : a)
            for (auto& [w2, c2] : b) {
                Word w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                add_into(r, w, c1 * c2);
            }
        return r;
    }

    Terms expr() {
        Terms acc = term();
        for (;;) {
            if (eat('+')) {
                Terms t = term();
                for (auto& [w, c] : t) add_into(acc, w, c);
            } else if (eat('-')) {
                Terms t = term();
                for (auto& [w, c] : t) add_into(acc, w, -c);
            } else {
                return acc;
            }
        }
    }

    Terms term() {
        Terms acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = mul(acc, unary());
            } else if (eat('/')) {
                std::size_t at = pos_;
                Terms d = unary();
                if (!is_scalar(d)) throw ParseError("division by a non-scalar", at);
                RatFunc dv = scalar_value(d);
                if (dv.is_zero()) throw ParseError("division by zero", at);
                RatFunc inv = dv.inv();
                Terms r;
                for (auto& [w, c] : acc) add_into(r, w, c * inv);
                acc = std::move(r);
            } else {
                return acc;
            }
        }
    }

    Terms unary() {
        if (eat('-')) {
            Terms t = unary();
            for (auto& [w, c] : t) c = -c;
            return t;
        }
        if (eat('+')) return unary();
        return power();
    }

    int integer_literal() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        if (pos_ - start > 6) throw ParseError("integer too large", start);
        int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }

    Terms power() {
        std::size_t at = pos_;
        bool is_q = false;
        Terms base = atom(is_q);
        if (!eat('^')) return base;
        std::size_t epos = pos_;
        int e = integer_literal();
        if (is_q) return scalar(RatFunc::q(e));
        if (is_scalar(base)) {
            RatFunc b = scalar_value(base);
            if (b.is_zero() && e < 0) throw ParseError("division by zero", epos);
            return scalar(b.pow(e));
        }
        if (e < 0) throw ParseError("negative power of a non-scalar", at);
        Terms r = scalar(RatFunc(1));
        for (int i = 0; i < e; ++i) r = mul(r, base);
        return r;
    }

    Terms atom(bool& is_q) {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Terms t = expr();
            expect(')');
            return t;
        }
        if (std::isdigit((unsigned char)c)) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
            return scalar(RatFunc(Rational(BigInt(std::string(s_.substr(start, pos_ - start))))));
        }
        if (c == 'q') {
            ++pos_;
            is_q = true;
            return scalar(RatFunc::q(1));
        }
        if (c == 'a' || c == 'x') {
            std::size_t at = pos_;
            Algebra a = c == 'a' ? Algebra::REA : Algebra::FRT;
            if (alg_ && *alg_ != a) throw ParseError("mixed algebra tags", at);
            alg_ = a;
            ++pos_;
            expect('[');
            int i = integer_literal();
            expect(',');
            int j = integer_literal();
            expect(']');
            if (i < 1 || j < 1 || i > 255 || j > 255) throw ParseError("generator index out of range", at);
            max_index_ = std::max({max_index_, i, j});
            Terms t;
            t.emplace(Word{gen(i, j)}, RatFunc(1));
            return t;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }
};

}  // namespace detail

/// Parses text in the a[i,j] / x[i,j] grammar. N defaults to the largest index seen.
inline NCPoly parse_poly(std::string_view text, std::optional<Algebra> alg = std::nullopt,
                         std::optional<int> N = std::nullopt) {
    detail::Parser p(text, alg);
    Terms t = p.run();
    int n = N ? *N : std::max(1, p.max_index());
    if (p.max_index() > n) throw ParseError("generator index exceeds N = " + std::to_string(n), 0);
    return NCPoly(p.algebra().value_or(Algebra::REA), n, std::move(t));
}

inline RatFunc parse_ratfunc(std::string_view text) {
    detail::Parser p(text, std::nullopt);
    Terms t = p.run();
    if (p.max_index() > 0) throw ParseError("expected a scalar", 0);
    return t.empty() ? RatFunc(0) : t.begin()->second;
}

}  // namespace qmat
