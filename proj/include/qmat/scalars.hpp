#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qmat/error.hpp"

namespace qmat {

using Rational = mpq_class;
using BigInt = mpz_class;

inline std::string rational_str(const Rational& r) { return r.get_str(); }

/// Laurent polynomial in q with rational coefficients, sorted by exponent.
class LaurentPoly {
  public:
    using Term = std::pair<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long c) {
        if (c != 0) terms_.emplace_back(0, Rational(c));
    }
    LaurentPoly(const Rational& c) {
        if (c != 0) terms_.emplace_back(0, c);
    }

    static LaurentPoly monomial(const Rational& c, int e) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace_back(e, c);
        return p;
    }
    static LaurentPoly q(int e = 1) { return monomial(Rational(1), e); }

    // terms must be sorted by exponent and free of zeros
    static LaurentPoly from_sorted(std::vector<Term> t) {
        LaurentPoly p;
        p.terms_ = std::move(t);
        return p;
    }
    static LaurentPoly from_map(const std::map<int, Rational>& m) {
        LaurentPoly p;
        for (auto& [e, c] : m)
            if (c != 0) p.terms_.emplace_back(e, c);
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int low_exp() const { return terms_.front().first; }
    int high_exp() const { return terms_.back().first; }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }

    Rational coeff(int e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, int x) { return t.first < x; });
        if (it != terms_.end() && it->first == e) return it->second;
        return Rational(0);
    }

    LaurentPoly shifted(int e) const {
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.first += e;
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        return combine(a, b, false);
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return combine(a, b, true);
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.terms_.size() == 1) return a.scaled(b.terms_[0].second, b.terms_[0].first);
        if (a.terms_.size() == 1) return b.scaled(a.terms_[0].second, a.terms_[0].first);
        std::map<int, Rational> acc;
        for (auto& [e1, c1] : a.terms_)
            for (auto& [e2, c2] : b.terms_) acc[e1 + e2] += c1 * c2;
        return from_map(acc);
    }
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    LaurentPoly scaled(const Rational& c, int e = 0) const {
        if (c == 0) return {};
        LaurentPoly r = *this;
        for (auto& t : r.terms_) {
            t.first += e;
            t.second *= c;
        }
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    Rational eval_q1() const {
        Rational s = 0;
        for (auto& t : terms_) s += t.second;
        return s;
    }

    Rational eval(const Rational& x) const {
        Rational s = 0;
        for (auto& [e, c] : terms_) {
            Rational p = 1;
            Rational b = e >= 0 ? x : Rational(1) / x;
            for (int i = 0; i < std::abs(e); ++i) p *= b;
            s += c * p;
        }
        return s;
    }

    /// Highest exponent first, e.g. `q^2 + 1 - q^-2`.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Rational c = it->second;
            bool neg = c < 0;
            if (neg) c = -c;
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            first = false;
            out += monomial_str(c, it->first);
        }
        return out;
    }

    static std::string monomial_str(const Rational& c, int e) {
        if (e == 0) return c.get_str();
        std::string qs = e == 1 ? "q" : "q^" + std::to_string(e);
        if (c == 1) return qs;
        return c.get_str() + "*" + qs;
    }

    nlohmann::json to_json() const {
        nlohmann::json j = nlohmann::json::object();
        for (auto& [e, c] : terms_) j[std::to_string(e)] = c.get_str();
        return j;
    }
    static LaurentPoly from_json(const nlohmann::json& j) {
        std::map<int, Rational> m;
        for (auto& [k, v] : j.items()) m[std::stoi(k)] = Rational(v.get<std::string>());
        for (auto& [e, c] : m) c.canonicalize();
        return from_map(m);
    }

  private:
    std::vector<Term> terms_;

    static LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, bool sub) {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->first < i->first) {
                r.terms_.emplace_back(j->first, sub ? Rational(-j->second) : j->second);
                ++j;
            } else {
                Rational c = sub ? Rational(i->second - j->second) : Rational(i->second + j->second);
                if (c != 0) r.terms_.emplace_back(i->first, c);
                ++i;
                ++j;
            }
        }
        return r;
    }
};

namespace detail {

// dense coefficient vectors, index = exponent, for gcd and exact division
using Dense = std::vector<Rational>;

inline Dense to_dense(const LaurentPoly& p, int shift) {
    Dense d(p.high_exp() + shift + 1);
    for (auto& [e, c] : p.terms()) d[e + shift] = c;
    return d;
}

inline LaurentPoly from_dense(const Dense& d, int shift) {
    std::vector<LaurentPoly::Term> t;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) t.emplace_back(int(i) - shift, d[i]);
    return LaurentPoly::from_sorted(std::move(t));
}

inline void trim(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

// a = quot*b + rem
inline void divmod(Dense a, const Dense& b, Dense& quot, Dense& rem) {
    trim(a);
    quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    const Rational& lead = b.back();
    for (std::size_t k = a.size(); k >= b.size() && k > 0; --k) {
        Rational c = a[k - 1] / lead;
        if (c == 0) continue;
        std::size_t off = k - b.size();
        quot[off] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    }
    trim(a);
    rem = std::move(a);
}

inline Dense poly_gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense qt, r;
        divmod(a, b, qt, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

}  // namespace detail

/// Element of Q(q): num/den with den normalized to lowest exponent 0 and lowest coefficient 1.
class RatFunc {
  public:
    RatFunc() : den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}
    RatFunc(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw DivisionByZero();
        canonicalize();
    }

    static RatFunc q(int e = 1) { return RatFunc(LaurentPoly::q(e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_laurent() && b.is_laurent()) return RatFunc(a.num_ + b.num_);
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_laurent() && b.is_laurent()) return RatFunc(a.num_ * b.num_);
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    RatFunc inv() const {
        if (is_zero()) throw DivisionByZero();
        return RatFunc(den_, num_);
    }

    RatFunc pow(int n) const {
        if (n < 0) return inv().pow(-n);
        RatFunc r(1), b = *this;
        while (n) {
            if (n & 1) r *= b;
            b *= b;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    Rational eval_q1() const {
        Rational d = den_.eval_q1();
        if (d == 0) throw PoleAtOne();
        return num_.eval_q1() / d;
    }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d == 0) throw DivisionByZero();
        return num_.eval(x) / d;
    }

    std::string str() const {
        if (is_laurent()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

    nlohmann::json to_json() const { return {{"num", num_.to_json()}, {"den", den_.to_json()}}; }
    static RatFunc from_json(const nlohmann::json& j) {
        return RatFunc(LaurentPoly::from_json(j.at("num")), LaurentPoly::from_json(j.at("den")));
    }

  private:
    LaurentPoly num_, den_;

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        int s = den_.low_exp();
        if (s != 0) {
            num_ = num_.shifted(-s);
            den_ = den_.shifted(-s);
        }
        if (!den_.is_monomial()) {
            int ns = -num_.low_exp();
            detail::Dense g = detail::poly_gcd(detail::to_dense(num_, ns), detail::to_dense(den_, 0));
            if (g.size() > 1) {
                detail::Dense qn, qd, r;
                detail::divmod(detail::to_dense(num_, ns), g, qn, r);
                detail::divmod(detail::to_dense(den_, 0), g, qd, r);
                num_ = detail::from_dense(qn, ns);
                den_ = detail::from_dense(qd, 0);
            }
        }
        Rational lead = den_.terms().front().second;
        if (lead != 1) {
            Rational inv = 1 / lead;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
};

/// [k]_q = 1 + q^-2 + ... + q^-2(k-1)
inline LaurentPoly qint(int k) {
    std::vector<LaurentPoly::Term> t;
    for (int i = k - 1; i >= 0; --i) t.emplace_back(-2 * i, Rational(1));
    return LaurentPoly::from_sorted(std::move(t));
}

inline LaurentPoly qfact(int k) {
    LaurentPoly r(1);
    for (int i = 2; i <= k; ++i) r *= qint(i);
    return r;
}

/// q - q^-1
inline LaurentPoly qdiff() { return LaurentPoly::q(1) - LaurentPoly::q(-1); }

inline Rational eval_q1(const RatFunc& x) { return x.eval_q1(); }

}  // namespace qmat
