#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qmat/scalars.hpp"

namespace qmat {

enum class Algebra { REA, FRT };

inline const char* algebra_name(Algebra a) { return a == Algebra::REA ? "REA" : "FRT"; }
inline char algebra_letter(Algebra a) { return a == Algebra::REA ? 'a' : 'x'; }
inline Algebra algebra_from_name(const std::string& s) {
    if (s == "REA") return Algebra::REA;
    if (s == "FRT") return Algebra::FRT;
    throw Error("unknown algebra tag '" + s + "'");
}

/// Generator a^row_col (or x^row_col); the defaulted comparison is the PBW order.
struct GenId {
    std::uint8_t row = 0, col = 0;
    auto operator<=>(const GenId&) const = default;
};

inline GenId gen(int row, int col) { return GenId{std::uint8_t(row), std::uint8_t(col)}; }

using Word = std::vector<GenId>;

inline bool is_ordered(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] < w[i - 1]) return false;
    return true;
}

struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ull;
        for (auto g : w) {
            h = (h ^ g.row) * 1099511628211ull;
            h = (h ^ g.col) * 1099511628211ull;
        }
        return h;
    }
};

using Terms = std::map<Word, RatFunc, WordLess>;

inline void add_into(Terms& t, const Word& w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

inline void add_scaled(Terms& t, const Terms& src, const RatFunc& c) {
    if (c.is_one()) {
        for (auto& [w, x] : src) add_into(t, w, x);
    } else {
        for (auto& [w, x] : src) add_into(t, w, x * c);
    }
}

/// Noncommutative polynomial in the free algebra on a^i_j or x^i_j, i, j in [N].
class NCPoly {
  public:
    NCPoly() = default;
    NCPoly(Algebra alg, int N) : alg_(alg), N_(N) {}
    NCPoly(Algebra alg, int N, Terms t) : alg_(alg), N_(N), terms_(std::move(t)) { prune(); }

    static NCPoly scalar(Algebra alg, int N, const RatFunc& c) {
        NCPoly p(alg, N);
        add_into(p.terms_, Word{}, c);
        return p;
    }
    static NCPoly one(Algebra alg, int N) { return scalar(alg, N, RatFunc(1)); }
    static NCPoly generator(Algebra alg, int N, int row, int col) {
        check_index(N, row, col);
        NCPoly p(alg, N);
        p.terms_.emplace(Word{gen(row, col)}, RatFunc(1));
        return p;
    }
    static NCPoly monomial(Algebra alg, int N, const Word& w, const RatFunc& c = RatFunc(1)) {
        for (auto g : w) check_index(N, g.row, g.col);
        NCPoly p(alg, N);
        add_into(p.terms_, w, c);
        return p;
    }

    Algebra algebra() const { return alg_; }
    int N() const { return N_; }
    const Terms& terms() const { return terms_; }
    Terms& mutable_terms() { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    RatFunc coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? RatFunc(0) : it->second;
    }

    int degree() const { return terms_.empty() ? -1 : int(terms_.rbegin()->first.size()); }

    bool is_homogeneous() const {
        return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
    }

    void add(const Word& w, const RatFunc& c) { add_into(terms_, w, c); }

    NCPoly& operator+=(const NCPoly& o) {
        check_compatible(o);
        for (auto& [w, c] : o.terms_) add_into(terms_, w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        check_compatible(o);
        for (auto& [w, c] : o.terms_) add_into(terms_, w, -c);
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    NCPoly operator-() const { return scaled(RatFunc(-1)); }

    NCPoly scaled(const RatFunc& c) const {
        NCPoly r(alg_, N_);
        if (c.is_zero()) return r;
        for (auto& [w, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, x * c);
        return r;
    }
    friend NCPoly operator*(const RatFunc& c, const NCPoly& p) { return p.scaled(c); }

    /// Free-algebra product (concatenation), no reduction.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        a.check_compatible(b);
        NCPoly r(a.alg_, a.N_);
        for (auto& [w1, c1] : a.terms_)
            for (auto& [w2, c2] : b.terms_) {
                Word w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                add_into(r.terms_, w, c1 * c2);
            }
        return r;
    }

    friend bool operator==(const NCPoly& a, const NCPoly& b) {
        return a.alg_ == b.alg_ && a.N_ == b.N_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    /// Same algebra element, possibly with a larger N.
    NCPoly with_N(int N) const {
        for (auto& [w, c] : terms_)
            for (auto g : w)
                if (g.row > N || g.col > N) throw Error("polynomial does not fit in N = " + std::to_string(N));
        NCPoly r = *this;
        r.N_ = N;
        return r;
    }

    void check_compatible(const NCPoly& o) const {
        if (alg_ != o.alg_) throw Error("mixed algebra tags");
        if (N_ != o.N_) throw Error("mismatched N");
    }

    static void check_index(int N, int row, int col) {
        if (row < 1 || col < 1 || row > N || col > N)
            throw Error("generator index out of range for N = " + std::to_string(N));
    }

  private:
    Algebra alg_ = Algebra::REA;
    int N_ = 1;
    Terms terms_;

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
};

inline std::string word_str(Algebra alg, const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += algebra_letter(alg);
        s += "[" + std::to_string(w[i].row) + "," + std::to_string(w[i].col) + "]";
    }
    return s;
}

inline std::string word_latex(Algebra alg, const Word& w) {
    std::string s;
    for (auto g : w) {
        s += algebra_letter(alg);
        s += "^{" + std::to_string(g.row) + "}_{" + std::to_string(g.col) + "}";
    }
    return s;
}

namespace detail {

inline bool needs_parens(const RatFunc& c) { return !c.is_laurent() || c.num().size() > 1; }

inline std::string term_body(const RatFunc& c, const std::string& w, bool& negative) {
    RatFunc a = c;
    negative = false;
    if (a.is_laurent() && a.num().size() == 1 && a.num().terms()[0].second < 0) {
        negative = true;
        a = -a;
    }
    if (w.empty()) return needs_parens(a) ? "(" + a.str() + ")" : a.str();
    if (a.is_one()) return w;
    if (needs_parens(a)) return "(" + a.str() + ")*" + w;
    return a.str() + "*" + w;
}

inline std::string join_terms(const Terms& t, Algebra alg, const RatFunc& factor_out) {
    std::string out;
    bool first = true;
    for (auto& [w, c] : t) {
        bool neg;
        std::string body = term_body(c / factor_out, word_str(alg, w), neg);
        if (first)
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

}  // namespace detail

/// Text form. When the first coefficient is the monomial q^e of lowest exponent it is pulled out.
inline std::string to_text(const NCPoly& p) {
    const Terms& t = p.terms();
    if (t.empty()) return "0";
    if (t.size() > 1) {
        bool laurent = true;
        int lo = 0;
        bool init = false;
        for (auto& [w, c] : t) {
            if (!c.is_laurent()) {
                laurent = false;
                break;
            }
            int e = c.num().low_exp();
            lo = init ? std::min(lo, e) : e;
            init = true;
        }
        const RatFunc& c0 = t.begin()->second;
        if (laurent && lo != 0 && c0 == RatFunc::q(lo))
            return (lo == 1 ? std::string("q") : "q^" + std::to_string(lo)) + "*(" +
                   detail::join_terms(t, p.algebra(), RatFunc::q(lo)) + ")";
    }
    return detail::join_terms(t, p.algebra(), RatFunc(1));
}

inline std::string laurent_latex(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Rational c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        int e = it->first;
        std::string cs = c.get_den() == 1 ? c.get_str() : "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
        if (e == 0)
            out += cs;
        else
            out += (c == 1 ? "" : cs) + (e == 1 ? std::string("q") : "q^{" + std::to_string(e) + "}");
    }
    return out;
}

inline std::string to_latex(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [w, c] : p.terms()) {
        std::string cs;
        bool neg = false;
        if (c.is_laurent()) {
            RatFunc a = c;
            if (a.num().size() == 1 && a.num().terms()[0].second < 0) {
                neg = true;
                a = -a;
            }
            cs = a.is_one() && !w.empty() ? "" : laurent_latex(a.num());
            if (a.num().size() > 1) cs = "\\left(" + cs + "\\right)";
        } else {
            cs = "\\frac{" + laurent_latex(c.num()) + "}{" + laurent_latex(c.den()) + "}";
        }
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        out += cs + word_latex(p.algebra(), w);
    }
    return out;
}

inline nlohmann::json word_json(const Word& w) {
    nlohmann::json j = nlohmann::json::array();
    for (auto g : w) j.push_back({int(g.row), int(g.col)});
    return j;
}

inline Word word_from_json(const nlohmann::json& j) {
    Word w;
    for (auto& e : j) w.push_back(gen(e.at(0).get<int>(), e.at(1).get<int>()));
    return w;
}

inline nlohmann::json to_json(const NCPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [w, c] : p.terms()) terms.push_back({{"coeff", c.to_json()}, {"word", word_json(w)}});
    return {{"algebra", algebra_name(p.algebra())}, {"N", p.N()}, {"terms", terms}};
}

inline NCPoly ncpoly_from_json(const nlohmann::json& j) {
    NCPoly p(algebra_from_name(j.at("algebra").get<std::string>()), j.at("N").get<int>());
    for (auto& t : j.at("terms")) {
        Word w = word_from_json(t.at("word"));
        for (auto g : w) NCPoly::check_index(p.N(), g.row, g.col);
        p.add(w, RatFunc::from_json(t.at("coeff")));
    }
    return p;
}

}  // namespace qmat
