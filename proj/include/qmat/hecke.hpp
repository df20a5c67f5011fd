#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qmat/qcomb.hpp"
#include "qmat/report.hpp"
#include "qmat/scalars.hpp"

namespace qmat {

/// Permutation of [n] in one-line notation, values 1..n.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

inline bool is_perm(const Perm& p) {
    std::vector<bool> seen(p.size() + 1, false);
    for (int v : p) {
        if (v < 1 || v > int(p.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

/// Reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}.
inline std::vector<int> reduced_word(Perm w) {
    std::vector<int> rev;
    for (;;) {
        std::size_t i = 0;
        while (i + 1 < w.size() && w[i] < w[i + 1]) ++i;
        if (i + 1 >= w.size()) break;
        std::swap(w[i], w[i + 1]);
        rev.push_back(int(i) + 1);
    }
    return {rev.rbegin(), rev.rend()};
}

/// Element of H_q(n) in the basis T_w.
class HeckeElt {
  public:
    HeckeElt() = default;
    explicit HeckeElt(int n) : n_(n) {}

    static HeckeElt unit(int n) { return basis(identity_perm(n)); }
    static HeckeElt basis(const Perm& w, const RatFunc& c = RatFunc(1)) {
        if (!is_perm(w)) throw Error("not a permutation");
        HeckeElt h(int(w.size()));
        if (!c.is_zero()) h.terms_.emplace(w, c);
        return h;
    }
    static HeckeElt T(int i, int n) {
        if (i < 1 || i >= n) throw Error("T_i needs 1 <= i < n");
        Perm w = identity_perm(n);
        std::swap(w[i - 1], w[i]);
        return basis(w);
    }

    int n() const { return n_; }
    const std::map<Perm, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RatFunc coeff(const Perm& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? RatFunc(0) : it->second;
    }

    void add(const Perm& w, const RatFunc& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    HeckeElt& operator+=(const HeckeElt& o) {
        check(o);
        for (auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    HeckeElt& operator-=(const HeckeElt& o) {
        check(o);
        for (auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
    friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
    friend HeckeElt operator*(const RatFunc& c, const HeckeElt& h) {
        HeckeElt r(h.n_);
        for (auto& [w, x] : h.terms_) r.add(w, c * x);
        return r;
    }

    /// Right multiplication by T_i.
    HeckeElt times_T(int i) const {
        HeckeElt r(n_);
        RatFunc d(qdiff());
        for (auto& [w, c] : terms_) {
            Perm ws = w;
            std::swap(ws[i - 1], ws[i]);
            r.add(ws, c);
            if (w[i - 1] > w[i]) r.add(w, c * d);
        }
        return r;
    }

    /// Left multiplication by T_i.
    HeckeElt T_times(int i) const {
        HeckeElt r(n_);
        RatFunc d(qdiff());
        for (auto& [w, c] : terms_) {
            Perm sw = w;
            for (int& v : sw)
                if (v == i)
                    v = i + 1;
                else if (v == i + 1)
                    v = i;
            r.add(sw, c);
            if (inverse_position(w, i) > inverse_position(w, i + 1)) r.add(w, c * d);
        }
        return r;
    }

    friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }

    void check(const HeckeElt& o) const {
        if (n_ != o.n_) throw Error("Hecke elements with different n");
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*T[";
            for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
            s += "]";
        }
        return s;
    }

    nlohmann::json to_json() const {
        nlohmann::json t = nlohmann::json::array();
        for (auto& [w, c] : terms_) t.push_back({{"coeff", c.to_json()}, {"perm", w}});
        return {{"n", n_}, {"terms", t}};
    }

  private:
    int n_ = 0;
    std::map<Perm, RatFunc> terms_;

    static int inverse_position(const Perm& w, int v) {
        for (std::size_t p = 0; p < w.size(); ++p)
            if (w[p] == v) return int(p);
        return -1;
    }
};

/// Product via right multiplication by reduced words of the right factor.
inline HeckeElt hecke_mul(const HeckeElt& x, const HeckeElt& y) {
    x.check(y);
    HeckeElt r(x.n());
    for (auto& [v, c] : y.terms()) {
        HeckeElt acc = c * x;
        for (int i : reduced_word(v)) acc = acc.times_T(i);
        r += acc;
    }
    return r;
}

/// Independent product via left multiplication by reduced words of the left factor.
inline HeckeElt hecke_mul_left(const HeckeElt& x, const HeckeElt& y) {
    x.check(y);
    HeckeElt r(x.n());
    for (auto& [w, c] : x.terms()) {
        HeckeElt acc = c * y;
        auto word = reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it) acc = acc.T_times(*it);
        r += acc;
    }
    return r;
}

inline HeckeElt operator*(const HeckeElt& x, const HeckeElt& y) { return hecke_mul(x, y); }

/// omega_k = sum over S_k of (-q)^(-l(sigma)) T_sigma, inside H_q(n).
inline HeckeElt omega(int k, int n) {
    if (k < 0 || k > n) throw Error("omega: need 0 <= k <= n");
    HeckeElt r(n);
    Perm p = identity_perm(k);
    do {
        Perm w = identity_perm(n);
        std::copy(p.begin(), p.end(), w.begin());
        int l = length_perm(p);
        r.add(w, RatFunc(LaurentPoly::monomial(Rational(l % 2 ? -1 : 1), -l)));
    } while (std::next_permutation(p.begin(), p.end()));
    return r;
}

inline HeckeElt omega_bar(int k, int n) { return RatFunc(qfact(k)).inv() * omega(k, n); }

/// T_j T_{j+1} ... T_{k-1}
inline HeckeElt t_cycle(int j, int k, int n) {
    if (j > k) throw Error("t_cycle: need j <= k");
    if (k > n) throw Error("t_cycle: need k <= n");
    HeckeElt r = HeckeElt::unit(n);
    for (int i = j; i < k; ++i) r = r.times_T(i);
    return r;
}

enum class NewtonVariant { KminusJminus1, KminusJ, Jminus1 };

inline const char* variant_name(NewtonVariant v) {
    switch (v) {
        case NewtonVariant::KminusJminus1: return "k-j-1";
        case NewtonVariant::KminusJ: return "k-j";
        default: return "j-1";
    }
}

/// Cycle type, parts in decreasing order.
inline std::vector<int> cycle_type(const Perm& w) {
    std::vector<bool> seen(w.size(), false);
    std::vector<int> parts;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = std::size_t(w[j] - 1)) {
            seen[j] = true;
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

/// Element of the co-center H_q(n)/[H, H] in the basis of minimal-length class elements, keyed by cycle type.
using CocenterVec = std::map<std::vector<int>, RatFunc>;

/// Reduction modulo commutators by cyclic shifts and length-decreasing conjugations.
class Cocenter {
  public:
    explicit Cocenter(int n) : n_(n) {}

    const CocenterVec& of_basis(const Perm& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        CocenterVec v = reduce(w);
        return memo_.emplace(w, std::move(v)).first->second;
    }

    CocenterVec of(const HeckeElt& h) {
        if (h.n() != n_) throw Error("co-center of a different n");
        CocenterVec out;
        for (auto& [w, c] : h.terms())
            for (auto& [cls, x] : of_basis(w)) accumulate(out, cls, c * x);
        return out;
    }

  private:
    int n_;
    std::map<Perm, CocenterVec> memo_;

    static void accumulate(CocenterVec& v, const std::vector<int>& cls, const RatFunc& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = v.try_emplace(cls, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) v.erase(it);
        }
    }

    static Perm conj(const Perm& w, int i) {
        // s_i w s_i
        Perm r = w;
        std::swap(r[i - 1], r[i]);
        for (int& v : r)
            if (v == i)
                v = i + 1;
            else if (v == i + 1)
                v = i;
        return r;
    }

    CocenterVec reduce(const Perm& w) {
        int l = length_perm(w);
        std::vector<Perm> frontier{w};
        std::map<Perm, bool> seen{{w, true}};
        for (std::size_t f = 0; f < frontier.size(); ++f) {
            Perm u = frontier[f];
            for (int i = 1; i < n_; ++i) {
                Perm c = conj(u, i);
                int lc = length_perm(c);
                if (lc < l) {
                    // T_u = T_s T_c T_s, so T_u = T_c + (q - q^-1) T_{s u} modulo commutators
                    Perm su = u;
                    for (int& v : su)
                        if (v == i)
                            v = i + 1;
                        else if (v == i + 1)
                            v = i;
                    CocenterVec out = of_basis(c);
                    RatFunc d(qdiff());
                    for (auto& [cls, x] : of_basis(su)) accumulate(out, cls, d * x);
                    return out;
                }
                if (lc == l && !seen.count(c)) {
                    seen[c] = true;
                    frontier.push_back(c);
                }
            }
        }
        return CocenterVec{{cycle_type(w), RatFunc(1)}};
    }
};

inline std::string cocenter_str(const CocenterVec& v) {
    if (v.empty()) return "0";
    std::string s;
    for (auto& [cls, c] : v) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*C[";
        for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? "," : "") + std::to_string(cls[i]);
        s += "]";
    }
    return s;
}

/// [k]_q omega_bar_k - sum_j (-q^-1)^e(j) omega_bar_{j-1} T_(j...k)
inline HeckeElt hecke_newton_residual(int n, int k, NewtonVariant v) {
    HeckeElt lhs = RatFunc(qint(k)) * omega_bar(k, n);
    HeckeElt rhs(n);
    RatFunc mq = -RatFunc::q(-1);
    for (int j = 1; j <= k; ++j) {
        int e = v == NewtonVariant::KminusJminus1 ? k - j - 1 : v == NewtonVariant::KminusJ ? k - j : j - 1;
        rhs += mq.pow(e) * (omega_bar(j - 1, n) * t_cycle(j, k, n));
    }
    return lhs - rhs;
}

/// Evaluates the Newton-type identity for each exponent variant, both in H_q(n) and modulo commutators.
inline Report verify_hecke_newton(int n, int k) {
    if (k > n || k < 1) throw Error("verify_hecke_newton: need 1 <= k <= n");
    Report r{"hecke_newton", {{"n", n}, {"k", k}}};
    Cocenter cc(n);
    nlohmann::json holds = nlohmann::json::array(), holds_cc = nlohmann::json::array();
    for (auto v : {NewtonVariant::KminusJminus1, NewtonVariant::KminusJ, NewtonVariant::Jminus1}) {
        HeckeElt res = hecke_newton_residual(n, k, v);
        CocenterVec rc = cc.of(res);
        r.info[std::string("residual ") + variant_name(v)] = res.is_zero() ? "0" : res.str();
        r.info[std::string("cocenter residual ") + variant_name(v)] = cocenter_str(rc);
        if (res.is_zero()) holds.push_back(variant_name(v));
        if (rc.empty()) holds_cc.push_back(variant_name(v));
    }
    r.info["holding_variants"] = holds;
    r.info["holding_variants_cocenter"] = holds_cc;
    r.pass = !holds_cc.empty();
    if (!r.pass) r.residuals.push_back("no exponent variant holds modulo commutators");
    return r;
}

/// Variants holding for every 1 <= k <= n <= nmax, in H_q(n) itself or modulo commutators.
inline std::vector<std::string> uniform_hecke_newton_variants(int nmax, bool cocenter) {
    std::vector<std::string> out;
    for (auto v : {NewtonVariant::KminusJminus1, NewtonVariant::KminusJ, NewtonVariant::Jminus1}) {
        bool all = true;
        for (int n = 1; n <= nmax && all; ++n) {
            Cocenter cc(n);
            for (int k = 1; k <= n && all; ++k) {
                HeckeElt res = hecke_newton_residual(n, k, v);
                all = cocenter ? cc.of(res).empty() : res.is_zero();
            }
        }
        if (all) out.push_back(variant_name(v));
    }
    return out;
}

}  // namespace qmat
