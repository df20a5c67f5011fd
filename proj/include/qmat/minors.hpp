#pragma once

#include <map>
#include <tuple>

#include "qmat/ncpoly.hpp"
#include "qmat/qcomb.hpp"

namespace qmat {

namespace detail {

inline void check_minor(const IndexSet& I, const IndexSet& J, int N) {
    check_set(I, N);
    check_set(J, N);
    if (I.size() != J.size()) throw Error("minor: #I != #J");
}

inline void check_aux(const IndexSet& U, const IndexSet& I, const IndexSet& J, int N) {
    check_set(U, N);
    if (!set_intersect(U, set_union(I, J)).empty()) throw Error("minor: U must avoid I and J");
}

inline Word minor_word(const Bijection& tau) {
    Word w;
    for (std::size_t a = 0; a < tau.source.size(); ++a) w.push_back(gen(tau.source[a], tau.targets[a]));
    return w;
}

inline RatFunc signed_qpow(int l, int e) { return RatFunc(LaurentPoly::monomial(Rational(l % 2 ? -1 : 1), l + e)); }

}  // namespace detail

/// q^{-wt I - wt J} sum over bijections I -> J of (-q)^{l(sigma)} x^{i_1}_{sigma(i_1)} ...
inline NCPoly dlmin(const IndexSet& I, const IndexSet& J, int N) {
    detail::check_minor(I, J, N);
    Terms t;
    int pre = -wt(I) - wt(J);
    for (auto& tau : all_bijections(I, J))
        add_into(t, detail::minor_word(tau), detail::signed_qpow(length_perm(tau.targets), pre));
    return NCPoly(Algebra::FRT, N, std::move(t));
}

/// q^{-wt I - wt J} sum over bijections tau: I -> J of (-q)^{l_U(tau)} q^{e(tau)} a^{i_1}_{tau(i_1)} ...
inline NCPoly ptmin(const IndexSet& U, const IndexSet& I, const IndexSet& J, int N) {
    detail::check_minor(I, J, N);
    detail::check_aux(U, I, J, N);
    Terms t;
    int pre = -wt(I) - wt(J);
    for (auto& tau : all_bijections(I, J))
        add_into(t, detail::minor_word(tau), detail::signed_qpow(length_U(tau, U), exceedance(tau) + pre));
    return NCPoly(Algebra::REA, N, std::move(t));
}

/// First-row expansions of both kinds of minor, memoized on (I, J, U).
class RowExpander {
  public:
    explicit RowExpander(int N) : N_(N) {}

    NCPoly dl(const IndexSet& I, const IndexSet& J) {
        detail::check_minor(I, J, N_);
        return dl_rec(I, J);
    }

    NCPoly pt(const IndexSet& U, const IndexSet& I, const IndexSet& J) {
        detail::check_minor(I, J, N_);
        detail::check_aux(U, I, J, N_);
        return pt_rec(U, I, J);
    }

    std::size_t memo_size() const { return dl_memo_.size() + pt_memo_.size(); }

  private:
    int N_;
    std::map<std::pair<IndexSet, IndexSet>, NCPoly> dl_memo_;
    std::map<std::tuple<IndexSet, IndexSet, IndexSet>, NCPoly> pt_memo_;

    NCPoly dl_rec(const IndexSet& I, const IndexSet& J) {
        if (I.empty()) return NCPoly::one(Algebra::FRT, N_);
        auto key = std::make_pair(I, J);
        if (auto it = dl_memo_.find(key); it != dl_memo_.end()) return it->second;
        NCPoly r(Algebra::FRT, N_);
        int i1 = I[0];
        for (std::size_t m = 1; m <= J.size(); ++m) {
            int jm = J[m - 1];
            RatFunc c = detail::signed_qpow(int(m) - 1, -i1 - jm);
            r += c * (NCPoly::generator(Algebra::FRT, N_, i1, jm) * dl_rec(without(I, i1), without(J, jm)));
        }
        return dl_memo_.emplace(key, r).first->second;
    }

    NCPoly pt_rec(const IndexSet& U, const IndexSet& I, const IndexSet& J) {
        if (I.empty()) return NCPoly::one(Algebra::REA, N_);
        auto key = std::make_tuple(U, I, J);
        if (auto it = pt_memo_.find(key); it != pt_memo_.end()) return it->second;
        NCPoly r(Algebra::REA, N_);
        int i1 = I[0];
        for (std::size_t m = 1; m <= J.size(); ++m) {
            int jm = J[m - 1];
            int l = int(m) - 1 + gamma(U, I, J, int(m));
            RatFunc c = detail::signed_qpow(l, (jm > i1 ? 1 : 0) - i1 - jm);
            r += c * (NCPoly::generator(Algebra::REA, N_, i1, jm) * pt_rec(U, without(I, i1), without(J, jm)));
        }
        return pt_memo_.emplace(key, r).first->second;
    }
};

inline NCPoly dlmin_rowexp(const IndexSet& I, const IndexSet& J, int N) { return RowExpander(N).dl(I, J); }
inline NCPoly ptmin_rowexp(const IndexSet& U, const IndexSet& I, const IndexSet& J, int N) {
    return RowExpander(N).pt(U, I, J);
}

/// D_k = sum over k-subsets I of dlmin(I, I).
inline NCPoly dl_coinv(int k, int N) {
    if (k < 1 || k > N) throw Error("dl_coinv: need 1 <= k <= N");
    NCPoly r(Algebra::FRT, N);
    for (auto& I : subsets(range_set(1, N), k)) r += dlmin(I, I, N);
    return r;
}

}  // namespace qmat
