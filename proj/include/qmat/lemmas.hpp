#pragma once

#include <functional>
#include <set>

#include "qmat/qcomb.hpp"
#include "qmat/report.hpp"

namespace qmat {

namespace detail {

inline std::string set_str(const IndexSet& s) {
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
    return r + "}";
}

/// Calls f(k, I, J, s, t, I'', J'') for every configuration with s > max(I), t outside J, (I'', J'') in Cl_k(I + s, J + t).
inline void for_each_xy_config(
    int N, const std::function<void(int, const IndexSet&, const IndexSet&, int, int, const IndexSet&, const IndexSet&)>& f) {
    IndexSet all = range_set(1, N);
    for (int k = 1; k <= N; ++k)
        for (int m = 0; m < k; ++m)
            for (auto& I : subsets(all, m))
                for (auto& J : subsets(all, m))
                    for (int s = I.empty() ? 1 : I.back() + 1; s <= N; ++s)
                        for (int t = 1; t <= N; ++t) {
                            if (contains(J, t)) continue;
                            for (auto& [Ipp, Jpp] : clique(k, with(I, s), with(J, t), N)) f(k, I, J, s, t, Ipp, Jpp);
                        }
}

}  // namespace detail

/// e(tau) - e(tau_m) = theta(j_m - i_1) and l_U(tau) - l_U(tau_m) = m - 1 + gamma_U(m), for all tau, U.
inline Report verify_additivity(int N) {
    Report rep{"lemma_additivity", {{"N", N}}};
    long cases = 0;
    IndexSet all = range_set(1, N);
    for (int k = 1; k <= N; ++k)
        for (auto& I : subsets(all, k))
            for (auto& J : subsets(all, k))
                for (auto& U : all_subsets(complement(set_union(I, J), N)))
                    for (auto& tau : all_bijections(I, J)) {
                        auto [tm, m] = restrict_first(tau);
                        ++cases;
                        bool e_ok = exceedance(tau) - exceedance(tm) == (tau.targets[0] > I[0] ? 1 : 0);
                        bool l_ok = length_U(tau, U) - length_U(tm, U) == m - 1 + gamma(U, I, J, m);
                        if ((!e_ok || !l_ok) && rep.residuals.size() < 5)
                            rep.fail("I=" + detail::set_str(I) + " J=" + detail::set_str(J) + " U=" + detail::set_str(U));
                    }
    rep.info["cases"] = cases;
    return rep;
}

/// beta is a bijection from (Cl_k(I, J) x components) onto the disjoint union of Cl_k(I + s, J + t).
inline Report verify_beta_bijection(int N) {
    Report rep{"lemma_beta_bijection", {{"N", N}}};
    long cases = 0;
    IndexSet all = range_set(1, N);
    for (int k = 1; k <= N; ++k)
        for (int m = 0; m < k; ++m)
            for (auto& I : subsets(all, m))
                for (auto& J : subsets(all, m)) {
                    std::set<std::tuple<int, int, IndexSet, IndexSet>> images, target;
                    std::size_t domain = 0;
                    for (auto& [Ip, Jp] : clique(k, I, J, N))
                        for (int c = 1; c <= k - m; ++c) {
                            CliqueElt x{Ip, Jp, c};
                            CliqueImage y = beta(k, I, J, N, x);
                            images.emplace(y.s, y.t, y.Ipp, y.Jpp);
                            ++domain;
                            if (!(beta_inv(k, I, J, N, y) == x)) rep.fail("beta_inv(beta(x)) != x");
                        }
                    for (int s = I.empty() ? 1 : I.back() + 1; s <= N; ++s)
                        for (int t = 1; t <= N; ++t) {
                            if (contains(J, t)) continue;
                            for (auto& [Ipp, Jpp] : clique(k, with(I, s), with(J, t), N)) target.emplace(s, t, Ipp, Jpp);
                        }
                    ++cases;
                    if (images.size() != domain) rep.fail("beta not injective for I=" + detail::set_str(I) + " J=" + detail::set_str(J));
                    if (images != target) rep.fail("beta not onto for I=" + detail::set_str(I) + " J=" + detail::set_str(J));
                }
    rep.info["cases"] = cases;
    return rep;
}

/// X closed form: equality for s != t (all auxiliary U avoiding I + s + I''); X_closed = X_def + 1 at s = t.
inline Report verify_x_closed_form(int N) {
    Report rep{"lemma_x_closed_form", {{"N", N}}};
    long cases = 0, diagonal = 0;
    detail::for_each_xy_config(N, [&](int, const IndexSet& I, const IndexSet& J, int s, int t, const IndexSet& Ipp,
                                      const IndexSet& Jpp) {
        for (auto& U : all_subsets(complement(set_union(with(I, s), Ipp), N))) {
            int d = X_def(I, J, Ipp, Jpp, s, t, U, N), c = X_closed(I, J, Ipp, s, t, U);
            ++cases;
            if (s == t) ++diagonal;
            if (c != d + (s == t ? 1 : 0) && rep.residuals.size() < 5)
                rep.fail("I=" + detail::set_str(I) + " J=" + detail::set_str(J) + " s=" + std::to_string(s) +
                         " t=" + std::to_string(t) + " U=" + detail::set_str(U));
        }
    });
    rep.info["cases"] = cases;
    rep.info["cases_with_s_equal_t"] = diagonal;
    return rep;
}

/// Consecutive r < r' in (s, t] - I'' give Y(r') - Y(r) = 2 (telescoping), with U the full complement.
inline Report verify_telescoping(int N) {
    Report rep{"lemma_telescoping", {{"N", N}}};
    long cases = 0;
    detail::for_each_xy_config(N, [&](int, const IndexSet& I, const IndexSet& J, int s, int t, const IndexSet& Ipp,
                                      const IndexSet& Jpp) {
        if (s >= t) return;
        IndexSet U = complement(set_union(with(I, s), Ipp), N);
        std::vector<int> rs;
        for (int r = s + 1; r <= t; ++r)
            if (!contains(Ipp, r)) rs.push_back(r);
        for (std::size_t a = 0; a + 1 < rs.size(); ++a) {
            ++cases;
            int d = Y(I, J, Ipp, Jpp, s, t, rs[a + 1], U, N) - Y(I, J, Ipp, Jpp, s, t, rs[a], U, N);
            if (d != 2 && rep.residuals.size() < 5)
                rep.fail("I=" + detail::set_str(I) + " J=" + detail::set_str(J) + " s=" + std::to_string(s) +
                         " t=" + std::to_string(t) + " difference " + std::to_string(d));
        }
    });
    rep.info["cases"] = cases;
    return rep;
}

/// At the minimal r in (s, t] - I'': Y = l_U(tau_{I''+s, J''+t}) + ind_{J''}(t) - 1, with U the full complement.
inline Report verify_min_r_form(int N) {
    Report rep{"lemma_min_r", {{"N", N}}};
    long cases = 0;
    detail::for_each_xy_config(N, [&](int, const IndexSet& I, const IndexSet& J, int s, int t, const IndexSet& Ipp,
                                      const IndexSet& Jpp) {
        if (s >= t) return;
        IndexSet U = complement(set_union(with(I, s), Ipp), N);
        int r = s + 1;
        while (r <= t && contains(Ipp, r)) ++r;
        if (r > t) return;
        ++cases;
        int lhs = Y(I, J, Ipp, Jpp, s, t, r, U, N);
        int rhs = length_U(tau_op(with(Ipp, s), with(Jpp, t)), U) + ind(Jpp, t) - 1;
        if (lhs != rhs && rep.residuals.size() < 5)
            rep.fail("I=" + detail::set_str(I) + " J=" + detail::set_str(J) + " s=" + std::to_string(s) +
                     " t=" + std::to_string(t) + " r=" + std::to_string(r));
    });
    rep.info["cases"] = cases;
    return rep;
}

}  // namespace qmat
