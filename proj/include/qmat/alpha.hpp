#pragma once

#include "qmat/central.hpp"
#include "qmat/rmatrix.hpp"
#include "qmat/twist.hpp"

namespace qmat {

/// sum_{I,J} w(J) f^J_I a^{i_1}_{j_1} ... a^{i_k}_{j_k} with w(J) = prod_t q^{a j_t + b}, in normal form.
inline NCPoly alpha_k(Engine& eng, const TensorOp& f, int a, int b) {
    if (f.N() != eng.N() || eng.algebra() != Algebra::REA) throw Error("alpha_k: engine does not match");
    Terms t;
    for (int r = 0; r < f.dim(); ++r) {
        auto J = f.multi(r);
        int e = 0;
        for (int j : J) e += a * j + b;
        for (auto& [c, v] : f.row(r)) {
            auto I = f.multi(c);
            Word w;
            for (int s = 0; s < f.k(); ++s) w.push_back(gen(I[s], J[s]));
            add_into(t, w, v * RatFunc::q(e));
        }
    }
    return eng.normal_form(NCPoly(Algebra::REA, f.N(), std::move(t)));
}

/// Searches w(J) = prod q^{a j_t + b}, |a|, |b| <= range, against alpha_k(rho(T_(k...1))) = s_k and
/// alpha_k(rho(omega_k)) = c_k (also tried with the normalized omega_bar_k), for each N in Ns.
inline Report alpha_calibrate(int k, const std::vector<int>& Ns, int range = 4) {
    Report rep{"alpha_calibrate", {{"k", k}, {"N", Ns}, {"range", range}}};
    nlohmann::json s_ok = nlohmann::json::array(), c_ok = nlohmann::json::array(), cbar_ok = nlohmann::json::array(),
                   both = nlohmann::json::array();
    std::vector<std::unique_ptr<Engine>> engs;
    std::vector<TensorOp> cyc, om, ombar;
    std::vector<NCPoly> sk, ck;
    for (int N : Ns) {
        engs.push_back(std::make_unique<Engine>(Algebra::REA, N));
        cyc.push_back(rho(t_cycle(1, k, k), N));
        om.push_back(rho(omega(k, k), N));
        ombar.push_back(rho(omega_bar(k, k), N));
        sk.push_back(s_k(*engs.back(), k));
        ck.push_back(c_k(N, k));
    }
    for (int a = -range; a <= range; ++a)
        for (int b = -range; b <= range; ++b) {
            bool s = true, c = true, cb = true;
            for (std::size_t n = 0; n < Ns.size(); ++n) {
                s = s && alpha_k(*engs[n], cyc[n], a, b) == sk[n];
                c = c && alpha_k(*engs[n], om[n], a, b) == ck[n];
                cb = cb && alpha_k(*engs[n], ombar[n], a, b) == ck[n];
            }
            nlohmann::json ab = {a, b};
            if (s) s_ok.push_back(ab);
            if (c) c_ok.push_back(ab);
            if (cb) cbar_ok.push_back(ab);
            if (s && (c || cb)) both.push_back(ab);
        }
    rep.info["weights_matching_s_k"] = s_ok;
    rep.info["weights_matching_c_k_from_omega"] = c_ok;
    rep.info["weights_matching_c_k_from_omega_bar"] = cbar_ok;
    rep.info["weights_matching_both"] = both;
    if (both.empty()) rep.fail("no diagonal weight of this form satisfies both anchors");
    return rep;
}

/// FRT-side realization twisted back by Psi: Psi(sum q^{-2 wt(J)} f^J_I x^{i_1}_{j_1} ...), k <= 2.
inline NCPoly alpha_twisted(Twist& tw, const TensorOp& f) {
    if (f.k() > 2) throw OutOfScope("alpha_twisted needs Psi beyond degree 2");
    if (f.N() != tw.N()) throw Error("alpha_twisted: N mismatch");
    Terms t;
    for (int r = 0; r < f.dim(); ++r) {
        auto J = f.multi(r);
        int e = 0;
        for (int j : J) e -= 2 * j;
        for (auto& [c, v] : f.row(r)) {
            auto I = f.multi(c);
            Word w;
            for (int s = 0; s < f.k(); ++s) w.push_back(gen(I[s], J[s]));
            add_into(t, w, v * RatFunc::q(e));
        }
    }
    return tw.psi(NCPoly(Algebra::FRT, f.N(), std::move(t)));
}

/// The twisted realization against s_1, s_2, c_2 and strand multiplicativity.
inline Report verify_alpha_twisted(int N) {
    Report rep{"alpha_twisted", {{"N", N}}};
    Twist tw(N);
    Engine& eng = tw.rea();
    NCPoly s1 = s_k(eng, 1), s2 = s_k(eng, 2);
    auto check = [&](const std::string& what, const NCPoly& got, const NCPoly& want) {
        if (eng.normal_form(got - want).is_zero()) return;
        rep.fail(what + ": " + to_text(got));
    };
    check("alpha(id_V) = s_1", alpha_twisted(tw, TensorOp::identity(N, 1)), s1);
    check("alpha(id (x) id) = s_1^2", alpha_twisted(tw, TensorOp::identity(N, 2)), eng.product(s1, s1));
    if (N >= 1) {
        check("alpha(T_1) = q^-1 s_2", alpha_twisted(tw, rho(HeckeElt::T(1, 2), N)), RatFunc::q(-1) * s2);
        check("alpha(omega_bar_2) = c_2", alpha_twisted(tw, rho(omega_bar(2, 2), N)),
              N >= 2 ? c_k(N, 2) : NCPoly(Algebra::REA, N));
    }
    return rep;
}

}  // namespace qmat
