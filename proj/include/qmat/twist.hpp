#pragma once

#include <optional>

#include "qmat/fixtures.hpp"
#include "qmat/minors.hpp"
#include "qmat/pbw.hpp"
#include "qmat/rmatrix.hpp"

namespace qmat {

/// The degree <= 2 twist maps Phi: REA -> FRT and Psi = Phi^{-1}, by R-matrix contraction.
class Twist {
  public:
    explicit Twist(int N)
        : N_(N), rea_(Algebra::REA, N), frt_(Algebra::FRT, N), R_(build_R(N)), Rinv_(build_Rinv(N)),
          Rt_(build_Rtilde(N)) {}

    int N() const { return N_; }
    Engine& rea() { return rea_; }
    Engine& frt() { return frt_; }

    /// R^{in}_{st} x^s_m Rtilde^{mk}_{jn} x^t_l, normalized.
    NCPoly phi_pair(int i, int j, int k, int l) {
        NCPoly::check_index(N_, i, j);
        NCPoly::check_index(N_, k, l);
        Terms t;
        for (int n = 1; n <= N_; ++n)
            for (int s = 1; s <= N_; ++s)
                for (int tt = 1; tt <= N_; ++tt) {
                    RatFunc c1 = R(R_, i, n, s, tt);
                    if (c1.is_zero()) continue;
                    for (int m = 1; m <= N_; ++m) {
                        RatFunc c2 = R(Rt_, m, k, j, n);
                        if (!c2.is_zero()) add_into(t, Word{gen(s, m), gen(tt, l)}, c1 * c2);
                    }
                }
        return frt_.normal_form(NCPoly(Algebra::FRT, N_, std::move(t)));
    }

    /// (R^{-1})^{ik}_{su} a^s_t R^{tu}_{jv} a^v_l, normalized.
    NCPoly psi_pair(int i, int j, int k, int l) {
        NCPoly::check_index(N_, i, j);
        NCPoly::check_index(N_, k, l);
        Terms t;
        for (int s = 1; s <= N_; ++s)
            for (int u = 1; u <= N_; ++u) {
                RatFunc c1 = R(Rinv_, i, k, s, u);
                if (c1.is_zero()) continue;
                for (int tt = 1; tt <= N_; ++tt)
                    for (int v = 1; v <= N_; ++v) {
                        RatFunc c2 = R(R_, tt, u, j, v);
                        if (!c2.is_zero()) add_into(t, Word{gen(s, tt), gen(v, l)}, c1 * c2);
                    }
            }
        return rea_.normal_form(NCPoly(Algebra::REA, N_, std::move(t)));
    }

    /// Phi on REA elements of degree <= 2; the input is normalized first.
    NCPoly phi(const NCPoly& p) { return apply(rea_.normal_form(p), Algebra::FRT, true); }
    /// Psi on FRT elements of degree <= 2; the input is normalized first.
    NCPoly psi(const NCPoly& p) { return apply(frt_.normal_form(p), Algebra::REA, false); }

  private:
    int N_;
    Engine rea_, frt_;
    TensorOp R_, Rinv_, Rt_;

    RatFunc R(const TensorOp& op, int a, int b, int c, int d) const {
        return op.get((a - 1) * N_ + (b - 1), (c - 1) * N_ + (d - 1));
    }

    NCPoly apply(const NCPoly& p, Algebra target, bool forward) {
        if (p.N() != N_) throw Error("twist: N mismatch");
        NCPoly r(target, N_);
        for (auto& [w, c] : p.terms()) {
            if (w.size() > 2) throw OutOfScope("twist maps are implemented in degree <= 2 only");
            if (w.size() < 2) {
                r += NCPoly::monomial(target, N_, w, c);
                continue;
            }
            NCPoly img = forward ? phi_pair(w[0].row, w[0].col, w[1].row, w[1].col)
                                 : psi_pair(w[0].row, w[0].col, w[1].row, w[1].col);
            r += c * img;
        }
        return r;
    }
};

/// Closed-form case table for Phi(a^i_j a^k_l); empty when (i, j, k, l) is not covered (i = j = k).
inline std::optional<NCPoly> phi2_table(int i, int j, int k, int l, int N) {
    auto x = [&](int a, int b, int c, int d) { return NCPoly::monomial(Algebra::FRT, N, Word{gen(a, b), gen(c, d)}); };
    if (i < k && j != k) return x(i, j, k, l);
    if (i == k && j != k) return RatFunc::q(1) * x(i, j, k, l);
    if (i < j && j == k) {
        NCPoly r = RatFunc::q(-1) * x(i, j, j, l);
        for (int m = j + 1; m <= N; ++m) r += (-RatFunc(qdiff()) * RatFunc::q(-2 * (m - j))) * x(i, m, m, l);
        return r;
    }
    return std::nullopt;
}

/// Phi on an ordered pair a^i_j a^k_l.
inline NCPoly phi2(int i, int j, int k, int l, int N) {
    if (!(gen(i, j) <= gen(k, l))) throw ContractViolation("phi2: pair is not PBW-ordered");
    return Twist(N).phi_pair(i, j, k, l);
}

inline NCPoly psi2(int i, int j, int k, int l, int N) { return Twist(N).psi_pair(i, j, k, l); }

inline NCPoly psi_quadratic(const NCPoly& p) {
    if (p.algebra() != Algebra::FRT) throw Error("psi_quadratic: expects an FRT element");
    return Twist(p.N()).psi(p);
}

inline NCPoly phi_quadratic(const NCPoly& p) {
    if (p.algebra() != Algebra::REA) throw Error("phi_quadratic: expects an REA element");
    return Twist(p.N()).phi(p);
}

/// Stored twisted minor, if the fixture file has one for (I, J, N).
inline std::optional<NCPoly> tmin_fixture(const IndexSet& I, const IndexSet& J, int N) {
    for (auto& f : load_fixtures())
        if (f.kind == "tmin" && f.N == N && f.I == I && f.J == J) return f.expected();
    return std::nullopt;
}

/// Psi(dlmin(I, J)) for #I <= 2; larger minors come from the fixture store.
inline NCPoly tmin(const IndexSet& I, const IndexSet& J, int N, Twist* tw = nullptr) {
    detail::check_minor(I, J, N);
    if (I.size() <= 2) {
        if (tw) return tw->psi(dlmin(I, J, N));
        return psi_quadratic(dlmin(I, J, N));
    }
    if (auto f = tmin_fixture(I, J, N)) return *f;
    throw OutOfScope("twisted minors of size > 2 are only available from the fixture store");
}

/// Phi(a^i_j Tmin(I, J)) against the two-case formula, for #I = 1 and i < min(I).
inline Report verify_phi_row_lemma(int N) {
    Report rep{"phi_row_lemma", {{"N", N}}};
    Twist tw(N);
    int checked = 0;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int a = i + 1; a <= N; ++a)
                for (int b = 1; b <= N; ++b) {
                    IndexSet I{a}, J{b};
                    NCPoly lhs = tw.phi(NCPoly::generator(Algebra::REA, N, i, j) * tmin(I, J, N, &tw));
                    NCPoly xij = NCPoly::generator(Algebra::FRT, N, i, j);
                    NCPoly rhs(Algebra::FRT, N);
                    if (!contains(I, j)) {
                        rhs = xij * dlmin(I, J, N);
                    } else {
                        rhs = RatFunc::q(-1) * (xij * dlmin(I, J, N));
                        for (int k = j + 1; k <= N; ++k) {
                            if (contains(I, k)) continue;
                            int nk = count_between(I, j, k);
                            RatFunc c = (RatFunc::q(-1) - RatFunc::q(1)) * RatFunc::q(j - k) *
                                        RatFunc(LaurentPoly::monomial(Rational(nk % 2 ? -1 : 1), nk));
                            rhs += c * (NCPoly::generator(Algebra::FRT, N, i, k) * dlmin(with(without(I, j), k), J, N));
                        }
                    }
                    ++checked;
                    NCPoly d = tw.frt().normal_form(lhs - rhs);
                    if (!d.is_zero())
                        rep.fail("i=" + std::to_string(i) + " j=" + std::to_string(j) + " I={" + std::to_string(a) +
                                 "} J={" + std::to_string(b) + "}: " + to_text(d));
                }
    rep.info["cases"] = checked;
    return rep;
}

}  // namespace qmat
