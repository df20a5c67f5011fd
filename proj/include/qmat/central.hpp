#pragma once

#include <future>
#include <map>
#include <thread>

#include "qmat/linalg.hpp"
#include "qmat/minors.hpp"
#include "qmat/pbw.hpp"
#include "qmat/report.hpp"
#include "qmat/twist.hpp"

namespace qmat {

/// N x N matrix over one algebra; entry (r, c) of the generator matrix is the generator with indices (r, c).
using QMatrix = std::vector<std::vector<NCPoly>>;

inline QMatrix generator_matrix(const Engine& eng) {
    int N = eng.N();
    QMatrix A(N, std::vector<NCPoly>(N));
    for (int r = 1; r <= N; ++r)
        for (int c = 1; c <= N; ++c) A[r - 1][c - 1] = eng.generator(r, c);
    return A;
}

inline QMatrix identity_matrix(const Engine& eng) {
    int N = eng.N();
    QMatrix I(N, std::vector<NCPoly>(N, NCPoly(eng.algebra(), N)));
    for (int i = 0; i < N; ++i) I[i][i] = eng.one();
    return I;
}

/// (XY)[r][c] = normal_form(sum_m X[r][m] Y[m][c]).
inline QMatrix mat_mul(Engine& eng, const QMatrix& X, const QMatrix& Y) {
    std::size_t N = X.size();
    if (Y.size() != N) throw Error("mat_mul: size mismatch");
    QMatrix Z(N, std::vector<NCPoly>(N, NCPoly(eng.algebra(), eng.N())));
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) {
            NCPoly s(eng.algebra(), eng.N());
            for (std::size_t m = 0; m < N; ++m) s += X[r][m] * Y[m][c];
            Z[r][c] = eng.normal_form(s);
        }
    return Z;
}

inline QMatrix mat_pow(Engine& eng, const QMatrix& A, int k) {
    if (k < 0) throw Error("mat_pow: negative exponent");
    QMatrix P = identity_matrix(eng);
    for (int i = 0; i < k; ++i) P = mat_mul(eng, P, A);
    return P;
}

/// sum_i q^{-2i} M[i][i]
inline NCPoly trq(Engine& eng, const QMatrix& M) {
    NCPoly s(eng.algebra(), eng.N());
    for (std::size_t i = 0; i < M.size(); ++i) s += RatFunc::q(-2 * int(i + 1)) * M[i][i];
    return eng.normal_form(s);
}

/// c_k from the permutation formula: the length is taken in S_N, with the complement of I fixed.
inline NCPoly ck_direct(int N, int k) {
    if (k < 0 || k > N) throw Error("c_k: need 0 <= k <= N");
    Terms t;
    for (auto& I : subsets(range_set(1, N), k)) {
        IndexSet img = I;
        do {
            std::vector<int> full = range_set(1, N);
            Word w;
            int e = 0;
            for (int a = 0; a < k; ++a) {
                full[I[a] - 1] = img[a];
                w.push_back(gen(I[a], img[a]));
                if (img[a] > I[a]) ++e;
            }
            int l = length_perm(full);
            add_into(t, w, RatFunc(LaurentPoly::monomial(Rational(l % 2 ? -1 : 1), l + e - 2 * wt(I))));
        } while (std::next_permutation(img.begin(), img.end()));
    }
    return NCPoly(Algebra::REA, N, std::move(t));
}

/// c_k = sum over k-subsets I of ptmin_{I^c}(I, I).
inline NCPoly ck_minors(int N, int k) {
    if (k < 0 || k > N) throw Error("c_k: need 0 <= k <= N");
    NCPoly r(Algebra::REA, N);
    for (auto& I : subsets(range_set(1, N), k)) r += ptmin(complement(I, N), I, I, N);
    return r;
}

/// c_k through both paths; throws if they disagree.
inline NCPoly c_k(int N, int k) {
    NCPoly a = ck_direct(N, k), b = ck_minors(N, k);
    if (a != b) throw Error("c_k: permutation formula and truncated-minor sum disagree");
    return a;
}

/// s_k = tr_q(A^k).
inline NCPoly s_k(Engine& eng, int k) { return trq(eng, mat_pow(eng, generator_matrix(eng), k)); }
inline NCPoly s_k(int N, int k) {
    Engine eng(Algebra::REA, N);
    return s_k(eng, k);
}

/// Shared engine plus cached powers of A, c_k and s_k for one N.
class Central {
  public:
    explicit Central(int N, EngineOptions opt = {}) : N_(N), eng_(Algebra::REA, N, opt) {
        powers_.push_back(identity_matrix(eng_));
    }

    int N() const { return N_; }
    Engine& engine() { return eng_; }

    const QMatrix& power(int k) {
        while (int(powers_.size()) <= k) powers_.push_back(mat_mul(eng_, powers_.back(), generator_matrix(eng_)));
        return powers_[k];
    }
    const NCPoly& c(int k) {
        auto it = c_.find(k);
        if (it == c_.end()) it = c_.emplace(k, c_k(N_, k)).first;
        return it->second;
    }
    const NCPoly& s(int k) {
        auto it = s_.find(k);
        if (it == s_.end()) it = s_.emplace(k, trq(eng_, power(k))).first;
        return it->second;
    }

  private:
    int N_;
    Engine eng_;
    std::vector<QMatrix> powers_;
    std::map<int, NCPoly> c_, s_;
};

/// Generators whose commutator with p does not vanish, with the residual.
inline std::vector<std::pair<GenId, NCPoly>> noncommuting_generators(Engine& eng, const NCPoly& p,
                                                                    const std::vector<GenId>& gens) {
    std::vector<std::pair<GenId, NCPoly>> out;
    for (GenId g : gens) {
        NCPoly c = eng.commutator(p, eng.generator(g.row, g.col));
        if (!c.is_zero()) out.emplace_back(g, c);
    }
    return out;
}

inline std::vector<GenId> all_generators(int N) {
    std::vector<GenId> gens;
    for (int r = 1; r <= N; ++r)
        for (int c = 1; c <= N; ++c) gens.push_back(gen(r, c));
    return gens;
}

/// Commutators of each named element with all generators; the generators are split over `jobs` threads.
inline Report verify_central_elements(int N, const std::vector<std::pair<std::string, NCPoly>>& elts, int jobs = 1,
                                      EngineOptions opt = {}) {
    Report rep{"central", {{"N", N}}};
    auto gens = all_generators(N);
    jobs = std::max(1, std::min<int>(jobs, int(gens.size())));
    for (auto& [name, p] : elts) {
        std::vector<std::future<std::vector<std::pair<GenId, NCPoly>>>> futs;
        for (int w = 0; w < jobs; ++w) {
            std::vector<GenId> mine;
            for (std::size_t g = w; g < gens.size(); g += jobs) mine.push_back(gens[g]);
            futs.push_back(std::async(std::launch::async, [N, &p, mine, opt] {
                Engine eng(Algebra::REA, N, opt);
                return noncommuting_generators(eng, p, mine);
            }));
        }
        for (auto& f : futs)
            for (auto& [g, c] : f.get())
                rep.fail(name + " with a[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]: " + to_text(c));
    }
    return rep;
}

/// c_k and s_k commute with every generator.
inline Report verify_central(int N, int k, int jobs = 1, EngineOptions opt = {}) {
    if (k < 1 || k > N) throw Error("verify_central: need 1 <= k <= N");
    Engine eng(Algebra::REA, N, opt);
    Report rep = verify_central_elements(N, {{"c_" + std::to_string(k), c_k(N, k)}, {"s_" + std::to_string(k), s_k(eng, k)}},
                                         jobs, opt);
    rep.params["k"] = k;
    return rep;
}

/// sum_{k=0}^N (-q^2)^{N-k} c_{N-k} A^k reduces to the zero matrix.
inline Report verify_qch(Central& C) {
    int N = C.N();
    Report rep{"qch", {{"N", N}}};
    Engine& eng = C.engine();
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            NCPoly s(Algebra::REA, N);
            for (int k = 0; k <= N; ++k) {
                int e = N - k;
                RatFunc coef(LaurentPoly::monomial(Rational(e % 2 ? -1 : 1), 2 * e));
                NCPoly ck = e == 0 ? eng.one() : C.c(e);
                s += coef * (ck * C.power(k)[r][c]);
            }
            NCPoly z = eng.normal_form(s);
            if (!z.is_zero()) rep.fail("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " + to_text(z));
        }
    return rep;
}

inline Report verify_qch(int N) {
    Central C(N);
    return verify_qch(C);
}

namespace detail {

/// Expresses `target` as sum_j lambda_j basis_j by matching PBW coefficients.
inline LinearSolution fit_combination(const NCPoly& target, const std::vector<NCPoly>& basis) {
    std::map<Word, std::size_t, WordLess> rows;
    auto index = [&](const Word& w) { return rows.try_emplace(w, rows.size()).first->second; };
    for (auto& [w, c] : target.terms()) index(w);
    for (auto& b : basis)
        for (auto& [w, c] : b.terms()) index(w);
    DenseMat A(rows.size(), std::vector<RatFunc>(basis.size(), RatFunc(0)));
    std::vector<RatFunc> rhs(rows.size(), RatFunc(0));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (auto& [w, c] : basis[j].terms()) A[rows[w]][j] = c;
    for (auto& [w, c] : target.terms()) rhs[rows[w]] = c;
    return solve_linear(std::move(A), std::move(rhs));
}

inline nlohmann::json solution_json(const LinearSolution& s) {
    nlohmann::json j = {{"consistent", s.consistent}, {"unique", s.unique}};
    if (s.consistent) {
        nlohmann::json x = nlohmann::json::array();
        for (auto& v : s.x) x.push_back(v.str());
        j["lambda"] = x;
    }
    return j;
}

}  // namespace detail

struct NewtonFit {
    /// [k]_q c_k = sum_j lambda_j c_{j-1} s_{k-j+1}
    LinearSolution fitted;
    /// [k]_q s_k = sum_j lambda_j c_{j-1} s_{k-j}, for s_0 = 1 and s_0 = sum_i q^{-2i}
    LinearSolution printed_s0_one, printed_s0_trace;
};

/// Solves for the Newton-type coefficients; `perturb_c1` adds a^1_1 to c_1 as a negative control.
inline NewtonFit fit_newton_shapes(Central& C, int k, bool perturb_c1 = false) {
    int N = C.N();
    if (k < 1 || k > N) throw Error("fit_newton: need 1 <= k <= N");
    Engine& eng = C.engine();
    auto c = [&](int j) {
        if (j == 0) return eng.one();
        NCPoly v = C.c(j);
        if (perturb_c1 && j == 1) v += eng.generator(1, 1);
        return v;
    };
    NCPoly trace_one(Algebra::REA, N);
    for (int i = 1; i <= N; ++i) trace_one += NCPoly::scalar(Algebra::REA, N, RatFunc::q(-2 * i));
    auto s = [&](int j, const NCPoly& s0) { return j == 0 ? s0 : C.s(j); };
    RatFunc qk(qint(k));
    NewtonFit out;
    std::vector<NCPoly> basis;
    for (int j = 1; j <= k; ++j) basis.push_back(eng.product(c(j - 1), s(k - j + 1, eng.one())));
    out.fitted = detail::fit_combination(qk * c(k), basis);
    for (int conv = 0; conv < 2; ++conv) {
        NCPoly s0 = conv == 0 ? eng.one() : trace_one;
        std::vector<NCPoly> b;
        for (int j = 1; j <= k; ++j) b.push_back(eng.product(c(j - 1), s(k - j, s0)));
        (conv == 0 ? out.printed_s0_one : out.printed_s0_trace) = detail::fit_combination(qk * s(k, s0), b);
    }
    return out;
}

/// lambda_j = (-q^-2)^{k-j}
inline std::vector<RatFunc> newton_expected(int k) {
    std::vector<RatFunc> v;
    for (int j = 1; j <= k; ++j) v.push_back((-RatFunc::q(-2)).pow(k - j));
    return v;
}

inline Report fit_newton(Central& C, int k, bool perturb_c1 = false) {
    Report rep{"fit_newton", {{"N", C.N()}, {"k", k}}};
    if (perturb_c1) rep.params["perturbed_c1"] = true;
    NewtonFit f = fit_newton_shapes(C, k, perturb_c1);
    rep.info["fitted_shape"] = "[k]_q c_k = sum_j lambda_j c_{j-1} s_{k-j+1}";
    rep.info["fitted"] = detail::solution_json(f.fitted);
    rep.info["printed_shape"] = "[k]_q s_k = sum_j lambda_j c_{j-1} s_{k-j}";
    nlohmann::json printed = nlohmann::json::array();
    for (int j = 1; j <= k; ++j) printed.push_back(RatFunc(qfact(j - 1)).inv().str());
    rep.info["printed_coefficients"] = printed;
    for (auto [name, sol] : {std::pair{"printed_s0=1", &f.printed_s0_one}, std::pair{"printed_s0=trq(1)", &f.printed_s0_trace}}) {
        nlohmann::json j = detail::solution_json(*sol);
        if (!sol->consistent) j["note"] = "no identity of this shape";
        rep.info[name] = j;
    }
    std::vector<RatFunc> pc;
    for (int j = 1; j <= k; ++j) pc.push_back(RatFunc(qfact(j - 1)).inv());
    bool printed_solvable = f.printed_s0_one.consistent || f.printed_s0_trace.consistent;
    std::string rel = printed_solvable ? "the printed shape admits a solution; "
                                       : "the printed shape admits no solution for either s_0; ";
    if (f.fitted.consistent && f.fitted.unique)
        rel += f.fitted.x == pc ? "the fitted coefficients coincide with 1/[j-1]_q!"
                                : "the fitted coefficients (-q^-2)^{k-j} replace 1/[j-1]_q!, with s_{k-j+1} in place of s_{k-j} and c_k in place of s_k on the left";
    rep.info["relation"] = rel;
    if (!f.fitted.consistent) {
        rep.fail("no identity of the fitted shape");
    } else if (!f.fitted.unique) {
        rep.fail("fitted coefficients are not unique");
    } else if (f.fitted.x != newton_expected(k)) {
        rep.fail("fitted coefficients differ from (-q^-2)^{k-j}");
    }
    return rep;
}

/// Both sides of the clique-sum identity over Cl_k(I, J), in the REA.
inline Report verify_clique_sum(int N, int k, const IndexSet& I, const IndexSet& J, Twist* tw = nullptr) {
    Report rep{"clique_sum", {{"N", N}, {"k", k}, {"I", I}, {"J", J}}};
    std::optional<Twist> own;
    if (!tw) tw = &own.emplace(N);
    auto cl = clique(k, I, J, N);
    if (k - int(I.size()) > 2)
        for (auto& [Ip, Jp] : cl)
            if (!tmin_fixture(Ip, Jp, N)) throw OutOfScope("clique needs twisted minors of size > 2 that are not stored");
    NCPoly lhs(Algebra::REA, N), rhs(Algebra::REA, N);
    for (auto& [Ip, Jp] : cl) {
        IndexSet U = complement(set_union(I, Ip), N);
        lhs += ptmin(U, Ip, Jp, N);
        int l = length_U(tau_op(Ip, Jp), U);
        rhs += RatFunc(LaurentPoly::monomial(Rational(l % 2 ? -1 : 1), l)) * tmin(Ip, Jp, N, tw);
    }
    NCPoly d = tw->rea().normal_form(lhs - rhs);
    rep.info["clique_size"] = cl.size();
    if (!d.is_zero()) rep.fail(to_text(d));
    return rep;
}

/// Psi(D_k) = c_k, exactly (k <= 2).
inline Report verify_psi_dlinv(int N, int k) {
    Report rep{"psi_dlinv", {{"N", N}, {"k", k}}};
    if (k > 2) throw OutOfScope("Psi is implemented in degree <= 2 only");
    NCPoly img = psi_quadratic(dl_coinv(k, N)), ck = c_k(N, k);
    if (img != ck) {
        // report the ratio when the two are proportional
        auto sol = detail::fit_combination(img, {ck});
        rep.fail(sol.consistent ? "scalar multiple " + sol.x[0].str() : "not proportional: " + to_text(img));
    } else {
        rep.info["scalar"] = "1";
    }
    return rep;
}

/// Counit: a^i_j -> delta_ij, extended multiplicatively over words.
inline RatFunc counit(const NCPoly& p) {
    if (p.algebra() != Algebra::REA) throw Error("counit: expects an REA element");
    RatFunc s(0);
    for (auto& [w, c] : p.terms()) {
        bool diag = std::all_of(w.begin(), w.end(), [](GenId g) { return g.row == g.col; });
        if (diag) s += c;
    }
    return s;
}

/// Every straightening rule is respected by the counit.
inline Report counit_relation_audit(int N) {
    Report rep{"counit_relations", {{"N", N}}};
    Engine eng(Algebra::REA, N);
    int n = 0;
    for (GenId g : all_generators(N))
        for (GenId h : all_generators(N)) {
            if (!(h < g)) continue;
            ++n;
            NCPoly w = NCPoly::monomial(Algebra::REA, N, Word{g, h});
            if (counit(w) != counit(straighten_pair(Algebra::REA, g, h, N)))
                rep.fail(word_str(Algebra::REA, Word{g, h}));
        }
    rep.info["relations"] = n;
    return rep;
}

/// Univariate polynomial in t with RatFunc coefficients, lowest degree first.
using TPoly = std::vector<RatFunc>;

/// Divides by (t - r) in sequence; returns false on a nonzero remainder or a non-unit final quotient.
inline bool factors_as(TPoly p, const std::vector<RatFunc>& roots) {
    for (auto& r : roots) {
        if (p.size() < 2) return false;
        TPoly quot(p.size() - 1, RatFunc(0));
        RatFunc carry(0);
        for (std::size_t i = p.size(); i-- > 0;) {
            RatFunc v = p[i] + carry * r;
            if (i == 0) {
                if (!v.is_zero()) return false;
            } else {
                quot[i - 1] = v;
            }
            carry = v;
        }
        p = quot;
    }
    return p.size() == 1 && p[0] == RatFunc(1);
}

inline Report verify_unipotent(int N) {
    Report rep{"unipotent", {{"N", N}}};
    Report audit = counit_relation_audit(N);
    if (!audit.pass)
        for (auto& r : audit.residuals) rep.fail("counit breaks relation " + r.get<std::string>());
    std::vector<RatFunc> eps(N + 1, RatFunc(1));
    for (int k = 1; k <= N; ++k) {
        eps[k] = counit(c_k(N, k));
        RatFunc expect(0);
        for (auto& I : subsets(range_set(1, N), k)) expect += RatFunc::q(-2 * wt(I));
        if (eps[k] != expect) rep.fail("eps(c_" + std::to_string(k) + ") = " + eps[k].str());
    }
    TPoly plain(N + 1), qch(N + 1);
    for (int k = 0; k <= N; ++k) {
        int e = N - k;
        plain[k] = RatFunc(e % 2 ? -1 : 1) * eps[e];
        qch[k] = RatFunc(LaurentPoly::monomial(Rational(e % 2 ? -1 : 1), 2 * e)) * eps[e];
    }
    std::vector<RatFunc> roots, shifted;
    for (int i = 1; i <= N; ++i) {
        roots.push_back(RatFunc::q(-2 * i));
        shifted.push_back(RatFunc::q(2 - 2 * i));
    }
    bool plain_ok = factors_as(plain, roots);
    bool qch_ok = factors_as(qch, shifted);
    rep.info["charpoly_factors_as_prod(t - q^-2i)"] = plain_ok;
    rep.info["qch_poly_factors_as_prod(t - q^(2-2i))"] = qch_ok;
    rep.info["qch_poly_factors_as_prod(t - q^-2i)"] = factors_as(qch, roots);
    if (!plain_ok) rep.fail("characteristic polynomial under the counit does not factor");
    if (!qch_ok) rep.fail("weighted polynomial under the counit does not factor");
    return rep;
}

/// c-top formula for the lower-right block A_{>=k}, reindexed from {k..N}.
inline NCPoly detq_block(int N, int k) {
    int M = N - k + 1;
    NCPoly top = c_k(M, M);
    Terms t;
    for (auto& [w, c] : top.terms()) {
        Word v;
        for (GenId g : w) v.push_back(gen(g.row + k - 1, g.col + k - 1));
        add_into(t, v, c);
    }
    return NCPoly(Algebra::REA, N, std::move(t));
}

/// Closure of the span of A_{>=k} entries under products, and centrality of detq(A_{>=k}) in it.
inline Report submatrix_suite(int N, int k) {
    Report rep{"subalgebra", {{"N", N}, {"k", k}}};
    if (k < 1 || k > N) throw Error("submatrix_suite: need 1 <= k <= N");
    Engine eng(Algebra::REA, N);
    std::vector<GenId> block;
    for (int r = k; r <= N; ++r)
        for (int c = k; c <= N; ++c) block.push_back(gen(r, c));
    for (GenId u : block)
        for (GenId v : block) {
            NCPoly p = eng.normal_form(NCPoly::monomial(Algebra::REA, N, Word{u, v}));
            for (auto& [w, c] : p.terms())
                for (GenId g : w)
                    if (g.row < k || g.col < k) {
                        rep.fail("closure: " + word_str(Algebra::REA, Word{u, v}) + " leaves the block");
                        goto next;
                    }
        next:;
        }
    NCPoly d = detq_block(N, k);
    rep.info["detq"] = to_text(d);
    for (auto& [g, c] : noncommuting_generators(eng, d, block))
        rep.fail("detq does not commute with a[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]");
    return rep;
}

/// q = 1 image as a commutative polynomial: sorted word -> coefficient.
inline std::map<Word, Rational> classical_limit(const NCPoly& p) {
    std::map<Word, Rational> out;
    for (auto& [w, c] : p.terms()) {
        Word s = w;
        std::sort(s.begin(), s.end());
        out[s] += c.eval_q1();
    }
    std::erase_if(out, [](auto& kv) { return kv.second == 0; });
    return out;
}

/// Sum of the principal k x k minors of a commuting matrix of indeterminates.
inline std::map<Word, Rational> principal_minor_sum(int N, int k) {
    std::map<Word, Rational> out;
    for (auto& I : subsets(range_set(1, N), k)) {
        IndexSet img = I;
        do {
            Word w;
            for (int a = 0; a < k; ++a) w.push_back(gen(I[a], img[a]));
            std::sort(w.begin(), w.end());
            out[w] += length_perm(img) % 2 ? -1 : 1;
        } while (std::next_permutation(img.begin(), img.end()));
    }
    std::erase_if(out, [](auto& kv) { return kv.second == 0; });
    return out;
}

/// Linear independence of c_1^{e_1} ... c_N^{e_N}, sum e_i <= max_total, grouped by word degree.
inline Report verify_freeness(Central& C, int max_total = 3) {
    int N = C.N();
    Report rep{"freeness", {{"N", N}, {"max_total", max_total}}};
    std::map<int, std::vector<NCPoly>> by_degree;
    std::vector<int> e(N, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == N) {
            NCPoly m = C.engine().one();
            int deg = 0;
            for (int i = 0; i < N; ++i)
                for (int r = 0; r < e[i]; ++r) {
                    m = C.engine().product(m, C.c(i + 1));
                    deg += i + 1;
                }
            by_degree[deg].push_back(m);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[pos] = v;
            rec(pos + 1, left - v);
        }
        e[pos] = 0;
    };
    rec(0, max_total);
    for (auto& [deg, polys] : by_degree) {
        std::map<Word, std::size_t, WordLess> rows;
        for (auto& p : polys)
            for (auto& [w, c] : p.terms()) rows.try_emplace(w, rows.size());
        DenseMat M(rows.size(), std::vector<RatFunc>(polys.size(), RatFunc(0)));
        for (std::size_t j = 0; j < polys.size(); ++j)
            for (auto& [w, c] : polys[j].terms()) M[rows[w]][j] = c;
        int r = bareiss_rank(M);
        rep.info["degree " + std::to_string(deg)] = std::to_string(r) + "/" + std::to_string(polys.size());
        if (r != int(polys.size())) rep.fail("dependent monomials in degree " + std::to_string(deg));
    }
    return rep;
}

}  // namespace qmat
