#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qmat/hecke.hpp"
#include "qmat/linalg.hpp"
#include "qmat/pbw.hpp"
#include "qmat/report.hpp"
#include "qmat/scalars.hpp"

namespace qmat {

/// Sparse operator on V^{(x)k}, dim V = N, rows and columns indexed by multi-indices in [N]^k.
class TensorOp {
  public:
    TensorOp() = default;
    TensorOp(int N, int k) : N_(N), k_(k) {
        if (N < 1 || k < 0) throw Error("TensorOp: need N >= 1, k >= 0");
        dim_ = 1;
        for (int i = 0; i < k; ++i) dim_ *= N;
        rows_.resize(dim_);
    }

    static TensorOp identity(int N, int k) {
        TensorOp r(N, k);
        for (int i = 0; i < r.dim_; ++i) r.rows_[i].emplace(i, RatFunc(1));
        return r;
    }

    int N() const { return N_; }
    int k() const { return k_; }
    int dim() const { return dim_; }

    std::vector<int> multi(int flat) const {
        std::vector<int> m(k_);
        for (int t = k_ - 1; t >= 0; --t) {
            m[t] = flat % N_ + 1;
            flat /= N_;
        }
        return m;
    }
    int flat(const std::vector<int>& m) const {
        if (int(m.size()) != k_) throw Error("multi-index of wrong length");
        int f = 0;
        for (int v : m) {
            if (v < 1 || v > N_) throw Error("multi-index entry out of range");
            f = f * N_ + (v - 1);
        }
        return f;
    }

    RatFunc get(int r, int c) const {
        auto it = rows_.at(r).find(c);
        return it == rows_[r].end() ? RatFunc(0) : it->second;
    }
    void add(int r, int c, const RatFunc& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = rows_.at(r).try_emplace(c, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) rows_[r].erase(it);
        }
    }
    void set(int r, int c, const RatFunc& v) {
        rows_.at(r).erase(c);
        add(r, c, v);
    }
    const std::map<int, RatFunc>& row(int r) const { return rows_.at(r); }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (auto& r : rows_) n += r.size();
        return n;
    }
    bool is_zero() const { return nnz() == 0; }

    TensorOp& operator+=(const TensorOp& o) {
        check(o);
        for (int r = 0; r < dim_; ++r)
            for (auto& [c, v] : o.rows_[r]) add(r, c, v);
        return *this;
    }
    TensorOp& operator-=(const TensorOp& o) { return *this += RatFunc(-1) * o; }
    friend TensorOp operator+(TensorOp a, const TensorOp& b) { return a += b; }
    friend TensorOp operator-(TensorOp a, const TensorOp& b) { return a -= b; }
    friend TensorOp operator*(const RatFunc& s, const TensorOp& a) {
        TensorOp r(a.N_, a.k_);
        if (s.is_zero()) return r;
        for (int i = 0; i < a.dim_; ++i)
            for (auto& [c, v] : a.rows_[i]) r.rows_[i].emplace(c, s * v);
        return r;
    }
    friend TensorOp operator*(const TensorOp& a, const TensorOp& b) {
        a.check(b);
        TensorOp r(a.N_, a.k_);
        for (int i = 0; i < a.dim_; ++i)
            for (auto& [m, x] : a.rows_[i])
                for (auto& [c, y] : b.rows_[m]) r.add(i, c, x * y);
        return r;
    }
    friend bool operator==(const TensorOp& a, const TensorOp& b) {
        return a.N_ == b.N_ && a.k_ == b.k_ && a.rows_ == b.rows_;
    }

    /// Transpose in tensor slot `slot` (1-based) only.
    TensorOp partial_transpose(int slot) const {
        if (slot < 1 || slot > k_) throw Error("partial_transpose: bad slot");
        TensorOp r(N_, k_);
        for (int i = 0; i < dim_; ++i)
            for (auto& [c, v] : rows_[i]) {
                auto mi = multi(i), mc = multi(c);
                std::swap(mi[slot - 1], mc[slot - 1]);
                r.add(flat(mi), flat(mc), v);
            }
        return r;
    }

    TensorOp transpose() const {
        TensorOp r(N_, k_);
        for (int i = 0; i < dim_; ++i)
            for (auto& [c, v] : rows_[i]) r.add(c, i, v);
        return r;
    }

    /// Connected components of the row/column incidence graph, as (rows, cols) index lists.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks() const {
        std::vector<int> parent(2 * dim_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int i = 0; i < dim_; ++i)
            for (auto& [c, v] : rows_[i]) parent[find(i)] = find(dim_ + c);
        std::map<int, std::pair<std::vector<int>, std::vector<int>>> comp;
        for (int x = 0; x < 2 * dim_; ++x) {
            auto& b = comp[find(x)];
            (x < dim_ ? b.first : b.second).push_back(x < dim_ ? x : x - dim_);
        }
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        for (auto& [root, b] : comp) out.push_back(std::move(b));
        return out;
    }

    std::string index_str(int flat_index) const {
        std::string s = "(";
        auto m = multi(flat_index);
        for (int t = 0; t < k_; ++t) s += (t ? "," : "") + std::to_string(m[t]);
        return s + ")";
    }

    /// One line per nonzero entry: "row col: value".
    std::string to_text() const {
        std::string s;
        for (int i = 0; i < dim_; ++i)
            for (auto& [c, v] : rows_[i]) s += index_str(i) + " " + index_str(c) + ": " + v.str() + "\n";
        return s;
    }

    nlohmann::json to_json() const {
        nlohmann::json e = nlohmann::json::array();
        for (int i = 0; i < dim_; ++i)
            for (auto& [c, v] : rows_[i]) e.push_back({{"row", multi(i)}, {"col", multi(c)}, {"value", v.to_json()}});
        return {{"N", N_}, {"k", k_}, {"entries", e}};
    }

  private:
    int N_ = 1, k_ = 0, dim_ = 1;
    std::vector<std::map<int, RatFunc>> rows_;

    void check(const TensorOp& o) const {
        if (N_ != o.N_ || k_ != o.k_) throw Error("TensorOp shapes differ");
    }
};

namespace detail {

inline DenseMat extract(const TensorOp& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    DenseMat m(rows.size(), std::vector<RatFunc>(cols.size(), RatFunc(0)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = a.get(rows[i], cols[j]);
    return m;
}

}  // namespace detail

inline int rank(const TensorOp& a) {
    int r = 0;
    for (auto& [rows, cols] : a.blocks())
        if (!rows.empty() && !cols.empty()) r += bareiss_rank(detail::extract(a, rows, cols));
    return r;
}

/// Exact inverse by Gauss-Jordan on each block; throws DivisionByZero when singular.
inline TensorOp inverse(const TensorOp& a) {
    TensorOp r(a.N(), a.k());
    for (auto& [rows, cols] : a.blocks()) {
        if (rows.size() != cols.size()) throw DivisionByZero("inverse: singular operator");
        std::size_t n = rows.size();
        DenseMat m = detail::extract(a, rows, cols);
        DenseMat inv(n, std::vector<RatFunc>(n, RatFunc(0)));
        for (std::size_t i = 0; i < n; ++i) inv[i][i] = RatFunc(1);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && m[p][c].is_zero()) ++p;
            if (p == n) throw DivisionByZero("inverse: singular operator");
            std::swap(m[p], m[c]);
            std::swap(inv[p], inv[c]);
            RatFunc piv = m[c][c].inv();
            for (std::size_t j = 0; j < n; ++j) {
                m[c][j] = m[c][j] * piv;
                inv[c][j] = inv[c][j] * piv;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == c || m[i][c].is_zero()) continue;
                RatFunc f = m[i][c];
                for (std::size_t j = 0; j < n; ++j) {
                    m[i][j] -= f * m[c][j];
                    inv[i][j] -= f * inv[c][j];
                }
            }
        }
        // block maps cols -> rows, so the inverse maps rows -> cols
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r.add(cols[i], rows[j], inv[i][j]);
    }
    return r;
}

inline TensorOp flip(int N) {
    TensorOp P(N, 2);
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) P.add(P.flat({b, a}), P.flat({a, b}), RatFunc(1));
    return P;
}

inline TensorOp build_R(int N) {
    TensorOp R(N, 2);
    RatFunc d(qdiff());
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            R.add(R.flat({i, j}), R.flat({i, j}), i == j ? RatFunc::q(1) : RatFunc(1));
            if (i > j) R.add(R.flat({i, j}), R.flat({j, i}), d);
        }
    return R;
}

inline TensorOp build_R21(int N) { return flip(N) * build_R(N) * flip(N); }
inline TensorOp build_Rinv(int N) { return inverse(build_R(N)); }

/// ((R^{t2})^{-1})^{t2}
inline TensorOp build_Rtilde(int N) { return inverse(build_R(N).partial_transpose(2)).partial_transpose(2); }

namespace detail {

inline TensorOp rtilde_closed(int N, int sign) {
    TensorOp R(N, 2);
    RatFunc d(qdiff());
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            R.add(R.flat({i, j}), R.flat({i, j}), i == j ? RatFunc::q(-1) : RatFunc(1));
            if (i > j) R.add(R.flat({i, j}), R.flat({j, i}), -d * RatFunc::q(sign * 2 * (i - j)));
        }
    return R;
}

}  // namespace detail

/// Closed form with correction entries -(q - q^-1) q^{-2(i-j)}.
inline TensorOp rtilde_closed_form(int N) { return detail::rtilde_closed(N, -1); }
/// The same shape with q^{+2(i-j)}; does not match the definition for N >= 2.
inline TensorOp rtilde_closed_form_printed(int N) { return detail::rtilde_closed(N, 1); }

/// Places a two-slot operator on slots (a, b) of V^{(x)k}.
inline TensorOp embed(const TensorOp& op, int k, int a, int b) {
    if (op.k() != 2 || a == b || a < 1 || b < 1 || a > k || b > k) throw Error("embed: bad slots");
    TensorOp r(op.N(), k);
    for (int c = 0; c < r.dim(); ++c) {
        auto mc = r.multi(c);
        int src = op.flat({mc[a - 1], mc[b - 1]});
        for (int o = 0; o < op.dim(); ++o) {
            RatFunc v = op.get(o, src);
            if (v.is_zero()) continue;
            auto mo = op.multi(o), mr = mc;
            mr[a - 1] = mo[0];
            mr[b - 1] = mo[1];
            r.add(r.flat(mr), c, v);
        }
    }
    return r;
}

inline Report verify_qybe(int N) {
    Report rep{"qybe", {{"N", N}}};
    TensorOp R = build_R(N);
    TensorOp lhs = embed(R, 3, 1, 2) * embed(R, 3, 1, 3) * embed(R, 3, 2, 3);
    TensorOp rhs = embed(R, 3, 2, 3) * embed(R, 3, 1, 3) * embed(R, 3, 1, 2);
    TensorOp diff = lhs - rhs;
    if (!diff.is_zero()) rep.fail(diff.to_text());
    return rep;
}

/// The braiding flip.R.
inline TensorOp braiding(int N) { return flip(N) * build_R(N); }

inline TensorOp rho_T(int i, int k, int N) {
    if (i < 1 || i >= k) throw Error("rho_T: need 1 <= i < k");
    return embed(braiding(N), k, i, i + 1);
}

/// Linear extension of T_i -> braiding on slots (i, i+1), for h in H_q(k).
inline TensorOp rho(const HeckeElt& h, int N) {
    int k = h.n();
    std::vector<TensorOp> gens;
    for (int i = 1; i < k; ++i) gens.push_back(rho_T(i, k, N));
    TensorOp r(N, k);
    for (auto& [w, c] : h.terms()) {
        TensorOp t = TensorOp::identity(N, k);
        for (int i : reduced_word(w)) t = t * gens[i - 1];
        r += c * t;
    }
    return r;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Hecke relation, braid relation, quasi-idempotence and rank of rho(omega_k) on V^{(x)k}.
inline Report verify_schur_weyl(int N, int k) {
    Report rep{"schur_weyl", {{"N", N}, {"k", k}}};
    if (k >= 2) {
        TensorOp B = rho_T(1, k, N), I = TensorOp::identity(N, k);
        if (!((B - RatFunc::q(1) * I) * (B + RatFunc::q(-1) * I)).is_zero()) rep.fail("Hecke relation");
    }
    if (k >= 3) {
        TensorOp a = rho_T(1, k, N), b = rho_T(2, k, N);
        if (!(a * b * a == b * a * b)) rep.fail("braid relation");
    }
    TensorOp w = rho(omega(k, k), N);
    if (!(w * w == RatFunc(qfact(k)) * w)) rep.fail("rho(omega_k)^2 != [k]! rho(omega_k)");
    int rk = rank(w);
    rep.info["rank"] = rk;
    rep.info["expected_rank"] = binomial(N, k);
    if (rk != binomial(N, k)) rep.fail("rank " + std::to_string(rk));
    return rep;
}

/// Square matrix over the algebra, acting on V (x) V when built from a TensorOp shape.
using PolyMat = std::vector<std::vector<NCPoly>>;

namespace detail {

inline PolyMat scalar_mat(const TensorOp& a, Algebra alg, int N) {
    PolyMat m(a.dim(), std::vector<NCPoly>(a.dim(), NCPoly(alg, N)));
    for (int i = 0; i < a.dim(); ++i)
        for (auto& [c, v] : a.row(i)) m[i][c] = NCPoly::scalar(alg, N, v);
    return m;
}

inline PolyMat mat_mul(Engine& eng, const PolyMat& a, const PolyMat& b) {
    std::size_t n = a.size();
    PolyMat r(n, std::vector<NCPoly>(n, NCPoly(eng.algebra(), eng.N())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < n; ++m) {
            if (a[i][m].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[m][j].is_zero()) r[i][j] += a[i][m] * b[m][j];
        }
    for (auto& row : r)
        for (auto& x : row) x = eng.normal_form(x);
    return r;
}

/// The generator matrix in slot 1 or 2 of V (x) V: entry (i, j) of the matrix is the generator with indices (i, j).
inline PolyMat slot_mat(Engine& eng, int N, int slot) {
    TensorOp shape(N, 2);
    PolyMat m(shape.dim(), std::vector<NCPoly>(shape.dim(), NCPoly(eng.algebra(), N)));
    for (int r = 0; r < shape.dim(); ++r)
        for (int c = 0; c < shape.dim(); ++c) {
            auto mr = shape.multi(r), mc = shape.multi(c);
            int other = slot == 1 ? 1 : 0;
            if (mr[other] != mc[other]) continue;
            m[r][c] = eng.generator(mr[slot - 1], mc[slot - 1]);
        }
    return m;
}

}  // namespace detail

/// Checks that the matrix relation (R21 A1 R12 A2 = A2 R21 A1 R12, resp. R X1 X2 = X2 X1 R) reduces to zero entrywise.
/// `Rop` replaces R (default: build_R(N)); R21 is derived from it by the flip.
inline Report verify_matrix_relation(Algebra alg, int N, const TensorOp* Rop = nullptr) {
    Report rep{"matrix_relation", {{"algebra", algebra_name(alg)}, {"N", N}}};
    Engine eng(alg, N);
    TensorOp Rt = Rop ? *Rop : build_R(N);
    PolyMat R = detail::scalar_mat(Rt, alg, N);
    PolyMat M1 = detail::slot_mat(eng, N, 1), M2 = detail::slot_mat(eng, N, 2);
    PolyMat lhs, rhs;
    if (alg == Algebra::REA) {
        PolyMat R21 = detail::scalar_mat(flip(N) * Rt * flip(N), alg, N);
        lhs = detail::mat_mul(eng, detail::mat_mul(eng, detail::mat_mul(eng, R21, M1), R), M2);
        rhs = detail::mat_mul(eng, detail::mat_mul(eng, detail::mat_mul(eng, M2, R21), M1), R);
    } else {
        lhs = detail::mat_mul(eng, detail::mat_mul(eng, R, M1), M2);
        rhs = detail::mat_mul(eng, detail::mat_mul(eng, M2, M1), R);
    }
    TensorOp shape(N, 2);
    int bad = 0;
    for (int i = 0; i < shape.dim(); ++i)
        for (int j = 0; j < shape.dim(); ++j) {
            NCPoly d = eng.normal_form(lhs[i][j] - rhs[i][j]);
            if (!d.is_zero()) {
                if (bad++ < 3) rep.fail(shape.index_str(i) + " " + shape.index_str(j) + ": " + to_text(d));
            }
        }
    rep.info["nonzero_entries"] = bad;
    return rep;
}

}  // namespace qmat
