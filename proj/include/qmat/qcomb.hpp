#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qmat/error.hpp"

namespace qmat {

/// Strictly increasing list of indices.
using IndexSet = std::vector<int>;

inline IndexSet make_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw Error("index set has repeated elements");
    return v;
}

inline void check_set(const IndexSet& s, int N) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > N) throw Error("index " + std::to_string(s[i]) + " outside [1, N]");
        if (i && s[i] <= s[i - 1]) throw Error("index set must be strictly increasing");
    }
}

inline bool contains(const IndexSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}
inline IndexSet set_minus(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}
inline IndexSet set_intersect(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}
inline IndexSet with(const IndexSet& a, int x) { return set_union(a, IndexSet{x}); }
inline IndexSet without(const IndexSet& a, int x) { return set_minus(a, IndexSet{x}); }

inline IndexSet range_set(int lo, int hi) {
    IndexSet r;
    for (int i = lo; i <= hi; ++i) r.push_back(i);
    return r;
}
inline IndexSet complement(const IndexSet& a, int N) { return set_minus(range_set(1, N), a); }

/// All k-element subsets of `from`, in lexicographic order.
inline std::vector<IndexSet> subsets(const IndexSet& from, int k) {
    std::vector<IndexSet> out;
    if (k < 0 || k > int(from.size())) return out;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        IndexSet s;
        for (int p : pick) s.push_back(from[p]);
        out.push_back(std::move(s));
        int i = k - 1;
        while (i >= 0 && pick[i] == int(from.size()) - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

inline std::vector<IndexSet> all_subsets(const IndexSet& from) {
    std::vector<IndexSet> out;
    for (int k = 0; k <= int(from.size()); ++k)
        for (auto& s : subsets(from, k)) out.push_back(std::move(s));
    return out;
}

inline int wt(const IndexSet& I) { return std::accumulate(I.begin(), I.end(), 0); }

inline int length_perm(const std::vector<int>& sigma) {
    int l = 0;
    for (std::size_t a = 0; a < sigma.size(); ++a)
        for (std::size_t b = a + 1; b < sigma.size(); ++b)
            if (sigma[a] > sigma[b]) ++l;
    return l;
}

inline int exceedance_perm(const std::vector<int>& sigma) {
    int e = 0;
    for (std::size_t a = 0; a < sigma.size(); ++a)
        if (sigma[a] > int(a) + 1) ++e;
    return e;
}

/// tau: source -> targets, positionally against the sorted source.
struct Bijection {
    IndexSet source;
    std::vector<int> targets;

    int operator()(int i) const {
        auto it = std::lower_bound(source.begin(), source.end(), i);
        if (it == source.end() || *it != i) throw Error("index not in the domain of the bijection");
        return targets[it - source.begin()];
    }
    IndexSet image() const { return make_set(targets); }
};

/// The order-preserving bijection I -> J.
inline Bijection tau_op(const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size()) throw Error("sets of different sizes");
    return Bijection{I, J};
}

/// Every bijection I -> J, in lexicographic order of the target sequence.
inline std::vector<Bijection> all_bijections(const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size()) throw Error("sets of different sizes");
    std::vector<Bijection> out;
    std::vector<int> t = J;
    do out.push_back(Bijection{I, t});
    while (std::next_permutation(t.begin(), t.end()));
    return out;
}

/// Inversion count of the extension of tau fixing U pointwise.
inline int length_U(const Bijection& tau, const IndexSet& U) {
    if (!set_intersect(U, set_union(tau.source, tau.image())).empty())
        throw Error("auxiliary set meets the domain or codomain");
    IndexSet dom = set_union(tau.source, U);
    std::vector<int> vals;
    vals.reserve(dom.size());
    for (int a : dom) vals.push_back(contains(U, a) ? a : tau(a));
    return length_perm(vals);
}

inline int exceedance(const Bijection& tau) {
    int e = 0;
    for (std::size_t a = 0; a < tau.source.size(); ++a)
        if (tau.targets[a] > tau.source[a]) ++e;
    return e;
}

/// Restriction of tau to I minus its smallest element; returns it with m, where tau(i_1) = j_m.
inline std::pair<Bijection, int> restrict_first(const Bijection& tau) {
    IndexSet J = tau.image();
    int jm = tau.targets.at(0);
    int m = int(std::lower_bound(J.begin(), J.end(), jm) - J.begin()) + 1;
    Bijection r{IndexSet(tau.source.begin() + 1, tau.source.end()),
                std::vector<int>(tau.targets.begin() + 1, tau.targets.end())};
    return {r, m};
}

/// #{a in U : a strictly between i_1 and j_m}; m is 1-based.
inline int gamma(const IndexSet& U, const IndexSet& I, const IndexSet& J, int m) {
    if (I.empty() || m < 1 || m > int(J.size())) throw Error("gamma: index out of range");
    int lo = std::min(I[0], J[m - 1]), hi = std::max(I[0], J[m - 1]);
    int c = 0;
    for (int a : U)
        if (lo < a && a < hi) ++c;
    return c;
}

/// #K in the open interval between r and t.
inline int count_between(const IndexSet& K, int r, int t) {
    int lo = std::min(r, t), hi = std::max(r, t), c = 0;
    for (int a : K)
        if (lo < a && a < hi) ++c;
    return c;
}

inline int count_closed(const IndexSet& K, int r, int t) {
    int lo = std::min(r, t), hi = std::max(r, t), c = 0;
    for (int a : K)
        if (lo <= a && a <= hi) ++c;
    return c;
}

/// Position of i in I (1-based); for i not in I, its position in I + {i}.
inline int ind(const IndexSet& I, int i) { return int(std::lower_bound(I.begin(), I.end(), i) - I.begin()) + 1; }

using SetPair = std::pair<IndexSet, IndexSet>;

/// Cl_k(I, J): pairs (I', J') with I' above max(I), I + I' = J + J', #I' = #J' = k - #I.
inline std::vector<SetPair> clique(int k, const IndexSet& I, const IndexSet& J, int N) {
    check_set(I, N);
    check_set(J, N);
    if (I.size() != J.size() || int(I.size()) > k) throw Error("clique: need #I = #J <= k");
    int m = int(I.size());
    int lo = I.empty() ? 1 : I.back() + 1;
    std::vector<SetPair> out;
    for (auto& Ip : subsets(range_set(lo, N), k - m)) {
        IndexSet whole = set_union(I, Ip);
        if (!std::includes(whole.begin(), whole.end(), J.begin(), J.end())) continue;
        out.emplace_back(Ip, set_minus(whole, J));
    }
    return out;
}

struct CliqueElt {
    IndexSet Ip, Jp;
    int m = 1;
    bool operator==(const CliqueElt&) const = default;
};

struct CliqueImage {
    int s = 0, t = 0;
    IndexSet Ipp, Jpp;
    bool operator==(const CliqueImage&) const = default;
};

inline bool in_clique(int k, const IndexSet& I, const IndexSet& J, int N, const IndexSet& Ip, const IndexSet& Jp) {
    for (auto& [a, b] : clique(k, I, J, N))
        if (a == Ip && b == Jp) return true;
    return false;
}

/// (I', J')_m -> (I' - i'_1, J' - j'_m) in Cl_k(I + i'_1, J + j'_m).
inline CliqueImage beta(int k, const IndexSet& I, const IndexSet& J, int N, const CliqueElt& x) {
    if (!in_clique(k, I, J, N, x.Ip, x.Jp)) throw ContractViolation("beta: element not in the clique");
    if (x.m < 1 || x.m > k - int(I.size())) throw ContractViolation("beta: component index out of range");
    int s = x.Ip[0], t = x.Jp[x.m - 1];
    return CliqueImage{s, t, without(x.Ip, s), without(x.Jp, t)};
}

inline CliqueElt beta_inv(int k, const IndexSet& I, const IndexSet& J, int N, const CliqueImage& y) {
    int lo = I.empty() ? 1 : I.back() + 1;
    if (y.s < lo || y.s > N || y.t < 1 || y.t > N || contains(J, y.t))
        throw ContractViolation("beta_inv: (s, t) out of range");
    if (!in_clique(k, with(I, y.s), with(J, y.t), N, y.Ipp, y.Jpp))
        throw ContractViolation("beta_inv: element not in the clique");
    IndexSet Jp = with(y.Jpp, y.t);
    return CliqueElt{with(y.Ipp, y.s), Jp, ind(Jp, y.t)};
}

namespace detail {

inline void check_xy_config(const IndexSet& I, const IndexSet& J, const IndexSet& Ipp, const IndexSet& Jpp, int s,
                            int t, const IndexSet& U, int N) {
    if (!I.empty() && s <= I.back()) throw ContractViolation("need s > max(I)");
    if (contains(J, t)) throw ContractViolation("need t outside J");
    int k = int(I.size() + 1 + Ipp.size());
    if (!in_clique(k, with(I, s), with(J, t), N, Ipp, Jpp))
        throw ContractViolation("(I'', J'') not in the expansion clique");
    if (!set_intersect(U, set_union(with(I, s), Ipp)).empty())
        throw ContractViolation("auxiliary set meets I + s + I''");
}

}  // namespace detail

/// ind_{J''}(t) - 1 + gamma_U^{(I'')^s,(J'')^t}(ind_{J''}(t))
inline int X_def(const IndexSet& I, const IndexSet& J, const IndexSet& Ipp, const IndexSet& Jpp, int s, int t,
                 const IndexSet& U, int N) {
    detail::check_xy_config(I, J, Ipp, Jpp, s, t, U, N);
    int m = ind(Jpp, t);
    return m - 1 + gamma(U, with(Ipp, s), with(Jpp, t), m);
}

inline int X_closed(const IndexSet& I, const IndexSet& J, const IndexSet& Ipp, int s, int t, const IndexSet& U) {
    return count_between(set_union(set_union(U, I), Ipp), s, t) + 1 + ind(I, s) - ind(J, t) -
           2 * count_closed(I, s, t);
}

/// Y with the auxiliary set (U + t) - r for tau_{(I'')^r_t, J''}.
inline int Y(const IndexSet& I, const IndexSet& J, const IndexSet& Ipp, const IndexSet& Jpp, int s, int t, int r,
             const IndexSet& U, int N) {
    detail::check_xy_config(I, J, Ipp, Jpp, s, t, U, N);
    if (!(s < t) || r <= s || r > t || contains(Ipp, r)) throw ContractViolation("need s < r <= t with r outside I''");
    IndexSet dom = with(without(Ipp, t), r);
    IndexSet aux = without(with(U, t), r);
    return X_closed(I, J, Ipp, s, r, U) + length_U(tau_op(dom, Jpp), aux) + count_between(dom, r, t);
}

}  // namespace qmat
