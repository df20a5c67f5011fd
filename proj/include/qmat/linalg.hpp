#pragma once

#include <optional>
#include <vector>

#include "qmat/scalars.hpp"

namespace qmat {

using DenseMat = std::vector<std::vector<RatFunc>>;

/// Fraction-free (Bareiss) elimination; returns the rank.
inline int bareiss_rank(DenseMat m) {
    std::size_t nr = m.size(), nc = nr ? m[0].size() : 0, r = 0;
    RatFunc prev(1);
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && m[p][c].is_zero()) ++p;
        if (p == nr) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = RatFunc(0);
        }
        prev = m[r][c];
        ++r;
    }
    return int(r);
}

struct LinearSolution {
    bool consistent = false;
    bool unique = false;
    int rank = 0;
    /// A particular solution (free variables set to zero) when consistent.
    std::vector<RatFunc> x;
};

/// Solves A x = b exactly by Gauss-Jordan elimination.
inline LinearSolution solve_linear(DenseMat A, std::vector<RatFunc> b) {
    std::size_t nr = A.size(), nc = nr ? A[0].size() : 0;
    if (b.size() != nr) throw Error("solve_linear: shape mismatch");
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && A[p][c].is_zero()) ++p;
        if (p == nr) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        RatFunc inv = A[r][c].inv();
        for (std::size_t j = c; j < nc; ++j) A[r][j] = A[r][j] * inv;
        b[r] = b[r] * inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            RatFunc f = A[i][c];
            for (std::size_t j = c; j < nc; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivots.push_back(c);
        ++r;
    }
    LinearSolution s;
    s.rank = int(r);
    s.consistent = true;
    for (std::size_t i = r; i < nr; ++i)
        if (!b[i].is_zero()) s.consistent = false;
    s.unique = s.consistent && r == nc;
    if (s.consistent) {
        s.x.assign(nc, RatFunc(0));
        for (std::size_t i = 0; i < r; ++i) s.x[pivots[i]] = b[i];
    }
    return s;
}

}  // namespace qmat
