#pragma once

#include <utility>
#include <vector>

#include "cubegrowth/errors.hpp"

namespace cubegrowth {

// Solution of M X = e for several right-hand columns, with every component
// expressed over one common polynomial denominator:
//   X[col][i] = numerators[col][i] / denominator.
template <class Ring>
struct FractionFreeSolution {
    std::vector<std::vector<Ring>> numerators;
    Ring denominator;
};

// Fraction-free Gaussian elimination (Bareiss).  Works over any integral
// domain providing is_zero / mul / sub / exact_div / zero_like / term_count;
// every division below is exact by the standard minor identities, and the
// back substitution keeps numerators polynomial because denominator * X_i is
// a Cramer determinant.  Throws SingularSystem when det M = 0.
template <class Ring>
FractionFreeSolution<Ring> solve_fraction_free(std::vector<std::vector<Ring>> a,
                                               std::vector<std::vector<Ring>> cols) {
    const int n = static_cast<int>(a.size());
    if (n == 0) throw Error("empty linear system");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw Error("matrix is not square");
    for (const auto& c : cols)
        if (static_cast<int>(c.size()) != n) throw Error("right-hand side has wrong length");

    Ring prev = zero_like(a[0][0]);
    bool have_prev = false;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        size_t best = 0;
        for (int r = k; r < n; ++r) {
            if (is_zero(a[r][k])) continue;
            size_t w = term_count(a[r][k]);
            if (pivot < 0 || w < best) {
                pivot = r;
                best = w;
            }
        }
        if (pivot < 0) throw SingularSystem("matrix of the linear system is singular");
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            for (auto& c : cols) std::swap(c[pivot], c[k]);
        }
        const Ring& p = a[k][k];
        for (int i = k + 1; i < n; ++i) {
            if (is_zero(a[i][k])) {
                // Row already eliminated in this column; still scale by the
                // pivot so the minor identities keep divisions exact.
                for (int j = k + 1; j < n; ++j) {
                    if (is_zero(a[i][j])) continue;
                    Ring v = mul(p, a[i][j]);
                    a[i][j] = have_prev ? exact_div(v, prev) : std::move(v);
                }
                for (auto& c : cols) {
                    if (is_zero(c[i])) continue;
                    Ring v = mul(p, c[i]);
                    c[i] = have_prev ? exact_div(v, prev) : std::move(v);
                }
                continue;
            }
            for (int j = k + 1; j < n; ++j) {
                Ring v = sub(mul(p, a[i][j]), mul(a[i][k], a[k][j]));
                a[i][j] = have_prev ? exact_div(v, prev) : std::move(v);
            }
            for (auto& c : cols) {
                Ring v = sub(mul(p, c[i]), mul(a[i][k], c[k]));
                c[i] = have_prev ? exact_div(v, prev) : std::move(v);
            }
            a[i][k] = zero_like(p);
        }
        prev = a[k][k];
        have_prev = true;
    }

    FractionFreeSolution<Ring> result;
    result.denominator = a[n - 1][n - 1];
    const Ring& det = result.denominator;
    for (auto& c : cols) {
        std::vector<Ring> x(n, zero_like(det));
        x[n - 1] = c[n - 1];
        for (int i = n - 2; i >= 0; --i) {
            Ring acc = mul(c[i], det);
            for (int j = i + 1; j < n; ++j) {
                if (is_zero(a[i][j]) || is_zero(x[j])) continue;
                acc = sub(acc, mul(a[i][j], x[j]));
            }
            x[i] = exact_div(acc, a[i][i]);
        }
        result.numerators.push_back(std::move(x));
    }
    return result;
}

}  // namespace cubegrowth
