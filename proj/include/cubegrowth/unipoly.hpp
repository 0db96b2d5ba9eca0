#pragma once

#include <gmpxx.h>

#include <vector>

#include "cubegrowth/errors.hpp"
#include "cubegrowth/laurent.hpp"

namespace cubegrowth {

// Dense univariate Laurent polynomial with integer coefficients.  This is the
// fast representation used by the fraction-free solver: coeffs_[i] holds the
// coefficient of t^(low_+i); a nonzero value has nonzero first and last
// entries, zero is the empty vector.
class DensePoly {
public:
    DensePoly() = default;

    static DensePoly from_int(long v) {
        DensePoly p;
        if (v != 0) p.coeffs_.emplace_back(v);
        return p;
    }
    static DensePoly from_coeffs(int low, std::vector<Integer> c) {
        DensePoly p;
        p.low_ = low;
        p.coeffs_ = std::move(c);
        p.normalize();
        return p;
    }

    // Requires integer coefficients (true for all inputs the solver sees
    // after row scaling).
    static DensePoly from_laurent(const Laurent& l) {
        if (l.nvars() != 1) throw Error("dense polynomials are univariate");
        DensePoly p;
        if (l.is_zero()) return p;
        int low = l.terms().begin()->first[0];
        int high = l.terms().rbegin()->first[0];
        p.low_ = low;
        p.coeffs_.assign(high - low + 1, Integer(0));
        for (const auto& [e, c] : l.terms()) {
            if (c.get_den() != 1) throw Error("dense polynomial needs integer coefficients");
            p.coeffs_[e[0] - low] = c.get_num();
        }
        return p;
    }

    Laurent to_laurent() const {
        Laurent l(1);
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (sgn(coeffs_[i]) != 0)
                l.add_term({low_ + static_cast<int>(i)}, Rational(coeffs_[i]));
        return l;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int low() const { return low_; }
    int degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    size_t nonzero_count() const {
        size_t n = 0;
        for (const auto& c : coeffs_) n += (sgn(c) != 0);
        return n;
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) {
        return (a.is_zero() && b.is_zero()) ||
               (a.low_ == b.low_ && a.coeffs_ == b.coeffs_);
    }

    friend DensePoly add(const DensePoly& a, const DensePoly& b) { return combined(a, b, 1); }
    friend DensePoly sub(const DensePoly& a, const DensePoly& b) { return combined(a, b, -1); }

    friend DensePoly mul(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        DensePoly r;
        r.low_ = a.low_ + b.low_;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (sgn(b.coeffs_[j]) == 0) continue;
                mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                           b.coeffs_[j].get_mpz_t());
            }
        }
        r.normalize();
        return r;
    }

    // Exact division in Z[t, t^-1]; throws NotDivisible otherwise.
    friend DensePoly exact_div(const DensePoly& a, const DensePoly& b) {
        if (b.is_zero()) throw NotDivisible("division by zero polynomial");
        if (a.is_zero()) return {};
        const auto& A = a.coeffs_;
        const auto& B = b.coeffs_;
        if (A.size() < B.size()) throw NotDivisible("dense division is not exact");
        std::vector<Integer> rem = A;
        std::vector<Integer> q(A.size() - B.size() + 1);
        const Integer& lead = B.back();
        for (size_t k = q.size(); k-- > 0;) {
            Integer& cur = rem[k + B.size() - 1];
            if (sgn(cur) == 0) continue;
            if (!mpz_divisible_p(cur.get_mpz_t(), lead.get_mpz_t()))
                throw NotDivisible("dense division is not exact");
            mpz_divexact(q[k].get_mpz_t(), cur.get_mpz_t(), lead.get_mpz_t());
            for (size_t j = 0; j + 1 < B.size(); ++j)
                mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), B[j].get_mpz_t());
            cur = 0;
        }
        for (size_t j = 0; j + 1 < B.size(); ++j)
            if (sgn(rem[j]) != 0) throw NotDivisible("dense division is not exact");
        return from_coeffs(a.low_ - b.low_, std::move(q));
    }

private:
    static DensePoly combined(const DensePoly& a, const DensePoly& b, int bsign) {
        if (a.is_zero() && b.is_zero()) return {};
        if (a.is_zero()) {
            DensePoly r = b;
            if (bsign < 0)
                for (auto& c : r.coeffs_) c = -c;
            return r;
        }
        if (b.is_zero()) return a;
        int low = std::min(a.low_, b.low_);
        int high = std::max(a.degree(), b.degree());
        DensePoly r;
        r.low_ = low;
        r.coeffs_.assign(high - low + 1, Integer(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[a.low_ - low + i] = a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) {
            if (bsign < 0)
                r.coeffs_[b.low_ - low + i] -= b.coeffs_[i];
            else
                r.coeffs_[b.low_ - low + i] += b.coeffs_[i];
        }
        r.normalize();
        return r;
    }

    void normalize() {
        size_t begin = 0, end = coeffs_.size();
        while (end > begin && sgn(coeffs_[end - 1]) == 0) --end;
        while (begin < end && sgn(coeffs_[begin]) == 0) ++begin;
        if (begin == end) {
            coeffs_.clear();
            low_ = 0;
            return;
        }
        if (begin > 0 || end < coeffs_.size()) {
            std::vector<Integer> t(coeffs_.begin() + begin, coeffs_.begin() + end);
            coeffs_ = std::move(t);
            low_ += static_cast<int>(begin);
        }
    }

    int low_ = 0;
    std::vector<Integer> coeffs_;
};

inline bool is_zero(const DensePoly& p) { return p.is_zero(); }
inline DensePoly zero_like(const DensePoly&) { return {}; }
inline size_t term_count(const DensePoly& p) { return p.nonzero_count(); }

namespace detail {

inline Integer coeff_content(const std::vector<Integer>& c) {
    Integer g(0);
    for (const auto& x : c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline void trim_zeros(std::vector<Integer>& c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

inline void make_primitive(std::vector<Integer>& c) {
    trim_zeros(c);
    if (c.empty()) return;
    Integer g = coeff_content(c);
    if (g > 1)
        for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (sgn(c.back()) < 0)
        for (auto& x : c) x = -x;
}

// One round of pseudo-remainder: r <- prem(r, y) up to a constant factor.
inline std::vector<Integer> pseudo_rem(std::vector<Integer> r, const std::vector<Integer>& y) {
    const Integer& lead = y.back();
    const size_t dy = y.size() - 1;
    trim_zeros(r);
    while (!r.empty() && r.size() - 1 >= dy) {
        Integer c = r.back();
        size_t k = r.size() - 1 - dy;
        for (auto& x : r) x *= lead;
        for (size_t j = 0; j < y.size(); ++j) mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), y[j].get_mpz_t());
        trim_zeros(r);
    }
    return r;
}

}  // namespace detail

// GCD of the polynomial parts (Laurent shifts dropped) via the primitive
// pseudo-remainder sequence, including the integer content; positive leading
// coefficient.
inline DensePoly poly_gcd(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero() || b.is_zero()) {
        std::vector<Integer> c = (a.is_zero() ? b : a).coeffs();
        detail::trim_zeros(c);
        if (sgn(c.back()) < 0)
            for (auto& x : c) x = -x;
        return DensePoly::from_coeffs(0, std::move(c));
    }
    Integer content = gcd(detail::coeff_content(a.coeffs()), detail::coeff_content(b.coeffs()));
    std::vector<Integer> x = a.coeffs(), y = b.coeffs();
    detail::make_primitive(x);
    detail::make_primitive(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        std::vector<Integer> r = detail::pseudo_rem(x, y);
        detail::make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    detail::make_primitive(x);
    for (auto& c : x) c *= content;
    return DensePoly::from_coeffs(0, std::move(x));
}

}  // namespace cubegrowth
