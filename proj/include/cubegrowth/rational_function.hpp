#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubegrowth/errors.hpp"
#include "cubegrowth/laurent.hpp"
#include "cubegrowth/unipoly.hpp"

namespace cubegrowth {

// Quotient of Laurent polynomials.  Equality is by cross-multiplication, so
// no multivariate GCD is ever needed; univariate values can be brought to a
// canonical reduced form for display and exact comparisons.
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(Laurent::one(0)) {}
    RationalFunction(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error("rational function with zero denominator");
        if (num_.nvars() != den_.nvars())
            throw Error("numerator and denominator live in different rings");
    }
    static RationalFunction from_laurent(Laurent p) {
        int nv = p.nvars();
        return RationalFunction(std::move(p), Laurent::one(nv));
    }
    static RationalFunction constant(int nvars, const Rational& c) {
        return RationalFunction(Laurent::constant(nvars, c), Laurent::one(nvars));
    }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }

    friend bool equal(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const Rational& s) {
        return RationalFunction(a.num_ * s, a.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        return RationalFunction(-a.num_, a.den_);
    }

    RationalFunction invert_variables() const {
        return RationalFunction(num_.invert_variables(), den_.invert_variables());
    }

    // Truncated power-series expansion at the origin through total degree
    // max_degree.  Throws NotExpandable when the function has a pole at 0.
    Laurent expand(int max_degree) const {
        const int nv = nvars();
        if (num_.is_zero()) return Laurent(nv);
        ExponentVec mn = num_.min_exponents(), md = den_.min_exponents();
        ExponentVec shift(nv);
        for (int i = 0; i < nv; ++i) {
            shift[i] = mn[i] - md[i];
            if (shift[i] < 0)
                throw NotExpandable("no power-series expansion at 0 (pole)");
            mn[i] = -mn[i];
            md[i] = -md[i];
        }
        Laurent n = num_.shifted(mn);
        Laurent d = den_.shifted(md);
        if (d.constant_term() == 0)
            throw NotExpandable("denominator has no invertible constant term");
        int budget = max_degree - total_degree(shift);
        if (budget < 0) return Laurent(nv);
        Laurent inv = inverse_series(d, budget);
        return (n * inv).truncated(budget).shifted(shift);
    }

    // Canonical reduced form for one variable: numerator and denominator
    // coprime with integer coefficients of joint content one, all monomial
    // factors pushed into the numerator, and the denominator's lowest
    // coefficient positive (so "1-t", not "t-1", as in series displays).
    RationalFunction reduced() const {
        if (nvars() != 1) throw Error("canonical reduction is univariate only");
        if (num_.is_zero()) return RationalFunction(Laurent(1), Laurent::one(1));
        Integer scale(1);
        for (const auto& [e, c] : num_.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
        for (const auto& [e, c] : den_.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
        Laurent sn = num_ * Rational(scale);
        Laurent sd = den_ * Rational(scale);
        DensePoly n = DensePoly::from_laurent(sn);
        DensePoly d = DensePoly::from_laurent(sd);
        int shift = n.low() - d.low();
        n = DensePoly::from_coeffs(0, n.coeffs());
        d = DensePoly::from_coeffs(0, d.coeffs());
        DensePoly g = poly_gcd(n, d);
        n = exact_div(n, g);
        d = exact_div(d, g);
        Integer joint = gcd(detail::coeff_content(n.coeffs()), detail::coeff_content(d.coeffs()));
        auto strip = [&joint](const DensePoly& p) {
            std::vector<Integer> c = p.coeffs();
            if (joint > 1)
                for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), joint.get_mpz_t());
            return c;
        };
        std::vector<Integer> nc = strip(n), dc = strip(d);
        if (sgn(dc.front()) < 0) {
            for (auto& x : nc) x = -x;
            for (auto& x : dc) x = -x;
        }
        return RationalFunction(DensePoly::from_coeffs(shift + n.low(), std::move(nc)).to_laurent(),
                                DensePoly::from_coeffs(d.low(), std::move(dc)).to_laurent());
    }

    std::string str(const std::vector<std::string>& names) const {
        if (den_ == Laurent::one(nvars())) return num_.str(names);
        return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
    }

private:
    // Inverse of d as a power series through total degree `bound`; d must
    // have nonnegative exponents and nonzero constant term.
    static Laurent inverse_series(const Laurent& d, int bound) {
        const int nv = d.nvars();
        const Rational c0 = d.constant_term();
        Laurent s(nv);
        s.add_term(ExponentVec(nv, 0), 1 / c0);
        ExponentVec m(nv, 0);
        for (int deg = 1; deg <= bound; ++deg) enumerate(d, s, m, 0, deg, c0);
        return s;
    }

    // Fill coefficient of every monomial m with total degree `remaining`
    // distributed over positions pos..nv-1.
    static void enumerate(const Laurent& d, Laurent& s, ExponentVec& m, int pos, int remaining,
                          const Rational& c0) {
        const int nv = d.nvars();
        if (pos == nv - 1) {
            m[pos] = remaining;
            Rational acc(0);
            ExponentVec f(nv);
            for (const auto& [e, c] : d.terms()) {
                if (total_degree(e) == 0) continue;
                bool ok = true;
                for (int i = 0; i < nv; ++i) {
                    f[i] = m[i] - e[i];
                    if (f[i] < 0) { ok = false; break; }
                }
                if (!ok) continue;
                Rational prior = s.coeff(f);
                if (prior != 0) acc += c * prior;
            }
            if (acc != 0) s.add_term(m, -acc / c0);
            m[pos] = 0;
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            m[pos] = v;
            enumerate(d, s, m, pos + 1, remaining - v, c0);
        }
        m[pos] = 0;
    }

    Laurent num_, den_;
};

}  // namespace cubegrowth
