#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cubegrowth/errors.hpp"

namespace cubegrowth {

using Integer = mpz_class;
using Rational = mpq_class;

// Exponent vector of a monomial; entries may be negative.
using ExponentVec = std::vector<int>;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int total_degree(const ExponentVec& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// Sparse multivariate Laurent polynomial over Q with exact rational
// coefficients.  Terms map exponent vectors to nonzero coefficients; the
// number of variables is fixed per value and must agree across operands.
class Laurent {
public:
    using TermMap = std::map<ExponentVec, Rational>;

    explicit Laurent(int nvars = 0) : nvars_(nvars) {}

    static Laurent constant(int nvars, const Rational& c) {
        Laurent p(nvars);
        if (c != 0) p.terms_[ExponentVec(nvars, 0)] = c;
        return p;
    }
    static Laurent one(int nvars) { return constant(nvars, 1); }
    static Laurent monomial(ExponentVec e, const Rational& c = Rational(1)) {
        Laurent p(static_cast<int>(e.size()));
        if (c != 0) p.terms_.emplace(std::move(e), c);
        return p;
    }
    static Laurent variable(int nvars, int index, int power = 1) {
        ExponentVec e(nvars, 0);
        e.at(index) = power;
        return monomial(std::move(e));
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_support(terms_.begin()->first) == 0);
    }

    Rational constant_term() const {
        auto it = terms_.find(ExponentVec(nvars_, 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coeff(const ExponentVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const ExponentVec& e, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        require_same(*this, o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        require_same(*this, o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a) {
        Laurent r(a.nvars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        require_same(a, b);
        Laurent r(a.nvars_);
        ExponentVec e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend Laurent operator*(const Laurent& a, const Rational& s) {
        Laurent r(a.nvars_);
        if (s == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // Componentwise minimum exponent over all terms (zero polynomial: zeros).
    ExponentVec min_exponents() const {
        ExponentVec m(nvars_, 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) { m = e; first = false; continue; }
            for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
        }
        return m;
    }

    int max_total_degree() const {
        int d = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            int t = total_degree(e);
            d = first ? t : std::max(d, t);
            first = false;
        }
        return d;
    }

    // Multiply by the monomial with exponent vector s.
    Laurent shifted(const ExponentVec& s) const {
        Laurent r(nvars_);
        ExponentVec e(nvars_);
        for (const auto& [te, c] : terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = te[i] + s[i];
            r.terms_.emplace(e, c);
        }
        return r;
    }

    // t_i -> t_i^{-1} for every variable.
    Laurent invert_variables() const {
        Laurent r(nvars_);
        ExponentVec e(nvars_);
        for (const auto& [te, c] : terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = -te[i];
            r.terms_.emplace(e, c);
        }
        return r;
    }

    // Variable relabeling: old index i becomes new index perm[i].
    Laurent permute_variables(const std::vector<int>& perm) const {
        Laurent r(nvars_);
        ExponentVec e(nvars_);
        for (const auto& [te, c] : terms_) {
            std::fill(e.begin(), e.end(), 0);
            for (int i = 0; i < nvars_; ++i) e[perm[i]] = te[i];
            r.add_term(e, c);
        }
        return r;
    }

    // Drop every term of total degree above `bound`.
    Laurent truncated(int bound) const {
        Laurent r(nvars_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) <= bound) r.terms_.emplace(e, c);
        return r;
    }

    // Evaluate at a rational point; variables with negative exponents must
    // get nonzero values.
    Rational evaluate(const std::vector<Rational>& point) const {
        Rational sum(0);
        for (const auto& [e, c] : terms_) {
            Rational m = c;
            for (int i = 0; i < nvars_; ++i) m *= pow_rational(point.at(i), e[i]);
            sum += m;
        }
        return sum;
    }

    // Exact division; throws NotDivisible when b does not divide a in the
    // Laurent ring.  Uses lex leading-term elimination after shifting both
    // operands to nonnegative exponents.
    friend Laurent exact_div(const Laurent& a, const Laurent& b) {
        require_same(a, b);
        if (b.is_zero()) throw NotDivisible("division by zero polynomial");
        if (a.is_zero()) return Laurent(a.nvars_);
        const ExponentVec sa = a.min_exponents(), sb = b.min_exponents();
        Laurent f = a.shifted(negate(sa));
        const Laurent g = b.shifted(negate(sb));
        Laurent q(a.nvars_);
        const auto& glead = *g.terms_.rbegin();
        ExponentVec eq(a.nvars_);
        while (!f.is_zero()) {
            const auto& flead = *f.terms_.rbegin();
            for (int i = 0; i < a.nvars_; ++i) {
                eq[i] = flead.first[i] - glead.first[i];
                if (eq[i] < 0) throw NotDivisible("polynomial division is not exact");
            }
            Laurent t = monomial(eq, flead.second / glead.second);
            q += t;
            f -= t * g;
        }
        ExponentVec s(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) s[i] = sa[i] - sb[i];
        return q.shifted(s);
    }

    // Rendering: terms ascending by (total degree, exponents).  Univariate
    // polynomials print as "1-2t^2+t^4"; multivariate ones use '*'.
    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<ExponentVec, Rational>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
            int dx = total_degree(x.first), dy = total_degree(y.first);
            if (dx != dy) return dx < dy;
            return x.first < y.first;
        });
        std::string out;
        for (const auto& [e, c] : ts) {
            std::string mono = monomial_str(e, names);
            bool neg = c < 0;
            Rational ac = neg ? Rational(-c) : c;
            std::string cs = ac.get_str();
            if (out.empty()) {
                out += neg ? "-" : "";
            } else {
                out += neg ? "-" : "+";
            }
            if (mono.empty()) {
                out += cs;
            } else if (ac == 1) {
                out += mono;
            } else {
                out += cs + (nvars_ == 1 ? "" : "*") + mono;
            }
        }
        return out;
    }

    static Rational pow_rational(const Rational& q, int e) {
        if (e == 0) return Rational(1);
        bool inv = e < 0;
        unsigned long n = inv ? -static_cast<long>(e) : e;
        if (inv && q == 0) throw Error("cannot raise zero to a negative power");
        Rational r;
        mpz_pow_ui(r.get_num_mpz_t(), q.get_num().get_mpz_t(), n);
        mpz_pow_ui(r.get_den_mpz_t(), q.get_den().get_mpz_t(), n);
        if (inv) return Rational(1) / r;
        return r;
    }

private:
    static void require_same(const Laurent& a, const Laurent& b) {
        if (a.nvars_ != b.nvars_)
            throw Error("operands live in different polynomial rings");
    }
    static int total_support(const ExponentVec& e) {
        int s = 0;
        for (int x : e) s += (x != 0);
        return s;
    }
    static ExponentVec negate(ExponentVec e) {
        for (int& x : e) x = -x;
        return e;
    }
    std::string monomial_str(const ExponentVec& e, const std::vector<std::string>& names) const {
        std::string m;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!m.empty()) m += "*";
            m += names.at(i);
            if (e[i] != 1) m += "^" + std::to_string(e[i]);
        }
        return m;
    }

    int nvars_;
    TermMap terms_;
};

// Free-function ring interface used by the generic fraction-free solver.
inline bool is_zero(const Laurent& p) { return p.is_zero(); }
inline Laurent mul(const Laurent& a, const Laurent& b) { return a * b; }
inline Laurent sub(const Laurent& a, const Laurent& b) { return a - b; }
inline Laurent zero_like(const Laurent& p) { return Laurent(p.nvars()); }
inline size_t term_count(const Laurent& p) { return p.term_count(); }

// Coefficients [c_0, ..., c_N] of a univariate polynomial with no negative
// exponents.
inline std::vector<Rational> univariate_coeffs(const Laurent& p, int through_degree) {
    if (p.nvars() != 1) throw Error("univariate_coeffs needs a one-variable polynomial");
    std::vector<Rational> out(through_degree + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        if (e[0] < 0) throw Error("negative exponent in expansion");
        if (e[0] <= through_degree) out[e[0]] = c;
    }
    return out;
}

}  // namespace cubegrowth
