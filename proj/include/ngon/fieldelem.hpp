#pragma once
// Exact arithmetic in the cyclotomic field Q(zeta_m), power-basis representation
// reduced modulo the m-th cyclotomic polynomial.  Conductor convention: m = 4N so
// that tan(k*pi/N), tan(k*pi/2N) and i are all representable (i = zeta^N).
#include "ngon/rational.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

namespace ngon {

// Integer-coefficient polynomial helpers (ascending coefficient order).
using ZPoly = std::vector<BigInt>;
using QPoly = std::vector<Rational>;

namespace detail {

inline void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials (remainder must be zero): used to build
// cyclotomic polynomials from x^n - 1.
inline ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
    ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, BigInt(0));
    while (num.size() >= den.size() && !num.empty()) {
        BigInt c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        ztrim(num);
    }
    return q;
}

} // namespace detail

// n-th cyclotomic polynomial, cached; safe for concurrent read after init.
inline const ZPoly& cyclotomic(unsigned n) {
    static std::map<unsigned, ZPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d  (computed recursively without
    // re-locking: iterate divisors in increasing order inside this call).
    std::vector<unsigned> todo;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0 && cache.find(d) == cache.end()) todo.push_back(d);
    for (unsigned m : todo) {
        ZPoly num(m + 1, BigInt(0));
        num[0] = -1; num[m] = 1;
        for (unsigned d = 1; d < m; ++d) {
            if (m % d) continue;
            num = detail::zdiv_exact(std::move(num), cache.at(d));
        }
        cache.emplace(m, std::move(num));
    }
    return cache.at(n);
}

inline unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// Exact element of Q(zeta_m): coeffs c_0..c_{phi(m)-1} meaning sum c_i zeta^i.
class FieldElement {
public:
    FieldElement() : conductor_(4), coeffs_(2, Rational(0)) {}
    FieldElement(unsigned conductor, QPoly coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() < degree()) coeffs_.resize(degree(), Rational(0));
        else if (coeffs_.size() > degree()) reduce();
    }
    static FieldElement from_rational(unsigned conductor, const Rational& r) {
        QPoly c(euler_phi(conductor), Rational(0));
        c[0] = r;
        return FieldElement(conductor, std::move(c));
    }
    // zeta^k (k may be negative).
    static FieldElement zeta_power(unsigned conductor, long k) {
        long m = static_cast<long>(conductor);
        k %= m; if (k < 0) k += m;
        QPoly c(static_cast<size_t>(k) + 1, Rational(0));
        c.back() = 1;
        FieldElement e(conductor, std::move(c));
        e.reduce();
        return e;
    }

    // Re-express in Q(zeta_m) for a multiple m of the current conductor
    // (zeta_c = zeta_m^{m/c}).
    FieldElement promoted(unsigned m) const {
        if (m == conductor_) return *this;
        if (m % conductor_ != 0)
            throw std::invalid_argument("cannot promote conductor");
        unsigned step = m / conductor_;
        QPoly big(coeffs_.size() * step, Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) big[i * step] = coeffs_[i];
        FieldElement e(m, std::move(big));
        e.reduce();
        return e;
    }

    unsigned conductor() const { return conductor_; }
    unsigned degree() const { return euler_phi(conductor_); }
    const QPoly& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_) if (c != 0) return false;
        return true;
    }
    bool operator==(const FieldElement& o) const {
        if (conductor_ != o.conductor_) {
            auto [a, b] = aligned(o);
            return a.coeffs_ == b.coeffs_;
        }
        return coeffs_ == o.coeffs_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement operator+(const FieldElement& o) const {
        if (conductor_ != o.conductor_) { auto [a, b] = aligned(o); return a + b; }
        FieldElement r(*this);
        for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
        return r;
    }
    FieldElement operator-(const FieldElement& o) const {
        if (conductor_ != o.conductor_) { auto [a, b] = aligned(o); return a - b; }
        FieldElement r(*this);
        for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
        return r;
    }
    FieldElement operator-() const {
        FieldElement r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    FieldElement operator*(const FieldElement& o) const {
        if (conductor_ != o.conductor_) { auto [a, b] = aligned(o); return a * b; }
        QPoly prod(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (size_t j = 0; j < o.coeffs_.size(); ++j) {
                if (o.coeffs_[j] == 0) continue;
                prod[i + j] += coeffs_[i] * o.coeffs_[j];
            }
        }
        FieldElement r(conductor_, std::move(prod));
        r.reduce();
        return r;
    }
    FieldElement operator*(const Rational& s) const {
        FieldElement r(*this);
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }
    FieldElement inverse() const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

    // Complex conjugate: zeta -> zeta^{-1}.
    FieldElement conj() const {
        QPoly res(degree(), Rational(0));
        FieldElement out(conductor_, std::move(res));
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            out = out + zeta_power(conductor_, -static_cast<long>(i)) * coeffs_[i];
        }
        return out;
    }
    bool is_real() const { return *this == conj(); }

private:
    std::pair<FieldElement, FieldElement> aligned(const FieldElement& o) const {
        unsigned l = std::lcm(conductor_, o.conductor_);
        return {promoted(l), o.promoted(l)};
    }
    // Canonical form: degree < phi(m), reduced modulo Phi_m.
    void reduce() {
        const ZPoly& phi = cyclotomic(conductor_);
        size_t d = phi.size() - 1; // degree of Phi_m = euler_phi(m)
        while (coeffs_.size() > d) {
            Rational c = coeffs_.back();
            coeffs_.pop_back();
            if (c == 0) continue;
            size_t shift = coeffs_.size() - d;
            // subtract c * x^shift * (Phi - x^d) / lead  (Phi monic)
            for (size_t i = 0; i < d; ++i)
                coeffs_[shift + i] -= c * Rational(phi[i]);
        }
        coeffs_.resize(d, Rational(0));
    }
    unsigned conductor_;
    QPoly coeffs_;
};

namespace detail {
// Extended gcd over Q[x] modulo nothing: returns (g, u) with u*a = g (mod b),
// specialized: compute inverse of a modulo monic b when gcd = const.
inline QPoly qpoly_mod(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}
} // namespace detail

inline FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("DivisionByZero");
    // Extended Euclid in Q[x] for gcd(a, Phi_m) = c (nonzero constant since Phi
    // is irreducible over Q), tracking u with u*a + v*Phi = c.
    const ZPoly& phiz = cyclotomic(conductor_);
    QPoly r0(phiz.size());
    for (size_t i = 0; i < phiz.size(); ++i) r0[i] = Rational(phiz[i]);
    QPoly r1 = coeffs_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    QPoly s0{Rational(0)}, s1{Rational(1)}; // coefficients of 'a' in r0/r1
    while (r1.size() > 1) {
        // quotient of r0 by r1
        QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
        QPoly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        // s_next = s0 - q*s1
        QPoly qs(q.size() + s1.size() - 1, Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        }
        QPoly snext = s0;
        snext.resize(std::max(snext.size(), qs.size()), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) snext[i] -= qs[i];
        while (!snext.empty() && snext.back() == 0) snext.pop_back();
        r0 = std::move(r1); r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(snext);
        if (r1.empty()) break;
    }
    // Terminates with r1 a nonzero constant (Phi irreducible over Q, a != 0):
    // s1 * a = r1 (mod Phi).
    if (r1.size() != 1 || r1[0] == 0) throw std::domain_error("inverse failed");
    Rational inv_c = Rational(1) / r1[0];
    for (auto& c : s1) c *= inv_c;
    return FieldElement(conductor_, std::move(s1));
}

} // namespace ngon
