#pragma once
// Exact cyclotomic constants for regular N-gon geometry: tan(k*pi/n) as field
// elements, high-precision embedding, minimal polynomials and change of basis
// into the generator power basis (GenScale).
#include "ngon/fieldelem.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace ngon {

using BigFloat = boost::multiprecision::mpfr_float;

struct PoleError : std::domain_error {
    PoleError() : std::domain_error("PoleError: tangent pole") {}
};
struct NotInSubfield : std::domain_error {
    NotInSubfield() : std::domain_error("NotInSubfield") {}
};

// tan(k*pi/n) as an element of Q(zeta_conductor); requires 2n | conductor and
// 4 | conductor.  tan(x) = -i (e^{ix} - e^{-ix}) / (e^{ix} + e^{-ix}).
inline FieldElement tan_pi(long k, unsigned n, unsigned conductor) {
    if (conductor % (2 * n) != 0 || conductor % 4 != 0)
        throw std::invalid_argument("conductor must be a multiple of 2n and 4");
    long a = k * static_cast<long>(conductor / (2 * n)); // e^{ik*pi/n} = zeta^a
    FieldElement zp = FieldElement::zeta_power(conductor, a);
    FieldElement zm = FieldElement::zeta_power(conductor, -a);
    FieldElement den = zp + zm;
    if (den.is_zero()) throw PoleError();
    FieldElement i = FieldElement::zeta_power(conductor, conductor / 4);
    return (-i) * (zp - zm) / den;
}

// tan(k*pi/n) in its natural conductor 4n.
inline FieldElement tan_exact(long k, unsigned n) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    return tan_pi(k, n, 4 * n);
}

inline bool twice_odd(unsigned N) { return N % 2 == 0 && (N / 2) % 2 == 1; }

// GenScale[N]: tan^2(pi/N) for N even, tan(pi/N) tan(pi/2N) for N odd.
inline FieldElement gen_scale(unsigned N, unsigned conductor) {
    if (N % 2 == 0) {
        FieldElement t = tan_pi(1, N, conductor);
        return t * t;
    }
    return tan_pi(1, N, conductor) * tan_pi(1, 2 * N, conductor);
}
inline FieldElement gen_scale(unsigned N) { return gen_scale(N, 4 * N); }

// The generator used for subfield coordinates of the N-gon: GenScale[N/2] for
// twice-odd N, otherwise GenScale[N]; expressed in conductor 4N.
inline FieldElement field_generator(unsigned N) {
    return twice_odd(N) ? gen_scale(N / 2, 4 * N) : gen_scale(N, 4 * N);
}
inline std::string field_generator_tag(unsigned N) {
    return "GenScale[" + std::to_string(twice_odd(N) ? N / 2 : N) + "]";
}

// --- embedding -------------------------------------------------------------

// Numeric value of e to `digits` significant decimal digits.
inline std::complex<double> embed_complex_double(const FieldElement& e);

struct BigComplex {
    BigFloat re, im;
};

inline BigComplex embed(const FieldElement& e, unsigned digits = 35) {
    unsigned prec = digits + 25;
    BigFloat::default_precision(prec);
    BigFloat pi = boost::math::constants::pi<BigFloat>();
    BigFloat re(0), im(0);
    unsigned m = e.conductor();
    for (size_t i = 0; i < e.coeffs().size(); ++i) {
        const Rational& c = e.coeffs()[i];
        if (c == 0) continue;
        BigFloat cf = BigFloat(numerator(c).str()) / BigFloat(denominator(c).str());
        BigFloat ang = 2 * pi * static_cast<long>(i) / m;
        re += cf * cos(ang);
        im += cf * sin(ang);
    }
    return {re, im};
}

inline BigFloat embed_real(const FieldElement& e, unsigned digits = 35) {
    return embed(e, digits).re;
}

inline std::complex<double> embed_complex_double(const FieldElement& e) {
    auto v = embed(e, 25);
    return {static_cast<double>(v.re), static_cast<double>(v.im)};
}
inline double embed_double(const FieldElement& e) {
    return static_cast<double>(embed(e, 25).re);
}

// --- exact linear algebra ---------------------------------------------------

// Solve A x = b over Q where A is given column-major (cols[j] = column j); A
// has `rows` rows.  Returns nullopt when inconsistent; free variables are set
// to zero when the system is underdetermined.
inline std::optional<std::vector<Rational>>
solve_columns(std::vector<std::vector<Rational>> cols, std::vector<Rational> b) {
    size_t ncols = cols.size();
    size_t rows = b.size();
    std::vector<long> pivot_of_col(ncols, -1);
    size_t prow = 0;
    for (size_t j = 0; j < ncols && prow < rows; ++j) {
        size_t sel = prow;
        while (sel < rows && cols[j][sel] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != prow) {
            for (size_t jj = 0; jj < ncols; ++jj) std::swap(cols[jj][sel], cols[jj][prow]);
            std::swap(b[sel], b[prow]);
        }
        Rational inv = Rational(1) / cols[j][prow];
        for (size_t jj = 0; jj < ncols; ++jj) cols[jj][prow] *= inv;
        b[prow] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == prow || cols[j][r] == 0) continue;
            Rational f = cols[j][r];
            for (size_t jj = 0; jj < ncols; ++jj) cols[jj][r] -= f * cols[jj][prow];
            b[r] -= f * b[prow];
        }
        pivot_of_col[j] = static_cast<long>(prow);
        ++prow;
    }
    // consistency: remaining rows of b must be zero
    for (size_t r = prow; r < rows; ++r)
        if (b[r] != 0) return std::nullopt;
    std::vector<Rational> x(ncols, Rational(0));
    for (size_t j = 0; j < ncols; ++j)
        if (pivot_of_col[j] >= 0) x[j] = b[static_cast<size_t>(pivot_of_col[j])];
    return x;
}

// --- minimal polynomial and generator basis ---------------------------------

// Monic minimal polynomial of g over Q (ascending coefficients, last = 1).
inline std::vector<Rational> minimal_polynomial_of(const FieldElement& g) {
    unsigned dim = g.degree();
    std::vector<std::vector<Rational>> pows; // power-basis coords of g^j
    FieldElement p = FieldElement::from_rational(g.conductor(), 1);
    for (unsigned d = 1; d <= dim + 1; ++d) {
        pows.push_back(p.coeffs());
        p = p * g;
        // does g^d lie in the span of 1..g^{d-1}?
        auto sol = solve_columns(pows, p.coeffs());
        if (sol) {
            std::vector<Rational> mono(d + 1);
            for (unsigned i = 0; i < d; ++i) mono[i] = -(*sol)[i];
            mono[d] = 1;
            return mono;
        }
    }
    throw std::logic_error("minimal polynomial not found");
}

inline std::vector<Rational> minimal_polynomial(unsigned N) {
    return minimal_polynomial_of(field_generator(N));
}

struct SubfieldPolynomial {
    std::string generator; // e.g. "GenScale[11]"
    std::vector<Rational> coeffs;
};

// Express a real element exactly as sum c_i g^i, deg < phi(N)/2.
inline SubfieldPolynomial to_generator_basis(const FieldElement& e, unsigned N) {
    if (!e.is_real()) throw NotInSubfield();
    FieldElement g = field_generator(N);
    FieldElement ee = e.promoted(4 * N);
    unsigned d = euler_phi(N) / 2;
    std::vector<std::vector<Rational>> cols;
    FieldElement p = FieldElement::from_rational(4 * N, 1);
    for (unsigned j = 0; j < d; ++j) {
        cols.push_back(p.coeffs());
        p = p * g;
    }
    auto sol = solve_columns(cols, ee.coeffs());
    if (!sol) throw NotInSubfield();
    auto c = *sol;
    while (!c.empty() && c.back() == 0) c.pop_back();
    return {field_generator_tag(N), std::move(c)};
}

// Exact inverse of to_generator_basis.
inline FieldElement from_generator_basis(const SubfieldPolynomial& sp, unsigned N) {
    FieldElement g = field_generator(N);
    FieldElement acc = FieldElement::from_rational(4 * N, 0);
    FieldElement p = FieldElement::from_rational(4 * N, 1);
    for (const auto& c : sp.coeffs) {
        acc = acc + p * c;
        p = p * g;
    }
    return acc;
}

} // namespace ngon
