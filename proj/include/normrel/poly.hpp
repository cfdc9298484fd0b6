#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "normrel/bigfloat.hpp"
#include "normrel/exactlin.hpp"

namespace nr {

// Polynomials are coefficient vectors, constant term first. The zero
// polynomial is the empty vector; degree(0) = -1.
struct ZPoly {
    std::vector<mpz_class> c;

    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> cc) : c(std::move(cc)) { trim(); }
    static ZPoly from_ints(std::initializer_list<long> v) {
        ZPoly p;
        for (long x : v) p.c.emplace_back(x);
        p.trim();
        return p;
    }
    static ZPoly x_power(int k) {
        ZPoly p;
        p.c.assign(k + 1, mpz_class(0));
        p.c[k] = 1;
        return p;
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const mpz_class& lc() const { return c.back(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool operator==(const ZPoly& o) const { return c == o.c; }
};

struct QPoly {
    std::vector<mpq_class> c;

    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> cc) : c(std::move(cc)) { trim(); }
    static QPoly from_z(const ZPoly& p) {
        QPoly q;
        q.c.assign(p.c.begin(), p.c.end());
        return q;
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const mpq_class& lc() const { return c.back(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool operator==(const QPoly& o) const { return c == o.c; }
};

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const mpz_class& k);
ZPoly derivative(const ZPoly& a);
mpz_class content(const ZPoly& a);
ZPoly primitive_part(const ZPoly& a);
mpz_class eval(const ZPoly& a, const mpz_class& x);
BigComplex eval(const ZPoly& a, const BigComplex& x);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& k);
QPoly monic(const QPoly& a);
QPoly derivative(const QPoly& a);
mpq_class eval(const QPoly& a, const mpq_class& x);
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
QPoly gcd_q(const QPoly& a, const QPoly& b);  // monic gcd

// Resultant over Z through a Sylvester determinant (Bareiss).
mpz_class resultant_z(const ZPoly& a, const ZPoly& b);
mpz_class discriminant(const ZPoly& f);

// Number of distinct real roots of a nonzero polynomial (Sturm chain; the
// squarefree part is taken internally).
int count_real_roots(const ZPoly& f);

// Complete factorization over Q, returned as primitive integer polynomials
// with positive leading coefficient and multiplicities; constant content is
// dropped. Zassenhaus: factor mod p, Hensel lift, subset recombination.
std::vector<std::pair<ZPoly, int>> factor_q(const ZPoly& f);

bool is_irreducible_q(const ZPoly& f);

// Complex roots of a squarefree polynomial at the requested precision
// (Aberth iteration), in no particular order.
std::vector<BigComplex> complex_roots(const ZPoly& f, mpfr_prec_t prec);

}  // namespace nr
