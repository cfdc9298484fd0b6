#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

#include "normrel/bigfloat.hpp"

namespace nr {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when floating-point work cannot be certified at the current
// precision and the ladder is exhausted.
struct precision_error : error {
    using error::error;
};

// Dense row-major matrix over Z. Values are plain data; all algorithms are
// free functions returning fresh matrices.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<mpz_class> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    mpz_class& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const mpz_class& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; i++) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols, rows);
        for (int i = 0; i < rows; i++)
            for (int j = 0; j < cols; j++) t.at(j, i) = at(i, j);
        return t;
    }
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix add(const IntMatrix& a, const IntMatrix& b);
IntMatrix scale(const IntMatrix& a, const mpz_class& c);
std::vector<mpz_class> mul_vec(const IntMatrix& a, const std::vector<mpz_class>& v);

struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<mpq_class> a;  // entries kept canonicalized

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    mpq_class& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const mpq_class& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static RatMatrix from_int(const IntMatrix& m) {
        RatMatrix r(m.rows, m.cols);
        for (size_t k = 0; k < m.a.size(); k++) r.a[k] = m.a[k];
        return r;
    }
};

// Floating matrix with a recorded working precision. Used only for genuinely
// real data (logarithmic embeddings, LLL input).
struct RealMatrix {
    int rows = 0, cols = 0;
    mpfr_prec_t prec = 64;
    std::vector<BigFloat> a;

    RealMatrix() = default;
    RealMatrix(int r, int c, mpfr_prec_t p)
        : rows(r), cols(c), prec(p), a(static_cast<size_t>(r) * c, BigFloat(p)) {}

    BigFloat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const BigFloat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

struct HnfResult {
    IntMatrix h;  // column Hermite form, lower triangular, same shape as input
    IntMatrix u;  // unimodular with m * u = h
};

// Column HNF: pivots positive, entries left of a pivot reduced into
// [0, pivot). Zero columns are pushed to the right.
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
    std::vector<mpz_class> divisors;  // d_1 | d_2 | ... , nonnegative
    IntMatrix u, v;                   // unimodular, u * m * v = diag(divisors)
};

SnfResult snf(const IntMatrix& m);

// Exact solution of a * x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<mpq_class>> solve_rational(const RatMatrix& a,
                                                     const std::vector<mpq_class>& b);

// Basis of the right kernel, one column per basis vector.
RatMatrix kernel_rational(const RatMatrix& a);

int rank_rational(const RatMatrix& a);

// Fraction-free rank of an integer matrix (Bareiss); exact.
int rank_int(const IntMatrix& a);

// Lower bound shortcut: rank over F_p for a fixed machine prime. Full
// mod-p rank certifies full rational rank.
int rank_mod_p(const IntMatrix& a, uint64_t p);

struct MeetLineResult {
    mpz_class c;                    // smallest c > 0 with c * v in the column lattice
    std::vector<mpz_class> coeffs;  // witness: B * coeffs = c * v
};

// Intersection of the line Z*v with the lattice spanned by the columns of b.
// Returns nullopt when the intersection is trivial.
std::optional<MeetLineResult> lattice_meet_line(const IntMatrix& b,
                                                const std::vector<mpz_class>& v);

// Membership c*v in the column lattice decided through SNF; used as an
// independent cross-check of lattice_meet_line.
bool lattice_contains_snf(const IntMatrix& b, const std::vector<mpz_class>& cv);

struct LllResult {
    RealMatrix basis;  // reduced columns
    IntMatrix u;       // unimodular transform, columns of basis = input * u
};

// Floating LLL on the columns of b, delta = 0.99. Throws precision_error when
// Gram-Schmidt loses all significance at the recorded precision.
LllResult lll_reduce_real(const RealMatrix& b);

// Generators of { x : a * x = 0 mod m } over Z/m, m >= 2 composite allowed.
// Computed through the SNF of a over Z, no factorization of m.
std::vector<std::vector<mpz_class>> kernel_mod_m(const IntMatrix& a, const mpz_class& m);

}  // namespace nr
