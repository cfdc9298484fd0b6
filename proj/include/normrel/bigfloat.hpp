#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace nr {

// Thin RAII wrapper over mpfr_t. Every value carries its working precision
// in bits; binary operations produce results at the larger of the two
// operand precisions.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64) {
        mpfr_init2(x_, prec);
        mpfr_set_zero(x_, 1);
    }
    BigFloat(double v, mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_d(x_, v, MPFR_RNDN);
    }
    BigFloat(long v, mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_si(x_, v, MPFR_RNDN);
    }
    BigFloat(const mpz_class& v, mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_z(x_, v.get_mpz_t(), MPFR_RNDN);
    }
    BigFloat(const mpq_class& v, mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_q(x_, v.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(x_, o.prec());
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(x_, 2);
        mpfr_swap(x_, o.x_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(x_, o.prec());
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(x_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    const mpfr_t& raw() const { return x_; }
    mpfr_t& raw() { return x_; }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    mpz_class round_z() const {
        mpz_class r;
        mpfr_get_z(r.get_mpz_t(), x_, MPFR_RNDN);
        return r;
    }
    mpz_class floor_z() const {
        mpz_class r;
        mpfr_get_z(r.get_mpz_t(), x_, MPFR_RNDD);
        return r;
    }

    int sgn() const { return mpfr_sgn(x_); }
    bool is_zero() const { return mpfr_zero_p(x_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& b) { mpfr_add(x_, x_, b.x_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& b) { mpfr_sub(x_, x_, b.x_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& b) { mpfr_mul(x_, x_, b.x_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& b) { mpfr_div(x_, x_, b.x_, MPFR_RNDN); return *this; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) == 0; }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_abs(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_sqrt(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat log(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_log(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat exp(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_exp(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat pow_ui(const BigFloat& a, unsigned long e) {
        BigFloat r(a.prec());
        mpfr_pow_ui(r.x_, a.x_, e, MPFR_RNDN);
        return r;
    }
    // 2^-k at the value's precision, handy for thresholds
    static BigFloat two_pow(long k, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_ui_2exp(r.x_, 1, k, MPFR_RNDN);
        return r;
    }

    std::string str(size_t digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), x_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    mpfr_t x_;
};

// Complex value at explicit precision; only the handful of operations the
// root finder and the reconstruction code need.
struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    BigComplex operator-() const { return {-re, -im}; }

    BigFloat norm2() const { return re * re + im * im; }
    BigFloat abs() const { return sqrt(norm2()); }
    BigComplex conj() const { return {re, -im}; }
};

}  // namespace nr
