#include "normrel/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "normrel/rng.hpp"

namespace nr {

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); i++) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] += b.c[i];
    }
    r.trim();
    return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); i++) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] -= b.c[i];
    }
    r.trim();
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ZPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c.size(); i++) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); j++) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

ZPoly scale(const ZPoly& a, const mpz_class& k) {
    if (k == 0) return {};
    ZPoly r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

ZPoly derivative(const ZPoly& a) {
    ZPoly r;
    for (size_t i = 1; i < a.c.size(); i++) r.c.push_back(a.c[i] * static_cast<long>(i));
    r.trim();
    return r;
}

mpz_class content(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& x : a.c) g = gcd(g, x);
    return g;
}

ZPoly primitive_part(const ZPoly& a) {
    if (a.is_zero()) return {};
    mpz_class g = content(a);
    if (a.lc() < 0) g = -g;
    ZPoly r = a;
    for (auto& x : r.c) x /= g;
    return r;
}

mpz_class eval(const ZPoly& a, const mpz_class& x) {
    mpz_class r = 0;
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) r = r * x + *it;
    return r;
}

BigComplex eval(const ZPoly& a, const BigComplex& x) {
    BigComplex r(x.prec());
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) {
        r = r * x;
        r.re += BigFloat(*it, x.prec());
    }
    return r;
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); i++) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] += b.c[i];
    }
    r.trim();
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); i++) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] -= b.c[i];
    }
    r.trim();
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c.size(); i++) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); j++) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

QPoly scale(const QPoly& a, const mpq_class& k) {
    if (k == 0) return {};
    QPoly r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

QPoly monic(const QPoly& a) {
    if (a.is_zero()) return a;
    return scale(a, 1 / a.lc());
}

QPoly derivative(const QPoly& a) {
    QPoly r;
    for (size_t i = 1; i < a.c.size(); i++) r.c.push_back(a.c[i] * static_cast<long>(i));
    r.trim();
    return r;
}

mpq_class eval(const QPoly& a, const mpq_class& x) {
    mpq_class r = 0;
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) r = r * x + *it;
    return r;
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw error("divrem: division by zero polynomial");
    QPoly r = a, q;
    if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, mpq_class(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        mpq_class f = r.lc() / b.lc();
        int shift = r.degree() - b.degree();
        q.c[shift] = f;
        for (int i = 0; i <= b.degree(); i++) r.c[i + shift] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

QPoly gcd_q(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

mpz_class resultant_z(const ZPoly& a, const ZPoly& b) {
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), a.c[0].get_mpz_t(), n);
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), b.c[0].get_mpz_t(), m);
        return r;
    }
    // Sylvester matrix, determinant by Bareiss
    int s = m + n;
    IntMatrix syl(s, s);
    for (int i = 0; i < n; i++)
        for (int j = 0; j <= m; j++) syl.at(i, i + j) = a.c[m - j];
    for (int i = 0; i < m; i++)
        for (int j = 0; j <= n; j++) syl.at(n + i, i + j) = b.c[n - j];

    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < s; k++) {
        int piv = -1;
        for (int i = k; i < s; i++)
            if (syl.at(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = k; j < s; j++) std::swap(syl.at(piv, j), syl.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < s; i++) {
            for (int j = k + 1; j < s; j++) {
                mpz_class t = syl.at(i, j) * syl.at(k, k) - syl.at(i, k) * syl.at(k, j);
                mpz_divexact(syl.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            syl.at(i, k) = 0;
        }
        prev = syl.at(k, k);
    }
    return sign > 0 ? prev : mpz_class(-prev);
}

mpz_class discriminant(const ZPoly& f) {
    int n = f.degree();
    if (n < 1) throw error("discriminant: degree must be >= 1");
    mpz_class res = resultant_z(f, derivative(f));
    mpz_class d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), f.lc().get_mpz_t());
    return ((n * (n - 1) / 2) % 2 == 0) ? d : mpz_class(-d);
}

int count_real_roots(const ZPoly& f) {
    if (f.is_zero()) throw error("count_real_roots: zero polynomial");
    QPoly p0 = QPoly::from_z(f);
    p0 = divrem(p0, gcd_q(p0, derivative(p0))).first;  // squarefree part
    if (p0.degree() <= 0) return 0;
    std::vector<QPoly> chain{p0, derivative(p0)};
    while (!chain.back().is_zero()) {
        QPoly r = divrem(chain[chain.size() - 2], chain.back()).second;
        for (auto& x : r.c) x = -x;
        r.trim();
        chain.push_back(std::move(r));
    }
    chain.pop_back();
    auto sign_changes = [&](int at_inf) {
        int changes = 0, last = 0;
        for (const auto& p : chain) {
            if (p.is_zero()) continue;
            int s = sgn(p.lc());
            if (at_inf < 0 && p.degree() % 2 == 1) s = -s;
            if (last != 0 && s != 0 && s != last) changes++;
            if (s != 0) last = s;
        }
        return changes;
    };
    return sign_changes(-1) - sign_changes(+1);
}

// ---------------------------------------------------------------------------
// factorization over Q (Zassenhaus)

namespace {

struct Fp {
    uint64_t p;
    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % p);
    }
    uint64_t pow(uint64_t b, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
};

using FpPoly = std::vector<uint64_t>;  // constant term first

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_mul(const Fp& F, const FpPoly& a, const FpPoly& b) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); j++) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    fp_trim(r);
    return r;
}

FpPoly fp_divrem(const Fp& F, FpPoly a, const FpPoly& b, FpPoly* quot = nullptr) {
    FpPoly q;
    if (fp_deg(a) >= fp_deg(b)) q.assign(fp_deg(a) - fp_deg(b) + 1, 0);
    uint64_t binv = F.inv(b.back());
    while (fp_deg(a) >= fp_deg(b)) {
        uint64_t f = F.mul(a.back(), binv);
        int shift = fp_deg(a) - fp_deg(b);
        q[shift] = f;
        for (size_t i = 0; i < b.size(); i++) a[i + shift] = F.sub(a[i + shift], F.mul(f, b[i]));
        fp_trim(a);
    }
    if (quot) *quot = std::move(q);
    return a;
}

FpPoly fp_mulmod(const Fp& F, const FpPoly& a, const FpPoly& b, const FpPoly& m) {
    return fp_divrem(F, fp_mul(F, a, b), m);
}

FpPoly fp_powmod(const Fp& F, FpPoly b, mpz_class e, const FpPoly& m) {
    FpPoly r{1};
    b = fp_divrem(F, std::move(b), m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fp_mulmod(F, r, b, m);
        b = fp_mulmod(F, b, b, m);
        e >>= 1;
    }
    return r;
}

FpPoly fp_gcd(const Fp& F, FpPoly a, FpPoly b) {
    while (!b.empty()) {
        FpPoly r = fp_divrem(F, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        uint64_t inv = F.inv(a.back());
        for (auto& x : a) x = F.mul(x, inv);
    }
    return a;
}

FpPoly fp_deriv(const Fp& F, const FpPoly& a) {
    FpPoly r;
    for (size_t i = 1; i < a.size(); i++) r.push_back(F.mul(a[i], i % F.p));
    fp_trim(r);
    return r;
}

FpPoly fp_from_z(const Fp& F, const ZPoly& f) {
    FpPoly r(f.c.size());
    for (size_t i = 0; i < f.c.size(); i++) {
        mpz_class m = f.c[i] % static_cast<long>(F.p);
        if (m < 0) m += static_cast<long>(F.p);
        r[i] = m.get_ui();
    }
    fp_trim(r);
    return r;
}

// equal-degree splitting (Cantor-Zassenhaus, p odd)
void fp_equal_degree(const Fp& F, const FpPoly& f, int d, Rng& rng, std::vector<FpPoly>& out) {
    if (fp_deg(f) == d) {
        out.push_back(f);
        return;
    }
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), F.p, d);
    mpz_class e = (pd - 1) / 2;
    while (true) {
        FpPoly r(fp_deg(f), 0);
        for (auto& x : r) x = rng.below(F.p);
        fp_trim(r);
        if (fp_deg(r) < 1) continue;
        FpPoly t = fp_powmod(F, r, e, f);
        if (t.empty())
            continue;
        t[0] = F.sub(t[0], 1);
        fp_trim(t);
        FpPoly g = fp_gcd(F, t, f);
        if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
            FpPoly q;
            fp_divrem(F, f, g, &q);
            fp_equal_degree(F, g, d, rng, out);
            fp_equal_degree(F, q, d, rng, out);
            return;
        }
    }
}

// factorization of a squarefree monic polynomial mod p
std::vector<FpPoly> fp_factor_squarefree(const Fp& F, FpPoly f, Rng& rng) {
    std::vector<FpPoly> out;
    FpPoly x{0, 1};
    FpPoly h = x;
    int d = 0;
    while (fp_deg(f) > 0) {
        d++;
        if (2 * d > fp_deg(f)) {
            out.push_back(f);
            break;
        }
        h = fp_powmod(F, h, mpz_class(static_cast<unsigned long>(F.p)), f);
        FpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = F.sub(hx[1], 1);
        fp_trim(hx);
        FpPoly g = fp_gcd(F, hx, f);
        if (fp_deg(g) > 0) {
            fp_equal_degree(F, g, d, rng, out);
            FpPoly q;
            fp_divrem(F, f, g, &q);
            f = std::move(q);
            h = fp_divrem(F, std::move(h), f);
        }
    }
    return out;
}

// one quadratic Hensel step: f = g*h, s*g + t*h = 1 (mod m) lifted to mod m^2
struct HenselPair {
    ZPoly g, h, s, t;
};

ZPoly zp_mod(const ZPoly& a, const mpz_class& m) {
    ZPoly r = a;
    for (auto& x : r.c) {
        x %= m;
        if (x < 0) x += m;
    }
    r.trim();
    return r;
}

// division with remainder mod m, divisor monic
std::pair<ZPoly, ZPoly> zp_divrem_monic_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r = zp_mod(a, m), q;
    if (r.degree() >= b.degree()) q.c.assign(r.degree() - b.degree() + 1, mpz_class(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        mpz_class f = r.lc();
        int shift = r.degree() - b.degree();
        q.c[shift] = f;
        for (int i = 0; i <= b.degree(); i++) {
            r.c[i + shift] = (r.c[i + shift] - f * b.c[i]) % m;
        }
        r.trim();
    }
    return {zp_mod(q, m), zp_mod(r, m)};
}

void hensel_step(HenselPair& hp, const ZPoly& f, const mpz_class& m) {
    // lift from mod m to mod m^2; g stays monic
    mpz_class m2 = m * m;
    ZPoly e = zp_mod(sub(f, mul(hp.g, hp.h)), m2);
    auto [q, r] = zp_divrem_monic_mod(zp_mod(mul(hp.s, e), m2), hp.h, m2);
    ZPoly g2 = zp_mod(add(hp.g, add(zp_mod(mul(hp.t, e), m2), zp_mod(mul(q, hp.g), m2))), m2);
    ZPoly h2 = zp_mod(add(hp.h, r), m2);
    ZPoly b = zp_mod(sub(add(mul(hp.s, g2), mul(hp.t, h2)), ZPoly::from_ints({1})), m2);
    auto [c, d] = zp_divrem_monic_mod(zp_mod(mul(hp.s, b), m2), h2, m2);
    ZPoly s2 = zp_mod(sub(hp.s, d), m2);
    ZPoly t2 = zp_mod(sub(sub(hp.t, zp_mod(mul(hp.t, b), m2)), zp_mod(mul(c, g2), m2)), m2);
    hp = {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

// extended gcd of coprime polys mod p: s*a + t*b = 1
void fp_xgcd(const Fp& F, const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        FpPoly q;
        FpPoly r2 = fp_divrem(F, r0, r1, &q);
        FpPoly s2 = s0, t2 = t0;
        FpPoly qs = fp_mul(F, q, s1), qt = fp_mul(F, q, t1);
        s2.resize(std::max(s2.size(), qs.size()), 0);
        for (size_t i = 0; i < qs.size(); i++) s2[i] = F.sub(s2[i], qs[i]);
        t2.resize(std::max(t2.size(), qt.size()), 0);
        for (size_t i = 0; i < qt.size(); i++) t2[i] = F.sub(t2[i], qt[i]);
        fp_trim(s2);
        fp_trim(t2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd (a unit); normalize to 1
    uint64_t inv = F.inv(r0[0]);
    for (auto& x : s0) x = F.mul(x, inv);
    for (auto& x : t0) x = F.mul(x, inv);
    s = std::move(s0);
    t = std::move(t0);
}

ZPoly zp_from_fp(const FpPoly& a) {
    ZPoly r;
    for (uint64_t x : a) r.c.emplace_back(static_cast<unsigned long>(x));
    r.trim();
    return r;
}

// lift a factorization of monic f into monic factors mod p up to mod p^N >= bound
std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, const std::vector<FpPoly>& factors,
                                    const Fp& F, const mpz_class& bound, mpz_class& modulus_out) {
    if (factors.size() == 1) {
        modulus_out = 0;  // unused marker; single factor means f is irreducible mod p
        return {f};
    }
    // split factor list in two halves, g = product of first, h = product of rest
    size_t half = factors.size() / 2;
    FpPoly gp{1}, hp{1};
    for (size_t i = 0; i < half; i++) gp = fp_mul(F, gp, factors[i]);
    for (size_t i = half; i < factors.size(); i++) hp = fp_mul(F, hp, factors[i]);
    FpPoly sp, tp;
    fp_xgcd(F, gp, hp, sp, tp);

    HenselPair pair{zp_from_fp(gp), zp_from_fp(hp), zp_from_fp(sp), zp_from_fp(tp)};
    mpz_class m(static_cast<unsigned long>(F.p));
    while (m < bound) {
        hensel_step(pair, f, m);
        m = m * m;
    }
    modulus_out = m;

    std::vector<FpPoly> left(factors.begin(), factors.begin() + half);
    std::vector<FpPoly> right(factors.begin() + half, factors.end());
    mpz_class sub_mod;
    auto lg = hensel_lift_tree(pair.g, left, F, bound, sub_mod);
    auto lh = hensel_lift_tree(pair.h, right, F, bound, sub_mod);
    lg.insert(lg.end(), lh.begin(), lh.end());
    return lg;
}

ZPoly zp_symmetric(const ZPoly& a, const mpz_class& m) {
    ZPoly r = zp_mod(a, m);
    mpz_class half = m / 2;
    for (auto& x : r.c)
        if (x > half) x -= m;
    r.trim();
    return r;
}

bool zp_divides(const ZPoly& d, const ZPoly& f, ZPoly* quot) {
    // exact division test in Z[x], d primitive
    QPoly qf = QPoly::from_z(f), qd = QPoly::from_z(d);
    auto [q, r] = divrem(qf, qd);
    if (!r.is_zero()) return false;
    ZPoly qi;
    for (const auto& x : q.c) {
        if (x.get_den() != 1) return false;
        qi.c.push_back(x.get_num());
    }
    qi.trim();
    if (quot) *quot = qi;
    return true;
}

// factor a primitive squarefree monic polynomial of degree >= 1
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
    if (f.degree() == 1) return {f};

    // pick an odd prime keeping f squarefree
    Fp F{0};
    mpz_class disc = resultant_z(f, derivative(f));
    for (uint64_t p = 3;; p += 2) {
        mpz_class pz(static_cast<unsigned long>(p));
        if (mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0) continue;
        if (disc % pz != 0) {
            F.p = p;
            break;
        }
        if (p > 20000) throw error("factor: no usable prime found");
    }

    Rng rng(0x5eedf00dULL ^ (F.p * 2654435761ULL) ^ static_cast<uint64_t>(f.degree()));
    std::vector<FpPoly> modular = fp_factor_squarefree(F, fp_from_z(F, f), rng);
    if (modular.size() == 1) return {f};
    std::sort(modular.begin(), modular.end());

    // Landau-Mignotte style bound on factor coefficients
    mpz_class norm2 = 0;
    for (const auto& c : f.c) norm2 += c * c;
    mpz_class sq = sqrt(norm2) + 1;
    mpz_class bound = sq;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), f.degree() + 1);
    bound = 2 * bound + 1;

    mpz_class modulus;
    std::vector<ZPoly> lifted = hensel_lift_tree(f, modular, F, bound, modulus);

    // subset recombination
    std::vector<ZPoly> result;
    std::vector<int> live(lifted.size());
    for (size_t i = 0; i < live.size(); i++) live[i] = static_cast<int>(i);
    ZPoly rem = f;

    auto try_subsets = [&](auto&& self, int card) -> bool {
        std::vector<int> idx(card);
        for (int i = 0; i < card; i++) idx[i] = i;
        while (true) {
            ZPoly cand = ZPoly::from_ints({1});
            for (int i : idx) cand = zp_mod(mul(cand, lifted[live[i]]), modulus);
            cand = zp_symmetric(cand, modulus);
            ZPoly quot;
            if (!cand.is_zero() && zp_divides(primitive_part(cand), rem, &quot)) {
                result.push_back(primitive_part(cand));
                rem = quot;
                std::vector<int> keep;
                for (size_t i = 0, k = 0; i < live.size(); i++) {
                    if (k < idx.size() && static_cast<int>(i) == idx[k]) {
                        k++;
                        continue;
                    }
                    keep.push_back(live[i]);
                }
                live = keep;
                return true;
            }
            // next combination
            int i = card - 1;
            while (i >= 0 && idx[i] == static_cast<int>(live.size()) - card + i) i--;
            if (i < 0) return false;
            idx[i]++;
            for (int j = i + 1; j < card; j++) idx[j] = idx[j - 1] + 1;
            (void)self;
        }
    };

    int card = 1;
    while (2 * card <= static_cast<int>(live.size())) {
        if (try_subsets(try_subsets, card)) continue;  // retry same cardinality after a hit
        card++;
    }
    if (rem.degree() > 0) result.push_back(rem);
    return result;
}

}  // namespace

std::vector<std::pair<ZPoly, int>> factor_q(const ZPoly& f_in) {
    if (f_in.is_zero()) throw error("factor_q: zero polynomial");
    ZPoly f = primitive_part(f_in);
    std::vector<std::pair<ZPoly, int>> out;
    if (f.degree() < 1) return out;

    // squarefree decomposition (Yun)
    std::vector<std::pair<ZPoly, int>> squarefree;
    {
        QPoly a = QPoly::from_z(f);
        QPoly g = gcd_q(a, derivative(a));
        if (g.degree() == 0) {
            squarefree.push_back({f, 1});
        } else {
            QPoly w = divrem(a, g).first;
            QPoly y = divrem(derivative(a), g).first;
            QPoly z = sub(y, derivative(w));
            int i = 1;
            while (w.degree() > 0) {
                QPoly gi = gcd_q(w, z);
                if (gi.degree() > 0) {
                    // clear denominators back into a primitive integer poly
                    mpz_class den = 1;
                    for (const auto& q : gi.c) den = lcm(den, q.get_den());
                    ZPoly zi;
                    for (const auto& q : gi.c) {
                        mpq_class t = q * den;
                        t.canonicalize();
                        zi.c.push_back(t.get_num());
                    }
                    zi.trim();
                    squarefree.push_back({primitive_part(zi), i});
                }
                w = divrem(w, gi).first;
                z = sub(divrem(z, gi).first, derivative(w));
                i++;
            }
        }
    }

    for (auto& [sf, mult] : squarefree) {
        if (sf.degree() < 1) continue;
        // monicize: factor lc^(n-1) * f(x / lc), map factors back
        mpz_class l = sf.lc();
        ZPoly g = sf;
        if (l != 1) {
            // g(y) = l^(n-1) * f(y/l), a monic integer polynomial
            g.c[sf.degree()] = 1;
            mpz_class pw = 1;
            for (int i = sf.degree() - 1; i >= 0; i--) {
                g.c[i] *= pw;
                pw *= l;
            }
        }
        for (const ZPoly& fac : factor_monic_squarefree(g)) {
            ZPoly mapped = fac;
            if (l != 1) {
                mpz_class pw = 1;
                for (size_t i = 0; i < mapped.c.size(); i++) {
                    mapped.c[i] *= pw;
                    pw *= l;
                }
                mapped = primitive_part(mapped);
            }
            out.push_back({mapped, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
        return x.first.c < y.first.c;
    });
    return out;
}

bool is_irreducible_q(const ZPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_q(f);
    return fac.size() == 1 && fac[0].second == 1 && fac[0].first.degree() == f.degree();
}

std::vector<BigComplex> complex_roots(const ZPoly& f, mpfr_prec_t prec) {
    int n = f.degree();
    if (n < 1) return {};
    mpfr_prec_t work = prec + 64;
    ZPoly fp = derivative(f);

    // Cauchy bound for initial guesses
    double lcd = std::abs(f.lc().get_d());
    double radius = 0;
    for (int i = 0; i < n; i++) radius = std::max(radius, std::abs(f.c[i].get_d()) / lcd);
    radius += 1.0;

    std::vector<BigComplex> z;
    z.reserve(n);
    for (int j = 0; j < n; j++) {
        double th = 2.0 * 3.14159265358979323846 * (j + 0.25) / n + 0.3 / n;
        z.emplace_back(radius * std::cos(th), radius * std::sin(th), work);
    }

    BigFloat tol = BigFloat::two_pow(-(prec + 16), work);
    long max_iters = 200 + 4 * static_cast<long>(prec);
    for (long iter = 0; iter < max_iters; iter++) {
        bool done = true;
        for (int j = 0; j < n; j++) {
            BigComplex fv = eval(f, z[j]);
            BigComplex dv = eval(fp, z[j]);
            if (dv.norm2().is_zero()) {
                z[j].re += BigFloat(1e-3, work);
                done = false;
                continue;
            }
            BigComplex w = fv / dv;  // Newton correction
            BigComplex sum(work);
            for (int k = 0; k < n; k++) {
                if (k == j) continue;
                BigComplex d = z[j] - z[k];
                if (d.norm2().is_zero()) {
                    d.re += BigFloat(1e-6, work);
                }
                sum = sum + BigComplex(BigFloat(1.0, work), BigFloat(work)) / d;
            }
            BigComplex denom = BigComplex(BigFloat(1.0, work), BigFloat(work)) - w * sum;
            BigComplex corr = denom.norm2().is_zero() ? w : w / denom;
            z[j] = z[j] - corr;
            BigFloat mag = corr.abs();
            BigFloat scale = BigFloat(1.0, work) + z[j].abs();
            if (!(mag < tol * scale)) done = false;
        }
        if (done) return z;
    }
    throw precision_error("complex_roots: Aberth iteration did not converge");
}

}  // namespace nr
