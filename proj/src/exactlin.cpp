#include "normrel/exactlin.hpp"

#include <algorithm>
#include <cstdint>

namespace nr {

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw error("mul: dimension mismatch");
    IntMatrix r(a.rows, b.cols);
    for (int i = 0; i < a.rows; i++)
        for (int k = 0; k < a.cols; k++) {
            const mpz_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; j++) {
                if (b.at(k, j) != 0) r.at(i, j) += aik * b.at(k, j);
            }
        }
    return r;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw error("add: dimension mismatch");
    IntMatrix r(a.rows, a.cols);
    for (size_t k = 0; k < a.a.size(); k++) r.a[k] = a.a[k] + b.a[k];
    return r;
}

IntMatrix scale(const IntMatrix& a, const mpz_class& c) {
    IntMatrix r(a.rows, a.cols);
    for (size_t k = 0; k < a.a.size(); k++) r.a[k] = a.a[k] * c;
    return r;
}

std::vector<mpz_class> mul_vec(const IntMatrix& a, const std::vector<mpz_class>& v) {
    if (a.cols != static_cast<int>(v.size())) throw error("mul_vec: dimension mismatch");
    std::vector<mpz_class> r(a.rows);
    for (int i = 0; i < a.rows; i++)
        for (int j = 0; j < a.cols; j++)
            if (a.at(i, j) != 0) r[i] += a.at(i, j) * v[j];
    return r;
}

namespace {

void col_axpy(IntMatrix& m, int dst, int src, const mpz_class& q) {
    // col_dst += q * col_src
    for (int i = 0; i < m.rows; i++) m.at(i, dst) += q * m.at(i, src);
}

void col_neg(IntMatrix& m, int j) {
    for (int i = 0; i < m.rows; i++) m.at(i, j) = -m.at(i, j);
}

void col_swap(IntMatrix& m, int j1, int j2) {
    for (int i = 0; i < m.rows; i++) std::swap(m.at(i, j1), m.at(i, j2));
}

// Replace (col_a, col_b) by (s*col_a + t*col_b, -y*col_a + x*col_b); the
// 2x2 block [[s,-y],[t,x]] has determinant s*x + t*y = 1 when produced by
// the extended gcd below.
void col_gcd_transform(IntMatrix& m, int ca, int cb, const mpz_class& s, const mpz_class& t,
                       const mpz_class& x, const mpz_class& y) {
    for (int i = 0; i < m.rows; i++) {
        mpz_class va = m.at(i, ca), vb = m.at(i, cb);
        m.at(i, ca) = s * va + t * vb;
        m.at(i, cb) = x * vb - y * va;
    }
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.cols);
    int r = 0;  // next pivot column
    for (int i = 0; i < m.rows && r < m.cols; i++) {
        // gcd-eliminate everything right of column r in row i
        for (int j = r + 1; j < m.cols; j++) {
            if (h.at(i, j) == 0) continue;
            if (h.at(i, r) == 0) {
                col_swap(h, r, j);
                col_swap(u, r, j);
                continue;
            }
            mpz_class g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h.at(i, r).get_mpz_t(),
                       h.at(i, j).get_mpz_t());
            mpz_class x = h.at(i, r) / g, y = h.at(i, j) / g;
            col_gcd_transform(h, r, j, s, t, x, y);
            col_gcd_transform(u, r, j, s, t, x, y);
        }
        if (h.at(i, r) == 0) continue;  // no pivot in this row
        if (h.at(i, r) < 0) {
            col_neg(h, r);
            col_neg(u, r);
        }
        // reduce earlier pivot columns into [0, pivot)
        for (int j = 0; j < r; j++) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(i, r).get_mpz_t());
            if (q != 0) {
                col_axpy(h, j, r, -q);
                col_axpy(u, j, r, -q);
            }
        }
        r++;
    }
    return {std::move(h), std::move(u)};
}

namespace {

void row_axpy(IntMatrix& m, int dst, int src, const mpz_class& q) {
    for (int j = 0; j < m.cols; j++) m.at(dst, j) += q * m.at(src, j);
}

void row_swap(IntMatrix& m, int i1, int i2) {
    for (int j = 0; j < m.cols; j++) std::swap(m.at(i1, j), m.at(i2, j));
}

void row_neg(IntMatrix& m, int i) {
    for (int j = 0; j < m.cols; j++) m.at(i, j) = -m.at(i, j);
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(m.rows);
    IntMatrix v = IntMatrix::identity(m.cols);
    int k = std::min(m.rows, m.cols);

    for (int t = 0; t < k; t++) {
        // locate a nonzero entry of smallest absolute value in the tail
        int pi = -1, pj = -1;
        mpz_class best;
        for (int i = t; i < s.rows; i++)
            for (int j = t; j < s.cols; j++) {
                if (s.at(i, j) == 0) continue;
                mpz_class ab = abs(s.at(i, j));
                if (pi < 0 || ab < best) {
                    best = ab;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // tail is zero
        if (pi != t) {
            row_swap(s, t, pi);
            row_swap(u, t, pi);
        }
        if (pj != t) {
            col_swap(s, t, pj);
            col_swap(v, t, pj);
        }

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < s.rows; i++) {
                if (s.at(i, t) == 0) continue;
                mpz_class q = s.at(i, t) / s.at(t, t);
                row_axpy(s, i, t, -q);
                row_axpy(u, i, t, -q);
                if (s.at(i, t) != 0) {
                    row_swap(s, t, i);
                    row_swap(u, t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < s.cols; j++) {
                if (s.at(t, j) == 0) continue;
                mpz_class q = s.at(t, j) / s.at(t, t);
                col_axpy(s, j, t, -q);
                col_axpy(v, j, t, -q);
                if (s.at(t, j) != 0) {
                    col_swap(s, t, j);
                    col_swap(v, t, j);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the rest of the tail
                for (int i = t + 1; i < s.rows && clean; i++)
                    for (int j = t + 1; j < s.cols && clean; j++) {
                        if (s.at(i, j) % s.at(t, t) != 0) {
                            row_axpy(s, t, i, 1);
                            row_axpy(u, t, i, 1);
                            clean = false;
                        }
                    }
            }
        }
        if (s.at(t, t) < 0) {
            row_neg(s, t);
            row_neg(u, t);
        }
    }

    SnfResult out;
    out.divisors.resize(k);
    for (int t = 0; t < k; t++) out.divisors[t] = s.at(t, t);
    out.u = std::move(u);
    out.v = std::move(v);
    return out;
}

std::optional<std::vector<mpq_class>> solve_rational(const RatMatrix& a,
                                                     const std::vector<mpq_class>& b) {
    if (a.rows != static_cast<int>(b.size())) throw error("solve_rational: dimension mismatch");
    RatMatrix w(a.rows, a.cols + 1);
    for (int i = 0; i < a.rows; i++) {
        for (int j = 0; j < a.cols; j++) w.at(i, j) = a.at(i, j);
        w.at(i, a.cols) = b[i];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < a.cols && row < a.rows; col++) {
        int p = -1;
        for (int i = row; i < a.rows; i++)
            if (w.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = col; j <= a.cols; j++) std::swap(w.at(p, j), w.at(row, j));
        mpq_class inv = 1 / w.at(row, col);
        for (int j = col; j <= a.cols; j++) w.at(row, j) *= inv;
        for (int i = 0; i < a.rows; i++) {
            if (i == row || w.at(i, col) == 0) continue;
            mpq_class f = w.at(i, col);
            for (int j = col; j <= a.cols; j++) w.at(i, j) -= f * w.at(row, j);
        }
        pivot_col.push_back(col);
        row++;
    }
    for (int i = row; i < a.rows; i++)
        if (w.at(i, a.cols) != 0) return std::nullopt;  // inconsistent
    std::vector<mpq_class> x(a.cols, mpq_class(0));
    for (int r = 0; r < static_cast<int>(pivot_col.size()); r++) x[pivot_col[r]] = w.at(r, a.cols);
    return x;
}

RatMatrix kernel_rational(const RatMatrix& a) {
    RatMatrix w = a;
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < a.cols && row < a.rows; col++) {
        int p = -1;
        for (int i = row; i < a.rows; i++)
            if (w.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < a.cols; j++) std::swap(w.at(p, j), w.at(row, j));
        mpq_class inv = 1 / w.at(row, col);
        for (int j = 0; j < a.cols; j++) w.at(row, j) *= inv;
        for (int i = 0; i < a.rows; i++) {
            if (i == row || w.at(i, col) == 0) continue;
            mpq_class f = w.at(i, col);
            for (int j = 0; j < a.cols; j++) w.at(i, j) -= f * w.at(row, j);
        }
        pivot_col.push_back(col);
        row++;
    }
    std::vector<bool> is_pivot(a.cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    int nfree = a.cols - static_cast<int>(pivot_col.size());
    RatMatrix ker(a.cols, nfree);
    int idx = 0;
    for (int col = 0; col < a.cols; col++) {
        if (is_pivot[col]) continue;
        ker.at(col, idx) = 1;
        for (int r = 0; r < static_cast<int>(pivot_col.size()); r++)
            ker.at(pivot_col[r], idx) = -w.at(r, col);
        idx++;
    }
    return ker;
}

int rank_rational(const RatMatrix& a) {
    RatMatrix w = a;
    int row = 0;
    for (int col = 0; col < a.cols && row < a.rows; col++) {
        int p = -1;
        for (int i = row; i < a.rows; i++)
            if (w.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = col; j < a.cols; j++) std::swap(w.at(p, j), w.at(row, j));
        for (int i = row + 1; i < a.rows; i++) {
            if (w.at(i, col) == 0) continue;
            mpq_class f = w.at(i, col) / w.at(row, col);
            for (int j = col; j < a.cols; j++) w.at(i, j) -= f * w.at(row, j);
        }
        row++;
    }
    return row;
}

int rank_int(const IntMatrix& a) {
    // Bareiss fraction-free elimination; intermediate entries are minors.
    IntMatrix w = a;
    mpz_class prev = 1;
    int row = 0;
    for (int col = 0; col < w.cols && row < w.rows; col++) {
        int p = -1;
        for (int i = row; i < w.rows; i++)
            if (w.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = col; j < w.cols; j++) std::swap(w.at(p, j), w.at(row, j));
        for (int i = row + 1; i < w.rows; i++) {
            for (int j = col + 1; j < w.cols; j++) {
                mpz_class t = w.at(i, j) * w.at(row, col) - w.at(i, col) * w.at(row, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, col) = 0;
        }
        prev = w.at(row, col);
        row++;
    }
    return row;
}

int rank_mod_p(const IntMatrix& a, uint64_t p) {
    std::vector<std::vector<uint64_t>> w(a.rows, std::vector<uint64_t>(a.cols));
    for (int i = 0; i < a.rows; i++)
        for (int j = 0; j < a.cols; j++) {
            mpz_class r = a.at(i, j) % static_cast<long>(p);
            if (r < 0) r += static_cast<long>(p);
            w[i][j] = r.get_ui();
        }
    auto mulmod = [p](uint64_t x, uint64_t y) {
        return static_cast<uint64_t>(static_cast<__uint128_t>(x) * y % p);
    };
    auto powmod = [&](uint64_t b, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    int row = 0;
    for (int col = 0; col < a.cols && row < a.rows; col++) {
        int piv = -1;
        for (int i = row; i < a.rows; i++)
            if (w[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[piv], w[row]);
        uint64_t inv = powmod(w[row][col], p - 2);
        for (int i = row + 1; i < a.rows; i++) {
            if (w[i][col] == 0) continue;
            uint64_t f = mulmod(w[i][col], inv);
            for (int j = col; j < a.cols; j++) {
                uint64_t sub = mulmod(f, w[row][j]);
                w[i][j] = (w[i][j] >= sub) ? w[i][j] - sub : w[i][j] + p - sub;
            }
        }
        row++;
    }
    return row;
}

std::optional<MeetLineResult> lattice_meet_line(const IntMatrix& b,
                                                const std::vector<mpz_class>& v) {
    if (b.rows != static_cast<int>(v.size())) throw error("lattice_meet_line: dimension mismatch");
    bool nonzero = false;
    for (const auto& x : v)
        if (x != 0) nonzero = true;
    if (!nonzero) throw error("lattice_meet_line: v must be nonzero");

    HnfResult hr = hnf(b);
    // pivot structure of the column echelon form
    std::vector<std::pair<int, int>> pivots;  // (row, col)
    {
        int col = 0;
        for (int i = 0; i < hr.h.rows && col < hr.h.cols; i++) {
            if (hr.h.at(i, col) != 0) {
                pivots.push_back({i, col});
                col++;
            }
        }
    }
    // solve H * w = v by forward substitution on pivot rows
    std::vector<mpq_class> w(hr.h.cols, mpq_class(0));
    std::vector<mpq_class> residue(v.size());
    for (size_t i = 0; i < v.size(); i++) residue[i] = v[i];
    for (auto [pi, pc] : pivots) {
        mpq_class coef = residue[pi] / mpq_class(hr.h.at(pi, pc));
        coef.canonicalize();
        w[pc] = coef;
        if (coef != 0)
            for (int i = pi; i < hr.h.rows; i++) residue[i] -= coef * mpq_class(hr.h.at(i, pc));
    }
    for (const auto& r : residue)
        if (r != 0) return std::nullopt;  // v outside the rational span

    mpz_class c = 1;
    for (const auto& q : w) c = lcm(c, q.get_den());
    std::vector<mpz_class> z(hr.h.cols);
    for (int j = 0; j < hr.h.cols; j++) {
        mpq_class t = w[j] * c;
        t.canonicalize();
        z[j] = t.get_num();
    }
    MeetLineResult out;
    out.c = c;
    out.coeffs = mul_vec(hr.u, z);
    return out;
}

bool lattice_contains_snf(const IntMatrix& b, const std::vector<mpz_class>& cv) {
    SnfResult s = snf(b);
    std::vector<mpz_class> rhs = mul_vec(s.u, cv);
    int k = static_cast<int>(s.divisors.size());
    for (int i = 0; i < b.rows; i++) {
        if (i < k && s.divisors[i] != 0) {
            if (rhs[i] % s.divisors[i] != 0) return false;
        } else {
            if (rhs[i] != 0) return false;
        }
    }
    return true;
}

namespace {

struct Gs {
    std::vector<std::vector<BigFloat>> mu;  // mu[i][j], j < i
    std::vector<BigFloat> b2;               // squared norms of the GS vectors
};

BigFloat col_dot(const RealMatrix& m, int c1, int c2) {
    BigFloat s(m.prec);
    for (int i = 0; i < m.rows; i++) s += m.at(i, c1) * m.at(i, c2);
    return s;
}

void compute_gs(const RealMatrix& b, Gs& gs) {
    int n = b.cols;
    gs.mu.assign(n, {});
    gs.b2.assign(n, BigFloat(b.prec));
    std::vector<std::vector<BigFloat>> proj(n);  // GS vectors, column-major
    for (int k = 0; k < n; k++) {
        std::vector<BigFloat> v;
        v.reserve(b.rows);
        for (int i = 0; i < b.rows; i++) v.push_back(b.at(i, k));
        gs.mu[k].assign(k, BigFloat(b.prec));
        for (int j = 0; j < k; j++) {
            BigFloat d(b.prec);
            for (int i = 0; i < b.rows; i++) d += b.at(i, k) * proj[j][i];
            gs.mu[k][j] = d / gs.b2[j];
            for (int i = 0; i < b.rows; i++) v[i] -= gs.mu[k][j] * proj[j][i];
        }
        BigFloat n2(b.prec);
        for (int i = 0; i < b.rows; i++) n2 += v[i] * v[i];
        if (!(n2 > BigFloat(0.0, b.prec)))
            throw precision_error("lll: Gram-Schmidt lost all significance");
        gs.b2[k] = n2;
        proj[k] = std::move(v);
    }
}

}  // namespace

LllResult lll_reduce_real(const RealMatrix& b_in) {
    RealMatrix b = b_in;
    IntMatrix u = IntMatrix::identity(b.cols);
    if (b.cols <= 1) return {std::move(b), std::move(u)};

    const BigFloat delta(0.99, b.prec);
    const BigFloat half(0.5, b.prec);
    Gs gs;
    compute_gs(b, gs);

    int k = 1;
    long swaps = 0;
    const long swap_cap = 10000L * b.cols * b.cols + 10000;
    while (k < b.cols) {
        // size-reduce column k
        bool changed = false;
        for (int j = k - 1; j >= 0; j--) {
            if (abs(gs.mu[k][j]) > half) {
                mpz_class q = gs.mu[k][j].round_z();
                BigFloat qf(q, b.prec);
                for (int i = 0; i < b.rows; i++) b.at(i, k) -= qf * b.at(i, j);
                col_axpy(u, k, j, -q);
                changed = true;
            }
        }
        if (changed) compute_gs(b, gs);

        BigFloat lhs = gs.b2[k];
        BigFloat rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.b2[k - 1];
        if (lhs >= rhs) {
            k++;
        } else {
            for (int i = 0; i < b.rows; i++) std::swap(b.at(i, k), b.at(i, k - 1));
            col_swap(u, k, k - 1);
            compute_gs(b, gs);
            k = std::max(k - 1, 1);
            if (++swaps > swap_cap)
                throw precision_error("lll: not terminating at this precision");
        }
    }
    return {std::move(b), std::move(u)};
}

std::vector<std::vector<mpz_class>> kernel_mod_m(const IntMatrix& a, const mpz_class& m) {
    if (m < 2) throw error("kernel_mod_m: modulus must be >= 2");
    SnfResult s = snf(a);
    int k = static_cast<int>(s.divisors.size());
    std::vector<std::vector<mpz_class>> gens;
    for (int j = 0; j < a.cols; j++) {
        mpz_class d = (j < k) ? s.divisors[j] : mpz_class(0);
        mpz_class mult = m / gcd(d, m);
        if (mult % m == 0) continue;  // contributes only the zero class
        std::vector<mpz_class> col(a.cols);
        bool zero = true;
        for (int i = 0; i < a.cols; i++) {
            col[i] = (s.v.at(i, j) * mult) % m;
            if (col[i] < 0) col[i] += m;
            if (col[i] != 0) zero = false;
        }
        if (!zero) gens.push_back(std::move(col));
    }
    return gens;
}

}  // namespace nr
