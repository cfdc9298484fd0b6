#include "doctest.h"

#include <cmath>
#include <set>

#include "normrel/exactlin.hpp"
#include "normrel/rng.hpp"

using namespace nr;

namespace {

mpz_class det_bareiss(IntMatrix m) {
    REQUIRE(m.rows == m.cols);
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < m.rows; k++) {
        int piv = -1;
        for (int i = k; i < m.rows; i++)
            if (m.at(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = 0; j < m.cols; j++) std::swap(m.at(piv, j), m.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < m.rows; i++) {
            for (int j = k + 1; j < m.cols; j++) {
                mpz_class t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? prev : mpz_class(-prev);
}

IntMatrix make(int r, int c, std::initializer_list<long> vals) {
    IntMatrix m(r, c);
    auto it = vals.begin();
    for (int i = 0; i < r; i++)
        for (int j = 0; j < c; j++) m.at(i, j) = *it++;
    return m;
}

// independent rank oracle: plain rational Gaussian elimination, written
// without reference to the library routines
int rank_oracle(const IntMatrix& a) {
    std::vector<std::vector<mpq_class>> w(a.rows, std::vector<mpq_class>(a.cols));
    for (int i = 0; i < a.rows; i++)
        for (int j = 0; j < a.cols; j++) w[i][j] = a.at(i, j);
    int rank = 0;
    for (int col = 0; col < a.cols && rank < a.rows; col++) {
        int piv = -1;
        for (int i = rank; i < a.rows; i++)
            if (w[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[piv], w[rank]);
        for (int i = rank + 1; i < a.rows; i++) {
            if (w[i][col] == 0) continue;
            mpq_class f = w[i][col] / w[rank][col];
            for (int j = col; j < a.cols; j++) w[i][j] -= f * w[rank][j];
        }
        rank++;
    }
    return rank;
}

}  // namespace

TEST_CASE("hnf identity is a fixed point") {
    auto r = hnf(IntMatrix::identity(3));
    CHECK(r.h == IntMatrix::identity(3));
    CHECK(r.u == IntMatrix::identity(3));
}

TEST_CASE("hnf preserves determinant and matches the reduction oracle") {
    IntMatrix m = make(2, 2, {2, 4, 6, 8});
    auto r = hnf(m);
    CHECK(abs(det_bareiss(r.h)) == 8);
    CHECK(abs(det_bareiss(r.u)) == 1);
    CHECK(mul(m, r.u) == r.h);
    // hand column reduction of [[2,4],[6,8]]: c2 -= 2 c1 -> [[2,0],[6,-4]],
    // negate c2 -> [[2,0],[6,4]], c1 -= c2 -> [[2,0],[2,4]]
    CHECK(r.h == make(2, 2, {2, 0, 2, 4}));
}

TEST_CASE("hnf on random matrices: m*u = h, u unimodular, lower triangular") {
    Rng rng(7);
    for (int trial = 0; trial < 30; trial++) {
        int rows = 1 + static_cast<int>(rng.below(5));
        int cols = 1 + static_cast<int>(rng.below(5));
        IntMatrix m(rows, cols);
        for (auto& x : m.a) x = rng.range(-9, 9);
        auto r = hnf(m);
        CHECK(mul(m, r.u) == r.h);
        CHECK(abs(det_bareiss(r.u)) == 1);
        // echelon shape: pivot rows strictly increase across columns
        int last_pivot = -1;
        for (int j = 0; j < cols; j++) {
            int first = -1;
            for (int i = 0; i < rows; i++)
                if (r.h.at(i, j) != 0) {
                    first = i;
                    break;
                }
            if (first >= 0) {
                CHECK(first > last_pivot);
                last_pivot = first;
                CHECK(r.h.at(first, j) > 0);
            }
        }
    }
}

TEST_CASE("snf divisors from the minor oracle") {
    // diag(6,4): d1 = gcd of entries, d1*d2 = |det|
    IntMatrix m = make(2, 2, {6, 0, 0, 4});
    auto r = snf(m);
    REQUIRE(r.divisors.size() == 2);
    CHECK(r.divisors[0] == 2);
    CHECK(r.divisors[1] == 12);

    auto r2 = snf(make(2, 2, {2, 4, 6, 8}));
    CHECK(r2.divisors[0] == 2);
    CHECK(r2.divisors[1] == 4);

    auto r3 = snf(IntMatrix(3, 2));
    for (const auto& d : r3.divisors) CHECK(d == 0);
}

TEST_CASE("snf transform identity and divisibility chain on random input") {
    Rng rng(11);
    for (int trial = 0; trial < 30; trial++) {
        int rows = 1 + static_cast<int>(rng.below(4));
        int cols = 1 + static_cast<int>(rng.below(4));
        IntMatrix m(rows, cols);
        for (auto& x : m.a) x = rng.range(-12, 12);
        auto r = snf(m);
        IntMatrix d = mul(mul(r.u, m), r.v);
        for (int i = 0; i < rows; i++)
            for (int j = 0; j < cols; j++) {
                if (i == j && i < static_cast<int>(r.divisors.size()))
                    CHECK(d.at(i, j) == r.divisors[i]);
                else
                    CHECK(d.at(i, j) == 0);
            }
        for (size_t i = 0; i + 1 < r.divisors.size(); i++) {
            CHECK(r.divisors[i] >= 0);
            if (r.divisors[i] != 0) CHECK(r.divisors[i + 1] % r.divisors[i] == 0);
        }
    }
}

TEST_CASE("solve_rational basics") {
    RatMatrix id = RatMatrix::from_int(IntMatrix::identity(3));
    std::vector<mpq_class> b{mpq_class(1, 2), mpq_class(3), mpq_class(-5, 7)};
    auto x = solve_rational(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    // inconsistent: rows (1,1) and (2,2) with incompatible rhs
    RatMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    a.at(1, 0) = 2;
    a.at(1, 1) = 2;
    auto none = solve_rational(a, {mpq_class(1), mpq_class(3)});
    CHECK(!none.has_value());
}

TEST_CASE("kernel_rational satisfies rank-nullity against the oracle") {
    Rng rng(13);
    for (int trial = 0; trial < 20; trial++) {
        IntMatrix m(5, 7);
        for (auto& x : m.a) x = rng.range(-6, 6);
        RatMatrix a = RatMatrix::from_int(m);
        RatMatrix ker = kernel_rational(a);
        int rank = rank_oracle(m);
        CHECK(ker.cols == 7 - rank);
        // substitution: A * basis = 0
        for (int k = 0; k < ker.cols; k++) {
            for (int i = 0; i < a.rows; i++) {
                mpq_class s = 0;
                for (int j = 0; j < a.cols; j++) s += a.at(i, j) * ker.at(j, k);
                CHECK(s == 0);
            }
        }
        CHECK(rank_rational(a) == rank);
        CHECK(rank_int(m) == rank);
        if (rank == 5) CHECK(rank_mod_p(m, 1000003) == 5);
    }
}

TEST_CASE("lattice_meet_line examples with brute-force oracle") {
    // L = Z^2
    IntMatrix b1 = IntMatrix::identity(2);
    auto r1 = lattice_meet_line(b1, {mpz_class(1), mpz_class(1)});
    REQUIRE(r1.has_value());
    CHECK(r1->c == 1);

    // L = 2Z x 3Z; brute force says 6
    IntMatrix b2 = make(2, 2, {2, 0, 0, 3});
    auto r2 = lattice_meet_line(b2, {mpz_class(1), mpz_class(1)});
    REQUIRE(r2.has_value());
    for (int c = 1; c < 6; c++) {
        bool in = (c % 2 == 0) && (c % 3 == 0);
        CHECK(!in);
    }
    CHECK(r2->c == 6);

    // L spanned by (2,0),(1,1); v=(1,0): brute force over small combos
    IntMatrix b3 = make(2, 2, {2, 1, 0, 1});
    auto r3 = lattice_meet_line(b3, {mpz_class(1), mpz_class(0)});
    REQUIRE(r3.has_value());
    mpz_class brute = 0;
    for (int c = 1; c <= 10 && brute == 0; c++) {
        for (int x = -10; x <= 10 && brute == 0; x++)
            for (int y = -10; y <= 10; y++)
                if (2 * x + y == c && y == 0) {
                    brute = c;
                    break;
                }
    }
    CHECK(r3->c == brute);
    CHECK(r3->c == 2);

    // witness and minimality invariants
    for (auto& r : {*r1, *r2, *r3}) {
        CHECK(r.c > 0);
    }
    std::vector<mpz_class> bv = mul_vec(b3, r3->coeffs);
    CHECK(bv[0] == r3->c * 1);
    CHECK(bv[1] == 0);
    // (c/p) v not in L for p | c, checked through the independent SNF route
    CHECK(lattice_contains_snf(b3, {r3->c, mpz_class(0)}));
    CHECK(!lattice_contains_snf(b3, {r3->c / 2, mpz_class(0)}));
}

TEST_CASE("lll leaves an orthogonal basis unchanged up to sign/permutation") {
    RealMatrix b(2, 2, 128);
    b.at(0, 0) = BigFloat(3.0, 128);
    b.at(1, 1) = BigFloat(5.0, 128);
    auto r = lll_reduce_real(b);
    CHECK(abs(det_bareiss(r.u)) == 1);
    std::multiset<double> norms;
    for (int j = 0; j < 2; j++) {
        double n2 = 0;
        for (int i = 0; i < 2; i++) n2 += r.basis.at(i, j).to_double() * r.basis.at(i, j).to_double();
        norms.insert(n2);
    }
    CHECK(norms == std::multiset<double>{9.0, 25.0});
}

TEST_CASE("lll shortens a skewed pair") {
    RealMatrix b(2, 2, 192);
    b.at(0, 0) = BigFloat(1.0, 192);
    b.at(1, 0) = BigFloat(0.0, 192);
    b.at(0, 1) = BigFloat(1.0001, 192);
    b.at(1, 1) = BigFloat(0.0001, 192);
    auto r = lll_reduce_real(b);
    double first = r.basis.at(0, 0).to_double() * r.basis.at(0, 0).to_double() +
                   r.basis.at(1, 0).to_double() * r.basis.at(1, 0).to_double();
    CHECK(first <= 1.0 + 1e-12);
}

TEST_CASE("lll improves the Hadamard ratio of a knapsack basis") {
    // knapsack-style columns: identity rows plus one dense weight row
    RealMatrix b(5, 4, 192);
    long w[4] = {101, 237, 440, 551};
    for (int j = 0; j < 4; j++) {
        b.at(j, j) = BigFloat(1.0, 192);
        b.at(4, j) = BigFloat(static_cast<double>(w[j]), 192);
    }
    auto r = lll_reduce_real(b);
    CHECK(abs(det_bareiss(r.u)) == 1);
    auto prod_norms = [](const RealMatrix& m) {
        double p = 1;
        for (int j = 0; j < m.cols; j++) {
            double n2 = 0;
            for (int i = 0; i < m.rows; i++) n2 += m.at(i, j).to_double() * m.at(i, j).to_double();
            p *= std::sqrt(n2);
        }
        return p;
    };
    CHECK(prod_norms(r.basis) <= prod_norms(b) * (1.0 + 1e-9));
}

TEST_CASE("kernel_mod_m small cases") {
    auto k1 = kernel_mod_m(IntMatrix::identity(3), 6);
    CHECK(k1.empty());

    IntMatrix two(1, 1);
    two.at(0, 0) = 2;
    auto k2 = kernel_mod_m(two, 6);
    REQUIRE(k2.size() == 1);
    CHECK(k2[0][0] == 3);
}

TEST_CASE("kernel_mod_m cross-checked by exhaustive enumeration over (Z/8)^5") {
    Rng rng(17);
    IntMatrix a(3, 5);
    for (auto& x : a.a) x = rng.range(0, 7);
    auto gens = kernel_mod_m(a, 8);

    auto in_kernel = [&](const std::vector<int>& v) {
        for (int i = 0; i < 3; i++) {
            long s = 0;
            for (int j = 0; j < 5; j++) s += a.at(i, j).get_si() * v[j];
            if (s % 8 != 0) return false;
        }
        return true;
    };
    std::set<std::vector<int>> exact;
    std::vector<int> v(5);
    for (int mask = 0; mask < 32768; mask++) {
        int m = mask;
        for (int j = 0; j < 5; j++) {
            v[j] = m % 8;
            m /= 8;
        }
        if (in_kernel(v)) exact.insert(v);
    }
    // every generator is in the kernel
    for (const auto& g : gens) {
        std::vector<int> gi(5);
        for (int j = 0; j < 5; j++) gi[j] = static_cast<int>(g[j].get_si());
        CHECK(exact.count(gi) == 1);
    }
    // the generators span the kernel: closure under addition mod 8
    std::set<std::vector<int>> span;
    span.insert(std::vector<int>(5, 0));
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& s : std::set<std::vector<int>>(span))
            for (const auto& g : gens) {
                std::vector<int> t(5);
                for (int j = 0; j < 5; j++) t[j] = (s[j] + static_cast<int>(g[j].get_si())) % 8;
                if (span.insert(t).second) grew = true;
            }
    }
    CHECK(span == exact);
}
