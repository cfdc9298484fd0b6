#include "normrel/galgebra.hpp"

#include <algorithm>
#include <deque>
#include <memory>

namespace nr {

std::vector<HeckeOperator> hecke_basis(const PermutationGroup& g, const SubgroupHandle& j,
                                       const SubgroupHandle& h) {
    const GroupTable& t = g.table();
    CosetTable ch = left_cosets(g, h);
    CosetTable cj = left_cosets(g, j);
    DoubleCosetDecomposition dc = double_cosets(g, j, h);  // partition into J g H

    std::vector<HeckeOperator> ops;
    ops.reserve(dc.rep_ids.size());
    for (size_t d = 0; d < dc.rep_ids.size(); d++) {
        HeckeOperator op;
        op.source = j;
        op.target = h;
        op.coset_rep = dc.reps[d];
        op.matrix = IntMatrix(ch.index(), cj.index());
        ops.push_back(std::move(op));
    }
    for (int b = 0; b < cj.index(); b++) {
        int jb_inv = t.inv(cj.rep_ids[b]);
        for (int a = 0; a < ch.index(); a++) {
            int d = dc.dc_of_element[t.mul(jb_inv, ch.rep_ids[a])];
            ops[d].matrix.at(a, b) = 1;
        }
    }
    return ops;
}

namespace {

void require_nontrivial(const PermutationGroup& g, const std::vector<SubgroupHandle>& j_list) {
    for (const auto& j : j_list) {
        if (!is_subgroup(g, j)) throw error("subgroup check failure");
        if (subgroup_order(g, j) == 1) throw error("trivial subgroup supplied in J list");
    }
}

// initial module generators: for each i and each double coset J_i g H, the
// 0/1 indicator over G/H of the cosets inside that double coset
std::vector<std::vector<int>> seed_vectors(const PermutationGroup& g, const SubgroupHandle& h,
                                           const std::vector<SubgroupHandle>& j_list,
                                           const CosetTable& ch) {
    std::vector<std::vector<int>> seeds;
    for (const auto& j : j_list) {
        DoubleCosetDecomposition dc = double_cosets(g, j, h);
        for (size_t d = 0; d < dc.rep_ids.size(); d++) {
            std::vector<int> w(ch.index(), 0);
            for (int a = 0; a < ch.index(); a++)
                if (dc.dc_of_element[ch.rep_ids[a]] == static_cast<int>(d)) w[a] = 1;
            seeds.push_back(std::move(w));
        }
    }
    return seeds;
}

// rank over F_p of the G-module span of the seeds inside Q[G/H]; the module
// closure walks generator images, coordinates permute by the coset action
int closure_rank_mod_p(const std::vector<std::vector<int>>& seeds,
                       const std::vector<std::vector<int>>& action, uint64_t p, int dim) {
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
    std::vector<std::vector<uint64_t>> basis;  // echelon rows
    std::vector<int> pivots;
    std::deque<std::vector<uint64_t>> queue;
    for (const auto& s : seeds) queue.emplace_back(s.begin(), s.end());
    std::vector<std::vector<uint64_t>> kept;  // reduced basis vectors pre-normalized

    while (!queue.empty()) {
        std::vector<uint64_t> v = std::move(queue.front());
        queue.pop_front();
        // reduce against the basis
        for (size_t k = 0; k < basis.size(); k++) {
            uint64_t c = v[pivots[k]];
            if (c == 0) continue;
            for (int x = 0; x < dim; x++) {
                uint64_t sub = mulmod(c, basis[k][x]);
                v[x] = v[x] >= sub ? v[x] - sub : v[x] + p - sub;
            }
        }
        int piv = -1;
        for (int x = 0; x < dim; x++)
            if (v[x] != 0) {
                piv = x;
                break;
            }
        if (piv < 0) continue;
        uint64_t inv = powmod(v[piv], p - 2);
        for (int x = 0; x < dim; x++) v[x] = mulmod(v[x], inv);
        basis.push_back(v);
        pivots.push_back(piv);
        if (static_cast<int>(basis.size()) == dim) return dim;
        for (const auto& act : action) {
            std::vector<uint64_t> img(dim);
            for (int x = 0; x < dim; x++) img[act[x]] = v[x];
            queue.push_back(std::move(img));
        }
    }
    return static_cast<int>(basis.size());
}

// exact variant: integer echelon rows, content-stripped, fraction-free
int closure_rank_exact(const std::vector<std::vector<int>>& seeds,
                       const std::vector<std::vector<int>>& action, int dim) {
    std::vector<std::vector<mpz_class>> basis;
    std::vector<int> pivots;
    std::deque<std::vector<mpz_class>> queue;
    for (const auto& s : seeds) queue.emplace_back(s.begin(), s.end());

    while (!queue.empty()) {
        std::vector<mpz_class> v = std::move(queue.front());
        queue.pop_front();
        for (size_t k = 0; k < basis.size(); k++) {
            const mpz_class& c = v[pivots[k]];
            if (c == 0) continue;
            const mpz_class& pv = basis[k][pivots[k]];
            mpz_class g = gcd(c, pv);
            mpz_class mv = pv / g, mb = c / g;
            for (int x = 0; x < dim; x++) v[x] = v[x] * mv - basis[k][x] * mb;
        }
        int piv = -1;
        mpz_class cont = 0;
        for (int x = 0; x < dim; x++) {
            if (v[x] != 0 && piv < 0) piv = x;
            cont = gcd(cont, v[x]);
        }
        if (piv < 0) continue;
        if (v[piv] < 0) cont = -cont;
        for (int x = 0; x < dim; x++) v[x] /= cont;
        basis.push_back(v);
        pivots.push_back(piv);
        if (static_cast<int>(basis.size()) == dim) return dim;
        for (const auto& act : action) {
            std::vector<mpz_class> img(dim);
            for (int x = 0; x < dim; x++) img[act[x]] = basis.back()[x];
            queue.push_back(std::move(img));
        }
    }
    return static_cast<int>(basis.size());
}

struct StackedColumn {
    int i;
    int dc_index;
    int coset_index;
};

// full stacked matrix of all operators side by side, with column labels
struct StackedSystem {
    CosetTable ch;
    std::vector<std::vector<HeckeOperator>> bases;  // per i
    IntMatrix matrix;
    std::vector<StackedColumn> columns;
};

StackedSystem build_stacked(const PermutationGroup& g, const SubgroupHandle& h,
                            const std::vector<SubgroupHandle>& j_list) {
    StackedSystem s;
    s.ch = left_cosets(g, h);
    int total_cols = 0;
    for (const auto& j : j_list) {
        s.bases.push_back(hecke_basis(g, j, h));
        for (const auto& op : s.bases.back()) total_cols += op.matrix.cols;
    }
    s.matrix = IntMatrix(s.ch.index(), total_cols);
    int col = 0;
    for (size_t i = 0; i < s.bases.size(); i++) {
        for (size_t d = 0; d < s.bases[i].size(); d++) {
            const IntMatrix& m = s.bases[i][d].matrix;
            for (int b = 0; b < m.cols; b++, col++) {
                for (int a = 0; a < m.rows; a++) s.matrix.at(a, col) = m.at(a, b);
                s.columns.push_back({static_cast<int>(i), static_cast<int>(d), b});
            }
        }
    }
    return s;
}

}  // namespace

bool exists_gnr(const PermutationGroup& g, const SubgroupHandle& h,
                const std::vector<SubgroupHandle>& j_list) {
    require_nontrivial(g, j_list);
    if (!is_subgroup(g, h)) throw error("subgroup check failure");
    CosetTable ch = left_cosets(g, h);
    int dim = ch.index();
    auto seeds = seed_vectors(g, h, j_list, ch);
    if (closure_rank_mod_p(seeds, ch.action, 2147483629ULL, dim) == dim) return true;
    return closure_rank_exact(seeds, ch.action, dim) == dim;
}

RelationCertificate find_relation(const PermutationGroup& g, const SubgroupHandle& h,
                                  const std::vector<SubgroupHandle>& j_list) {
    require_nontrivial(g, j_list);
    StackedSystem s = build_stacked(g, h, j_list);
    RatMatrix a = RatMatrix::from_int(s.matrix);
    std::vector<mpq_class> target(s.ch.index(), mpq_class(0));
    target[0] = 1;  // the coset 1*H is always the first canonical representative
    auto sol = solve_rational(a, target);
    if (!sol) throw error("no relation exists for the requested subgroups");

    RelationCertificate cert;
    cert.group = g;
    cert.h = h;
    cert.j_list = j_list;
    for (size_t col = 0; col < sol->size(); col++) {
        if ((*sol)[col] == 0) continue;
        const StackedColumn& lab = s.columns[col];
        RelationTerm term;
        term.i = lab.i;
        term.dc_rep = s.bases[lab.i][lab.dc_index].coset_rep;
        term.coset_rep = left_cosets(g, j_list[lab.i]).reps[lab.coset_index];
        term.coeff = (*sol)[col];
        cert.terms.push_back(std::move(term));
    }
    if (!verify_relation(cert)) throw error("internal: certificate failed re-verification");
    return cert;
}

bool verify_relation(const RelationCertificate& cert) {
    const PermutationGroup& g = cert.group;
    if (!is_subgroup(g, cert.h)) return false;
    for (const auto& j : cert.j_list) {
        if (!is_subgroup(g, j)) return false;
        if (subgroup_order(g, j) == 1) return false;
    }
    const GroupTable& t = g.table();
    CosetTable ch = left_cosets(g, cert.h);
    std::vector<mpq_class> acc(ch.index(), mpq_class(0));
    // cache per-i decompositions
    std::vector<std::unique_ptr<DoubleCosetDecomposition>> dcs(cert.j_list.size());
    for (const auto& term : cert.terms) {
        if (term.i < 0 || term.i >= static_cast<int>(cert.j_list.size())) return false;
        if (!dcs[term.i])
            dcs[term.i] = std::make_unique<DoubleCosetDecomposition>(
                double_cosets(g, cert.j_list[term.i], cert.h));
        const auto& dc = *dcs[term.i];
        int want = dc.dc_of_element[t.id_of(term.dc_rep)];
        int gamma_inv = t.inv(t.id_of(term.coset_rep));
        for (int a = 0; a < ch.index(); a++) {
            if (dc.dc_of_element[t.mul(gamma_inv, ch.rep_ids[a])] == want)
                acc[a] += term.coeff;
        }
    }
    if (acc[0] != 1) return false;
    for (int a = 1; a < ch.index(); a++)
        if (acc[a] != 0) return false;
    return true;
}

TransferPlan optimal_coefficient(const PermutationGroup& g, const SubgroupHandle& h,
                                 const std::vector<SubgroupHandle>& j_list) {
    require_nontrivial(g, j_list);
    if (!exists_gnr(g, h, j_list)) throw error("no relation exists for the requested subgroups");

    CosetTable ch = left_cosets(g, h);
    int n = ch.index();
    struct Product {
        int i;
        Permutation rep_in, rep_out;
        IntMatrix p;
    };
    std::vector<Product> products;
    for (size_t i = 0; i < j_list.size(); i++) {
        auto ops_in = hecke_basis(g, j_list[i], h);   // Z[G/J] -> Z[G/H]
        auto ops_out = hecke_basis(g, h, j_list[i]);  // Z[G/H] -> Z[G/J]
        for (const auto& a : ops_in)
            for (const auto& b : ops_out)
                products.push_back(
                    {static_cast<int>(i), a.coset_rep, b.coset_rep, mul(a.matrix, b.matrix)});
    }
    IntMatrix b(n * n, static_cast<int>(products.size()));
    for (size_t k = 0; k < products.size(); k++)
        for (int r = 0; r < n; r++)
            for (int c = 0; c < n; c++) b.at(r * n + c, static_cast<int>(k)) = products[k].p.at(r, c);
    std::vector<mpz_class> v(static_cast<size_t>(n) * n, mpz_class(0));
    for (int r = 0; r < n; r++) v[static_cast<size_t>(r) * n + r] = 1;

    auto meet = lattice_meet_line(b, v);
    if (!meet) throw error("no integral multiple of the identity is reachable");

    TransferPlan plan;
    plan.group = g;
    plan.h = h;
    plan.j_list = j_list;
    plan.c = meet->c;
    for (size_t k = 0; k < products.size(); k++) {
        if (meet->coeffs[k] == 0) continue;
        plan.summands.push_back(
            {products[k].i, products[k].rep_in, products[k].rep_out, meet->coeffs[k]});
    }
    mpz_class g2 = g.order() * g.order();
    if (g2 % plan.c != 0) throw error("internal: optimal coefficient exceeds the |G|^2 bound");
    if (!verify_transfer_plan(plan)) throw error("internal: transfer plan failed re-verification");
    return plan;
}

bool verify_transfer_plan(const TransferPlan& plan) {
    const PermutationGroup& g = plan.group;
    const GroupTable& t = g.table();
    CosetTable ch = left_cosets(g, plan.h);
    int n = ch.index();
    IntMatrix acc(n, n);
    for (const auto& s : plan.summands) {
        if (s.i < 0 || s.i >= static_cast<int>(plan.j_list.size())) return false;
        const SubgroupHandle& j = plan.j_list[s.i];
        CosetTable cj = left_cosets(g, j);
        DoubleCosetDecomposition dc_in = double_cosets(g, j, plan.h);
        DoubleCosetDecomposition dc_out = double_cosets(g, plan.h, j);
        int want_in = dc_in.dc_of_element[t.id_of(s.g)];
        int want_out = dc_out.dc_of_element[t.id_of(s.g2)];
        IntMatrix min(n, cj.index()), mout(cj.index(), n);
        for (int b = 0; b < cj.index(); b++) {
            int jb_inv = t.inv(cj.rep_ids[b]);
            for (int a = 0; a < n; a++) {
                if (dc_in.dc_of_element[t.mul(jb_inv, ch.rep_ids[a])] == want_in)
                    min.at(a, b) = 1;
            }
        }
        for (int b = 0; b < n; b++) {
            int hb_inv = t.inv(ch.rep_ids[b]);
            for (int a = 0; a < cj.index(); a++) {
                if (dc_out.dc_of_element[t.mul(hb_inv, cj.rep_ids[a])] == want_out)
                    mout.at(a, b) = 1;
            }
        }
        acc = add(acc, scale(mul(min, mout), s.n));
    }
    IntMatrix expect = scale(IntMatrix::identity(n), plan.c);
    return acc == expect;
}

ProjectedRelation project_relation(const PermutationGroup& g, const SubgroupHandle& n,
                                   const SubgroupHandle& h,
                                   const std::vector<SubgroupHandle>& j_list,
                                   const RelationCertificate& cert) {
    if (!verify_relation(cert)) throw error("project_relation: input certificate is invalid");
    // N must sit inside H
    std::vector<int> nids = subgroup_elements(g, n);
    std::vector<int> hids = subgroup_elements(g, h);
    for (int x : nids)
        if (!std::binary_search(hids.begin(), hids.end(), x))
            throw error("project_relation: N is not contained in H");

    ProjectedRelation out;
    out.quotient = quotient_group(g, n);
    SubgroupHandle hq = out.quotient.project_subgroup(h);
    std::vector<SubgroupHandle> jq;
    for (size_t i = 0; i < j_list.size(); i++) {
        SubgroupHandle img = out.quotient.project_subgroup(j_list[i]);
        StabChain chain(out.quotient.group.degree(), img.gens);
        if (chain.order() == 1) {
            out.dropped.push_back(static_cast<int>(i));
        } else {
            jq.push_back(std::move(img));
        }
    }
    if (jq.empty()) throw error("project_relation: all J subgroups collapse into N");
    out.cert = find_relation(out.quotient.group, hq, jq);
    return out;
}

}  // namespace nr
