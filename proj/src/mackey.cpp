#include "normrel/mackey.hpp"

namespace nr {

IntMatrix ind_matrix(const PermutationGroup& g, const SubgroupHandle& h, const SubgroupHandle& k) {
    CosetTable ch = left_cosets(g, h);
    CosetTable ck = left_cosets(g, k);
    IntMatrix m(ch.index(), ck.index());
    for (int b = 0; b < ck.index(); b++) m.at(ch.coset_of_element[ck.rep_ids[b]], b) = 1;
    return m;
}

IntMatrix res_matrix(const PermutationGroup& g, const SubgroupHandle& h, const SubgroupHandle& k) {
    const GroupTable& t = g.table();
    CosetTable ch = left_cosets(g, h);
    CosetTable ck = left_cosets(g, k);
    std::vector<Permutation> transversal = left_transversal_in(g, h, k);
    IntMatrix m(ck.index(), ch.index());
    for (int b = 0; b < ch.index(); b++) {
        for (const auto& u : transversal) {
            int e = t.mul(ch.rep_ids[b], t.id_of(u));
            m.at(ck.coset_of_element[e], b) += 1;
        }
    }
    return m;
}

IntMatrix conj_matrix(const PermutationGroup& g, const Permutation& by, const SubgroupHandle& h) {
    const GroupTable& t = g.table();
    CosetTable ch = left_cosets(g, h);
    SubgroupHandle hg = conjugate_subgroup(h, by);
    CosetTable chg = left_cosets(g, hg);
    IntMatrix m(chg.index(), ch.index());
    int ginv = t.inv(t.id_of(by));
    for (int b = 0; b < ch.index(); b++) {
        int e = t.mul(ch.rep_ids[b], ginv);
        m.at(chg.coset_of_element[e], b) = 1;
    }
    return m;
}

IntMatrix hecke_via_mackey(const PermutationGroup& g, const SubgroupHandle& h,
                           const SubgroupHandle& k, const Permutation& conj_g) {
    SubgroupHandle kg = conjugate_subgroup(k, conj_g);
    SubgroupHandle meet = intersect_subgroups(g, kg, h);
    IntMatrix c = conj_matrix(g, conj_g, k);
    IntMatrix r = res_matrix(g, kg, meet);
    IntMatrix i = ind_matrix(g, h, meet);
    return mul(i, mul(r, c));
}

MackeyFunctor<std::vector<mpz_class>> perm_module_functor(const PermutationGroup& g) {
    MackeyFunctor<std::vector<mpz_class>> f;
    auto apply = [](const IntMatrix& m, const std::vector<mpz_class>& v) { return mul_vec(m, v); };
    f.conj = [&g, apply](const Permutation& by, const SubgroupHandle& h,
                         const std::vector<mpz_class>& x) {
        return apply(conj_matrix(g, by, h), x);
    };
    f.res = [&g, apply](const SubgroupHandle& h, const SubgroupHandle& k,
                        const std::vector<mpz_class>& x) {
        return apply(res_matrix(g, h, k), x);
    };
    f.ind = [&g, apply](const SubgroupHandle& h, const SubgroupHandle& k,
                        const std::vector<mpz_class>& x) {
        return apply(ind_matrix(g, h, k), x);
    };
    f.combine = [](const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
        std::vector<mpz_class> r(a.size());
        for (size_t i = 0; i < a.size(); i++) r[i] = a[i] + b[i];
        return r;
    };
    f.power = [](const std::vector<mpz_class>& x, const mpz_class& n) {
        std::vector<mpz_class> r(x.size());
        for (size_t i = 0; i < x.size(); i++) r[i] = x[i] * n;
        return r;
    };
    f.neutral = [&g](const SubgroupHandle& h) {
        return std::vector<mpz_class>(left_cosets(g, h).index(), mpz_class(0));
    };
    return f;
}

MackeyFunctor<mpz_class> trivial_functor(const PermutationGroup& g) {
    MackeyFunctor<mpz_class> f;
    f.conj = [](const Permutation&, const SubgroupHandle&, const mpz_class& x) { return x; };
    f.res = [](const SubgroupHandle&, const SubgroupHandle&, const mpz_class& x) { return x; };
    f.ind = [&g](const SubgroupHandle& h, const SubgroupHandle& k, const mpz_class& x) {
        return mpz_class(x * (subgroup_order(g, h) / subgroup_order(g, k)));
    };
    f.combine = [](const mpz_class& a, const mpz_class& b) { return mpz_class(a + b); };
    f.power = [](const mpz_class& x, const mpz_class& n) { return mpz_class(x * n); };
    f.neutral = [](const SubgroupHandle&) { return mpz_class(0); };
    return f;
}

}  // namespace nr
