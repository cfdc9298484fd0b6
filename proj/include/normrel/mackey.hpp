#pragma once

#include <functional>
#include <vector>

#include "normrel/galgebra.hpp"

namespace nr {

// Structure matrices of the permutation-module functor H -> Z[G/H]:
//   induction    Z[G/K] -> Z[G/H]   (K <= H), gK -> gH
//   restriction  Z[G/H] -> Z[G/K]   (K <= H), gH -> sum_{h in H/K} ghK
//   conjugation  Z[G/H] -> Z[G/gHg^-1], xH -> x g^-1 (gHg^-1)
IntMatrix ind_matrix(const PermutationGroup& g, const SubgroupHandle& h, const SubgroupHandle& k);
IntMatrix res_matrix(const PermutationGroup& g, const SubgroupHandle& h, const SubgroupHandle& k);
IntMatrix conj_matrix(const PermutationGroup& g, const Permutation& by, const SubgroupHandle& h);

// T(g): M(K) -> M(H) through induction/restriction/conjugation; for the
// permutation-module functor this reproduces the double-coset operator of
// K g^-1 H exactly (checked in the test suite).
IntMatrix hecke_via_mackey(const PermutationGroup& g, const SubgroupHandle& h,
                           const SubgroupHandle& k, const Permutation& conj_g);

// A cohomological Mackey functor presented through callables. Elem carries
// the values; the subgroup argument travels alongside so one functor object
// serves every level.
template <typename Elem>
struct MackeyFunctor {
    std::function<Elem(const Permutation&, const SubgroupHandle&, const Elem&)> conj;
    // res(h, k, x): M(H) -> M(K) for K <= H; ind(h, k, x): M(K) -> M(H)
    std::function<Elem(const SubgroupHandle&, const SubgroupHandle&, const Elem&)> res;
    std::function<Elem(const SubgroupHandle&, const SubgroupHandle&, const Elem&)> ind;
    std::function<Elem(const Elem&, const Elem&)> combine;
    std::function<Elem(const Elem&, const mpz_class&)> power;  // x -> x^n in M(.)
    std::function<Elem(const SubgroupHandle&)> neutral;
};

// T_{H g K} on an arbitrary functor: Ind o Res o conj per the composition
// rules of the double-coset operators.
template <typename Elem>
Elem apply_operator(const PermutationGroup& g, const MackeyFunctor<Elem>& f,
                    const SubgroupHandle& h, const SubgroupHandle& k, const Permutation& conj_g,
                    const Elem& x) {
    SubgroupHandle kg = conjugate_subgroup(k, conj_g);
    SubgroupHandle meet = intersect_subgroups(g, kg, h);
    Elem y = f.conj(conj_g, k, x);
    y = f.res(kg, meet, y);
    return f.ind(h, meet, y);
}

// phi side of a transfer plan: inputs live in the M(J_i) per summand, the
// result lands in M(H).
template <typename Elem>
Elem transfer_apply(const TransferPlan& plan, const MackeyFunctor<Elem>& f,
                    const std::vector<Elem>& inputs) {
    if (inputs.size() != plan.summands.size())
        throw error("transfer_apply: one input per summand expected");
    Elem acc = f.neutral(plan.h);
    for (size_t k = 0; k < plan.summands.size(); k++) {
        const TransferSummand& s = plan.summands[k];
        // stored label J_i g H; the operator into M(H) conjugates by g^-1
        Elem y = apply_operator(plan.group, f, plan.h, plan.j_list[s.i], s.g.inverse(), inputs[k]);
        acc = f.combine(acc, f.power(y, s.n));
    }
    return acc;
}

// psi side: sends x in M(H) to one element of M(J_i) per summand.
template <typename Elem>
std::vector<Elem> transfer_section(const TransferPlan& plan, const MackeyFunctor<Elem>& f,
                                   const Elem& x) {
    std::vector<Elem> out;
    out.reserve(plan.summands.size());
    for (const TransferSummand& s : plan.summands) {
        out.push_back(
            apply_operator(plan.group, f, plan.j_list[s.i], plan.h, s.g2.inverse(), x));
    }
    return out;
}

// reference instance: the permutation-module functor, elements are integer
// coordinate vectors over the coset tables
MackeyFunctor<std::vector<mpz_class>> perm_module_functor(const PermutationGroup& g);

// trivial functor M(H) = Z, restriction identity, induction multiplies by
// the index
MackeyFunctor<mpz_class> trivial_functor(const PermutationGroup& g);

}  // namespace nr
