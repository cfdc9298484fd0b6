#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normrel/perm.hpp"

namespace nr {

// Subgroup given by generators inside an ambient group (passed explicitly to
// the functions below).
struct SubgroupHandle {
    std::vector<Permutation> gens;

    static SubgroupHandle trivial() { return {}; }
};

PermutationGroup group_from_generators(int degree, std::vector<Permutation> gens);

bool is_subgroup(const PermutationGroup& g, const SubgroupHandle& h);
mpz_class subgroup_order(const PermutationGroup& g, const SubgroupHandle& h);

// Element ids of the subgroup inside g's table, ascending.
std::vector<int> subgroup_elements(const PermutationGroup& g, const SubgroupHandle& h);

struct CosetTable {
    SubgroupHandle subgroup;
    std::vector<int> rep_ids;               // canonical (lex-minimal) reps, ascending
    std::vector<Permutation> reps;          // reps[0] * H = H
    std::vector<std::vector<int>> action;   // per parent generator: induced coset map
    std::vector<int> coset_of_element;      // element id -> coset index

    int index() const { return static_cast<int>(reps.size()); }
};

CosetTable left_cosets(const PermutationGroup& g, const SubgroupHandle& h);

struct DoubleCosetDecomposition {
    SubgroupHandle left, right;       // H, J
    std::vector<int> rep_ids;         // canonical reps of H g J, ascending
    std::vector<Permutation> reps;
    std::vector<long> sizes;          // |HgJ|, summing to |G|
    std::vector<int> dc_of_element;   // element id -> double coset index
};

DoubleCosetDecomposition double_cosets(const PermutationGroup& g, const SubgroupHandle& h,
                                       const SubgroupHandle& j);

// One representative per conjugacy class of subgroups of order >= min_order.
// Cyclic extension from below, seeded with the perfect subgroups found by a
// two-generator sweep of the perfect residual.
std::vector<SubgroupHandle> subgroups_up_to_conjugacy(const PermutationGroup& g,
                                                      long min_order = 1,
                                                      long order_cap = 1000);

std::optional<Permutation> is_conjugate(const PermutationGroup& g, const SubgroupHandle& h1,
                                        const SubgroupHandle& h2);

bool is_normal(const PermutationGroup& g, const SubgroupHandle& h);

// Largest normal subgroup of g contained in h.
SubgroupHandle core(const PermutationGroup& g, const SubgroupHandle& h);

struct QuotientGroup {
    PermutationGroup group;                // acts on the cosets of n
    std::vector<Permutation> parent_reps;  // coset representatives in the parent
    PermutationGroup n_group;              // the kernel as its own group

    // image of a parent element in the quotient
    Permutation project(const Permutation& ge) const;
    SubgroupHandle project_subgroup(const SubgroupHandle& s) const;
};

QuotientGroup quotient_group(const PermutationGroup& g, const SubgroupHandle& n);

// C_p x G on degree(g) + p points, the cycle on the trailing block.
PermutationGroup direct_product_with_cyclic(const PermutationGroup& g, long p);
// embed a subgroup of g as 1 x H in the product
SubgroupHandle embed_in_product(const SubgroupHandle& h, int g_degree, long p);

// normalizer of h in g, as element ids of g's table
std::vector<int> normalizer_ids(const PermutationGroup& g, const SubgroupHandle& h);

// intersection of two subgroups
SubgroupHandle intersect_subgroups(const PermutationGroup& g, const SubgroupHandle& a,
                                   const SubgroupHandle& b);

// conjugated handle g h g^-1
SubgroupHandle conjugate_subgroup(const SubgroupHandle& h, const Permutation& by);

// generators recovered from an explicit element-id set
SubgroupHandle handle_from_ids(const PermutationGroup& g, const std::vector<int>& ids);

// left transversal of j inside h (both subgroups of g, j <= h)
std::vector<Permutation> left_transversal_in(const PermutationGroup& g, const SubgroupHandle& h,
                                             const SubgroupHandle& j);

}  // namespace nr
