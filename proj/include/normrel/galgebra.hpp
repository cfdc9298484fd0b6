#pragma once

#include <optional>
#include <vector>

#include "normrel/exactlin.hpp"
#include "normrel/permgroup.hpp"

namespace nr {

// Morphism of permutation modules attached to one double coset: the 0/1
// incidence matrix R[G/J] -> R[G/H], commuting with the G-action on both
// coset tables.
struct HeckeOperator {
    SubgroupHandle source;  // J
    SubgroupHandle target;  // H
    Permutation coset_rep;  // canonical representative of the double coset J g H
    IntMatrix matrix;       // |G/H| x |G/J|
};

// One operator per (J, H) double coset, in canonical representative order.
std::vector<HeckeOperator> hecke_basis(const PermutationGroup& g, const SubgroupHandle& j,
                                       const SubgroupHandle& h);

// True iff the stacked images of all double-coset operators from the J_i
// fill Q[G/H] (a single exact rank decision; mod-p shortcut for the
// affirmative case, exact integer elimination otherwise).
bool exists_gnr(const PermutationGroup& g, const SubgroupHandle& h,
                const std::vector<SubgroupHandle>& j_list);

// One term of a relation witness: coefficient * (column of the operator for
// double coset J_i dc_rep H at the coset coset_rep * J_i).
struct RelationTerm {
    int i = 0;
    Permutation dc_rep;
    Permutation coset_rep;
    mpq_class coeff;
};

struct RelationCertificate {
    PermutationGroup group;
    SubgroupHandle h;
    std::vector<SubgroupHandle> j_list;
    std::vector<RelationTerm> terms;
};

// Exact witness: sum of terms evaluates to the basis vector 1*H.
RelationCertificate find_relation(const PermutationGroup& g, const SubgroupHandle& h,
                                  const std::vector<SubgroupHandle>& j_list);

// Re-evaluates the certificate identity on the coset basis from the
// certificate's own embedded data; no trust in the producer.
bool verify_relation(const RelationCertificate& cert);

struct TransferSummand {
    int i = 0;
    Permutation g;   // double coset J_i g H (the map into Z[G/H])
    Permutation g2;  // double coset H g2 J_i (the map out of Z[G/H])
    mpz_class n;
};

// Integral factorization c * id = sum n_k T(g_k) o T(g2_k) on Z[G/H].
struct TransferPlan {
    PermutationGroup group;
    SubgroupHandle h;
    std::vector<SubgroupHandle> j_list;
    mpz_class c;
    std::vector<TransferSummand> summands;
};

// Smallest positive c admitting an integral two-sided factorization through
// the Z[G/J_i]; computed as a lattice-line intersection over vectorized
// operator products. The plan re-verifies to c * id exactly.
TransferPlan optimal_coefficient(const PermutationGroup& g, const SubgroupHandle& h,
                                 const std::vector<SubgroupHandle>& j_list);

bool verify_transfer_plan(const TransferPlan& plan);

struct ProjectedRelation {
    RelationCertificate cert;         // on the quotient group
    std::vector<int> dropped;         // indices of J_i contained in N
    QuotientGroup quotient;
};

// Push a relation to G/N for normal N <= H; J_i inside N are dropped with a
// warning entry, the certificate is recomputed and verified on the quotient.
ProjectedRelation project_relation(const PermutationGroup& g, const SubgroupHandle& n,
                                   const SubgroupHandle& h,
                                   const std::vector<SubgroupHandle>& j_list,
                                   const RelationCertificate& cert);

}  // namespace nr
