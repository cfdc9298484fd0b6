#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "normrel/exactlin.hpp"

namespace nr {

// Permutation of {0..n-1}; images[i] is the image of point i.
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> im) : images(std::move(im)) {}

    static Permutation identity(int degree) {
        Permutation p;
        p.images.resize(degree);
        for (int i = 0; i < degree; i++) p.images[i] = i;
        return p;
    }
    // cycles use point labels 0..n-1
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[i]; }
    bool is_identity() const {
        for (int i = 0; i < degree(); i++)
            if (images[i] != i) return false;
        return true;
    }
    bool valid() const;

    // (a o b)(x) = a(b(x))
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        Permutation r;
        r.images.resize(b.images.size());
        for (size_t i = 0; i < b.images.size(); i++) r.images[i] = a.images[b.images[i]];
        return r;
    }
    Permutation inverse() const {
        Permutation r;
        r.images.resize(images.size());
        for (size_t i = 0; i < images.size(); i++) r.images[images[i]] = static_cast<int>(i);
        return r;
    }
    Permutation conj_by(const Permutation& g) const {  // g * this * g^-1
        return g * (*this) * g.inverse();
    }

    auto operator<=>(const Permutation& o) const = default;
};

// Stabilizer chain (deterministic Schreier-Sims, base points in increasing
// order). Supports exact order and membership.
class StabChain {
public:
    StabChain() = default;
    StabChain(int degree, const std::vector<Permutation>& gens);

    mpz_class order() const;
    bool contains(const Permutation& p) const;
    const std::vector<int>& base() const { return base_; }

private:
    void insert(const Permutation& g, size_t level);
    // returns residue after sifting and the level it got stuck at
    std::pair<Permutation, size_t> strip(const Permutation& p, size_t start = 0) const;
    void rebuild_orbit(size_t level);

    int degree_ = 0;
    std::vector<int> base_;
    std::vector<std::vector<Permutation>> gens_;
    std::vector<std::map<int, Permutation>> transversal_;  // point -> rep u, u(base)=point
};

class GroupTable;

// Finite permutation group with eagerly built stabilizer chain and a lazily
// built element table used by coset and lattice machinery.
class PermutationGroup {
public:
    PermutationGroup() = default;
    PermutationGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const mpz_class& order() const { return order_; }
    bool contains(const Permutation& p) const;
    Permutation identity() const { return Permutation::identity(degree_); }

    // Element-level view; materializes all elements on first use.
    const GroupTable& table(long cap = 200000) const;

private:
    int degree_ = 0;
    std::vector<Permutation> gens_;
    StabChain chain_;
    mpz_class order_;
    mutable std::shared_ptr<GroupTable> table_;
};

// All elements of a group, sorted lexicographically by image tuple, with
// multiplication through ids. Identity always has id 0.
class GroupTable {
public:
    GroupTable(int degree, const std::vector<Permutation>& gens, long cap);

    int n() const { return static_cast<int>(elems_.size()); }
    const Permutation& perm(int id) const { return elems_[id]; }
    int id_of(const Permutation& p) const;
    int mul(int a, int b) const {
        if (!mult_.empty()) return mult_[static_cast<size_t>(a) * elems_.size() + b];
        return id_of(elems_[a] * elems_[b]);
    }
    int inv(int a) const { return inv_[a]; }
    int order_of(int a) const;
    const std::vector<int>& generator_ids() const { return gen_ids_; }

    // closure of a set of element ids under multiplication
    std::vector<int> closure(std::vector<int> seed_ids) const;

private:
    std::vector<Permutation> elems_;
    std::unordered_map<uint64_t, std::vector<int>> index_;  // hash -> candidate ids
    std::vector<int> inv_;
    std::vector<uint16_t> mult_;  // empty when n too large
    std::vector<int> gen_ids_;
};

}  // namespace nr
