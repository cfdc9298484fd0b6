#include "normrel/permgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace nr {

PermutationGroup group_from_generators(int degree, std::vector<Permutation> gens) {
    return PermutationGroup(degree, std::move(gens));
}

bool is_subgroup(const PermutationGroup& g, const SubgroupHandle& h) {
    for (const auto& x : h.gens)
        if (!g.contains(x)) return false;
    return true;
}

mpz_class subgroup_order(const PermutationGroup& g, const SubgroupHandle& h) {
    StabChain chain(g.degree(), h.gens);
    return chain.order();
}

std::vector<int> subgroup_elements(const PermutationGroup& g, const SubgroupHandle& h) {
    const GroupTable& t = g.table();
    std::vector<int> seed;
    for (const auto& x : h.gens) seed.push_back(t.id_of(x));
    return t.closure(std::move(seed));
}

CosetTable left_cosets(const PermutationGroup& g, const SubgroupHandle& h) {
    if (!is_subgroup(g, h)) throw error("left_cosets: not a subgroup");
    const GroupTable& t = g.table();
    std::vector<int> hset = subgroup_elements(g, h);

    CosetTable ct;
    ct.subgroup = h;
    ct.coset_of_element.assign(t.n(), -1);
    for (int e = 0; e < t.n(); e++) {
        if (ct.coset_of_element[e] >= 0) continue;
        int idx = static_cast<int>(ct.rep_ids.size());
        ct.rep_ids.push_back(e);  // e is lex-minimal in its coset: smaller ids already assigned
        for (int x : hset) ct.coset_of_element[t.mul(e, x)] = idx;
    }
    ct.reps.reserve(ct.rep_ids.size());
    for (int r : ct.rep_ids) ct.reps.push_back(t.perm(r));
    for (int gi : t.generator_ids()) {
        std::vector<int> act(ct.rep_ids.size());
        for (size_t k = 0; k < ct.rep_ids.size(); k++)
            act[k] = ct.coset_of_element[t.mul(gi, ct.rep_ids[k])];
        ct.action.push_back(std::move(act));
    }
    return ct;
}

DoubleCosetDecomposition double_cosets(const PermutationGroup& g, const SubgroupHandle& h,
                                       const SubgroupHandle& j) {
    if (!is_subgroup(g, h) || !is_subgroup(g, j)) throw error("double_cosets: not a subgroup");
    const GroupTable& t = g.table();
    CosetTable cj = left_cosets(g, j);
    std::vector<int> hgens;
    for (const auto& x : h.gens) hgens.push_back(t.id_of(x));

    DoubleCosetDecomposition dc;
    dc.left = h;
    dc.right = j;
    long jorder = subgroup_order(g, j).get_si();

    std::vector<int> coset_dc(cj.index(), -1);
    for (int k = 0; k < cj.index(); k++) {
        if (coset_dc[k] >= 0) continue;
        int idx = static_cast<int>(dc.rep_ids.size());
        // H-orbit of coset k under left multiplication
        std::vector<int> orbit{k};
        coset_dc[k] = idx;
        for (size_t head = 0; head < orbit.size(); head++) {
            for (int hg : hgens) {
                int img = cj.coset_of_element[t.mul(hg, cj.rep_ids[orbit[head]])];
                if (coset_dc[img] < 0) {
                    coset_dc[img] = idx;
                    orbit.push_back(img);
                }
            }
        }
        dc.rep_ids.push_back(cj.rep_ids[k]);  // k is the smallest coset in the orbit
        dc.sizes.push_back(static_cast<long>(orbit.size()) * jorder);
    }
    dc.reps.reserve(dc.rep_ids.size());
    for (int r : dc.rep_ids) dc.reps.push_back(t.perm(r));
    dc.dc_of_element.assign(t.n(), -1);
    for (int e = 0; e < t.n(); e++) dc.dc_of_element[e] = coset_dc[cj.coset_of_element[e]];
    return dc;
}

namespace {

// subgroup as a bitset over element ids
struct IdSet {
    std::vector<uint64_t> bits;
    int count = 0;

    explicit IdSet(int n) : bits((n + 63) / 64, 0) {}
    bool get(int i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
    void set(int i) {
        if (!get(i)) {
            bits[i >> 6] |= 1ULL << (i & 63);
            count++;
        }
    }
    bool operator<(const IdSet& o) const { return bits < o.bits; }
    bool operator==(const IdSet& o) const { return bits == o.bits; }
};

struct IdSetHash {
    size_t operator()(const IdSet& s) const {
        uint64_t h = 14695981039346656037ULL;
        for (uint64_t w : s.bits) {
            h ^= w;
            h *= 1099511628211ULL;
        }
        return static_cast<size_t>(h);
    }
};

IdSet set_of_ids(int n, const std::vector<int>& ids) {
    IdSet s(n);
    for (int i : ids) s.set(i);
    return s;
}

std::vector<int> ids_of_set(const IdSet& s) {
    std::vector<int> out;
    for (size_t w = 0; w < s.bits.size(); w++) {
        uint64_t b = s.bits[w];
        while (b) {
            int bit = __builtin_ctzll(b);
            out.push_back(static_cast<int>(w * 64 + bit));
            b &= b - 1;
        }
    }
    return out;
}

IdSet conjugate_set(const GroupTable& t, const IdSet& s, int g) {
    IdSet r(t.n());
    int gi = t.inv(g);
    for (int x : ids_of_set(s)) r.set(t.mul(t.mul(g, x), gi));
    return r;
}

// lexicographically minimal conjugate: the canonical class key
IdSet canonical_conjugate(const GroupTable& t, const IdSet& s) {
    IdSet best = s;
    for (int g = 1; g < t.n(); g++) {
        IdSet c = conjugate_set(t, s, g);
        if (c < best) best = c;
    }
    return best;
}

std::vector<int> generators_of_idset(const GroupTable& t, const std::vector<int>& ids) {
    std::vector<int> gens;
    std::unordered_set<int> have{0};
    std::vector<int> closure_set{0};
    for (int x : ids) {
        if (have.count(x)) continue;
        gens.push_back(x);
        // extend the closure
        std::vector<int> seed = gens;
        closure_set = t.closure(seed);
        have = std::unordered_set<int>(closure_set.begin(), closure_set.end());
    }
    return gens;
}

// derived subgroup of an explicit element set
std::vector<int> derived_ids(const GroupTable& t, const std::vector<int>& ids) {
    std::vector<int> comms;
    std::unordered_set<int> seen;
    for (int a : ids)
        for (int b : ids) {
            int c = t.mul(t.mul(t.mul(a, b), t.inv(a)), t.inv(b));
            if (seen.insert(c).second) comms.push_back(c);
        }
    return t.closure(comms);
}

}  // namespace

SubgroupHandle handle_from_ids(const PermutationGroup& g, const std::vector<int>& ids) {
    const GroupTable& t = g.table();
    SubgroupHandle h;
    for (int gid : generators_of_idset(t, ids)) h.gens.push_back(t.perm(gid));
    return h;
}

std::vector<SubgroupHandle> subgroups_up_to_conjugacy(const PermutationGroup& g, long min_order,
                                                      long order_cap) {
    if (g.order() > order_cap) throw error("subgroups_up_to_conjugacy: order bound exceeded");
    const GroupTable& t = g.table();
    const int n = t.n();

    std::unordered_map<IdSet, IdSet, IdSetHash> canon_cache;
    auto canon = [&](const IdSet& s) {
        auto it = canon_cache.find(s);
        if (it != canon_cache.end()) return it->second;
        IdSet c = canonical_conjugate(t, s);
        canon_cache.emplace(s, c);
        return c;
    };

    // seeds: trivial subgroup plus every perfect subgroup class, found by a
    // two-generator sweep of the perfect residual (perfect groups of order
    // below the cap are 2-generated)
    std::set<IdSet> seen_classes;
    std::vector<IdSet> worklist;
    auto add_class = [&](const IdSet& s) {
        IdSet c = canon(s);
        if (seen_classes.insert(c).second) {
            worklist.push_back(c);
            return true;
        }
        return false;
    };

    IdSet triv(n);
    triv.set(0);
    add_class(triv);

    {
        std::vector<int> res(n);
        for (int i = 0; i < n; i++) res[i] = i;
        while (true) {
            std::vector<int> d = derived_ids(t, res);
            if (d.size() == res.size()) break;
            res = std::move(d);
        }
        if (res.size() > 1) {
            std::unordered_set<IdSet, IdSetHash> swept;
            for (size_t ia = 0; ia < res.size(); ia++)
                for (size_t ib = ia; ib < res.size(); ib++) {
                    std::vector<int> cl = t.closure({res[ia], res[ib]});
                    IdSet s = set_of_ids(n, cl);
                    if (!swept.insert(s).second) continue;
                    std::vector<int> d = derived_ids(t, cl);
                    if (d.size() == cl.size() && cl.size() > 1) add_class(s);
                }
        }
    }

    // cyclic extension, ascending by order
    std::sort(worklist.begin(), worklist.end(),
              [](const IdSet& a, const IdSet& b) { return a.count < b.count; });
    std::vector<IdSet> classes;
    while (!worklist.empty()) {
        // take the smallest-order entry
        size_t pick = 0;
        for (size_t i = 1; i < worklist.size(); i++)
            if (worklist[i].count < worklist[pick].count ||
                (worklist[i].count == worklist[pick].count && worklist[i] < worklist[pick]))
                pick = i;
        IdSet s = worklist[pick];
        worklist.erase(worklist.begin() + pick);
        classes.push_back(s);
        if (s.count == n) continue;

        std::vector<int> sids = ids_of_set(s);
        std::vector<int> sgens = generators_of_idset(t, sids);
        // normalizer of s
        std::vector<int> norm;
        for (int e = 0; e < n; e++) {
            bool ok = true;
            int ei = t.inv(e);
            for (int sg : sgens)
                if (!s.get(t.mul(t.mul(e, sg), ei))) {
                    ok = false;
                    break;
                }
            if (ok) norm.push_back(e);
        }
        for (int x : norm) {
            if (s.get(x)) continue;
            // order of xS in N/S
            int k = 1, p = x;
            while (!s.get(p)) {
                p = t.mul(p, x);
                k++;
            }
            mpz_class kz(k);
            if (mpz_probab_prime_p(kz.get_mpz_t(), 30) == 0) continue;
            IdSet ext(n);
            int pw = 0;  // identity
            for (int j = 0; j < k; j++) {
                for (int sid : sids) ext.set(t.mul(sid, pw));
                pw = t.mul(pw, x);
            }
            add_class(ext);
        }
    }

    std::sort(classes.begin(), classes.end(), [](const IdSet& a, const IdSet& b) {
        if (a.count != b.count) return a.count < b.count;
        return a < b;
    });
    std::vector<SubgroupHandle> out;
    for (const auto& c : classes) {
        if (c.count < min_order) continue;
        out.push_back(handle_from_ids(g, ids_of_set(c)));
    }
    return out;
}

std::optional<Permutation> is_conjugate(const PermutationGroup& g, const SubgroupHandle& h1,
                                        const SubgroupHandle& h2) {
    if (!is_subgroup(g, h1) || !is_subgroup(g, h2)) throw error("is_conjugate: not a subgroup");
    if (subgroup_order(g, h1) != subgroup_order(g, h2)) return std::nullopt;
    const GroupTable& t = g.table();
    IdSet s2 = set_of_ids(t.n(), subgroup_elements(g, h2));
    std::vector<int> g1;
    for (const auto& x : h1.gens) g1.push_back(t.id_of(x));
    if (g1.empty()) return t.perm(0);  // trivial subgroups
    for (int e = 0; e < t.n(); e++) {
        int ei = t.inv(e);
        bool ok = true;
        for (int x : g1)
            if (!s2.get(t.mul(t.mul(e, x), ei))) {
                ok = false;
                break;
            }
        if (ok) return t.perm(e);
    }
    return std::nullopt;
}

bool is_normal(const PermutationGroup& g, const SubgroupHandle& h) {
    StabChain chain(g.degree(), h.gens);
    for (const auto& ggen : g.generators())
        for (const auto& hgen : h.gens)
            if (!chain.contains(hgen.conj_by(ggen))) return false;
    return true;
}

SubgroupHandle core(const PermutationGroup& g, const SubgroupHandle& h) {
    if (!is_subgroup(g, h)) throw error("core: not a subgroup");
    const GroupTable& t = g.table();
    IdSet acc = set_of_ids(t.n(), subgroup_elements(g, h));
    for (int e = 1; e < t.n(); e++) {
        IdSet c = conjugate_set(t, acc, e);
        bool changed = false;
        for (size_t w = 0; w < acc.bits.size(); w++) {
            uint64_t nw = acc.bits[w] & c.bits[w];
            if (nw != acc.bits[w]) changed = true;
            acc.bits[w] = nw;
        }
        if (changed) {
            acc.count = 0;
            for (uint64_t w : acc.bits) acc.count += __builtin_popcountll(w);
        }
    }
    return handle_from_ids(g, ids_of_set(acc));
}

Permutation QuotientGroup::project(const Permutation& ge) const {
    std::vector<int> im(parent_reps.size());
    for (size_t k = 0; k < parent_reps.size(); k++) {
        Permutation x = ge * parent_reps[k];
        int found = -1;
        for (size_t m = 0; m < parent_reps.size(); m++) {
            if (n_group.contains(parent_reps[m].inverse() * x)) {
                found = static_cast<int>(m);
                break;
            }
        }
        if (found < 0) throw error("quotient projection failed");
        im[k] = found;
    }
    return Permutation(std::move(im));
}

SubgroupHandle QuotientGroup::project_subgroup(const SubgroupHandle& s) const {
    SubgroupHandle out;
    for (const auto& x : s.gens) {
        Permutation p = project(x);
        if (!p.is_identity()) out.gens.push_back(p);
    }
    return out;
}

QuotientGroup quotient_group(const PermutationGroup& g, const SubgroupHandle& n) {
    if (!is_normal(g, n)) throw error("quotient_group: subgroup is not normal");
    CosetTable ct = left_cosets(g, n);
    std::vector<Permutation> qgens;
    for (const auto& act : ct.action) qgens.push_back(Permutation(act));
    QuotientGroup q;
    q.group = PermutationGroup(ct.index(), qgens);
    q.parent_reps = ct.reps;
    q.n_group = PermutationGroup(g.degree(), n.gens);
    return q;
}

PermutationGroup direct_product_with_cyclic(const PermutationGroup& g, long p) {
    mpz_class pz(p);
    if (mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0)
        throw error("direct_product_with_cyclic: p must be prime");
    if (g.order() % p == 0) throw error("direct_product_with_cyclic: p divides the group order");
    int d = g.degree();
    std::vector<Permutation> gens;
    for (const auto& ge : g.generators()) {
        Permutation x = Permutation::identity(d + static_cast<int>(p));
        for (int i = 0; i < d; i++) x.images[i] = ge(i);
        gens.push_back(x);
    }
    Permutation cyc = Permutation::identity(d + static_cast<int>(p));
    for (long i = 0; i < p; i++) cyc.images[d + i] = d + (i + 1) % p;
    gens.push_back(cyc);
    return PermutationGroup(d + static_cast<int>(p), gens);
}

SubgroupHandle embed_in_product(const SubgroupHandle& h, int g_degree, long p) {
    SubgroupHandle out;
    for (const auto& x : h.gens) {
        Permutation e = Permutation::identity(g_degree + static_cast<int>(p));
        for (int i = 0; i < g_degree; i++) e.images[i] = x(i);
        out.gens.push_back(e);
    }
    return out;
}

std::vector<int> normalizer_ids(const PermutationGroup& g, const SubgroupHandle& h) {
    const GroupTable& t = g.table();
    IdSet s = set_of_ids(t.n(), subgroup_elements(g, h));
    std::vector<int> hg;
    for (const auto& x : h.gens) hg.push_back(t.id_of(x));
    std::vector<int> out;
    for (int e = 0; e < t.n(); e++) {
        int ei = t.inv(e);
        bool ok = true;
        for (int x : hg)
            if (!s.get(t.mul(t.mul(e, x), ei))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(e);
    }
    return out;
}

SubgroupHandle intersect_subgroups(const PermutationGroup& g, const SubgroupHandle& a,
                                   const SubgroupHandle& b) {
    std::vector<int> ia = subgroup_elements(g, a);
    std::vector<int> ib = subgroup_elements(g, b);
    std::vector<int> common;
    std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(common));
    return handle_from_ids(g, common);
}

SubgroupHandle conjugate_subgroup(const SubgroupHandle& h, const Permutation& by) {
    SubgroupHandle out;
    for (const auto& x : h.gens) out.gens.push_back(x.conj_by(by));
    return out;
}

std::vector<Permutation> left_transversal_in(const PermutationGroup& g, const SubgroupHandle& h,
                                             const SubgroupHandle& j) {
    const GroupTable& t = g.table();
    std::vector<int> hids = subgroup_elements(g, h);
    std::vector<int> jids = subgroup_elements(g, j);
    IdSet jset = set_of_ids(t.n(), jids);
    for (int x : jids)
        if (!std::binary_search(hids.begin(), hids.end(), x))
            throw error("left_transversal_in: j is not contained in h");
    std::vector<Permutation> reps;
    IdSet assigned(t.n());
    for (int e : hids) {
        if (assigned.get(e)) continue;
        reps.push_back(t.perm(e));
        for (int x : jids) assigned.set(t.mul(e, x));
    }
    return reps;
}

}  // namespace nr
