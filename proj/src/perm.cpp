#include "normrel/perm.hpp"

#include <algorithm>
#include <queue>

namespace nr {

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(degree);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); i++) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (from < 0 || from >= degree) throw error("from_cycles: point out of range");
            p.images[from] = to;
        }
    }
    if (!p.valid()) throw error("from_cycles: not a permutation");
    return p;
}

bool Permutation::valid() const {
    std::vector<bool> seen(images.size(), false);
    for (int x : images) {
        if (x < 0 || x >= degree() || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

StabChain::StabChain(int degree, const std::vector<Permutation>& gens) : degree_(degree) {
    for (const auto& g : gens) insert(g, 0);
}

void StabChain::rebuild_orbit(size_t level) {
    auto& tr = transversal_[level];
    tr.clear();
    tr.emplace(base_[level], Permutation::identity(degree_));
    std::queue<int> q;
    q.push(base_[level]);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (const auto& g : gens_[level]) {
            int y = g(x);
            if (!tr.count(y)) {
                tr.emplace(y, g * tr.at(x));
                q.push(y);
            }
        }
    }
}

std::pair<Permutation, size_t> StabChain::strip(const Permutation& p, size_t start) const {
    Permutation r = p;
    for (size_t lvl = start; lvl < base_.size(); lvl++) {
        int x = r(base_[lvl]);
        auto it = transversal_[lvl].find(x);
        if (it == transversal_[lvl].end()) return {r, lvl};
        r = it->second.inverse() * r;
    }
    return {r, base_.size()};
}

void StabChain::insert(const Permutation& g, size_t level) {
    auto [res, lvl] = strip(g, level);
    if (res.is_identity()) return;
    if (lvl == base_.size()) {
        int moved = -1;
        for (int i = 0; i < degree_; i++)
            if (res(i) != i) {
                moved = i;
                break;
            }
        base_.push_back(moved);
        gens_.push_back({});
        transversal_.push_back({});
        transversal_.back().emplace(moved, Permutation::identity(degree_));
    }
    gens_[lvl].push_back(res);
    rebuild_orbit(lvl);
    // close under Schreier generators; snapshot first, recursion below may
    // reallocate the level containers
    std::vector<std::pair<int, Permutation>> orbit(transversal_[lvl].begin(),
                                                   transversal_[lvl].end());
    std::vector<Permutation> level_gens = gens_[lvl];
    for (const auto& [x, u] : orbit) {
        for (const auto& h : level_gens) {
            Permutation schreier = transversal_[lvl].at(h(x)).inverse() * h * u;
            if (!schreier.is_identity()) insert(schreier, lvl + 1);
        }
    }
}

mpz_class StabChain::order() const {
    mpz_class o = 1;
    for (const auto& tr : transversal_) o *= static_cast<unsigned long>(tr.size());
    return o;
}

bool StabChain::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    auto [res, lvl] = strip(p, 0);
    return res.is_identity();
}

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree) {
    for (const auto& g : generators) {
        if (g.degree() != degree || !g.valid()) throw error("malformed permutation generator");
        if (!g.is_identity()) gens_.push_back(g);
    }
    chain_ = StabChain(degree_, gens_);
    order_ = chain_.order();
}

bool PermutationGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_ || !p.valid()) return false;
    return chain_.contains(p);
}

const GroupTable& PermutationGroup::table(long cap) const {
    if (!table_) {
        if (order_ > cap) throw error("group order exceeds the configured bound");
        table_ = std::make_shared<GroupTable>(degree_, gens_, cap);
    }
    return *table_;
}

namespace {

uint64_t hash_images(const std::vector<int>& im) {
    uint64_t h = 1469598103934665603ULL;
    for (int x : im) {
        h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

GroupTable::GroupTable(int degree, const std::vector<Permutation>& gens, long cap) {
    // breadth-first closure, then canonical lexicographic ordering
    std::vector<Permutation> pool{Permutation::identity(degree)};
    std::unordered_map<uint64_t, std::vector<int>> seen;
    seen[hash_images(pool[0].images)].push_back(0);
    auto known = [&](const Permutation& p) {
        auto it = seen.find(hash_images(p.images));
        if (it == seen.end()) return false;
        for (int i : it->second)
            if (pool[i].images == p.images) return true;
        return false;
    };
    for (size_t head = 0; head < pool.size(); head++) {
        Permutation cur = pool[head];
        for (const auto& g : gens) {
            Permutation nxt = g * cur;
            if (!known(nxt)) {
                if (static_cast<long>(pool.size()) >= cap)
                    throw error("group order exceeds the configured bound");
                seen[hash_images(nxt.images)].push_back(static_cast<int>(pool.size()));
                pool.push_back(nxt);
            }
        }
    }
    std::sort(pool.begin(), pool.end());
    elems_ = std::move(pool);
    index_.clear();
    for (int i = 0; i < n(); i++) index_[hash_images(elems_[i].images)].push_back(i);

    inv_.resize(n());
    for (int i = 0; i < n(); i++) inv_[i] = id_of(elems_[i].inverse());

    if (n() <= 1500) {
        mult_.resize(static_cast<size_t>(n()) * n());
        for (int a = 0; a < n(); a++)
            for (int b = 0; b < n(); b++)
                mult_[static_cast<size_t>(a) * n() + b] =
                    static_cast<uint16_t>(id_of(elems_[a] * elems_[b]));
    }
    for (const auto& g : gens) gen_ids_.push_back(id_of(g));
}

int GroupTable::id_of(const Permutation& p) const {
    auto it = index_.find(hash_images(p.images));
    if (it == index_.end()) throw error("element not in group");
    for (int i : it->second)
        if (elems_[i].images == p.images) return i;
    throw error("element not in group");
}

int GroupTable::order_of(int a) const {
    int o = 1, x = a;
    while (x != 0) {
        x = mul(x, a);
        o++;
    }
    return o;
}

std::vector<int> GroupTable::closure(std::vector<int> seed_ids) const {
    std::vector<bool> in(n(), false);
    std::vector<int> set;
    auto push = [&](int x) {
        if (!in[x]) {
            in[x] = true;
            set.push_back(x);
        }
    };
    push(0);
    for (int s : seed_ids) push(s);
    for (size_t head = 0; head < set.size(); head++) {
        for (int s : seed_ids) {
            push(mul(set[head], s));
            push(mul(s, set[head]));
        }
    }
    std::sort(set.begin(), set.end());
    return set;
}

}  // namespace nr
