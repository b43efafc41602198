#include "cimlab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cimlab/numth.hpp"

namespace cimlab {

SubgroupLattice SubgroupLattice::build(const FiniteGroup& g, std::size_t cap) {
    SubgroupLattice lat(g);
    const IndexedGroup& idx = lat.idx_;
    const int n = idx.size();

    auto add = [&](DynBitset set, std::vector<int> witness, bool is_cyclic) -> int {
        auto it = lat.by_set_.find(set);
        if (it != lat.by_set_.end()) return it->second;
        if (lat.sets_.size() + 1 > cap) throw LatticeOverflow(cap);
        int id = static_cast<int>(lat.sets_.size());
        lat.orders_.push_back(static_cast<long long>(set.count()));
        lat.by_set_.emplace(set, id);
        lat.sets_.push_back(std::move(set));
        lat.gens_.push_back(std::move(witness));
        lat.cyclic_.push_back(is_cyclic);
        return id;
    };

    // every cyclic subgroup, by generator scan
    std::vector<std::pair<int, int>> atoms; // (subgroup id, generating element)
    for (int e = 0; e < n; ++e) {
        DynBitset set(n);
        int cur = idx.identity();
        set.set(cur);
        do {
            cur = idx.mul(cur, e);
            set.set(cur);
        } while (cur != idx.identity());
        std::size_t before = lat.sets_.size();
        int id = add(std::move(set), {e}, true);
        if (lat.sets_.size() > before && e != idx.identity())
            atoms.emplace_back(id, e);
    }
    lat.trivial_ = lat.by_set_.at(idx.close(std::vector<int>{}));

    // close under join with cyclic atoms
    for (std::size_t s = 0; s < lat.sets_.size(); ++s) {
        for (const auto& [aid, agen] : atoms) {
            if (lat.sets_[aid].subset_of(lat.sets_[s])) continue;
            std::vector<int> witness = lat.gens_[s];
            witness.push_back(agen);
            DynBitset joined = idx.close(witness);
            add(std::move(joined), std::move(witness), false);
        }
    }

    {
        DynBitset whole(n);
        for (int i = 0; i < n; ++i) whole.set(i);
        lat.full_ = lat.by_set_.at(whole);
    }

    // normality flags
    lat.normal_.resize(lat.sets_.size());
    for (std::size_t s = 0; s < lat.sets_.size(); ++s) {
        bool ok = true;
        for (int t : idx.generator_indices()) {
            for (int x : lat.gens_[s]) {
                if (!lat.sets_[s].test(idx.conj(x, t))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        lat.normal_[s] = ok;
    }

    // maximal subgroups: proper, with no proper subgroup strictly between
    // them and the whole group
    int m = lat.count();
    for (int i = 0; i < m; ++i) {
        if (i == lat.full_) continue;
        bool maximal = true;
        for (int j = 0; j < m; ++j) {
            if (j == i || j == lat.full_) continue;
            if (lat.orders_[j] > lat.orders_[i] && lat.contains(j, i)) {
                maximal = false;
                break;
            }
        }
        if (maximal) lat.maximal_.push_back(i);
    }
    return lat;
}

int SubgroupLattice::find(const DynBitset& set) const {
    auto it = by_set_.find(set);
    return it == by_set_.end() ? -1 : it->second;
}

int SubgroupLattice::meet(int i, int j) const {
    DynBitset s = sets_[i];
    s &= sets_[j];
    return find(s);
}

int SubgroupLattice::join(int i, int j) const {
    std::vector<int> witness = gens_[i];
    witness.insert(witness.end(), gens_[j].begin(), gens_[j].end());
    return find(idx_.close(witness));
}

int SubgroupLattice::mi_closure(int i) const {
    DynBitset acc(idx_.size());
    bool first = true;
    for (int mx : maximal_) {
        if (!contains(mx, i)) continue;
        if (first) {
            acc = sets_[mx];
            first = false;
        } else {
            acc &= sets_[mx];
        }
    }
    if (first) return full_;
    int id = find(acc);
    // an intersection of subgroups is a subgroup, so it is in the lattice
    if (id < 0) throw UsageError("lattice is missing an intersection (corrupt build)");
    return id;
}

bool SubgroupLattice::normal_within(int inner, int outer) const {
    for (int t : gens_[outer])
        for (int x : gens_[inner])
            if (!sets_[inner].test(idx_.conj(x, t))) return false;
    return true;
}

bool SubgroupLattice::abelian(int i) const {
    const auto& gs = gens_[i];
    for (std::size_t a = 0; a < gs.size(); ++a)
        for (std::size_t b = a + 1; b < gs.size(); ++b)
            if (idx_.mul(gs[a], gs[b]) != idx_.mul(gs[b], gs[a])) return false;
    return true;
}

bool SubgroupLattice::nilpotent(int i) const {
    // all Sylow subgroups normal within i; Sylows are lattice members
    long long o = orders_[i];
    for (auto& [p, e] : factorize(o)) {
        long long q = 1;
        for (int k = 0; k < e; ++k) q *= p;
        int sylow = -1;
        for (int j = 0; j < count(); ++j) {
            if (orders_[j] == q && contains(i, j)) {
                sylow = j;
                break;
            }
        }
        if (sylow < 0) throw UsageError("lattice is missing a Sylow subgroup (corrupt build)");
        if (!normal_within(sylow, i)) return false;
    }
    return true;
}

int SubgroupLattice::fitting() const {
    std::vector<int> ids(count());
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(),
              [&](int a, int b) { return orders_[a] > orders_[b]; });
    for (int i : ids)
        if (normal_[i] && nilpotent(i)) return i;
    return trivial_;
}

std::vector<int> SubgroupLattice::cyclic_subgroup_indices() const {
    std::vector<int> out;
    for (int i = 0; i < count(); ++i)
        if (cyclic_[i]) out.push_back(i);
    return out;
}

std::vector<int> SubgroupLattice::normal_subgroup_indices() const {
    std::vector<int> out;
    for (int i = 0; i < count(); ++i)
        if (normal_[i]) out.push_back(i);
    return out;
}

std::vector<int> SubgroupLattice::non_closed() const {
    std::vector<int> out;
    for (int i = 0; i < count(); ++i)
        if (i != full_ && mi_closure(i) != i) out.push_back(i);
    return out;
}

std::vector<int> SubgroupLattice::non_closed_cyclic() const {
    std::vector<int> out;
    for (int i = 0; i < count(); ++i)
        if (i != full_ && cyclic_[i] && mi_closure(i) != i) out.push_back(i);
    return out;
}

bool SubgroupLattice::is_aim() const {
    for (int i = 0; i < count(); ++i)
        if (i != full_ && abelian(i) && mi_closure(i) != i) return false;
    return true;
}

bool SubgroupLattice::is_t_group() const {
    for (int y = 0; y < count(); ++y) {
        if (!normal_[y]) continue;
        for (int x = 0; x < count(); ++x) {
            if (x == y || normal_[x] || !contains(y, x)) continue;
            if (normal_within(x, y)) return false;
        }
    }
    return true;
}

Rational SubgroupLattice::p_im() const {
    long long proper = count() - 1;
    if (proper < 1) throw UsageError("p_im undefined: group has no proper subgroup");
    long long closed = 0;
    for (int i = 0; i < count(); ++i)
        if (i != full_ && mi_closure(i) == i) ++closed;
    return Rational(closed, proper);
}

Subgroup SubgroupLattice::to_subgroup(int i) const {
    Subgroup s;
    s.parent = &group();
    for (int x : gens_[i]) s.gens.push_back(idx_.element(x));
    for (std::size_t e = 0; e < sets_[i].size(); ++e)
        if (sets_[i].test(e)) s.elems.insert(idx_.element(static_cast<int>(e)));
    return s;
}

std::string SubgroupLattice::describe(int i) const {
    std::ostringstream os;
    os << "order=" << orders_[i] << " gens=[";
    for (std::size_t k = 0; k < gens_[i].size(); ++k) {
        if (k) os << " ";
        os << group().describe_element(idx_.element(gens_[i][k]));
    }
    os << "]";
    return os.str();
}

bool is_im_structural(const SubgroupLattice& lat) {
    const IndexedGroup& idx = lat.indexed();
    long long g_order = idx.size();
    for (int n : lat.normal_subgroup_indices()) {
        long long n_order = lat.subgroup_order(n);
        if (std::gcd(n_order, g_order / n_order) != 1) continue; // Hall
        if (!lat.abelian(n)) continue;
        long long exp_n = 1;
        for (int x : lat.witness(n)) exp_n = std::lcm(exp_n, lat.indexed().order_of_index(x));
        if (!is_squarefree(exp_n)) continue;
        // quotient elementary abelian: commutators land in N, coset orders
        // of the generators have square-free lcm
        const auto& ggens = idx.generator_indices();
        bool quot_ok = true;
        for (std::size_t a = 0; a < ggens.size() && quot_ok; ++a)
            for (std::size_t b = a + 1; b < ggens.size() && quot_ok; ++b) {
                int c = idx.mul(idx.inv(idx.mul(ggens[b], ggens[a])),
                                idx.mul(ggens[a], ggens[b]));
                if (!lat.member_set(n).test(c)) quot_ok = false;
            }
        if (!quot_ok) continue;
        long long exp_q = 1;
        for (int x : ggens) {
            int cur = x;
            long long m = 1;
            while (!lat.member_set(n).test(cur)) {
                cur = idx.mul(cur, x);
                ++m;
            }
            exp_q = std::lcm(exp_q, m);
        }
        if (!is_squarefree(exp_q)) continue;
        // every subgroup of N normal in G
        bool all_normal = true;
        for (int j = 0; j < lat.count() && all_normal; ++j)
            if (lat.contains(n, j) && !lat.normal(j)) all_normal = false;
        if (all_normal) return true;
    }
    return false;
}

} // namespace cimlab
