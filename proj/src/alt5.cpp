#include "cimlab/alt5.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cimlab/lattice.hpp"
#include "cimlab/numth.hpp"
#include "cimlab/predicates.hpp"

namespace cimlab {

namespace {

ModMatrix rows(std::vector<std::vector<long long>> r) {
    return ModMatrix::from_rows(r, 11);
}

struct MatHash {
    std::size_t operator()(const ModMatrix& m) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (long long v : m.a) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Pairwise closure of (permutation, matrix) generators; fails when the
/// matrix side is not a 60-element image of the permutation group.
struct RepTable {
    std::vector<Elem> perms;
    ElemMap<int> perm_index;
    std::vector<ModMatrix> mats;
    bool ok = false;
    std::string failure;
};

RepTable build_table(const MatrixRep& rep) {
    RepTable t;
    auto a5 = alt5_group();
    Elem pa = a5->generators()[0];
    Elem pb = a5->generators()[1];
    std::vector<std::pair<Elem, ModMatrix>> queue;
    std::unordered_map<Elem, ModMatrix, ElemHash> seen;
    queue.emplace_back(a5->identity(), ModMatrix::identity(rep.dim, rep.p));
    seen.emplace(queue.back().first, queue.back().second);
    const std::pair<Elem, ModMatrix> gens[2] = {{pa, rep.gen_a}, {pb, rep.gen_b}};
    std::unordered_map<ModMatrix, int, MatHash> mat_seen;
    mat_seen.emplace(queue.back().second, 0);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& [gp, gm] : gens) {
            Elem np = a5->multiply(queue[i].first, gp);
            ModMatrix nm = mat_mul(queue[i].second, gm);
            auto it = seen.find(np);
            if (it == seen.end()) {
                if (queue.size() >= 61) {
                    t.failure = "pair closure exceeds 60 elements";
                    return t;
                }
                seen.emplace(np, nm);
                mat_seen.emplace(nm, 1);
                queue.emplace_back(std::move(np), std::move(nm));
            } else if (!(it->second == nm)) {
                t.failure = "matrix assignment is not well-defined on " +
                            cycles_to_string(np);
                return t;
            }
        }
    }
    if (queue.size() != 60) {
        t.failure = "pair closure has " + std::to_string(queue.size()) + " elements";
        return t;
    }
    if (mat_seen.size() != queue.size()) {
        t.failure = "matrix image collapses (not faithful)";
        return t;
    }
    for (auto& [p, m] : queue) {
        t.perm_index.emplace(p, static_cast<int>(t.perms.size()));
        t.perms.push_back(p);
        t.mats.push_back(m);
    }
    t.ok = true;
    return t;
}

std::vector<long long> sub_vec(const std::vector<long long>& x,
                               const std::vector<long long>& y, long long p) {
    std::vector<long long> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = ((x[i] - y[i]) % p + p) % p;
    return r;
}

} // namespace

std::pair<MatrixRep, MatrixRep> build_reps() {
    MatrixRep r3, r5;
    r3.dim = 3;
    r3.gen_a = rows({{-1, 0, 0}, {0, -1, 0}, {4, 4, 1}});
    r3.gen_b = rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    r5.dim = 5;
    r5.gen_a = rows({{1, 0, 0, 0, 0},
                     {0, 0, 1, 0, 0},
                     {0, 1, 0, 0, 0},
                     {0, 0, 0, 1, 0},
                     {-1, -1, -1, -1, -1}});
    r5.gen_b = rows({{0, 1, 0, 0, 0},
                     {0, 0, 0, 1, 0},
                     {0, 0, 0, 0, 1},
                     {1, 0, 0, 0, 0},
                     {-1, -1, -1, -1, -1}});
    return {r3, r5};
}

MatrixRep direct_sum(const MatrixRep& x, const MatrixRep& y) {
    MatrixRep r;
    r.dim = x.dim + y.dim;
    r.gen_a = ModMatrix(r.dim, r.dim, 11);
    r.gen_b = ModMatrix(r.dim, r.dim, 11);
    for (int i = 0; i < x.dim; ++i)
        for (int j = 0; j < x.dim; ++j) {
            r.gen_a.at(i, j) = x.gen_a.at(i, j);
            r.gen_b.at(i, j) = x.gen_b.at(i, j);
        }
    for (int i = 0; i < y.dim; ++i)
        for (int j = 0; j < y.dim; ++j) {
            r.gen_a.at(x.dim + i, x.dim + j) = y.gen_a.at(i, j);
            r.gen_b.at(x.dim + i, x.dim + j) = y.gen_b.at(i, j);
        }
    return r;
}

std::unique_ptr<PermutationGroup> alt5_group() {
    // a = (0 1)(2 3), b = (0 2 4)
    return std::make_unique<PermutationGroup>(
        5, std::vector<Elem>{{1, 0, 3, 2, 4}, {2, 1, 4, 3, 0}});
}

HomCheck verify_homomorphism(const MatrixRep& rep) {
    HomCheck out;
    ModMatrix id = ModMatrix::identity(rep.dim, rep.p);
    if (!(mat_mul(rep.gen_a, rep.gen_a) == id)) {
        out.failure = "a^2 != 1";
        return out;
    }
    if (!(mat_pow(rep.gen_b, 3) == id)) {
        out.failure = "b^3 != 1";
        return out;
    }
    if (!(mat_pow(mat_mul(rep.gen_a, rep.gen_b), 5) == id)) {
        out.failure = "(ab)^5 != 1";
        return out;
    }
    RepTable t = build_table(rep);
    if (!t.ok) {
        out.failure = t.failure;
        return out;
    }
    out.matrix_group_order = static_cast<long long>(t.mats.size());
    // multiplication-table agreement on all pairs
    auto a5 = alt5_group();
    for (std::size_t i = 0; i < t.perms.size(); ++i)
        for (std::size_t j = 0; j < t.perms.size(); ++j) {
            Elem pr = a5->multiply(t.perms[i], t.perms[j]);
            if (!(mat_mul(t.mats[i], t.mats[j]) == t.mats[t.perm_index.at(pr)])) {
                out.failure = "multiplication tables disagree at (" +
                              cycles_to_string(t.perms[i]) + ", " +
                              cycles_to_string(t.perms[j]) + ")";
                return out;
            }
        }
    out.ok = true;
    return out;
}

int dim_endomorphism_algebra(const MatrixRep& rep) {
    RepTable t = build_table(rep);
    if (!t.ok) throw UsageError("dim_endomorphism_algebra: " + t.failure);
    const int n = rep.dim;
    const long long p = rep.p;
    long long inv60 = mod_inv(60 % p, p);
    // averaging projector on n x n matrices: X -> (1/60) sum rep(s) X rep(s)^-1
    ModMatrix proj(n * n, n * n, p);
    for (const ModMatrix& m : t.mats) {
        ModMatrix mi = mat_inverse(m);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                long long f = m.at(i, k);
                if (!f) continue;
                for (int l = 0; l < n; ++l)
                    for (int j = 0; j < n; ++j)
                        proj.at(i * n + j, k * n + l) =
                            (proj.at(i * n + j, k * n + l) + f * mi.at(l, j)) % p;
            }
    }
    proj = mat_scale(proj, inv60);
    return mat_rank(proj);
}

ModMatrix rep_of_perm(const MatrixRep& rep, const Elem& perm) {
    RepTable t = build_table(rep);
    if (!t.ok) throw UsageError("rep_of_perm: " + t.failure);
    auto it = t.perm_index.find(perm);
    if (it == t.perm_index.end()) throw UsageError("rep_of_perm: permutation not in Alt(5)");
    return t.mats[it->second];
}

std::vector<std::vector<long long>> fixed_space(const MatrixRep& rep, const Elem& perm) {
    ModMatrix m = rep_of_perm(rep, perm);
    for (int i = 0; i < m.rows; ++i) m.at(i, i) = (m.at(i, i) + m.p - 1) % m.p;
    return kernel_basis(m);
}

std::optional<std::vector<long long>> find_regular_vector(
    const MatrixRep& rep, const std::vector<Elem>& m_elements,
    const std::vector<Elem>& target_elements) {
    RepTable t = build_table(rep);
    if (!t.ok) throw UsageError("find_regular_vector: " + t.failure);
    const int n = rep.dim;
    const long long p = rep.p;
    // common fixed space of the target
    std::vector<std::vector<long long>> stacked;
    for (const Elem& s : target_elements) {
        ModMatrix m = t.mats[t.perm_index.at(s)];
        for (int i = 0; i < n; ++i) {
            std::vector<long long> row(n);
            for (int j = 0; j < n; ++j) row[j] = m.at(i, j);
            row[i] = (row[i] + p - 1) % p;
            stacked.push_back(std::move(row));
        }
    }
    auto basis = kernel_basis(ModMatrix::from_rows(stacked, p));
    if (basis.empty()) return std::nullopt;
    ElemSet target_set;
    for (const Elem& s : target_elements) target_set.insert(s);
    std::vector<ModMatrix> outside;
    for (const Elem& s : m_elements)
        if (!target_set.count(s)) outside.push_back(t.mats[t.perm_index.at(s)]);

    std::optional<std::vector<long long>> best;
    std::vector<long long> coeff(basis.size(), 0);
    while (true) {
        // next coefficient tuple
        std::size_t pos = basis.size();
        while (pos > 0 && coeff[pos - 1] == p - 1) coeff[--pos] = 0;
        if (pos == 0) break;
        ++coeff[pos - 1];
        std::vector<long long> v(n, 0);
        for (std::size_t b = 0; b < basis.size(); ++b)
            for (int j = 0; j < n; ++j) v[j] = (v[j] + coeff[b] * basis[b][j]) % p;
        bool all_zero = std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
        if (all_zero) continue;
        bool regular = true;
        for (const ModMatrix& m : outside)
            if (mat_apply(m, v) == v) {
                regular = false;
                break;
            }
        if (regular && (!best || v < *best)) best = v;
    }
    return best;
}

namespace {

/// One member of a maximal-subgroup family of (V1 x V2) x| Alt(5).
struct FamilyMember {
    enum class Kind { FK, V1S, V2S } kind; // FK: s in K; V1S: u2 pinned; V2S: u1 pinned
    std::vector<char> allowed;             // FK: mask over perm indices
    std::vector<long long> shift;          // conjugating vector (in V2 resp. V1)
    std::string name;
};

struct IntersectionResult {
    long long order = 0;
    bool contains_sylow = true;
};

IntersectionResult intersect_family(const RepTable& t3, const RepTable& t5,
                                    const std::vector<FamilyMember>& family,
                                    const std::vector<Elem>& sylow_elems,
                                    const ElemMap<int>& perm_index) {
    const long long p = 11;
    IntersectionResult out;
    // containment of the designated subgroup (all its elements have zero
    // module components)
    for (const Elem& s : sylow_elems) {
        int si = perm_index.at(s);
        for (const FamilyMember& f : family) {
            bool in = true;
            if (f.kind == FamilyMember::Kind::FK) {
                in = f.allowed[si] != 0;
            } else if (f.kind == FamilyMember::Kind::V1S) {
                auto rhs = sub_vec(f.shift, mat_apply(t5.mats[si], f.shift), p);
                in = std::all_of(rhs.begin(), rhs.end(),
                                 [](long long x) { return x == 0; });
            } else {
                auto rhs = sub_vec(f.shift, mat_apply(t3.mats[si], f.shift), p);
                in = std::all_of(rhs.begin(), rhs.end(),
                                 [](long long x) { return x == 0; });
            }
            if (!in) out.contains_sylow = false;
        }
    }
    // exhaustive constraint solving: for each s count the (u1, u2) pairs
    for (int si = 0; si < 60; ++si) {
        bool s_ok = true;
        std::optional<std::vector<long long>> u1, u2;
        long long count1 = -1, count2 = -1; // -1: free
        for (const FamilyMember& f : family) {
            if (f.kind == FamilyMember::Kind::FK) {
                if (!f.allowed[si]) {
                    s_ok = false;
                    break;
                }
            } else if (f.kind == FamilyMember::Kind::V1S) {
                auto rhs = sub_vec(f.shift, mat_apply(t5.mats[si], f.shift), p);
                if (!u2) {
                    u2 = rhs;
                    count2 = 1;
                } else if (*u2 != rhs) {
                    s_ok = false;
                    break;
                }
            } else {
                auto rhs = sub_vec(f.shift, mat_apply(t3.mats[si], f.shift), p);
                if (!u1) {
                    u1 = rhs;
                    count1 = 1;
                } else if (*u1 != rhs) {
                    s_ok = false;
                    break;
                }
            }
        }
        if (!s_ok) continue;
        long long c1 = count1 < 0 ? 11LL * 11 * 11 : count1;
        long long c2 = count2 < 0 ? 11LL * 11 * 11 * 11 * 11 : count2;
        out.order += c1 * c2;
    }
    return out;
}

} // namespace

std::string Alt5Report::to_text() const {
    std::ostringstream os;
    auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
    os << "representation deg 3: " << flag(hom3.ok)
       << (hom3.ok ? "" : " (" + hom3.failure + ")") << "\n";
    os << "representation deg 5: " << flag(hom5.ok)
       << (hom5.ok ? "" : " (" + hom5.failure + ")") << "\n";
    os << "endomorphism ranks: deg3=" << end_dim3 << " deg5=" << end_dim5
       << " sum-control=" << end_dim_sum << "\n";
    if (witness_v) {
        os << "witness v = (";
        for (std::size_t i = 0; i < witness_v->size(); ++i)
            os << (i ? "," : "") << (*witness_v)[i];
        os << ") stabilizer order " << stab_v << "\n";
    }
    if (witness_w) {
        os << "witness w = (";
        for (std::size_t i = 0; i < witness_w->size(); ++i)
            os << (i ? "," : "") << (*witness_w)[i];
        os << ") stabilizer order " << stab_w << "\n";
    }
    for (const SylowCheck& s : sylow) {
        os << "sylow " << s.prime << ": intersection order " << s.intersection_order
           << " expected " << s.expected_order << " contains=" << flag(s.contains_sylow)
           << " equals=" << flag(s.equals_sylow) << "\n";
        os << "  family:";
        for (const std::string& f : s.family) os << " " << f;
        os << "\n";
        if (!s.note.empty()) os << "  " << s.note << "\n";
    }
    os << "Alt(5) soluble: " << (alt5_soluble ? "yes" : "no")
       << ", every-cyclic-closed: " << (alt5_cim ? "yes" : "no") << "\n";
    os << (all_ok ? "ALL CHECKS PASSED" : "FAILURES PRESENT") << "\n";
    for (const std::string& f : failures) os << "  failure: " << f << "\n";
    return os.str();
}

Alt5Report run_alt5_suite(bool negative_control) {
    Alt5Report rep;
    auto [r3, r5] = build_reps();
    if (negative_control) r3.gen_a.at(0, 0) = (r3.gen_a.at(0, 0) + 10) % 11;

    rep.hom3 = verify_homomorphism(r3);
    rep.hom5 = verify_homomorphism(r5);
    if (!rep.hom3.ok) rep.failures.push_back("deg-3 representation: " + rep.hom3.failure);
    if (!rep.hom5.ok) rep.failures.push_back("deg-5 representation: " + rep.hom5.failure);
    if (!rep.hom3.ok || !rep.hom5.ok) {
        rep.all_ok = false;
        return rep;
    }

    rep.end_dim3 = dim_endomorphism_algebra(r3);
    rep.end_dim5 = dim_endomorphism_algebra(r5);
    rep.end_dim_sum = dim_endomorphism_algebra(direct_sum(r3, r3));
    if (rep.end_dim3 != 1) rep.failures.push_back("deg-3 commutant rank != 1");
    if (rep.end_dim5 != 1) rep.failures.push_back("deg-5 commutant rank != 1");
    if (rep.end_dim_sum != 4) rep.failures.push_back("double-sum control rank != 4");

    auto a5 = alt5_group();
    auto lat = SubgroupLattice::build(*a5);
    const auto& elems = a5->elements();
    ElemMap<int> perm_index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        perm_index.emplace(elems[i], static_cast<int>(i));
    RepTable t3 = build_table(r3);
    RepTable t5 = build_table(r5);
    // align the tables with enumeration order
    std::vector<ModMatrix> mats3(60), mats5(60);
    for (int i = 0; i < 60; ++i) {
        mats3[i] = t3.mats[t3.perm_index.at(elems[i])];
        mats5[i] = t5.mats[t5.perm_index.at(elems[i])];
    }
    t3.mats = std::move(mats3);
    t5.mats = std::move(mats5);

    auto member_mask = [&](int lat_idx) {
        std::vector<char> mask(60, 0);
        for (int i = 0; i < 60; ++i)
            if (lat.member_set(lat_idx).test(i)) mask[i] = 1;
        return mask;
    };
    auto subgroup_elems = [&](int lat_idx) {
        std::vector<Elem> out;
        for (int i = 0; i < 60; ++i)
            if (lat.member_set(lat_idx).test(i)) out.push_back(elems[i]);
        return out;
    };
    auto maximals_containing = [&](const std::vector<Elem>& pts) {
        std::vector<int> out;
        for (int mx : lat.maximal_indices()) {
            bool all = true;
            for (const Elem& e : pts)
                if (!lat.member_set(mx).test(perm_index.at(e))) all = false;
            if (all) out.push_back(mx);
        }
        return out;
    };

    const Elem c3{1, 2, 0, 3, 4};          // (0 1 2)
    const Elem c5{1, 2, 3, 4, 0};          // (0 1 2 3 4)
    const Elem k1{1, 0, 3, 2, 4};          // (0 1)(2 3)
    const Elem k2{2, 3, 0, 1, 4};          // (0 2)(1 3)
    const std::string v1s = "V1S", v2s = "V2S";

    // p = 11: the module part, as the meet of all F K with K maximal
    {
        SylowCheck s;
        s.prime = 11;
        s.expected_order = 1;
        for (int i = 0; i < 8; ++i) s.expected_order *= 11; // |V1 x V2| = 11^8
        std::vector<FamilyMember> family;
        for (int mx : lat.maximal_indices())
            family.push_back({FamilyMember::Kind::FK, member_mask(mx), {},
                              "F*K(order " + std::to_string(lat.subgroup_order(mx)) + ")"});
        // sylow generators: module basis vectors; they all have s = id and
        // zero shifts, so intersect_family's containment test applies with
        // the identity permutation standing in for them
        std::vector<Elem> sylow_perms{a5->identity()};
        auto r = intersect_family(t3, t5, family, sylow_perms, perm_index);
        s.intersection_order = r.order;
        s.contains_sylow = r.contains_sylow;
        s.equals_sylow = r.order == s.expected_order && r.contains_sylow;
        s.note = "frattini of the degree-60 quotient is trivial (order " +
                 std::to_string(lat.subgroup_order(lat.frattini())) + ")";
        for (const auto& f : family) s.family.push_back(f.name);
        if (!s.equals_sylow) rep.failures.push_back("sylow-11 identity fails");
        rep.sylow.push_back(std::move(s));
    }

    // p = 3: <(0 1 2)> = V1S meet V2S meet F*M1 meet F*M2
    {
        SylowCheck s;
        s.prime = 3;
        s.expected_order = 3;
        auto m12 = maximals_containing({c3});
        std::vector<int> order12;
        for (int mx : m12)
            if (lat.subgroup_order(mx) == 12) order12.push_back(mx);
        if (order12.size() != 2) {
            rep.failures.push_back("expected exactly two degree-12 maximals over (0 1 2)");
        } else {
            std::vector<FamilyMember> family{
                {FamilyMember::Kind::V1S, {}, std::vector<long long>(5, 0), v1s},
                {FamilyMember::Kind::V2S, {}, std::vector<long long>(3, 0), v2s},
                {FamilyMember::Kind::FK, member_mask(order12[0]), {}, "F*M1"},
                {FamilyMember::Kind::FK, member_mask(order12[1]), {}, "F*M2"}};
            Subgroup syl = subgroup_generated(*a5, {c3});
            auto r = intersect_family(t3, t5, family, syl.sorted_elements(), perm_index);
            s.intersection_order = r.order;
            s.contains_sylow = r.contains_sylow;
            s.equals_sylow = r.order == 3 && r.contains_sylow;
            s.note = "maximality: K maximal in the point group; module complements "
                     "irreducible";
            for (const auto& f : family) s.family.push_back(f.name);
            if (!s.equals_sylow) rep.failures.push_back("sylow-3 identity fails");
        }
        rep.sylow.push_back(std::move(s));
    }

    // p = 5: unique order-10 maximal over the 5-cycle, plus a conjugated V1S
    {
        SylowCheck s;
        s.prime = 5;
        s.expected_order = 5;
        auto over = maximals_containing({c5});
        if (over.size() != 1 || lat.subgroup_order(over[0]) != 10) {
            rep.failures.push_back("expected a unique order-10 maximal over the 5-cycle");
        } else {
            Subgroup target = subgroup_generated(*a5, {c5});
            auto m_elems = subgroup_elems(over[0]);
            rep.witness_v = find_regular_vector(r5, m_elems, target.sorted_elements());
            if (!rep.witness_v) {
                rep.failures.push_back("no regular vector for the 5-cycle stabilizer");
            } else {
                rep.stab_v = 0;
                for (const Elem& m : m_elems)
                    if (mat_apply(t5.mats[perm_index.at(m)], *rep.witness_v) ==
                        *rep.witness_v)
                        ++rep.stab_v;
                std::vector<FamilyMember> family{
                    {FamilyMember::Kind::V1S, {}, std::vector<long long>(5, 0), v1s},
                    {FamilyMember::Kind::V2S, {}, std::vector<long long>(3, 0), v2s},
                    {FamilyMember::Kind::FK, member_mask(over[0]), {}, "F*M"},
                    {FamilyMember::Kind::V1S, {}, *rep.witness_v, "V1S^v"}};
                auto r = intersect_family(t3, t5, family, target.sorted_elements(),
                                          perm_index);
                s.intersection_order = r.order;
                s.contains_sylow = r.contains_sylow;
                s.equals_sylow = r.order == 5 && r.contains_sylow;
                s.note = "witness stabilizer order " + std::to_string(rep.stab_v);
                for (const auto& f : family) s.family.push_back(f.name);
                if (rep.stab_v != 5) rep.failures.push_back("witness v stabilizer != 5");
                if (!s.equals_sylow) rep.failures.push_back("sylow-5 identity fails");
            }
        }
        rep.sylow.push_back(std::move(s));
    }

    // p = 2: unique order-12 maximal over the Klein subgroup, plus V1S^w
    {
        SylowCheck s;
        s.prime = 2;
        s.expected_order = 4;
        auto over = maximals_containing({k1, k2});
        if (over.size() != 1 || lat.subgroup_order(over[0]) != 12) {
            rep.failures.push_back("expected a unique order-12 maximal over the Klein group");
        } else {
            Subgroup target = subgroup_generated(*a5, {k1, k2});
            auto m_elems = subgroup_elems(over[0]);
            rep.witness_w = find_regular_vector(r5, m_elems, target.sorted_elements());
            if (!rep.witness_w) {
                rep.failures.push_back("no regular vector for the Klein stabilizer");
            } else {
                rep.stab_w = 0;
                for (const Elem& m : m_elems)
                    if (mat_apply(t5.mats[perm_index.at(m)], *rep.witness_w) ==
                        *rep.witness_w)
                        ++rep.stab_w;
                std::vector<FamilyMember> family{
                    {FamilyMember::Kind::V1S, {}, std::vector<long long>(5, 0), v1s},
                    {FamilyMember::Kind::V2S, {}, std::vector<long long>(3, 0), v2s},
                    {FamilyMember::Kind::FK, member_mask(over[0]), {}, "F*M"},
                    {FamilyMember::Kind::V1S, {}, *rep.witness_w, "V1S^w"}};
                auto r = intersect_family(t3, t5, family, target.sorted_elements(),
                                          perm_index);
                s.intersection_order = r.order;
                s.contains_sylow = r.contains_sylow;
                s.equals_sylow = r.order == 4 && r.contains_sylow;
                s.note = "witness stabilizer order " + std::to_string(rep.stab_w);
                for (const auto& f : family) s.family.push_back(f.name);
                if (rep.stab_w != 4) rep.failures.push_back("witness w stabilizer != 4");
                if (!s.equals_sylow) rep.failures.push_back("sylow-2 identity fails");
            }
        }
        rep.sylow.push_back(std::move(s));
    }

    rep.alt5_soluble = is_soluble(*a5);
    rep.alt5_cim = lat.is_cim();
    if (rep.alt5_soluble) rep.failures.push_back("Alt(5) reported soluble");
    if (rep.alt5_cim) rep.failures.push_back("Alt(5) reported with all cyclic subgroups closed");

    rep.all_ok = rep.failures.empty();
    return rep;
}

} // namespace cimlab
