#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cimlab/gf.hpp"
#include "cimlab/group.hpp"

namespace cimlab {

/// A representation of Alt(5) over GF(11), given by the images of the
/// standard generators a = (0 1)(2 3) and b = (0 2 4).
struct MatrixRep {
    int dim = 0;
    long long p = 11;
    ModMatrix gen_a;
    ModMatrix gen_b;
};

/// The two faithful irreducible representations, of degree 3 and 5.
std::pair<MatrixRep, MatrixRep> build_reps();

MatrixRep direct_sum(const MatrixRep& x, const MatrixRep& y);

/// Alt(5) on 5 points with the standard generators.
std::unique_ptr<PermutationGroup> alt5_group();

struct HomCheck {
    bool ok = false;
    std::string failure;
    long long matrix_group_order = 0;
};

/// Generator relations (a^2, b^3, (ab)^5), order-60 closure, and the
/// generator-induced isomorphism to the permutation group checked on the
/// full multiplication table.
HomCheck verify_homomorphism(const MatrixRep& rep);

/// Rank of the group-averaging projector on n x n matrices; 1 certifies
/// irreducibility (the commutant reduces to scalars).
int dim_endomorphism_algebra(const MatrixRep& rep);

/// Matrix image of a permutation under the generator correspondence.
ModMatrix rep_of_perm(const MatrixRep& rep, const Elem& perm);

/// Basis of the fixed space of rep(s).
std::vector<std::vector<long long>> fixed_space(const MatrixRep& rep, const Elem& perm);

/// Lexicographically least vector whose stabilizer inside the permutation
/// subgroup M is exactly `target`; nullopt if none exists.
std::optional<std::vector<long long>> find_regular_vector(
    const MatrixRep& rep, const std::vector<Elem>& m_elements,
    const std::vector<Elem>& target_elements);

struct SylowCheck {
    long long prime = 0;
    long long expected_order = 0;
    long long intersection_order = 0;
    bool contains_sylow = false;
    bool equals_sylow = false;
    std::vector<std::string> family;
    std::string note;
};

struct Alt5Report {
    HomCheck hom3, hom5;
    int end_dim3 = 0, end_dim5 = 0, end_dim_sum = 0;
    std::optional<std::vector<long long>> witness_v, witness_w;
    long long stab_v = 0, stab_w = 0;
    std::vector<SylowCheck> sylow;
    bool alt5_soluble = true;
    bool alt5_cim = true;
    bool all_ok = false;
    std::vector<std::string> failures;

    std::string to_text() const;
};

/// Full verification suite for the non-soluble example (V1 x V2) x| Alt(5):
/// representation checks, irreducibility ranks, regular-vector witnesses,
/// the four Sylow-intersection identities, and the solubility contrast.
/// With negative_control set, one matrix entry is flipped first.
Alt5Report run_alt5_suite(bool negative_control = false);

} // namespace cimlab
