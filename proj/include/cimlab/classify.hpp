#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cimlab/lattice.hpp"
#include "cimlab/rational.hpp"
#include "cimlab/structured.hpp"

namespace cimlab {

/// Everything the classifiers can say about one group. Fields are optional
/// because the fast engine cannot fill the lattice-only statistics.
struct ClassificationReport {
    std::string group_id;
    long long order = 0;
    std::optional<bool> is_im, is_cim, is_aim, is_t_group;
    std::optional<bool> is_soluble, is_supersoluble, is_metabelian;
    std::optional<bool> is_im_structural;
    std::optional<long long> frattini_order, fitting_order;
    std::optional<Rational> p_im;
    std::vector<std::string> non_closed_witnesses;
    std::optional<std::string> cim_witness; // first failing cyclic generator
    std::vector<std::string> j_audit;       // fast engine trace
    std::optional<bool> fast_vs_brute_agree;
    std::optional<std::string> disagreement;
    std::string engine; // "fast", "brute", or "both"
};

/// Full lattice-based classification (any realization, desk scale).
ClassificationReport classify_brute(const FiniteGroup& g, const std::string& id,
                                    std::size_t subgroup_cap = kDefaultSubgroupCap);

/// Same, over an already-built lattice.
ClassificationReport classify_from_lattice(const SubgroupLattice& lat,
                                           const std::string& id);

/// Structural classification from the shape alone; no enumeration.
ClassificationReport classify_fast(const StructuredGroup& spec, const std::string& id);

/// Runs both engines; the agreement flag also compares the closure order of
/// every cyclic subgroup across the lattice, the closure formula, and the
/// symbolic-maximal path.
ClassificationReport classify_both(const StructuredGroup& spec, const std::string& id,
                                   long long element_cap = kDefaultElementCap,
                                   std::size_t subgroup_cap = kDefaultSubgroupCap);

std::string report_to_json(const ClassificationReport& r);

} // namespace cimlab
