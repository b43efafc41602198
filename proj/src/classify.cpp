#include "cimlab/classify.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cimlab/descriptors.hpp"
#include "cimlab/materialize.hpp"
#include "cimlab/numth.hpp"
#include "cimlab/predicates.hpp"

namespace cimlab {

namespace {
constexpr int kMaxWitnesses = 5;
}

ClassificationReport classify_from_lattice(const SubgroupLattice& lat,
                                           const std::string& id) {
    const FiniteGroup& g = lat.group();
    ClassificationReport r;
    r.group_id = id;
    r.engine = "brute";
    r.order = g.order();
    r.is_im = lat.is_im();
    r.is_cim = lat.is_cim();
    r.is_aim = lat.is_aim();
    r.is_t_group = lat.is_t_group();
    r.is_im_structural = is_im_structural(lat);
    r.frattini_order = lat.subgroup_order(lat.frattini());
    r.fitting_order = lat.subgroup_order(lat.fitting());
    if (r.order > 1) r.p_im = lat.p_im();
    r.is_soluble = is_soluble(g);
    r.is_supersoluble = is_supersoluble(g);
    r.is_metabelian = is_metabelian(g);
    auto bad = lat.non_closed();
    for (std::size_t i = 0; i < bad.size() && i < kMaxWitnesses; ++i)
        r.non_closed_witnesses.push_back(lat.describe(bad[i]));
    auto bad_cyc = lat.non_closed_cyclic();
    if (!bad_cyc.empty()) r.cim_witness = lat.describe(bad_cyc.front());
    return r;
}

ClassificationReport classify_brute(const FiniteGroup& g, const std::string& id,
                                    std::size_t subgroup_cap) {
    auto lat = SubgroupLattice::build(g, subgroup_cap);
    return classify_from_lattice(lat, id);
}

ClassificationReport classify_fast(const StructuredGroup& spec, const std::string& id) {
    require_valid(spec);
    ClassificationReport r;
    r.group_id = id;
    r.engine = "fast";
    r.order = spec.order();
    StructuredOps ops(spec);
    CimCheck cc = ops.fast_is_cim();
    r.is_cim = cc.is_cim;
    r.j_audit = cc.audit;
    if (!cc.is_cim) r.cim_witness = "h=" + ops.h().tuple_str(cc.witness_h);
    // the shape settles these: prime-order chief factors under an abelian
    // complement acting by scalars
    r.is_soluble = true;
    r.is_supersoluble = true;
    r.is_metabelian = true;
    r.is_t_group = true;
    long long h_exponent = 1;
    for (long long d : spec.h_orders) h_exponent = std::lcm(h_exponent, d);
    bool quotient_elem_ab = is_squarefree(h_exponent);
    r.is_im = quotient_elem_ab;
    r.is_aim = quotient_elem_ab;
    r.is_im_structural = quotient_elem_ab;
    r.frattini_order = 1;
    r.fitting_order = spec.module_part_order();
    return r;
}

ClassificationReport classify_both(const StructuredGroup& spec, const std::string& id,
                                   long long element_cap, std::size_t subgroup_cap) {
    ClassificationReport fast = classify_fast(spec, id);
    auto g = materialize(spec, element_cap);
    ClassificationReport r = classify_brute(*g, id, subgroup_cap);
    r.engine = "both";
    r.j_audit = fast.j_audit;
    auto lat = SubgroupLattice::build(*g, subgroup_cap);

    std::ostringstream mismatch;
    bool agree = true;
    auto check = [&](const char* name, auto fast_v, auto brute_v) {
        if (!agree) return;
        if (fast_v != brute_v) {
            agree = false;
            mismatch << name << ": fast=" << fast_v << " brute=" << brute_v;
        }
    };
    check("is_cim", *fast.is_cim, *r.is_cim);
    check("is_im", *fast.is_im, *r.is_im);
    check("is_aim", *fast.is_aim, *r.is_aim);
    check("is_t_group", *fast.is_t_group, *r.is_t_group);
    check("is_soluble", *fast.is_soluble, *r.is_soluble);
    check("is_supersoluble", *fast.is_supersoluble, *r.is_supersoluble);
    check("is_metabelian", *fast.is_metabelian, *r.is_metabelian);
    check("frattini_order", *fast.frattini_order, *r.frattini_order);
    check("fitting_order", *fast.fitting_order, *r.fitting_order);

    if (agree) {
        StructuredOps ops(spec);
        MidScaleEngine mid(ops);
        for (int ci : lat.cyclic_subgroup_indices()) {
            StructuredElement x = g->unpack(lat.indexed().element(lat.witness(ci)[0]));
            long long lattice_order = lat.subgroup_order(lat.mi_closure(ci));
            long long fast_order = ops.fast_mi_closure(x).closure_order;
            long long mid_order = mid.closure_order(x);
            if (lattice_order != fast_order || lattice_order != mid_order) {
                agree = false;
                mismatch << "closure of <" << ops.element_str(x)
                         << ">: lattice=" << lattice_order << " fast=" << fast_order
                         << " symbolic=" << mid_order;
                break;
            }
        }
    }
    r.fast_vs_brute_agree = agree;
    if (!agree) r.disagreement = mismatch.str();
    if (!fast.is_cim.value() && fast.cim_witness) r.cim_witness = fast.cim_witness;
    return r;
}

std::string report_to_json(const ClassificationReport& r) {
    nlohmann::json j;
    j["group_id"] = r.group_id;
    j["order"] = r.order;
    j["engine"] = r.engine;
    auto put = [&](const char* k, const auto& v) {
        if (v)
            j[k] = *v;
        else
            j[k] = nullptr;
    };
    put("is_IM", r.is_im);
    put("is_CIM", r.is_cim);
    put("is_AIM", r.is_aim);
    put("is_T_group", r.is_t_group);
    put("is_soluble", r.is_soluble);
    put("is_supersoluble", r.is_supersoluble);
    put("is_metabelian", r.is_metabelian);
    put("is_IM_structural", r.is_im_structural);
    put("frattini_order", r.frattini_order);
    put("fitting_order", r.fitting_order);
    if (r.p_im)
        j["p_im"] = r.p_im->str();
    else
        j["p_im"] = nullptr;
    j["non_closed_witnesses"] = r.non_closed_witnesses;
    put("cim_witness", r.cim_witness);
    j["j_sets"] = r.j_audit;
    put("fast_vs_brute_agree", r.fast_vs_brute_agree);
    put("disagreement", r.disagreement);
    return j.dump(2);
}

} // namespace cimlab
