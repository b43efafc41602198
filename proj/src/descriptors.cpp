#include "cimlab/descriptors.hpp"

#include <sstream>

#include "cimlab/gf.hpp"
#include "cimlab/numth.hpp"

namespace cimlab {

namespace {

// nonzero vectors of F_p^n whose first nonzero coordinate is 1
std::vector<std::vector<long long>> canonical_vectors(long long p, int n) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> v(n, 0);
    while (true) {
        int pos = n - 1;
        while (pos >= 0 && v[pos] == p - 1) v[pos--] = 0;
        if (pos < 0) break;
        ++v[pos];
        int first = 0;
        while (first < n && v[first] == 0) ++first;
        if (first < n && v[first] == 1) out.push_back(v);
    }
    return out;
}

int block_offset(const StructuredGroup& g, int module) {
    int off = 0;
    for (int i = 0; i < module; ++i) off += g.modules[i].delta;
    return off;
}

} // namespace

std::string MaximalDescriptor::str() const {
    std::ostringstream os;
    if (kind == Kind::Type1) {
        os << "F*K(|K|=" << HSpace::mask_order(k_mask) << ")";
    } else {
        os << "M(module=" << module << " f=[";
        for (std::size_t k = 0; k < functional.size(); ++k) {
            if (k) os << ",";
            os << functional[k];
        }
        os << "] u=" << shift << "*[";
        for (std::size_t k = 0; k < u_dir.size(); ++k) {
            if (k) os << ",";
            os << u_dir[k];
        }
        os << "])";
    }
    return os.str();
}

std::vector<MaximalDescriptor> symbolic_maximals(const StructuredOps& ops) {
    require_valid(ops.spec());
    const StructuredGroup& g = ops.spec();
    std::vector<MaximalDescriptor> out;
    for (const HSpace::Mask& k : ops.h().maximal_subgroups()) {
        MaximalDescriptor d;
        d.kind = MaximalDescriptor::Kind::Type1;
        d.k_mask = k;
        out.push_back(std::move(d));
    }
    for (std::size_t i = 0; i < g.modules.size(); ++i) {
        const ModuleSpec& m = g.modules[i];
        auto dirs = canonical_vectors(m.p, m.delta);
        for (const auto& phi : dirs) { // hyperplane W = ker(phi)
            for (const auto& dir : dirs) {
                long long dot = 0;
                for (int c = 0; c < m.delta; ++c) dot = (dot + phi[c] * dir[c]) % m.p;
                if (dot == 0) continue; // U must complement W
                long long inv = mod_inv(dot, m.p);
                std::vector<long long> f(m.delta);
                for (int c = 0; c < m.delta; ++c) f[c] = phi[c] * inv % m.p;
                for (long long shift = 0; shift < m.p; ++shift) {
                    MaximalDescriptor d;
                    d.kind = MaximalDescriptor::Kind::Type2;
                    d.module = static_cast<int>(i);
                    d.functional = f;
                    d.u_dir = dir;
                    d.shift = shift;
                    out.push_back(std::move(d));
                }
            }
        }
    }
    return out;
}

bool descriptor_contains(const StructuredOps& ops, const MaximalDescriptor& d,
                         const StructuredElement& x) {
    long long hidx = ops.h().encode(x.hpart);
    if (d.kind == MaximalDescriptor::Kind::Type1) return d.k_mask[hidx] != 0;
    const ModuleSpec& m = ops.spec().modules[d.module];
    int off = block_offset(ops.spec(), d.module);
    long long t = 0;
    for (int c = 0; c < m.delta; ++c) t = (t + d.functional[c] * x.vec[off + c]) % m.p;
    long long s = ops.scalar(d.module, hidx);
    long long rhs = d.shift % m.p * (((1 - s) % m.p + m.p) % m.p) % m.p;
    return t == rhs;
}

long long MidScaleEngine::closure_order(std::span<const StructuredElement> gens) const {
    const StructuredOps& ops = *ops_;
    const StructuredGroup& g = ops.spec();
    HSpace::Mask allowed = ops.h().whole();
    std::vector<std::vector<std::pair<std::vector<long long>, long long>>> constraints(
        g.modules.size()); // per module: (functional, shift)
    for (const MaximalDescriptor& d : descs_) {
        bool all = true;
        for (const StructuredElement& x : gens)
            if (!descriptor_contains(ops, d, x)) {
                all = false;
                break;
            }
        if (!all) continue;
        if (d.kind == MaximalDescriptor::Kind::Type1)
            allowed = HSpace::mask_and(allowed, d.k_mask);
        else
            constraints[d.module].emplace_back(d.functional, d.shift);
    }
    long long total = 0;
    for (long long hidx = 0; hidx < ops.h().size(); ++hidx) {
        if (!allowed[hidx]) continue;
        long long prod = 1;
        for (std::size_t i = 0; i < g.modules.size() && prod; ++i) {
            const ModuleSpec& m = g.modules[i];
            LinearSolver solver(m.delta, m.p);
            long long s = ops.scalar(static_cast<int>(i), hidx);
            long long one_minus_s = (((1 - s) % m.p) + m.p) % m.p;
            for (const auto& [f, shift] : constraints[i])
                if (!solver.add_equation(f, shift * one_minus_s % m.p)) break;
            prod *= solver.solution_count();
        }
        total += prod;
    }
    return total;
}

long long mid_scale_closure_order(const StructuredOps& ops,
                                  std::span<const StructuredElement> gens) {
    return MidScaleEngine(ops).closure_order(gens);
}

} // namespace cimlab
