#include "cimlab/structured.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cimlab/numth.hpp"

namespace cimlab {

long long StructuredGroup::h_order() const {
    long long n = 1;
    for (long long d : h_orders) n *= d;
    return n;
}

long long StructuredGroup::module_part_order() const {
    long long n = 1;
    for (const ModuleSpec& m : modules)
        for (int k = 0; k < m.delta; ++k) n *= m.p;
    return n;
}

int StructuredGroup::module_dim() const {
    int n = 0;
    for (const ModuleSpec& m : modules) n += m.delta;
    return n;
}

std::string StructuredGroup::id() const {
    std::ostringstream os;
    os << "H[";
    for (std::size_t k = 0; k < h_orders.size(); ++k) {
        if (k) os << ",";
        os << h_orders[k];
    }
    os << "]";
    for (const ModuleSpec& m : modules) {
        os << "|" << m.p << "^" << m.delta << ":";
        for (std::size_t k = 0; k < m.action.size(); ++k) {
            if (k) os << ",";
            os << m.action[k];
        }
    }
    return os.str();
}

// ------------------------------------------------------------- validation

std::vector<Violation> validate_arithmetic(const StructuredGroup& g) {
    std::vector<Violation> out;
    for (std::size_t k = 0; k < g.h_orders.size(); ++k)
        if (g.h_orders[k] < 1)
            out.push_back({"invalid-h-order", "factor " + std::to_string(k)});
    for (std::size_t i = 0; i < g.modules.size(); ++i) {
        const ModuleSpec& m = g.modules[i];
        std::string mi = "module " + std::to_string(i);
        if (m.p < 2) {
            out.push_back({"invalid-module-order", mi});
            continue;
        }
        if (m.delta < 1) out.push_back({"invalid-delta", mi});
        if (m.action.size() != g.h_orders.size()) {
            out.push_back({"action-arity", mi + " expects one unit per complement factor"});
            continue;
        }
        for (std::size_t k = 0; k < m.action.size(); ++k) {
            long long a = m.action[k];
            if (a < 1 || a >= m.p || std::gcd(a, m.p) != 1) {
                out.push_back({"action-unit-out-of-range",
                               mi + " unit " + std::to_string(a)});
            } else if (g.h_orders[k] >= 1 && mod_pow(a, g.h_orders[k], m.p) != 1) {
                out.push_back({"action-not-homomorphism",
                               mi + " unit " + std::to_string(a) + " vs factor order " +
                                   std::to_string(g.h_orders[k])});
            }
        }
    }
    return out;
}

std::vector<Violation> validate(const StructuredGroup& g) {
    std::vector<Violation> out = validate_arithmetic(g);
    for (std::size_t i = 0; i < g.modules.size(); ++i) {
        if (!is_prime(g.modules[i].p))
            out.push_back({"module-order-not-prime",
                           "module " + std::to_string(i) + " has order " +
                               std::to_string(g.modules[i].p)});
    }
    for (std::size_t i = 0; i < g.modules.size(); ++i)
        for (std::size_t j = i + 1; j < g.modules.size(); ++j)
            if (g.modules[i].p == g.modules[j].p)
                out.push_back({"duplicate-prime", "modules " + std::to_string(i) + " and " +
                                                      std::to_string(j)});
    long long h = g.h_order();
    for (std::size_t i = 0; i < g.modules.size(); ++i)
        if (g.modules[i].p >= 2 && h % g.modules[i].p == 0)
            out.push_back({"prime-divides-h-order", "module " + std::to_string(i)});
    if (!out.empty()) return out; // kernel check needs a well-formed action
    // intersection of the action kernels must be trivial, so the module part
    // is the full Fitting subgroup
    StructuredOps ops(g);
    long long common = 0;
    for (long long hidx = 0; hidx < ops.h().size(); ++hidx) {
        bool in_all = true;
        for (std::size_t i = 0; i < g.modules.size(); ++i)
            if (!ops.acts_trivially(static_cast<int>(i), hidx)) {
                in_all = false;
                break;
            }
        if (in_all) ++common;
    }
    if (common > 1)
        out.push_back({"common-kernel-nontrivial",
                       std::to_string(common) + " complement elements act trivially"});
    return out;
}

bool is_valid(const StructuredGroup& g) { return validate(g).empty(); }

void require_valid(const StructuredGroup& g) {
    auto v = validate(g);
    if (v.empty()) return;
    std::string msg = "invalid structured group:";
    for (const Violation& x : v) msg += " [" + x.code + ": " + x.detail + "]";
    throw ValidationError(msg);
}

// ------------------------------------------------------------------ HSpace

HSpace::HSpace(std::vector<long long> orders) : orders_(std::move(orders)) {
    for (long long d : orders_) {
        if (d < 1) throw UsageError("HSpace: factor orders must be positive");
        size_ *= d;
    }
    // kernels of the homs onto C_q, one per projective class
    for (long long q : prime_divisors(size_)) {
        std::vector<std::size_t> idxs;
        for (std::size_t k = 0; k < orders_.size(); ++k)
            if (orders_[k] % q == 0) idxs.push_back(k);
        std::vector<long long> phi(idxs.size(), 0);
        while (true) {
            // next tuple
            std::size_t pos = 0;
            while (pos < phi.size() && phi[pos] == q - 1) phi[pos++] = 0;
            if (pos == phi.size()) break;
            ++phi[pos];
            // canonical representative: first nonzero coefficient is 1
            std::size_t first = 0;
            while (first < phi.size() && phi[first] == 0) ++first;
            if (first == phi.size() || phi[first] != 1) continue;
            Mask ker(size_, 0);
            for (long long idx = 0; idx < size_; ++idx) {
                auto t = decode(idx);
                long long s = 0;
                for (std::size_t j = 0; j < idxs.size(); ++j)
                    s = (s + phi[j] * t[idxs[j]]) % q;
                if (s == 0) ker[idx] = 1;
            }
            maximals_.push_back(std::move(ker));
        }
    }
}

long long HSpace::add(long long a, long long b) const {
    auto ta = decode(a), tb = decode(b);
    for (std::size_t k = 0; k < orders_.size(); ++k) ta[k] = (ta[k] + tb[k]) % orders_[k];
    return encode(ta);
}

long long HSpace::neg(long long a) const {
    auto t = decode(a);
    for (std::size_t k = 0; k < orders_.size(); ++k) t[k] = (orders_[k] - t[k]) % orders_[k];
    return encode(t);
}

std::vector<long long> HSpace::decode(long long idx) const {
    std::vector<long long> t(orders_.size());
    for (std::size_t k = orders_.size(); k-- > 0;) {
        t[k] = idx % orders_[k];
        idx /= orders_[k];
    }
    return t;
}

long long HSpace::encode(const std::vector<long long>& tuple) const {
    if (tuple.size() != orders_.size()) throw UsageError("HSpace: tuple arity mismatch");
    long long idx = 0;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
        long long e = tuple[k] % orders_[k];
        if (e < 0) e += orders_[k];
        idx = idx * orders_[k] + e;
    }
    return idx;
}

long long HSpace::order_of(long long a) const {
    auto t = decode(a);
    long long o = 1;
    for (std::size_t k = 0; k < orders_.size(); ++k)
        o = std::lcm(o, orders_[k] / std::gcd(orders_[k], t[k] == 0 ? orders_[k] : t[k]));
    return o;
}

HSpace::Mask HSpace::trivial() const {
    Mask m(size_, 0);
    m[0] = 1;
    return m;
}

HSpace::Mask HSpace::cyclic(long long a) const {
    Mask m(size_, 0);
    long long cur = 0;
    do {
        m[cur] = 1;
        cur = add(cur, a);
    } while (cur != 0);
    return m;
}

HSpace::Mask HSpace::generated(const std::vector<long long>& elems) const {
    Mask m(size_, 0);
    m[0] = 1;
    std::vector<long long> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (long long g : elems) {
            long long x = add(queue[i], g);
            if (!m[x]) {
                m[x] = 1;
                queue.push_back(x);
            }
        }
    }
    return m;
}

long long HSpace::mask_order(const Mask& m) {
    return std::count(m.begin(), m.end(), char(1));
}

HSpace::Mask HSpace::mask_and(const Mask& a, const Mask& b) {
    Mask out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
    return out;
}

HSpace::Mask HSpace::m_of(long long h) const {
    if (generates(h)) return whole();
    Mask acc = whole();
    bool found = false;
    for (const Mask& mx : maximals_) {
        if (!mx[h]) continue;
        acc = mask_and(acc, mx);
        found = true;
    }
    if (!found) throw UsageError("HSpace::m_of: non-generator outside every maximal subgroup");
    return acc;
}

std::vector<HSpace::Mask> HSpace::all_subgroups() const {
    std::vector<Mask> subs;
    auto seen = [&](const Mask& m) {
        return std::find(subs.begin(), subs.end(), m) != subs.end();
    };
    std::vector<std::vector<long long>> gens;
    for (long long a = 0; a < size_; ++a) {
        Mask c = cyclic(a);
        if (!seen(c)) {
            subs.push_back(c);
            gens.push_back({a});
        }
    }
    for (std::size_t s = 0; s < subs.size(); ++s) {
        for (long long a = 0; a < size_; ++a) {
            if (subs[s][a]) continue;
            auto g = gens[s];
            g.push_back(a);
            Mask j = generated(g);
            if (!seen(j)) {
                subs.push_back(std::move(j));
                gens.push_back(std::move(g));
            }
        }
    }
    return subs;
}

long long HSpace::coset_order(long long a, const Mask& sub) const {
    long long cur = a, m = 1;
    while (!sub[cur]) {
        cur = add(cur, a);
        ++m;
    }
    return m;
}

bool HSpace::quotient_cyclic(const Mask& sub) const {
    long long index = size_ / mask_order(sub);
    for (long long a = 0; a < size_; ++a)
        if (coset_order(a, sub) == index) return true;
    return false;
}

std::string HSpace::tuple_str(long long idx) const {
    auto t = decode(idx);
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) os << ",";
        os << t[k];
    }
    os << ")";
    return os.str();
}

// ------------------------------------------------------------ StructuredOps

StructuredOps::StructuredOps(const StructuredGroup& g) : spec_(g), h_(g.h_orders) {
    auto arith = validate_arithmetic(g);
    if (!arith.empty()) {
        std::string msg = "structured group arithmetic is ill-defined:";
        for (const Violation& v : arith) msg += " [" + v.code + ": " + v.detail + "]";
        throw ValidationError(msg);
    }
    int r = static_cast<int>(g.modules.size());
    scalars_.resize(r);
    kernels_.resize(r);
    for (int i = 0; i < r; ++i) {
        scalars_[i].resize(h_.size());
        kernels_[i].assign(h_.size(), 0);
        for (long long hidx = 0; hidx < h_.size(); ++hidx) {
            auto t = h_.decode(hidx);
            long long s = 1 % g.modules[i].p;
            for (std::size_t k = 0; k < t.size(); ++k)
                s = s * mod_pow(g.modules[i].action[k], t[k], g.modules[i].p) %
                    g.modules[i].p;
            scalars_[i][hidx] = s;
            if (s == 1) kernels_[i][hidx] = 1;
        }
    }
}

void StructuredOps::check_element(const StructuredElement& x) const {
    if (static_cast<int>(x.vec.size()) != spec_.module_dim() ||
        x.hpart.size() != spec_.h_orders.size())
        throw UsageError("structured element has wrong shape");
    int off = 0;
    for (const ModuleSpec& m : spec_.modules)
        for (int c = 0; c < m.delta; ++c, ++off)
            if (x.vec[off] < 0 || x.vec[off] >= m.p)
                throw UsageError("structured element residue out of range");
    for (std::size_t k = 0; k < x.hpart.size(); ++k)
        if (x.hpart[k] < 0 || x.hpart[k] >= spec_.h_orders[k])
            throw UsageError("structured element complement residue out of range");
}

StructuredElement StructuredOps::identity_element() const {
    return {std::vector<long long>(spec_.module_dim(), 0),
            std::vector<long long>(spec_.h_orders.size(), 0)};
}

StructuredElement StructuredOps::multiply(const StructuredElement& a,
                                          const StructuredElement& b) const {
    check_element(a);
    check_element(b);
    StructuredElement r = a;
    long long ha = h_.encode(a.hpart);
    int off = 0;
    for (std::size_t i = 0; i < spec_.modules.size(); ++i) {
        long long p = spec_.modules[i].p;
        long long s = scalars_[i][ha];
        for (int c = 0; c < spec_.modules[i].delta; ++c, ++off)
            r.vec[off] = (a.vec[off] + s * b.vec[off]) % p;
    }
    for (std::size_t k = 0; k < r.hpart.size(); ++k)
        r.hpart[k] = (a.hpart[k] + b.hpart[k]) % spec_.h_orders[k];
    return r;
}

StructuredElement StructuredOps::inverse(const StructuredElement& a) const {
    check_element(a);
    StructuredElement r = a;
    for (std::size_t k = 0; k < r.hpart.size(); ++k)
        r.hpart[k] = (spec_.h_orders[k] - a.hpart[k]) % spec_.h_orders[k];
    long long hinv = h_.encode(r.hpart);
    int off = 0;
    for (std::size_t i = 0; i < spec_.modules.size(); ++i) {
        long long p = spec_.modules[i].p;
        long long s = scalars_[i][hinv];
        for (int c = 0; c < spec_.modules[i].delta; ++c, ++off)
            r.vec[off] = (p - s * a.vec[off] % p) % p;
    }
    return r;
}

long long StructuredOps::cyclic_order(const StructuredElement& x) const {
    StructuredElement id = identity_element();
    StructuredElement cur = x;
    long long k = 1;
    while (!(cur == id)) {
        cur = multiply(cur, x);
        ++k;
    }
    return k;
}

long long StructuredOps::module_order(const StructuredElement& x) const {
    long long o = 1;
    int off = 0;
    for (const ModuleSpec& m : spec_.modules) {
        bool nonzero = false;
        for (int c = 0; c < m.delta; ++c)
            if (x.vec[off + c] != 0) nonzero = true;
        if (nonzero) o *= m.p;
        off += m.delta;
    }
    return o;
}

std::vector<int> StructuredOps::j_set(long long hidx) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < spec_.modules.size(); ++i)
        if (acts_trivially(static_cast<int>(i), hidx) && spec_.modules[i].delta >= 2)
            out.push_back(static_cast<int>(i));
    return out;
}

bool StructuredOps::is_normalized(const StructuredElement& x) const {
    long long hidx = h_.encode(x.hpart);
    int off = 0;
    for (std::size_t i = 0; i < spec_.modules.size(); ++i) {
        if (!acts_trivially(static_cast<int>(i), hidx)) {
            for (int c = 0; c < spec_.modules[i].delta; ++c)
                if (x.vec[off + c] != 0) return false;
        }
        off += spec_.modules[i].delta;
    }
    return true;
}

std::vector<int> StructuredOps::j_tilde(const StructuredElement& x) const {
    check_element(x);
    if (!is_normalized(x))
        throw UsageError("j_tilde requires a normalized element (module part commuting "
                         "with the complement part)");
    long long hidx = h_.encode(x.hpart);
    std::vector<int> out;
    int off = 0;
    for (std::size_t i = 0; i < spec_.modules.size(); ++i) {
        const ModuleSpec& m = spec_.modules[i];
        if (acts_trivially(static_cast<int>(i), hidx)) {
            bool zero = true;
            for (int c = 0; c < m.delta; ++c)
                if (x.vec[off + c] != 0) zero = false;
            if (zero || m.delta >= 2) out.push_back(static_cast<int>(i));
        }
        off += m.delta;
    }
    return out;
}

StructuredElement StructuredOps::normalize(const StructuredElement& x) const {
    check_element(x);
    StructuredElement r = x;
    long long hidx = h_.encode(x.hpart);
    int off = 0;
    for (std::size_t i = 0; i < spec_.modules.size(); ++i) {
        // blocks the complement part moves have their coordinates conjugated
        // away (1 - scalar is invertible mod p there)
        if (!acts_trivially(static_cast<int>(i), hidx))
            for (int c = 0; c < spec_.modules[i].delta; ++c) r.vec[off + c] = 0;
        off += spec_.modules[i].delta;
    }
    return r;
}

FastClosure StructuredOps::fast_mi_closure(const StructuredElement& x) const {
    require_valid(spec_);
    StructuredElement nx = normalize(x);
    long long hidx = h_.encode(nx.hpart);
    FastClosure out;
    out.module_order = module_order(nx);
    out.cyclic_order = out.module_order * h_.order_of(hidx);
    std::ostringstream desc;
    if (h_.generates(hidx)) {
        out.h_generates = true;
        out.c_mask = h_.whole();
        out.closure_order = out.module_order * h_.size();
        out.closed = true;
        desc << "<y>H with |y|=" << out.module_order << ", |H|=" << h_.size();
        out.description = desc.str();
        return out;
    }
    HSpace::Mask c = h_.m_of(hidx);
    out.j_used = j_tilde(nx);
    for (int j : out.j_used) c = HSpace::mask_and(c, kernels_[j]);
    out.c_mask = std::move(c);
    long long c_order = HSpace::mask_order(out.c_mask);
    out.closure_order = out.module_order * c_order;
    out.closed = (c_order == h_.order_of(hidx));
    desc << "<y>C with |y|=" << out.module_order << ", |C|=" << c_order;
    out.description = desc.str();
    return out;
}

CimCheck StructuredOps::fast_is_cim() const {
    require_valid(spec_);
    CimCheck out;
    for (long long hidx = 0; hidx < h_.size(); ++hidx) {
        if (h_.generates(hidx)) continue;
        auto j = j_set(hidx);
        HSpace::Mask c = h_.m_of(hidx);
        long long m_order = HSpace::mask_order(c);
        for (int i : j) c = HSpace::mask_and(c, kernels_[i]);
        long long c_order = HSpace::mask_order(c);
        std::ostringstream line;
        line << "h=" << h_.tuple_str(hidx) << " J={";
        for (std::size_t k = 0; k < j.size(); ++k) {
            if (k) line << ",";
            line << j[k];
        }
        line << "} |M_H(h)|=" << m_order << " |C|=" << c_order
             << " |<h>|=" << h_.order_of(hidx);
        out.audit.push_back(line.str());
        if (c_order != h_.order_of(hidx)) {
            out.is_cim = false;
            out.witness_h = hidx;
            return out;
        }
    }
    return out;
}

std::string StructuredOps::element_str(const StructuredElement& x) const {
    std::ostringstream os;
    os << "[";
    int off = 0;
    for (std::size_t i = 0; i < spec_.modules.size(); ++i) {
        if (i) os << " ";
        os << "(";
        for (int c = 0; c < spec_.modules[i].delta; ++c) {
            if (c) os << ",";
            os << x.vec[off + c];
        }
        os << ")";
        off += spec_.modules[i].delta;
    }
    os << "; h=";
    os << "(";
    for (std::size_t k = 0; k < x.hpart.size(); ++k) {
        if (k) os << ",";
        os << x.hpart[k];
    }
    os << ")]";
    return os.str();
}

} // namespace cimlab
