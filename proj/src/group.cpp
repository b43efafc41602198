#include "cimlab/group.hpp"

#include <algorithm>
#include <sstream>

namespace cimlab {

std::string FiniteGroup::describe_element(const Elem& e) const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ",";
        os << e[i];
    }
    os << ")";
    return os.str();
}

const std::vector<Elem>& FiniteGroup::elements() const {
    std::call_once(enum_once_, [this] {
        std::vector<Elem> out;
        ElemSet seen;
        Elem id = identity();
        seen.insert(id);
        out.push_back(std::move(id));
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (const Elem& g : gens_) {
                Elem x = multiply(out[i], g);
                if (seen.insert(x).second) {
                    if (static_cast<long long>(out.size()) + 1 > cap_)
                        throw EnumerationOverflow(cap_);
                    out.push_back(std::move(x));
                }
            }
        }
        elems_ = std::move(out);
        elem_set_ = std::move(seen);
    });
    return elems_;
}

bool FiniteGroup::contains(const Elem& e) const {
    elements();
    return elem_set_.count(e) > 0;
}

// ---------------------------------------------------------------- perms

PermutationGroup::PermutationGroup(int points, std::vector<Elem> generators,
                                   long long cap)
    : FiniteGroup(cap), points_(points) {
    for (const Elem& g : generators) {
        if (static_cast<int>(g.size()) != points)
            throw UsageError("permutation generator has wrong degree");
        std::vector<bool> hit(points, false);
        for (long long v : g) {
            if (v < 0 || v >= points || hit[v])
                throw UsageError("permutation generator is not a bijection");
            hit[v] = true;
        }
    }
    gens_ = std::move(generators);
}

Elem PermutationGroup::identity() const {
    Elem e(points_);
    for (int i = 0; i < points_; ++i) e[i] = i;
    return e;
}

Elem PermutationGroup::multiply(const Elem& a, const Elem& b) const {
    Elem r(points_);
    for (int i = 0; i < points_; ++i) r[i] = a[b[i]];
    return r;
}

Elem PermutationGroup::inverse(const Elem& a) const {
    Elem r(points_);
    for (int i = 0; i < points_; ++i) r[a[i]] = i;
    return r;
}

std::string PermutationGroup::describe_element(const Elem& e) const {
    return cycles_to_string(e);
}

// -------------------------------------------------------------- abelian

AbelianGroup::AbelianGroup(std::vector<long long> orders, long long cap)
    : FiniteGroup(cap), orders_(std::move(orders)) {
    for (long long d : orders_)
        if (d < 1) throw UsageError("abelian factor order must be positive");
    for (std::size_t k = 0; k < orders_.size(); ++k) {
        Elem g(orders_.size(), 0);
        if (orders_[k] > 1) {
            g[k] = 1;
            gens_.push_back(std::move(g));
        }
    }
    if (gens_.empty()) gens_.push_back(Elem(orders_.size(), 0));
}

Elem AbelianGroup::identity() const { return Elem(orders_.size(), 0); }

Elem AbelianGroup::multiply(const Elem& a, const Elem& b) const {
    Elem r(orders_.size());
    for (std::size_t k = 0; k < orders_.size(); ++k) r[k] = (a[k] + b[k]) % orders_[k];
    return r;
}

Elem AbelianGroup::inverse(const Elem& a) const {
    Elem r(orders_.size());
    for (std::size_t k = 0; k < orders_.size(); ++k) r[k] = (orders_[k] - a[k]) % orders_[k];
    return r;
}

std::string AbelianGroup::describe_element(const Elem& e) const {
    return FiniteGroup::describe_element(e);
}

// ------------------------------------------------------------- subgroup view

SubgroupView::SubgroupView(const FiniteGroup& parent, std::vector<Elem> generators)
    : FiniteGroup(parent.element_cap()), parent_(&parent) {
    gens_ = std::move(generators);
    if (gens_.empty()) gens_.push_back(parent.identity());
}

// ------------------------------------------------------------- regular rep

std::unique_ptr<PermutationGroup> regular_representation(const FiniteGroup& g) {
    const auto& elems = g.elements();
    ElemMap<int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], (int)i);
    int n = static_cast<int>(elems.size());
    std::vector<Elem> gens;
    for (const Elem& s : g.generators()) {
        Elem img(n);
        for (int i = 0; i < n; ++i) img[i] = index.at(g.multiply(s, elems[i]));
        gens.push_back(std::move(img));
    }
    return std::make_unique<PermutationGroup>(n, std::move(gens), g.element_cap());
}

// ------------------------------------------------------------- cycle text

Elem parse_cycles(const std::string& text, int points) {
    Elem perm(points);
    for (int i = 0; i < points; ++i) perm[i] = i;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    };
    skip_ws();
    if (pos == text.size() || text.compare(pos, 2, "()") == 0) return perm;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '(') throw ParseError("expected '(' in cycle notation: " + text);
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
            if (start == pos) throw ParseError("expected point in cycle notation: " + text);
            int v = std::stoi(text.substr(start, pos - start));
            if (v < 0 || v >= points)
                throw ParseError("cycle point " + std::to_string(v) + " out of range");
            cycle.push_back(v);
            skip_ws();
            if (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) ++pos;
        }
        for (std::size_t i = 0; i + 1 < cycle.size(); ++i) perm[cycle[i]] = cycle[i + 1];
        if (cycle.size() > 1) perm[cycle.back()] = cycle.front();
    }
    std::vector<bool> hit(points, false);
    for (long long v : perm) {
        if (hit[v]) throw ParseError("cycles overlap in: " + text);
        hit[v] = true;
    }
    return perm;
}

std::string cycles_to_string(const Elem& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> done(n, false);
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < n; ++i) {
        if (done[i] || perm[i] == i) continue;
        os << "(";
        int j = i;
        bool first = true;
        while (!done[j]) {
            if (!first) os << " ";
            os << j;
            first = false;
            done[j] = true;
            j = static_cast<int>(perm[j]);
        }
        os << ")";
        any = true;
    }
    if (!any) return "()";
    return os.str();
}

} // namespace cimlab
