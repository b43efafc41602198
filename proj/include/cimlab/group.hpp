#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cimlab/elem.hpp"
#include "cimlab/errors.hpp"

namespace cimlab {

enum class Realization { Permutation, Abelian, Structured };

inline constexpr long long kDefaultElementCap = 2'000'000;

/// A finite group given by generators with lazily enumerated elements.
///
/// Concrete realizations supply identity/product/inverse on payloads;
/// everything else (enumeration, membership, order) is generic. Instances
/// are immutable after construction apart from the write-once element
/// cache, so they can be shared read-only across workers.
class FiniteGroup {
public:
    virtual ~FiniteGroup() = default;

    virtual Realization realization() const = 0;
    virtual Elem identity() const = 0;
    virtual Elem multiply(const Elem& a, const Elem& b) const = 0;
    virtual Elem inverse(const Elem& a) const = 0;
    virtual std::string describe_element(const Elem& e) const;

    const std::vector<Elem>& generators() const { return gens_; }
    long long element_cap() const { return cap_; }

    /// Breadth-first closure of the generators; throws EnumerationOverflow
    /// past the cap. The result is cached.
    const std::vector<Elem>& elements() const;
    long long order() const { return static_cast<long long>(elements().size()); }
    bool contains(const Elem& e) const;

protected:
    explicit FiniteGroup(long long cap = kDefaultElementCap) : cap_(cap) {}

    std::vector<Elem> gens_;
    long long cap_;

private:
    mutable std::once_flag enum_once_;
    mutable std::vector<Elem> elems_;
    mutable ElemSet elem_set_;
};

/// Permutations of {0, ..., n-1} stored as image vectors;
/// (a*b)(x) = a(b(x)).
class PermutationGroup final : public FiniteGroup {
public:
    PermutationGroup(int points, std::vector<Elem> generators,
                     long long cap = kDefaultElementCap);

    Realization realization() const override { return Realization::Permutation; }
    Elem identity() const override;
    Elem multiply(const Elem& a, const Elem& b) const override;
    Elem inverse(const Elem& a) const override;
    std::string describe_element(const Elem& e) const override;

    int points() const { return points_; }

private:
    int points_;
};

/// Direct product of cyclic groups C_{orders[0]} x ...; payload = residues.
class AbelianGroup final : public FiniteGroup {
public:
    explicit AbelianGroup(std::vector<long long> orders,
                          long long cap = kDefaultElementCap);

    Realization realization() const override { return Realization::Abelian; }
    Elem identity() const override;
    Elem multiply(const Elem& a, const Elem& b) const override;
    Elem inverse(const Elem& a) const override;
    std::string describe_element(const Elem& e) const override;

    const std::vector<long long>& factor_orders() const { return orders_; }

private:
    std::vector<long long> orders_;
};

/// A subgroup treated as a group in its own right: arithmetic delegates to
/// the parent, enumeration closes over the given generators. The parent
/// must outlive the view.
class SubgroupView final : public FiniteGroup {
public:
    SubgroupView(const FiniteGroup& parent, std::vector<Elem> generators);

    Realization realization() const override { return parent_->realization(); }
    Elem identity() const override { return parent_->identity(); }
    Elem multiply(const Elem& a, const Elem& b) const override {
        return parent_->multiply(a, b);
    }
    Elem inverse(const Elem& a) const override { return parent_->inverse(a); }
    std::string describe_element(const Elem& e) const override {
        return parent_->describe_element(e);
    }

    const FiniteGroup& parent() const { return *parent_; }

private:
    const FiniteGroup* parent_;
};

/// Left regular representation on the element indices of G.
std::unique_ptr<PermutationGroup> regular_representation(const FiniteGroup& g);

/// Cycle notation helpers for permutation payloads (0-based points).
Elem parse_cycles(const std::string& text, int points);
std::string cycles_to_string(const Elem& perm);

} // namespace cimlab
