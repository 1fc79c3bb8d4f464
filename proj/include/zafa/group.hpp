#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "zafa/numeric.hpp"

namespace zafa {

/// A finite group with elements indexed 0..order-1 and identity at index 0.
///
/// Groups of order <= kDenseCap carry a precomputed multiplication table;
/// larger groups fall back to permutation composition (or componentwise
/// multiplication, for direct products).  Instances are immutable after
/// construction and cheap to copy.
class FiniteGroup {
public:
    static constexpr int kDefaultOrderCap = 20000;
    static constexpr int kDenseCap = 4096;

    FiniteGroup();  // trivial group

    int order() const;
    int identity() const { return 0; }
    int multiply(int a, int b) const;
    int inverse(int a) const;
    const std::string& label() const;

    /// Generator words per element ("e", "a", "ab", ...) when the group was
    /// built by closure and is small enough to keep them; empty otherwise.
    const std::vector<std::string>& element_words() const;

    /// Stable hash of the multiplication structure; computed on first use.
    std::uint64_t hash() const;

    bool is_dense() const;

    /// Closure of permutation generators under composition.  Elements are
    /// enumerated breadth-first from the identity, generators in the given
    /// order, then products in discovery order.  Throws "invalid permutation"
    /// for non-bijective input and "order cap exceeded" if the closure grows
    /// past order_cap.
    static FiniteGroup from_permutation_generators(
        int degree, const std::vector<std::vector<int>>& generators,
        std::string label = "", int order_cap = kDefaultOrderCap);

    /// Componentwise product; element index = g * |H| + h.
    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                      int order_cap = kDefaultOrderCap);

    /// Cyclic group of order n.
    static FiniteGroup cyclic(int n);

    struct Impl;

private:
    explicit FiniteGroup(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

/// Conjugacy classes of a finite group.  The identity class is first; the
/// remaining classes are ordered by (size, smallest element index), and the
/// elements inside a class are sorted ascending.
struct ConjugacyData {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;        // element -> class index
    std::vector<std::int64_t> sizes;  // |C_j|
    std::vector<int> representatives; // smallest element of each class
    std::vector<int> inverse_class;   // j -> j* with C_{j*} = {x^{-1} : x in C_j}

    int k() const { return static_cast<int>(classes.size()); }
};

ConjugacyData conjugacy_classes(const FiniteGroup& g);

/// Class-algebra structure constants: a(i,j,m) counts pairs (x,y) in
/// C_i x C_j with x*y equal to the fixed representative of C_m.
struct ClassConstants {
    int k = 0;
    std::vector<std::int64_t> a;  // (i*k + j)*k + m

    std::int64_t at(int i, int j, int m) const {
        return a[(static_cast<std::size_t>(i) * k + j) * k + m];
    }
};

ClassConstants class_constants(const FiniteGroup& g, const ConjugacyData& cd,
                               Exec exec = Exec::parallel);

/// Catalog lookup: Z<n>, D<n>, S<n> (n<=6), A<n> (n<=6), Q8, and products
/// joined with 'x' such as "S3xZ2".  Throws on unknown names.
FiniteGroup catalog_group(const std::string& name,
                          int order_cap = FiniteGroup::kDefaultOrderCap);

/// The groups exercised by the verification suite.
std::vector<std::string> default_catalog();

bool is_abelian(const FiniteGroup& g);

/// Number of associativity violations; exhaustive when order^3 stays below
/// the given budget, random triples otherwise.
std::int64_t count_associativity_violations(const FiniteGroup& g,
                                            std::int64_t triple_budget = 1LL << 28,
                                            std::uint64_t seed = 1);

/// Number of elements whose class assignment is not conjugation-invariant.
std::int64_t count_conjugation_violations(const FiniteGroup& g,
                                          const ConjugacyData& cd);

}  // namespace zafa
