#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "zafa/char_table.hpp"

namespace zafa {

/// A discrete hypergroup: the convolution of two points is a finitely
/// supported probability measure.  Indices are small integer vectors, so a
/// finite dual (one irreducible index), N0 (one level) and Z^n orbits
/// (canonical representative vector) share the interface.
class DiscreteHypergroup {
public:
    using Index = std::vector<long long>;
    using Measure = std::map<Index, double>;
    using CMeasure = std::map<Index, cplx>;

    virtual ~DiscreteHypergroup() = default;

    virtual std::string name() const = 0;
    virtual Index identity() const = 0;
    virtual Index involution(const Index& a) const = 0;
    virtual Measure convolve(const Index& a, const Index& b) const = 0;

    /// First `budget` indices of the lazily enumerable universe, in a
    /// stable canonical order.
    virtual std::vector<Index> enumerate(int budget) const = 0;

    /// Haar weight 1 / (delta_a * delta_{a*})(e).
    double haar_weight(const Index& a) const;
};

/// Dual hypergroup of a finite group: indices are irreducibles, the
/// convolution comes from the fusion tensor, Haar weights are d_pi^2.
std::unique_ptr<DiscreteHypergroup> dual_of_group(TablePtr table);

/// The polynomial hypergroup on N0 with
/// delta_n * delta_m = 1/2 (delta_{|n-m|} + delta_{n+m}).
std::unique_ptr<DiscreteHypergroup> polynomial_N0();

/// Orbit hypergroup Z^n / F for a finite group F of unimodular integer
/// matrices.  Convolution expands orbits into exact integer point counts
/// and re-averages; coefficients become floats only at the interface.
/// Throws "invalid orbit group" when F is not closed or not unimodular.
std::unique_ptr<DiscreteHypergroup> orbit_hypergroup(
    int dimension, const std::vector<std::vector<std::vector<long long>>>& F);

/// Bilinear extension of the convolution to finitely supported complex
/// vectors, the product of the hypergroup algebra l1(H).
DiscreteHypergroup::CMeasure ell1_convolve(const DiscreteHypergroup& h,
                                           const DiscreteHypergroup::CMeasure& f,
                                           const DiscreteHypergroup::CMeasure& g);

double ell1_norm(const DiscreteHypergroup::CMeasure& f);

struct HypergroupCheck {
    int points = 0;
    int triples = 0;
    double max_probability_residual = 0.0;    // |sum of weights - 1|
    double min_coefficient = 0.0;             // most negative weight seen
    double max_identity_deviation = 0.0;      // delta_e * delta_a vs delta_a
    double max_associativity_deviation = 0.0; // sampled triples
};

/// Checks the hypergroup axioms over the first `points` universe indices
/// and up to `max_triples` sampled triples.
HypergroupCheck verify_hypergroup(const DiscreteHypergroup& h, int points,
                                  int max_triples, std::uint64_t seed = 7);

}  // namespace zafa
