#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "zafa/group.hpp"
#include "zafa/numeric.hpp"

namespace zafa {

/// The complex irreducible character table of a finite group.
///
/// Rows are irreducibles in canonical order (degree, then lexicographic on
/// values rounded to 6 decimals); columns follow the ConjugacyData class
/// order.  The first row is the trivial character and the first column is
/// the degrees column.
struct CharacterTable {
    int k = 0;
    std::int64_t group_order = 1;
    std::vector<int> degrees;               // d_pi, snapped to integers
    std::vector<std::int64_t> class_sizes;  // |C_j|
    std::vector<cplx> values;               // row-major k*k, values[pi*k + j]
    std::uint64_t group_hash = 0;
    std::string group_label;

    cplx at(int pi, int j) const { return values[static_cast<std::size_t>(pi) * k + j]; }

    /// Hash of the table contents (used to match serialized coefficients
    /// and to detect mixed-table arithmetic).
    std::uint64_t content_hash() const;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

struct CharTableOptions {
    double orthogonality_tol = 1e-8;
    double integrality_tol = 1e-6;
    int max_retries = 8;
    std::uint64_t seed = 0x5afa0001u;
    Exec exec = Exec::parallel;
};

/// Class-matrix eigenvector method: a random real combination of the class
/// multiplication matrices is diagonalized, each eigenvector normalized to
/// v[0] = 1 yields a column of central-character values, and characters are
/// recovered via chi(C_j) = d * v[j] / |C_j|.  Throws "degenerate spectrum"
/// when no random combination separates the eigenvalues within the retry
/// budget, "table verification failed" when orthogonality residuals stay
/// above tolerance.
CharacterTable compute_character_table(const FiniteGroup& g, const ConjugacyData& cd,
                                       const ClassConstants& cc,
                                       const CharTableOptions& opt = {});
CharacterTable compute_character_table(const FiniteGroup& g,
                                       const CharTableOptions& opt = {});

/// Max deviation over the row and column Schur orthogonality relations.
double orthogonality_residual(const CharacterTable& ct);

/// Row index of the conjugate character (the row whose values are the
/// complex conjugates of row pi).
int conjugate_row(const CharacterTable& ct, int pi);

/// Table of G x H assembled from the factor tables: classes are pairs of
/// classes (row-major, H fastest), characters are Kronecker products.
CharacterTable kronecker_table(const CharacterTable& g, const CharacterTable& h);

/// Rows whose character contains N in its kernel, i.e. chi(n) = d for every
/// n in N: exactly the characters of G/N pulled back.  Verifies that N is a
/// normal subgroup and throws "invalid normal subgroup" otherwise.
std::vector<int> characters_through_quotient(const FiniteGroup& g,
                                             const ConjugacyData& cd,
                                             const CharacterTable& ct,
                                             const std::vector<int>& normal_subgroup,
                                             double tol = 1e-8);

}  // namespace zafa
