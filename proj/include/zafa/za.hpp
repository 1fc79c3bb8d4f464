#pragma once

#include <map>
#include <memory>

#include "zafa/char_table.hpp"

namespace zafa {

/// Element of the central Fourier algebra of a finite group: a finitely
/// supported coefficient vector over the irreducibles of an ambient table,
/// normed by sum_pi d_pi * |alpha_pi|.
class CentralElement {
public:
    CentralElement() = default;
    explicit CentralElement(TablePtr table) : table_(std::move(table)) {}

    /// The basis character chi_pi.
    static CentralElement character(TablePtr table, int pi) {
        CentralElement u(std::move(table));
        u.set(pi, 1.0);
        return u;
    }

    const TablePtr& table() const { return table_; }
    const std::map<int, cplx>& coeffs() const { return coeffs_; }

    cplx coeff(int pi) const {
        auto it = coeffs_.find(pi);
        return it == coeffs_.end() ? cplx(0.0) : it->second;
    }

    CentralElement& set(int pi, cplx alpha) {
        if (alpha == cplx(0.0))
            coeffs_.erase(pi);
        else
            coeffs_[pi] = alpha;
        return *this;
    }

    CentralElement& add(int pi, cplx alpha) { return set(pi, coeff(pi) + alpha); }

private:
    TablePtr table_;
    std::map<int, cplx> coeffs_;
};

double za_norm(const CentralElement& u);

/// A class function, one complex value per conjugacy class.
struct ClassFunction {
    std::vector<cplx> values;
};

/// Tensor-product multiplicities m(pi,pi';sigma) of chi_pi * chi_pi'.
struct FusionTensor {
    int k = 0;
    std::vector<std::vector<std::pair<int, int>>> m;  // (sigma, multiplicity), sigma ascending

    const std::vector<std::pair<int, int>>& at(int pi, int pj) const {
        return m[static_cast<std::size_t>(pi) * k + pj];
    }
};

/// Multiplicities via the class-sum inner product
/// (1/|G|) sum_j |C_j| chi_pi chi_pi' conj(chi_sigma), rounded to integers.
/// Throws "non-integral multiplicity" when a rounding residual exceeds the
/// tolerance or the dimension count fails.
FusionTensor fusion_tensor(const CharacterTable& ct, double integrality_tol = 1e-6);

/// Memoized fusion tensor, computed once per table contents.
std::shared_ptr<const FusionTensor> fusion_of(const TablePtr& table);

/// Algebra product of ZA(G), the bilinear extension of the fusion tensor.
/// Throws "mismatched tables" when the ambient tables differ.
CentralElement multiply(const CentralElement& u, const CentralElement& v);

/// Hypergroup convolution on weights over the dual:
/// delta_pi * delta_pi' = sum_sigma m(pi,pi';sigma) d_sigma/(d_pi d_pi') delta_sigma.
std::map<int, double> hypergroup_convolve(const TablePtr& table,
                                          const std::map<int, double>& p,
                                          const std::map<int, double>& q);

ClassFunction to_class_function(const CentralElement& u);
CentralElement from_class_function(TablePtr table, const ClassFunction& f);

/// Conjugation average (1/|G|) sum_s F(s x s^{-1}) of an arbitrary function
/// on the group, evaluated per class.
ClassFunction central_projection(const FiniteGroup& g, const ConjugacyData& cd,
                                 const std::vector<cplx>& values_on_elements);

/// The indicator of the diagonal conjugation classes inside G x G, as a
/// coefficient vector over pairs of irreducibles.  coeffs[pi*k + pj] is
/// attached to the basis element conj-character(pi) (x) character(pj).
struct DiagonalElement {
    TablePtr table;
    std::vector<cplx> coeffs;

    cplx at(int pi, int pj) const {
        return coeffs[static_cast<std::size_t>(pi) * table->k + pj];
    }
};

DiagonalElement diagonal_element(TablePtr table);

/// ZA(G x G) norm of the diagonal: sum d_pi d_pi' |coeff|.
double za_norm(const DiagonalElement& d);

/// Value of the diagonal element at a point of C_i x C_j; 1 when i == j and
/// 0 otherwise, up to roundoff.
cplx evaluate_diagonal(const DiagonalElement& d, int class_i, int class_j);

/// Quotient projection: keeps exactly the coefficients of characters that
/// factor through G/N and zeroes the rest.  Contractive in the ZA norm and
/// idempotent.  Throws "invalid normal subgroup" when N is not one.
CentralElement project_PN(const CentralElement& u, const FiniteGroup& g,
                          const ConjugacyData& cd, const std::vector<int>& N);

}  // namespace zafa
