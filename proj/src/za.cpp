#include "zafa/za.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace zafa {

namespace {

void require_same_table(const TablePtr& a, const TablePtr& b) {
    if (a == b) return;
    if (!a || !b || a->content_hash() != b->content_hash())
        throw std::runtime_error("mismatched tables");
}

}  // namespace

double za_norm(const CentralElement& u) {
    KahanSum acc;
    for (const auto& [pi, alpha] : u.coeffs())
        acc.add(u.table()->degrees[pi] * std::abs(alpha));
    return acc.value();
}

FusionTensor fusion_tensor(const CharacterTable& ct, double integrality_tol) {
    const int k = ct.k;
    FusionTensor ft;
    ft.k = k;
    ft.m.resize(static_cast<std::size_t>(k) * k);
    const double n = static_cast<double>(ct.group_order);
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            auto& entry = ft.m[static_cast<std::size_t>(p) * k + q];
            std::int64_t dim = 0;
            for (int s = 0; s < k; ++s) {
                cplx v = 0.0;
                for (int j = 0; j < k; ++j)
                    v += static_cast<double>(ct.class_sizes[j]) * ct.at(p, j) * ct.at(q, j) *
                         std::conj(ct.at(s, j));
                v /= n;
                const std::int64_t mult = std::llround(v.real());
                if (mult < 0 || std::abs(v - cplx(static_cast<double>(mult), 0.0)) > integrality_tol)
                    throw std::runtime_error("non-integral multiplicity");
                if (mult > 0) {
                    entry.emplace_back(s, static_cast<int>(mult));
                    dim += mult * ct.degrees[s];
                }
            }
            if (dim != static_cast<std::int64_t>(ct.degrees[p]) * ct.degrees[q])
                throw std::runtime_error("non-integral multiplicity");
        }
    return ft;
}

std::shared_ptr<const FusionTensor> fusion_of(const TablePtr& table) {
    static std::mutex mutex;
    static std::unordered_map<std::uint64_t, std::shared_ptr<const FusionTensor>> cache;
    const std::uint64_t key = table->content_hash();
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto ft = std::make_shared<const FusionTensor>(fusion_tensor(*table));
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, std::move(ft)).first->second;
}

CentralElement multiply(const CentralElement& u, const CentralElement& v) {
    require_same_table(u.table(), v.table());
    const auto ft = fusion_of(u.table());
    CentralElement out(u.table());
    for (const auto& [p, alpha] : u.coeffs())
        for (const auto& [q, beta] : v.coeffs())
            for (const auto& [sigma, mult] : ft->at(p, q))
                out.add(sigma, alpha * beta * static_cast<double>(mult));
    return out;
}

std::map<int, double> hypergroup_convolve(const TablePtr& table,
                                          const std::map<int, double>& p,
                                          const std::map<int, double>& q) {
    const auto ft = fusion_of(table);
    std::map<int, double> out;
    for (const auto& [a, pa] : p)
        for (const auto& [b, qb] : q) {
            const double scale = pa * qb / (static_cast<double>(table->degrees[a]) * table->degrees[b]);
            for (const auto& [sigma, mult] : ft->at(a, b))
                out[sigma] += scale * mult * table->degrees[sigma];
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0.0; });
    return out;
}

ClassFunction to_class_function(const CentralElement& u) {
    const CharacterTable& ct = *u.table();
    ClassFunction f;
    f.values.assign(ct.k, 0.0);
    for (const auto& [pi, alpha] : u.coeffs())
        for (int j = 0; j < ct.k; ++j) f.values[j] += alpha * ct.at(pi, j);
    return f;
}

CentralElement from_class_function(TablePtr table, const ClassFunction& f) {
    const CharacterTable& ct = *table;
    if (static_cast<int>(f.values.size()) != ct.k)
        throw std::invalid_argument("class function has wrong length");
    CentralElement u(table);
    for (int pi = 0; pi < ct.k; ++pi) {
        cplx alpha = 0.0;
        for (int j = 0; j < ct.k; ++j)
            alpha += static_cast<double>(ct.class_sizes[j]) * f.values[j] * std::conj(ct.at(pi, j));
        u.set(pi, alpha / static_cast<double>(ct.group_order));
    }
    return u;
}

ClassFunction central_projection(const FiniteGroup& g, const ConjugacyData& cd,
                                 const std::vector<cplx>& values_on_elements) {
    const int n = g.order();
    if (static_cast<int>(values_on_elements.size()) != n)
        throw std::invalid_argument("function has wrong length");
    ClassFunction f;
    f.values.assign(cd.k(), 0.0);
    for (int j = 0; j < cd.k(); ++j) {
        const int x = cd.representatives[j];
        cplx sum = 0.0;
        for (int s = 0; s < n; ++s)
            sum += values_on_elements[g.multiply(g.multiply(s, x), g.inverse(s))];
        f.values[j] = sum / static_cast<double>(n);
    }
    return f;
}

DiagonalElement diagonal_element(TablePtr table) {
    const CharacterTable& ct = *table;
    const int k = ct.k;
    DiagonalElement d;
    d.table = std::move(table);
    d.coeffs.assign(static_cast<std::size_t>(k) * k, 0.0);
    const double n2 = static_cast<double>(ct.group_order) * static_cast<double>(ct.group_order);
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            cplx c = 0.0;
            for (int j = 0; j < k; ++j) {
                const double w = static_cast<double>(ct.class_sizes[j]);
                c += (w * w) * ct.at(p, j) * std::conj(ct.at(q, j));
            }
            d.coeffs[static_cast<std::size_t>(p) * k + q] = c / n2;
        }
    return d;
}

double za_norm(const DiagonalElement& d) {
    const CharacterTable& ct = *d.table;
    KahanSum acc;
    for (int p = 0; p < ct.k; ++p)
        for (int q = 0; q < ct.k; ++q)
            acc.add(static_cast<double>(ct.degrees[p]) * ct.degrees[q] * std::abs(d.at(p, q)));
    return acc.value();
}

cplx evaluate_diagonal(const DiagonalElement& d, int class_i, int class_j) {
    const CharacterTable& ct = *d.table;
    cplx v = 0.0;
    for (int p = 0; p < ct.k; ++p)
        for (int q = 0; q < ct.k; ++q)
            v += d.at(p, q) * std::conj(ct.at(p, class_i)) * ct.at(q, class_j);
    return v;
}

CentralElement project_PN(const CentralElement& u, const FiniteGroup& g,
                          const ConjugacyData& cd, const std::vector<int>& N) {
    const auto rows = characters_through_quotient(g, cd, *u.table(), N);
    std::vector<char> keep(u.table()->k, 0);
    for (int r : rows) keep[r] = 1;
    CentralElement out(u.table());
    for (const auto& [pi, alpha] : u.coeffs())
        if (keep[pi]) out.set(pi, alpha);
    return out;
}

}  // namespace zafa
