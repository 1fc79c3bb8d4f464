#include "zafa/char_table.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace zafa {

std::uint64_t CharacterTable::content_hash() const {
    std::uint64_t h = fnv1a64_u32(static_cast<std::uint32_t>(k), 0xcbf29ce484222325ull);
    h = fnv1a64(&group_order, sizeof(group_order), h);
    h = fnv1a64(degrees.data(), degrees.size() * sizeof(int), h);
    h = fnv1a64(class_sizes.data(), class_sizes.size() * sizeof(std::int64_t), h);
    h = fnv1a64(values.data(), values.size() * sizeof(cplx), h);
    return h;
}

namespace {

std::int64_t round6(double x) { return std::llround(x * 1e6); }

// canonical row order: the trivial character first, then degree ascending,
// then values per class compared by rounded (re, im) descending
void sort_rows(CharacterTable& ct) {
    const int k = ct.k;
    auto is_trivial = [&](int r) {
        if (ct.degrees[r] != 1) return false;
        for (int j = 0; j < k; ++j)
            if (std::abs(ct.at(r, j) - cplx(1.0)) > 1e-6) return false;
        return true;
    };
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        if (ct.degrees[a] != ct.degrees[b]) return ct.degrees[a] < ct.degrees[b];
        for (int j = 0; j < k; ++j) {
            const cplx va = ct.at(a, j), vb = ct.at(b, j);
            const auto ra = round6(va.real()), rb = round6(vb.real());
            if (ra != rb) return ra > rb;
            const auto ia = round6(va.imag()), ib = round6(vb.imag());
            if (ia != ib) return ia > ib;
        }
        return false;
    });
    std::vector<int> deg(k);
    std::vector<cplx> vals(ct.values.size());
    for (int r = 0; r < k; ++r) {
        deg[r] = ct.degrees[order[r]];
        for (int j = 0; j < k; ++j)
            vals[static_cast<std::size_t>(r) * k + j] = ct.at(order[r], j);
    }
    ct.degrees = std::move(deg);
    ct.values = std::move(vals);
}

}  // namespace

double orthogonality_residual(const CharacterTable& ct) {
    const int k = ct.k;
    const double n = static_cast<double>(ct.group_order);
    double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (int p = 0; p < k; ++p) {
        for (int q = 0; q < k; ++q) {
            cplx row = 0.0, col = 0.0;
            for (int j = 0; j < k; ++j) {
                row += static_cast<double>(ct.class_sizes[j]) * ct.at(p, j) * std::conj(ct.at(q, j));
                col += ct.at(j, p) * std::conj(ct.at(j, q));
            }
            const double dlt = (p == q) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(row / n - dlt));
            worst = std::max(worst, std::abs(col * (static_cast<double>(ct.class_sizes[p]) / n) - dlt));
        }
    }
    return worst;
}

CharacterTable compute_character_table(const FiniteGroup& g, const ConjugacyData& cd,
                                       const ClassConstants& cc,
                                       const CharTableOptions& opt) {
    const int k = cd.k();
    const std::int64_t n = g.order();

    std::vector<Eigen::MatrixXd> class_mats(k, Eigen::MatrixXd(k, k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int m = 0; m < k; ++m)
                class_mats[i](j, m) = static_cast<double>(cc.at(i, j, m));

    bool saw_cluster_failure = false;
    for (int attempt = 0; attempt < opt.max_retries; ++attempt) {
        std::uint64_t state = opt.seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(attempt);
        Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(k, k);
        for (int i = 0; i < k; ++i) combo += (1.0 + uniform01(state)) * class_mats[i];

        Eigen::EigenSolver<Eigen::MatrixXd> es(combo);
        if (es.info() != Eigen::Success) {
            saw_cluster_failure = true;
            continue;
        }
        const auto eigenvalues = es.eigenvalues();
        double scale = 1.0;
        for (int i = 0; i < k; ++i) scale = std::max(scale, std::abs(eigenvalues[i]));
        double min_gap = std::numeric_limits<double>::infinity();
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                min_gap = std::min(min_gap, std::abs(eigenvalues[i] - eigenvalues[j]));
        if (k > 1 && min_gap < 1e-7 * scale) {
            saw_cluster_failure = true;
            continue;
        }

        CharacterTable ct;
        ct.k = k;
        ct.group_order = n;
        ct.class_sizes = cd.sizes;
        ct.group_hash = g.hash();
        ct.group_label = g.label();
        ct.degrees.assign(k, 0);
        ct.values.assign(static_cast<std::size_t>(k) * k, 0.0);

        const auto vectors = es.eigenvectors();
        bool ok = true;
        std::int64_t degree_sq_sum = 0;
        for (int r = 0; r < k && ok; ++r) {
            const cplx lead = vectors(0, r);
            if (std::abs(lead) < 1e-12) { ok = false; break; }
            double weight = 0.0;
            for (int j = 0; j < k; ++j) {
                const double a = std::abs(vectors(j, r) / lead);
                weight += a * a / static_cast<double>(cd.sizes[j]);
            }
            const double d_raw = std::sqrt(static_cast<double>(n) / weight);
            const std::int64_t d_int = std::llround(d_raw);
            if (d_int < 1 || std::abs(d_raw - static_cast<double>(d_int)) > opt.integrality_tol) {
                ok = false;
                break;
            }
            degree_sq_sum += d_int * d_int;
            ct.degrees[r] = static_cast<int>(d_int);
            for (int j = 0; j < k; ++j)
                ct.values[static_cast<std::size_t>(r) * k + j] =
                    static_cast<double>(d_int) * (vectors(j, r) / lead) /
                    static_cast<double>(cd.sizes[j]);
        }
        if (!ok || degree_sq_sum != n) continue;

        sort_rows(ct);
        if (orthogonality_residual(ct) > opt.orthogonality_tol) continue;
        return ct;
    }
    throw std::runtime_error(saw_cluster_failure ? "degenerate spectrum"
                                                 : "table verification failed");
}

CharacterTable compute_character_table(const FiniteGroup& g, const CharTableOptions& opt) {
    const ConjugacyData cd = conjugacy_classes(g);
    const ClassConstants cc = class_constants(g, cd, opt.exec);
    return compute_character_table(g, cd, cc, opt);
}

int conjugate_row(const CharacterTable& ct, int pi) {
    const int k = ct.k;
    for (int r = 0; r < k; ++r) {
        if (ct.degrees[r] != ct.degrees[pi]) continue;
        double dev = 0.0;
        for (int j = 0; j < k; ++j)
            dev = std::max(dev, std::abs(ct.at(r, j) - std::conj(ct.at(pi, j))));
        if (dev < 1e-8) return r;
    }
    throw std::logic_error("conjugate character not found");
}

CharacterTable kronecker_table(const CharacterTable& g, const CharacterTable& h) {
    CharacterTable ct;
    ct.k = g.k * h.k;
    ct.group_order = g.group_order * h.group_order;
    ct.group_label = g.group_label + "x" + h.group_label;
    ct.group_hash = fnv1a64(&h.group_hash, sizeof(h.group_hash),
                            fnv1a64(&g.group_hash, sizeof(g.group_hash), 0x6b726f6eull));
    ct.class_sizes.resize(ct.k);
    ct.degrees.resize(ct.k);
    ct.values.resize(static_cast<std::size_t>(ct.k) * ct.k);
    for (int i = 0; i < g.k; ++i)
        for (int j = 0; j < h.k; ++j)
            ct.class_sizes[i * h.k + j] = g.class_sizes[i] * h.class_sizes[j];
    for (int p = 0; p < g.k; ++p)
        for (int q = 0; q < h.k; ++q) {
            const int row = p * h.k + q;
            ct.degrees[row] = g.degrees[p] * h.degrees[q];
            for (int i = 0; i < g.k; ++i)
                for (int j = 0; j < h.k; ++j)
                    ct.values[static_cast<std::size_t>(row) * ct.k + i * h.k + j] =
                        g.at(p, i) * h.at(q, j);
        }
    sort_rows(ct);
    return ct;
}

std::vector<int> characters_through_quotient(const FiniteGroup& g,
                                             const ConjugacyData& cd,
                                             const CharacterTable& ct,
                                             const std::vector<int>& normal_subgroup,
                                             double tol) {
    const int n = g.order();
    std::vector<char> member(n, 0);
    for (int x : normal_subgroup) {
        if (x < 0 || x >= n) throw std::runtime_error("invalid normal subgroup");
        member[x] = 1;
    }
    if (!member[g.identity()]) throw std::runtime_error("invalid normal subgroup");
    for (int x : normal_subgroup) {
        if (!member[g.inverse(x)]) throw std::runtime_error("invalid normal subgroup");
        for (int y : normal_subgroup)
            if (!member[g.multiply(x, y)]) throw std::runtime_error("invalid normal subgroup");
        for (int s = 0; s < n; ++s)
            if (!member[g.multiply(g.multiply(s, x), g.inverse(s))])
                throw std::runtime_error("invalid normal subgroup");
    }

    std::vector<int> rows;
    for (int p = 0; p < ct.k; ++p) {
        bool fixes = true;
        for (int x : normal_subgroup) {
            if (std::abs(ct.at(p, cd.class_of[x]) - cplx(ct.degrees[p], 0.0)) > tol * ct.degrees[p]) {
                fixes = false;
                break;
            }
        }
        if (fixes) rows.push_back(p);
    }
    return rows;
}

}  // namespace zafa
