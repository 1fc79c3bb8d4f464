#include "zafa/hypergroup.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "zafa/za.hpp"

namespace zafa {

double DiscreteHypergroup::haar_weight(const Index& a) const {
    const Measure m = convolve(a, involution(a));
    const auto it = m.find(identity());
    if (it == m.end() || it->second <= 0.0)
        throw std::logic_error("convolution misses the identity");
    return 1.0 / it->second;
}

namespace {

class DualHypergroup final : public DiscreteHypergroup {
public:
    explicit DualHypergroup(TablePtr table) : table_(std::move(table)) {}

    std::string name() const override { return "dual(" + table_->group_label + ")"; }
    Index identity() const override { return {0}; }

    Index involution(const Index& a) const override {
        return {conjugate_row(*table_, static_cast<int>(a.at(0)))};
    }

    Measure convolve(const Index& a, const Index& b) const override {
        std::map<int, double> pa{{static_cast<int>(a.at(0)), 1.0}};
        std::map<int, double> pb{{static_cast<int>(b.at(0)), 1.0}};
        Measure out;
        for (const auto& [s, w] : hypergroup_convolve(table_, pa, pb)) out[{s}] = w;
        return out;
    }

    std::vector<Index> enumerate(int budget) const override {
        std::vector<Index> out;
        for (int p = 0; p < std::min(budget, table_->k); ++p) out.push_back({p});
        return out;
    }

private:
    TablePtr table_;
};

class PolynomialN0 final : public DiscreteHypergroup {
public:
    std::string name() const override { return "poly-n0"; }
    Index identity() const override { return {0}; }
    Index involution(const Index& a) const override { return a; }

    Measure convolve(const Index& a, const Index& b) const override {
        const long long n = a.at(0), m = b.at(0);
        const long long lo = std::llabs(n - m), hi = n + m;
        if (lo == hi) return {{{hi}, 1.0}};  // one factor is delta_0
        return {{{lo}, 0.5}, {{hi}, 0.5}};
    }

    std::vector<Index> enumerate(int budget) const override {
        std::vector<Index> out;
        for (long long i = 0; i < budget; ++i) out.push_back({i});
        return out;
    }
};

using IMatrix = std::vector<std::vector<long long>>;
using IVector = std::vector<long long>;

IVector apply(const IMatrix& m, const IVector& v) {
    IVector out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

IMatrix matmul(const IMatrix& a, const IMatrix& b) {
    const std::size_t n = a.size();
    IMatrix out(n, IVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][l] * b[l][j];
    return out;
}

// Bareiss fraction-free elimination, exact in integers
long long int_determinant(IMatrix m) {
    const std::size_t n = m.size();
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

class OrbitHypergroup final : public DiscreteHypergroup {
public:
    OrbitHypergroup(int dimension, std::vector<IMatrix> group)
        : dim_(dimension), group_(std::move(group)) {}

    std::string name() const override {
        return "orbit(Z^" + std::to_string(dim_) + "/F" + std::to_string(group_.size()) + ")";
    }

    Index identity() const override { return Index(dim_, 0); }

    Index involution(const Index& a) const override {
        IVector neg(a);
        for (auto& x : neg) x = -x;
        return orbit_rep(neg);
    }

    Measure convolve(const Index& a, const Index& b) const override {
        std::map<IVector, long long> counts;
        for (const auto& alpha : group_) {
            const IVector va = apply(alpha, a);
            for (const auto& beta : group_) {
                IVector sum = apply(beta, b);
                for (int i = 0; i < dim_; ++i) sum[i] += va[i];
                ++counts[sum];
            }
        }
        const double denom = static_cast<double>(group_.size()) * group_.size();
        Measure out;
        std::map<IVector, long long> orbit_totals;
        for (const auto& [point, c] : counts) orbit_totals[orbit_rep(point)] += c;
        for (const auto& [rep, total] : orbit_totals)
            out[rep] = static_cast<double>(total) / denom;
        return out;
    }

    std::vector<Index> enumerate(int budget) const override {
        std::vector<Index> out;
        std::set<Index> seen;
        for (long long radius = 0; static_cast<int>(out.size()) < budget; ++radius) {
            std::vector<IVector> shell;
            IVector v(dim_, -radius);
            // lexicographic walk over the max-norm ball, keeping the shell
            while (true) {
                long long norm = 0;
                for (long long x : v) norm = std::max(norm, std::llabs(x));
                if (norm == radius) shell.push_back(v);
                int i = dim_ - 1;
                while (i >= 0 && v[i] == radius) v[i--] = -radius;
                if (i < 0) break;
                ++v[i];
            }
            for (const auto& p : shell) {
                const Index rep = orbit_rep(p);
                if (seen.insert(rep).second) {
                    out.push_back(rep);
                    if (static_cast<int>(out.size()) == budget) break;
                }
            }
            if (radius > 1000) break;  // safety for pathological budgets
        }
        return out;
    }

    Index orbit_rep(const IVector& v) const {
        IVector best = apply(group_[0], v);
        for (std::size_t i = 1; i < group_.size(); ++i)
            best = std::min(best, apply(group_[i], v));
        return best;
    }

private:
    int dim_;
    std::vector<IMatrix> group_;
};

}  // namespace

std::unique_ptr<DiscreteHypergroup> dual_of_group(TablePtr table) {
    return std::make_unique<DualHypergroup>(std::move(table));
}

std::unique_ptr<DiscreteHypergroup> polynomial_N0() {
    return std::make_unique<PolynomialN0>();
}

std::unique_ptr<DiscreteHypergroup> orbit_hypergroup(
    int dimension, const std::vector<std::vector<std::vector<long long>>>& F) {
    if (dimension <= 0 || F.empty()) throw std::runtime_error("invalid orbit group");
    std::set<IMatrix> members;
    for (const auto& m : F) {
        if (static_cast<int>(m.size()) != dimension) throw std::runtime_error("invalid orbit group");
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != dimension)
                throw std::runtime_error("invalid orbit group");
        const long long det = int_determinant(m);
        if (det != 1 && det != -1) throw std::runtime_error("invalid orbit group");
        members.insert(m);
    }
    for (const auto& a : members)
        for (const auto& b : members)
            if (!members.contains(matmul(a, b))) throw std::runtime_error("invalid orbit group");

    std::vector<IMatrix> group(members.begin(), members.end());
    return std::make_unique<OrbitHypergroup>(dimension, std::move(group));
}

DiscreteHypergroup::CMeasure ell1_convolve(const DiscreteHypergroup& h,
                                           const DiscreteHypergroup::CMeasure& f,
                                           const DiscreteHypergroup::CMeasure& g) {
    DiscreteHypergroup::CMeasure out;
    for (const auto& [a, fa] : f)
        for (const auto& [b, gb] : g)
            for (const auto& [idx, w] : h.convolve(a, b)) out[idx] += fa * gb * w;
    return out;
}

double ell1_norm(const DiscreteHypergroup::CMeasure& f) {
    KahanSum acc;
    for (const auto& [idx, v] : f) acc.add(std::abs(v));
    return acc.value();
}

HypergroupCheck verify_hypergroup(const DiscreteHypergroup& h, int points,
                                  int max_triples, std::uint64_t seed) {
    HypergroupCheck chk;
    const std::vector<DiscreteHypergroup::Index> universe = h.enumerate(points);
    chk.points = static_cast<int>(universe.size());
    if (universe.empty()) return chk;

    const auto e = h.identity();
    for (const auto& a : universe) {
        // identity axiom
        DiscreteHypergroup::Measure unit = h.convolve(e, a);
        double dev = 0.0;
        for (const auto& [idx, w] : unit) dev += std::abs(w - (idx == a ? 1.0 : 0.0));
        if (!unit.contains(a)) dev += 1.0;
        chk.max_identity_deviation = std::max(chk.max_identity_deviation, dev);

        for (const auto& b : universe) {
            const DiscreteHypergroup::Measure m = h.convolve(a, b);
            double sum = 0.0;
            for (const auto& [idx, w] : m) {
                sum += w;
                chk.min_coefficient = std::min(chk.min_coefficient, w);
            }
            chk.max_probability_residual =
                std::max(chk.max_probability_residual, std::abs(sum - 1.0));
        }
    }

    // sampled associativity, expanded through the measure-level convolution
    auto convolve_measure_right = [&](const DiscreteHypergroup::Measure& m,
                                      const DiscreteHypergroup::Index& c) {
        DiscreteHypergroup::Measure out;
        for (const auto& [x, w] : m)
            for (const auto& [idx, v] : h.convolve(x, c)) out[idx] += w * v;
        return out;
    };
    auto convolve_measure_left = [&](const DiscreteHypergroup::Index& a,
                                     const DiscreteHypergroup::Measure& m) {
        DiscreteHypergroup::Measure out;
        for (const auto& [x, w] : m)
            for (const auto& [idx, v] : h.convolve(a, x)) out[idx] += w * v;
        return out;
    };

    const std::int64_t total =
        static_cast<std::int64_t>(universe.size()) * universe.size() * universe.size();
    const std::int64_t triples = std::min<std::int64_t>(max_triples, total);
    chk.triples = static_cast<int>(triples);
    double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(dynamic, 16)
    for (std::int64_t t = 0; t < triples; ++t) {
        std::uint64_t state = seed + static_cast<std::uint64_t>(t) * 0x9e3779b97f4a7c15ull;
        const auto& a = universe[splitmix64(state) % universe.size()];
        const auto& b = universe[splitmix64(state) % universe.size()];
        const auto& c = universe[splitmix64(state) % universe.size()];
        const auto lhs = convolve_measure_right(h.convolve(a, b), c);
        const auto rhs = convolve_measure_left(a, h.convolve(b, c));
        double dev = 0.0;
        for (const auto& [idx, w] : lhs) {
            const auto it = rhs.find(idx);
            dev = std::max(dev, std::abs(w - (it == rhs.end() ? 0.0 : it->second)));
        }
        for (const auto& [idx, w] : rhs)
            if (!lhs.contains(idx)) dev = std::max(dev, std::abs(w));
        worst = std::max(worst, dev);
    }
    chk.max_associativity_deviation = worst;
    return chk;
}

}  // namespace zafa
