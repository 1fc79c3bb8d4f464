#include "zafa/group.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "zafa/kernels.hpp"

namespace zafa {

namespace {

using Perm = std::vector<int>;

// multiply(a, b) = "apply a, then b"
Perm compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

Perm invert(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        return static_cast<std::size_t>(
            fnv1a64(p.data(), p.size() * sizeof(int)));
    }
};

std::string generator_letter(std::size_t i) {
    std::string s(1, static_cast<char>('a' + i % 26));
    if (i >= 26) s += std::to_string(i / 26);
    return s;
}

}  // namespace

struct FiniteGroup::Impl {
    enum class Kind { dense, perm, product, cyclic };

    Kind kind = Kind::dense;
    int order = 1;
    std::string label = "Z1";
    std::vector<int> inv{0};
    std::vector<int> table{0};  // dense only, row-major order x order

    // perm backend
    std::vector<Perm> perms;
    std::unordered_map<Perm, int, PermHash> index;

    // product backend
    std::shared_ptr<const Impl> left, right;

    std::vector<std::string> words;

    mutable std::once_flag hash_once;
    mutable std::uint64_t hash_value = 0;

    int multiply(int a, int b) const {
        switch (kind) {
            case Kind::dense:
                return table[static_cast<std::size_t>(a) * order + b];
            case Kind::cyclic:
                return (a + b) % order;
            case Kind::perm:
                return index.at(compose(perms[a], perms[b]));
            case Kind::product: {
                const int rh = right->order;
                return left->multiply(a / rh, b / rh) * rh +
                       right->multiply(a % rh, b % rh);
            }
        }
        return 0;
    }
};

FiniteGroup::FiniteGroup() : impl_(std::make_shared<Impl>()) {}
FiniteGroup::FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

int FiniteGroup::order() const { return impl_->order; }
int FiniteGroup::multiply(int a, int b) const { return impl_->multiply(a, b); }
int FiniteGroup::inverse(int a) const { return impl_->inv[a]; }
const std::string& FiniteGroup::label() const { return impl_->label; }
const std::vector<std::string>& FiniteGroup::element_words() const { return impl_->words; }
bool FiniteGroup::is_dense() const { return impl_->kind == Impl::Kind::dense; }

std::uint64_t FiniteGroup::hash() const {
    const Impl& im = *impl_;
    std::call_once(im.hash_once, [&im] {
        std::uint64_t h = fnv1a64_u32(static_cast<std::uint32_t>(im.order),
                                      0xcbf29ce484222325ull);
        for (int a = 0; a < im.order; ++a)
            for (int b = 0; b < im.order; ++b)
                h = fnv1a64_u32(static_cast<std::uint32_t>(im.multiply(a, b)), h);
        im.hash_value = h;
    });
    return im.hash_value;
}

FiniteGroup FiniteGroup::from_permutation_generators(
    int degree, const std::vector<std::vector<int>>& generators,
    std::string label, int order_cap) {
    if (degree <= 0) throw std::invalid_argument("invalid permutation");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree)
            throw std::invalid_argument("invalid permutation");
        std::vector<char> seen(degree, 0);
        for (int v : g) {
            if (v < 0 || v >= degree || seen[v])
                throw std::invalid_argument("invalid permutation");
            seen[v] = 1;
        }
    }

    auto impl = std::make_shared<Impl>();
    Perm id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;

    impl->perms.push_back(id);
    impl->index.emplace(id, 0);
    impl->words.push_back("e");

    // breadth-first closure; element order is the discovery order
    for (std::size_t pos = 0; pos < impl->perms.size(); ++pos) {
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
            Perm cand = compose(impl->perms[pos], generators[gi]);
            if (impl->index.contains(cand)) continue;
            if (static_cast<int>(impl->perms.size()) >= order_cap)
                throw std::runtime_error("order cap exceeded");
            int idx = static_cast<int>(impl->perms.size());
            impl->index.emplace(cand, idx);
            impl->words.push_back(pos == 0 ? generator_letter(gi)
                                           : impl->words[pos] + generator_letter(gi));
            impl->perms.push_back(std::move(cand));
        }
    }

    const int n = static_cast<int>(impl->perms.size());
    impl->order = n;
    impl->kind = Impl::Kind::perm;
    impl->label = label.empty() ? "perm<" + std::to_string(degree) + ">:" + std::to_string(n)
                                : std::move(label);

    impl->inv.assign(n, 0);
    for (int i = 0; i < n; ++i) impl->inv[i] = impl->index.at(invert(impl->perms[i]));

    if (n <= kDenseCap) {
        // column maps by generator let the table close in O(n^2)
        std::vector<std::vector<int>> gen_col(generators.size(), std::vector<int>(n));
        std::vector<int> parent(n, -1), parent_gen(n, -1);
        for (std::size_t gi = 0; gi < generators.size(); ++gi)
            for (int x = 0; x < n; ++x)
                gen_col[gi][x] = impl->index.at(compose(impl->perms[x], generators[gi]));
        // every non-identity element is reachable from a smaller index
        for (int x = 0; x < n; ++x)
            for (std::size_t gi = 0; gi < generators.size(); ++gi) {
                int y = gen_col[gi][x];
                if (y != 0 && parent[y] < 0 && x < y) { parent[y] = x, parent_gen[y] = static_cast<int>(gi); }
            }
        impl->table.assign(static_cast<std::size_t>(n) * n, 0);
        for (int a = 0; a < n; ++a) {
            auto* row = impl->table.data() + static_cast<std::size_t>(a) * n;
            row[0] = a;
            // fill b in BFS order so parent entries are already present
            for (int b = 1; b < n; ++b) row[b] = gen_col[parent_gen[b]][row[parent[b]]];
        }
        impl->kind = Impl::Kind::dense;
        impl->index.clear();
        impl->perms.clear();
        impl->perms.shrink_to_fit();
    }
    return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                        int order_cap) {
    const std::int64_t n64 = static_cast<std::int64_t>(g.order()) * h.order();
    if (n64 > order_cap) throw std::runtime_error("order cap exceeded");
    const int n = static_cast<int>(n64);

    auto impl = std::make_shared<Impl>();
    impl->order = n;
    impl->label = g.label() + "x" + h.label();
    impl->inv.assign(n, 0);
    const int rh = h.order();
    for (int a = 0; a < n; ++a)
        impl->inv[a] = g.inverse(a / rh) * rh + h.inverse(a % rh);

    if (n <= kDenseCap) {
        impl->kind = Impl::Kind::dense;
        impl->table.assign(static_cast<std::size_t>(n) * n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                impl->table[static_cast<std::size_t>(a) * n + b] =
                    g.multiply(a / rh, b / rh) * rh + h.multiply(a % rh, b % rh);
    } else {
        impl->kind = Impl::Kind::product;
        impl->left = g.impl_;
        impl->right = h.impl_;
    }
    return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n <= 0) throw std::invalid_argument("cyclic order must be positive");
    auto impl = std::make_shared<Impl>();
    impl->order = n;
    impl->label = "Z" + std::to_string(n);
    impl->inv.resize(n);
    for (int i = 0; i < n; ++i) impl->inv[i] = (n - i) % n;
    if (n <= kDenseCap) {
        impl->kind = Impl::Kind::dense;
        impl->table.resize(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                impl->table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    } else {
        impl->kind = Impl::Kind::cyclic;
    }
    return FiniteGroup(std::move(impl));
}

ConjugacyData conjugacy_classes(const FiniteGroup& g) {
    const int n = g.order();
    ConjugacyData cd;
    cd.class_of.assign(n, -1);

    std::vector<std::vector<int>> found;
    for (int x = 0; x < n; ++x) {
        if (cd.class_of[x] >= 0) continue;
        std::vector<int> orbit;
        const int cls = static_cast<int>(found.size());
        cd.class_of[x] = cls;
        orbit.push_back(x);
        for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
            const int y = orbit[pos];
            for (int s = 0; s < n; ++s) {
                const int c = g.multiply(g.multiply(s, y), g.inverse(s));
                if (cd.class_of[c] < 0) {
                    cd.class_of[c] = cls;
                    orbit.push_back(c);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        found.push_back(std::move(orbit));
    }

    // identity class first, the rest by (size, smallest element)
    std::vector<int> perm(found.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin() + 1, perm.end(), [&](int a, int b) {
        if (found[a].size() != found[b].size()) return found[a].size() < found[b].size();
        return found[a][0] < found[b][0];
    });

    cd.classes.resize(found.size());
    cd.sizes.resize(found.size());
    cd.representatives.resize(found.size());
    for (std::size_t j = 0; j < perm.size(); ++j) {
        cd.classes[j] = std::move(found[perm[j]]);
        cd.sizes[j] = static_cast<std::int64_t>(cd.classes[j].size());
        cd.representatives[j] = cd.classes[j][0];
        for (int e : cd.classes[j]) cd.class_of[e] = static_cast<int>(j);
    }

    cd.inverse_class.resize(found.size());
    for (std::size_t j = 0; j < perm.size(); ++j)
        cd.inverse_class[j] = cd.class_of[g.inverse(cd.representatives[j])];
    return cd;
}

ClassConstants class_constants(const FiniteGroup& g, const ConjugacyData& cd,
                               Exec exec) {
    if (static_cast<int>(cd.class_of.size()) != g.order())
        throw std::invalid_argument("conjugacy data does not match group");
    return exec == Exec::serial ? kernels::class_constants_serial(g, cd)
                                : kernels::class_constants_parallel(g, cd);
}

namespace {

FiniteGroup symmetric_group(int n) {
    if (n <= 1) {
        FiniteGroup g;  // S1 is trivial
        return g;
    }
    std::vector<std::vector<int>> gens;
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = i;
    std::swap(t[0], t[1]);
    gens.push_back(t);
    if (n > 2) {
        std::vector<int> c(n);
        for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
        gens.push_back(c);
    }
    return FiniteGroup::from_permutation_generators(n, gens, "S" + std::to_string(n));
}

FiniteGroup alternating_group(int n) {
    if (n <= 2) return FiniteGroup();
    std::vector<std::vector<int>> gens;
    for (int i = 0; i + 2 < n; ++i) {
        std::vector<int> c(n);
        for (int j = 0; j < n; ++j) c[j] = j;
        c[i] = i + 1;
        c[i + 1] = i + 2;
        c[i + 2] = i;
        gens.push_back(c);
    }
    return FiniteGroup::from_permutation_generators(n, gens, "A" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
    const std::string label = "D" + std::to_string(n);
    if (n == 1) {
        return FiniteGroup::from_permutation_generators(2, {{1, 0}}, label);
    }
    if (n == 2) {
        return FiniteGroup::from_permutation_generators(
            4, {{1, 0, 2, 3}, {0, 1, 3, 2}}, label);
    }
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return FiniteGroup::from_permutation_generators(n, {rot, refl}, label);
}

FiniteGroup quaternion_group() {
    // left regular action on {1,-1,i,-i,j,-j,k,-k}
    const std::vector<int> mul_i = {2, 3, 1, 0, 6, 7, 5, 4};
    const std::vector<int> mul_j = {4, 5, 7, 6, 1, 0, 2, 3};
    return FiniteGroup::from_permutation_generators(8, {mul_i, mul_j}, "Q8");
}

FiniteGroup catalog_atom(const std::string& name, int order_cap) {
    if (name == "Q8") return quaternion_group();
    if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'D' || name[0] == 'S' || name[0] == 'A')) {
        int n = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') { n = -1; break; }
            n = n * 10 + (name[i] - '0');
        }
        if (n > 0) {
            switch (name[0]) {
                case 'Z':
                    if (n > order_cap) throw std::runtime_error("order cap exceeded");
                    return FiniteGroup::cyclic(n);
                case 'D':
                    if (2 * n > order_cap) throw std::runtime_error("order cap exceeded");
                    return dihedral_group(n);
                case 'S':
                    if (n > 6) throw std::invalid_argument("catalog supports S_n only for n <= 6");
                    return symmetric_group(n);
                case 'A':
                    if (n > 6) throw std::invalid_argument("catalog supports A_n only for n <= 6");
                    return alternating_group(n);
            }
        }
    }
    throw std::invalid_argument("unknown catalog group: " + name);
}

}  // namespace

FiniteGroup catalog_group(const std::string& name, int order_cap) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= name.size(); ++i) {
        if (i == name.size() || name[i] == 'x') {
            if (i > start) parts.push_back(name.substr(start, i - start));
            start = i + 1;
        }
    }
    if (parts.empty()) throw std::invalid_argument("unknown catalog group: " + name);
    FiniteGroup g = catalog_atom(parts[0], order_cap);
    for (std::size_t i = 1; i < parts.size(); ++i)
        g = FiniteGroup::direct_product(g, catalog_atom(parts[i], order_cap), order_cap);
    return g;
}

std::vector<std::string> default_catalog() {
    std::vector<std::string> names;
    for (int n = 1; n <= 12; ++n) names.push_back("Z" + std::to_string(n));
    for (int n = 3; n <= 6; ++n) names.push_back("D" + std::to_string(n));
    names.insert(names.end(), {"Q8", "S3", "S4", "S5", "A4", "A5", "A6", "S3xZ2", "S3xS3"});
    return names;
}

bool is_abelian(const FiniteGroup& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.multiply(a, b) != g.multiply(b, a)) return false;
    return true;
}

std::int64_t count_associativity_violations(const FiniteGroup& g,
                                            std::int64_t triple_budget,
                                            std::uint64_t seed) {
    const int n = g.order();
    const std::int64_t total = static_cast<std::int64_t>(n) * n * n;
    std::int64_t violations = 0;
    if (total <= triple_budget) {
#pragma omp parallel for reduction(+ : violations) schedule(static)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c)))
                        ++violations;
    } else {
        std::uint64_t state = seed;
        for (std::int64_t t = 0; t < triple_budget; ++t) {
            const int a = static_cast<int>(splitmix64(state) % n);
            const int b = static_cast<int>(splitmix64(state) % n);
            const int c = static_cast<int>(splitmix64(state) % n);
            if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c)))
                ++violations;
        }
    }
    return violations;
}

std::int64_t count_conjugation_violations(const FiniteGroup& g,
                                          const ConjugacyData& cd) {
    const int n = g.order();
    std::int64_t violations = 0;
#pragma omp parallel for reduction(+ : violations) schedule(static)
    for (int s = 0; s < n; ++s)
        for (int x = 0; x < n; ++x)
            if (cd.class_of[g.multiply(g.multiply(s, x), g.inverse(s))] != cd.class_of[x])
                ++violations;
    return violations;
}

}  // namespace zafa
