#include "zafa/io.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>

namespace zafa::io {

using nlohmann::json;

FiniteGroup group_from_spec(const json& spec, int order_cap) {
    if (!spec.is_object()) throw std::invalid_argument("malformed group spec");
    if (spec.contains("catalog")) {
        return catalog_group(spec.at("catalog").get<std::string>(), order_cap);
    }
    if (spec.contains("permutation")) {
        const json& p = spec.at("permutation");
        return FiniteGroup::from_permutation_generators(
            p.at("degree").get<int>(),
            p.at("generators").get<std::vector<std::vector<int>>>(),
            p.value("label", std::string{}), order_cap);
    }
    if (spec.contains("product")) {
        const json& parts = spec.at("product");
        if (!parts.is_array() || parts.empty())
            throw std::invalid_argument("malformed group spec");
        FiniteGroup g = group_from_spec(parts[0], order_cap);
        for (std::size_t i = 1; i < parts.size(); ++i)
            g = FiniteGroup::direct_product(g, group_from_spec(parts[i], order_cap), order_cap);
        return g;
    }
    throw std::invalid_argument("malformed group spec");
}

FiniteGroup group_from_spec_file(const std::string& path, int order_cap) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception&) {
        throw std::invalid_argument("malformed group spec");
    }
    return group_from_spec(doc, order_cap);
}

std::filesystem::path cache_directory(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("ZAFA_CACHE_DIR"); env && *env) return env;
    return ".zafa-cache";
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::optional<CharacterTable> load_cached_table(const std::filesystem::path& dir,
                                                std::uint64_t group_hash) {
    const auto path = dir / (hash_hex(group_hash) + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json doc;
    try {
        in >> doc;
        CharacterTable ct;
        ct.group_hash = group_hash;
        ct.group_order = doc.at("group_order").get<std::int64_t>();
        ct.group_label = doc.value("group", std::string{});
        ct.degrees = doc.at("degrees").get<std::vector<int>>();
        ct.class_sizes = doc.at("class_sizes").get<std::vector<std::int64_t>>();
        ct.k = static_cast<int>(ct.degrees.size());
        if (ct.k == 0 || ct.class_sizes.size() != ct.degrees.size()) return std::nullopt;
        const auto& vals = doc.at("values");
        if (vals.size() != static_cast<std::size_t>(ct.k) * ct.k) return std::nullopt;
        ct.values.reserve(vals.size());
        for (const auto& v : vals)
            ct.values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
        return ct;
    } catch (const json::exception&) {
        return std::nullopt;
    }
}

void store_cached_table(const std::filesystem::path& dir, const CharacterTable& ct) {
    std::filesystem::create_directories(dir);
    json doc;
    doc["group"] = ct.group_label;
    doc["group_order"] = ct.group_order;
    doc["degrees"] = ct.degrees;
    doc["class_sizes"] = ct.class_sizes;
    json vals = json::array();
    for (const cplx& v : ct.values) vals.push_back({v.real(), v.imag()});
    doc["values"] = std::move(vals);
    // write-then-rename so concurrent writers of the same group cannot
    // leave a torn file behind
    static std::atomic<unsigned> tmp_counter{0};
    const auto target = dir / (hash_hex(ct.group_hash) + ".json");
    const auto tmp = dir / (hash_hex(ct.group_hash) + ".json.tmp" +
                            std::to_string(tmp_counter.fetch_add(1)));
    {
        std::ofstream out(tmp);
        out << doc.dump(2) << '\n';
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

CharacterTable table_for_group(const FiniteGroup& g, const std::filesystem::path& cache_dir,
                               const CharTableOptions& opt, bool* cache_hit) {
    if (auto cached = load_cached_table(cache_dir, g.hash())) {
        if (cache_hit) *cache_hit = true;
        return *cached;
    }
    if (cache_hit) *cache_hit = false;
    CharacterTable ct = compute_character_table(g, opt);
    store_cached_table(cache_dir, ct);
    return ct;
}

json central_element_to_json(const CentralElement& u) {
    json doc;
    doc["group"] = hash_hex(u.table()->group_hash);
    json coeffs = json::object();
    for (const auto& [pi, alpha] : u.coeffs())
        coeffs[std::to_string(pi)] = {alpha.real(), alpha.imag()};
    doc["coeffs"] = std::move(coeffs);
    return doc;
}

CentralElement central_element_from_json(TablePtr table, const json& doc) {
    if (doc.at("group").get<std::string>() != hash_hex(table->group_hash))
        throw std::runtime_error("mismatched tables");
    CentralElement u(std::move(table));
    for (const auto& [key, val] : doc.at("coeffs").items())
        u.set(std::stoi(key), cplx(val.at(0).get<double>(), val.at(1).get<double>()));
    return u;
}

}  // namespace zafa::io
