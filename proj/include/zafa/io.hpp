#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "zafa/char_table.hpp"
#include "zafa/group.hpp"
#include "zafa/za.hpp"

namespace zafa::io {

/// Group-spec document: {"catalog": "S3"},
/// {"permutation": {"degree": n, "generators": [[...], ...]}}, or
/// {"product": [spec, spec, ...]}.  Permutations are zero-based image arrays.
FiniteGroup group_from_spec(const nlohmann::json& spec,
                            int order_cap = FiniteGroup::kDefaultOrderCap);
FiniteGroup group_from_spec_file(const std::string& path,
                                 int order_cap = FiniteGroup::kDefaultOrderCap);

/// Cache directory resolution: explicit override, then ZAFA_CACHE_DIR,
/// then ./.zafa-cache.
std::filesystem::path cache_directory(const std::string& override_dir = "");

std::string hash_hex(std::uint64_t h);

/// Character-table cache, one JSON file per group hash.
std::optional<CharacterTable> load_cached_table(const std::filesystem::path& dir,
                                                std::uint64_t group_hash);
void store_cached_table(const std::filesystem::path& dir, const CharacterTable& ct);

/// Cached lookup wrapping compute_character_table.
CharacterTable table_for_group(const FiniteGroup& g, const std::filesystem::path& cache_dir,
                               const CharTableOptions& opt = {}, bool* cache_hit = nullptr);

/// CentralElement serialization:
/// {"group": "<hash hex>", "coeffs": {"<pi>": [re, im], ...}}.
nlohmann::json central_element_to_json(const CentralElement& u);
CentralElement central_element_from_json(TablePtr table, const nlohmann::json& doc);

}  // namespace zafa::io
