#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "relfrob/chartable.hpp"

namespace relfrob {

using Json = nlohmann::ordered_json;

std::string rational_str(const Rational& r);
Rational rational_from_str(const std::string& s);

Json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

/// SHA-256 hex digest of the multiplication table in a canonical byte
/// layout (order, then row-major entries, little-endian 32-bit).
std::string group_content_hash(const FiniteGroup& g);

Json chartable_to_json(const CharacterTable& t);
CharacterTable chartable_from_json(const GroupPtr& group, const Json& j);

/// Loads the character table from `cache_dir` when a file with a matching
/// content hash and a known schema version exists; otherwise computes it
/// and writes the cache file atomically. Unknown versions or malformed
/// files are ignored and recomputed.
CharacterTable chartable_cached(const GroupPtr& group,
                                const std::filesystem::path& cache_dir,
                                const Config& cfg = {});

}  // namespace relfrob
