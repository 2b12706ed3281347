#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "opid/ideals.hpp"

namespace opid {

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

/// Key for a Groebner basis computation: the order, the variable list and
/// the normalised generators all enter the hash.
std::string groebner_cache_key(const Ideal& ideal);

/// JSON documents stored one per key in a directory.
class ArtifactCache {
 public:
  explicit ArtifactCache(std::filesystem::path dir);

  /// $OPID_CACHE_DIR, else $XDG_CACHE_HOME/opid, else ~/.cache/opid.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }

  /// Missing entries give nullopt. Unreadable or mismatched entries are
  /// deleted, counted in discarded(), and also give nullopt.
  std::optional<nlohmann::json> load(const std::string& key);
  void store(const std::string& key, const nlohmann::json& payload);

  std::filesystem::path path_for(const std::string& key) const;
  std::size_t discarded() const { return discarded_; }

 private:
  std::filesystem::path dir_;
  std::size_t discarded_ = 0;
};

/// {"metadata": {order, variables, generators, elapsed}, "basis": [...]}
nlohmann::json groebner_to_json(const GroebnerBasis& G, std::size_t generators);
GroebnerBasis groebner_from_json(const nlohmann::json& j);

}  // namespace opid
