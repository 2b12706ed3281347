#include "opid/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace opid {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 0xf];
  return out;
}

std::string groebner_cache_key(const Ideal& ideal) {
  std::string text = "groebner;" + ideal.ring()->order().name() + ";";
  for (const auto& v : ideal.ring()->variables()) text += v + ",";
  for (const auto& g : ideal.generators()) text += ";" + g.to_string();
  return fnv1a_hex(text);
}

ArtifactCache::ArtifactCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ArtifactCache::default_dir() {
  if (const char* d = std::getenv("OPID_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d)
    return std::filesystem::path(d) / "opid";
  if (const char* d = std::getenv("HOME"); d && *d)
    return std::filesystem::path(d) / ".cache" / "opid";
  return ".opid-cache";
}

std::filesystem::path ArtifactCache::path_for(const std::string& key) const {
  return dir_ / (key + ".json");
}

std::optional<nlohmann::json> ArtifactCache::load(const std::string& key) {
  auto path = path_for(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.at("key").get<std::string>() != key) throw std::runtime_error("key mismatch");
    return j.at("payload");
  } catch (const std::exception&) {
    in.close();
    std::error_code ec;
    std::filesystem::remove(path, ec);
    ++discarded_;
    return std::nullopt;
  }
}

void ArtifactCache::store(const std::string& key, const nlohmann::json& payload) {
  std::filesystem::create_directories(dir_);
  auto path = path_for(key);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    out << nlohmann::json{{"key", key}, {"payload", payload}}.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

nlohmann::json groebner_to_json(const GroebnerBasis& G, std::size_t generators) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& g : G.basis) basis.push_back(g.to_string());
  return {{"metadata",
           {{"order", G.ring->order().name()},
            {"variables", G.ring->variables()},
            {"generators", generators},
            {"elapsed", G.stats.seconds}}},
          {"basis", basis}};
}

GroebnerBasis groebner_from_json(const nlohmann::json& j) {
  const auto& meta = j.at("metadata");
  MonomialOrder ord;
  auto name = meta.at("order").get<std::string>();
  if (name == MonomialOrder{LexTiebreak::FirstVariableFirst}.name())
    ord.tiebreak = LexTiebreak::FirstVariableFirst;
  else if (name != MonomialOrder{}.name())
    throw std::invalid_argument("unknown monomial order '" + name + "'");
  GroebnerBasis G;
  G.ring = Ring::make(meta.at("variables").get<std::vector<std::string>>(), ord);
  for (const auto& t : j.at("basis")) G.basis.push_back(Polynomial::parse(G.ring, t.get<std::string>()));
  G.stats.seconds = meta.value("elapsed", 0.0);
  return G;
}

}  // namespace opid
