#include "bergman/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bergman {

namespace {

constexpr int kSchemaVersion = 1;

std::string hex_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%a", value);
  return buf;
}

std::string checksum_payload(const CacheKey& key, const std::string& value_hex) {
  std::ostringstream os;
  os << key.kind << '|' << key.j << '|' << key.k << '|' << key.precision << '|'
     << key.truncation << '|' << value_hex;
  return os.str();
}

}  // namespace

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string CacheKey::file_name() const {
  std::ostringstream os;
  os << kind << "_j" << j << "_k" << k << "_" << precision;
  if (truncation > 0) os << "_M" << truncation;
  os << ".json";
  return os.str();
}

EntryCache::EntryCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::optional<double> EntryCache::load(const CacheKey& key) const {
  if (!enabled()) return std::nullopt;
  const auto path = dir_ / key.file_name();
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json doc;
  try {
    in >> doc;
    if (doc.at("version").get<int>() != kSchemaVersion) return std::nullopt;
    if (doc.at("kind").get<std::string>() != key.kind) return std::nullopt;
    if (doc.at("j").get<std::int64_t>() != key.j) return std::nullopt;
    if (doc.at("k").get<std::int64_t>() != key.k) return std::nullopt;
    if (doc.at("precision").get<std::string>() != key.precision) return std::nullopt;
    if (doc.at("truncation").get<std::int64_t>() != key.truncation) return std::nullopt;
    const std::string value_hex = doc.at("value_hex").get<std::string>();
    const std::uint64_t expect = fnv1a64(checksum_payload(key, value_hex));
    if (doc.at("checksum").get<std::string>() != std::to_string(expect)) return std::nullopt;
    const double value = std::strtod(value_hex.c_str(), nullptr);
    return value;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // corrupted entry: recompute
  }
}

void EntryCache::store(const CacheKey& key, double value) const {
  if (!enabled()) return;
  const std::string value_hex = hex_double(value);
  nlohmann::ordered_json doc;
  doc["version"] = kSchemaVersion;
  doc["kind"] = key.kind;
  doc["j"] = key.j;
  doc["k"] = key.k;
  doc["precision"] = key.precision;
  doc["truncation"] = key.truncation;
  doc["value_hex"] = value_hex;
  doc["value"] = value;
  doc["checksum"] = std::to_string(fnv1a64(checksum_payload(key, value_hex)));

  const auto path = dir_ / key.file_name();
  const auto tmp = dir_ / (key.file_name() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    out << doc.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace bergman
