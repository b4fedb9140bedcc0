#include "psl2/count_cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>

namespace psl2 {

namespace {

constexpr char kMagic[4] = {'P', 'S', 'L', 'C'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t x) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((x >> (8 * i)) & 0xff);
  os.write(b, 4);
}

bool get_u32(std::istream& is, std::uint32_t& x) {
  unsigned char b[4];
  if (!is.read(reinterpret_cast<char*>(b), 4)) return false;
  x = 0;
  for (int i = 0; i < 4; ++i) x |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return true;
}

}  // namespace

void write_count_file(const std::filesystem::path& path, const std::string& key, int n,
                      const std::vector<BigInt>& values) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write cache file " + tmp.string());
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    put_u32(os, static_cast<std::uint32_t>(key.size()));
    os.write(key.data(), static_cast<std::streamsize>(key.size()));
    put_u32(os, static_cast<std::uint32_t>(n));
    put_u32(os, static_cast<std::uint32_t>(values.size()));
    for (const auto& v : values) {
      auto bytes = to_bytes(v);
      put_u32(os, static_cast<std::uint32_t>(bytes.size()));
      os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    }
  }
  std::filesystem::rename(tmp, path);
}

std::optional<std::vector<BigInt>> read_count_file(const std::filesystem::path& path,
                                                   const std::string& key, int n) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return std::nullopt;
  char magic[4];
  if (!is.read(magic, 4) || std::string(magic, 4) != std::string(kMagic, 4)) return std::nullopt;
  std::uint32_t version, key_len, stored_n, count;
  if (!get_u32(is, version) || version != kVersion || !get_u32(is, key_len)) return std::nullopt;
  std::string stored_key(key_len, '\0');
  if (!is.read(stored_key.data(), key_len) || stored_key != key) return std::nullopt;
  if (!get_u32(is, stored_n) || static_cast<int>(stored_n) != n || !get_u32(is, count))
    return std::nullopt;
  std::vector<BigInt> values;
  values.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint32_t len;
    if (!get_u32(is, len)) return std::nullopt;
    std::vector<std::uint8_t> bytes(len);
    if (!is.read(reinterpret_cast<char*>(bytes.data()), len)) return std::nullopt;
    values.push_back(from_bytes(bytes));
  }
  return values;
}

std::optional<CountCache> CountCache::from_environment() {
  const char* dir = std::getenv("PSL2_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return CountCache(dir);
}

std::filesystem::path CountCache::path_for(const std::string& key, int n) const {
  return dir_ / (key + "-" + std::to_string(n) + ".bin");
}

std::optional<std::vector<BigInt>> CountCache::load(const std::string& key, int n) const {
  return read_count_file(path_for(key, n), key, n);
}

void CountCache::store(const std::string& key, int n, const std::vector<BigInt>& values) const {
  std::filesystem::create_directories(dir_);
  write_count_file(path_for(key, n), key, n, values);
}

}  // namespace psl2
