#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "psl2/bigint.hpp"

namespace psl2 {

// Binary cache of a count sequence, one file per (key, N). Layout, all integers
// little-endian:
//   magic "PSLC" | u32 version = 1 | u32 key length | key bytes | u32 N | u32 count
//   then per entry: u32 byte length | magnitude bytes (least significant first)
class CountCache {
 public:
  explicit CountCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // Directory from the PSL2_CACHE_DIR environment variable, if set.
  static std::optional<CountCache> from_environment();

  std::filesystem::path path_for(const std::string& key, int n) const;
  std::optional<std::vector<BigInt>> load(const std::string& key, int n) const;
  void store(const std::string& key, int n, const std::vector<BigInt>& values) const;

 private:
  std::filesystem::path dir_;
};

void write_count_file(const std::filesystem::path& path, const std::string& key, int n,
                      const std::vector<BigInt>& values);
// nullopt when the file is missing, truncated or labelled with another key or size.
std::optional<std::vector<BigInt>> read_count_file(const std::filesystem::path& path,
                                                   const std::string& key, int n);

}  // namespace psl2
