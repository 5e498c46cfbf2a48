#include "quotkit/qk/cache.hpp"

#include <openssl/evp.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace quotkit::qk {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256: EVP_Digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {
  if (dir_.empty()) {
    const char* env = std::getenv("QUOTKIT_CACHE");
    dir_ = env && *env ? env : ".quotkit-cache";
  }
}

std::string ResultCache::key_for(const std::string& command, const std::string& canonical_input,
                                 const std::string& params) const {
  std::ostringstream blob;
  blob << kArtifactVersion << '\n' << command << '\n' << params << '\n' << canonical_input;
  return sha256_hex(blob.str());
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
  std::ifstream in(std::filesystem::path(dir_) / (key + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void ResultCache::store(const std::string& key, const std::string& value) const {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  fs::path final_path = fs::path(dir_) / (key + ".json");
  fs::path tmp_path = fs::path(dir_) / (key + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    out << value;
  }
  fs::rename(tmp_path, final_path, ec);
  if (ec) fs::remove(tmp_path, ec);  // lost the race; the other writer's entry stands
}

}  // namespace quotkit::qk
