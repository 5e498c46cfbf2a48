// Content-addressed result cache for CLI invocations.
//
// Keys are SHA-256 over (artifact version, command, canonical input,
// parameter string); values are the exact bytes the command printed. Writes
// go through a temp file and an atomic rename so concurrent processes never
// observe torn entries. The cache is an optimization only.
#pragma once

#include <optional>
#include <string>

namespace quotkit::qk {

inline constexpr const char* kArtifactVersion = "quotkit-1";

std::string sha256_hex(const std::string& data);

class ResultCache {
 public:
  // dir empty: resolve from QUOTKIT_CACHE, defaulting to ".quotkit-cache".
  explicit ResultCache(std::string dir = "");

  const std::string& dir() const { return dir_; }
  std::string key_for(const std::string& command, const std::string& canonical_input,
                      const std::string& params) const;
  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, const std::string& value) const;

 private:
  std::string dir_;
};

}  // namespace quotkit::qk
