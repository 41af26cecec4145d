#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fatpoints/engine.hpp"
#include "fatpoints/json_io.hpp"

namespace fatpoints::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitSpecial = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitUsage = 64;

enum class Format { Table, Json, Csv };

struct RunConfig {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  int retries = 3;
  std::string cache_path;  // empty disables the cache
  Format format = Format::Table;
  int jobs = 1;
  bool timing = false;

  PrimeFieldConfig field() const;
  void validate() const;
};

int exit_code_for(Status s);

std::uint64_t fnv1a64(const std::string& bytes);
std::string request_hash(const Json& request);

// Append-only JSONL store; each record is a result object plus request_hash and exit_code.
class ResultCache {
 public:
  ResultCache() = default;
  // An unwritable path disables the cache; warning() then explains why.
  explicit ResultCache(std::string path);

  bool enabled() const { return enabled_; }
  const std::string& warning() const { return warning_; }
  std::optional<Json> lookup(const std::string& hash) const;
  void store(const std::string& hash, const Json& result, int exit_code);

 private:
  std::string path_;
  bool enabled_ = false;
  std::string warning_;
  std::map<std::string, Json> records_;
};

// Table output restricts row tables to `columns` when it is nonempty.
std::string render(const Json& result, Format format, const std::vector<std::string>& columns = {});

// Entry point shared by the executable and the tests; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fatpoints::cli
