#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pvit {

enum class Err {
  BackendUnreachable,
  MalformedRequest,
  MalformedResponse,
  ImageDecode,
  QuotaExceeded,
  EmptyCompletion,
  PrefixTooLarge,
  PlaceholderMissing,
  FusionDegenerate,
  NoTemplates,
  ParseFailure,
  PoolExhausted,
  UnboundPlaceholder,
  UnknownRelation,
  NoDonorScenes,
  InsufficientPersons,
  InsufficientScenes,
  CorruptRecord,
  MissingResponses,
  MissingStageInput,
  ConfigInvalid,
  Precondition,
  Io,
};

const char* err_name(Err kind);

class PvitError : public std::runtime_error {
 public:
  PvitError(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw PvitError(kind, msg); }

// --- hashing / encoding ---

std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_hex(std::string_view s);
std::string sha256_hex(const std::vector<std::uint8_t>& bytes);

std::string base64_encode(const std::uint8_t* data, std::size_t len);
std::string base64_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> base64_decode(std::string_view s);

// --- deterministic randomness ---
//
// All pipeline randomness flows through Rng, which wraps std::mt19937_64 and
// uses only operations whose output is pinned by the standard. std::
// distributions are implementation-defined and must not be used anywhere the
// output feeds a manifest.

std::uint64_t derive_seed(std::uint64_t master, std::string_view stage, std::string_view item);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw PvitError(Err::Precondition, "Rng::below(0)");
    return next() % n;
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

  // Uniform in [0, 1), 53-bit resolution.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[index(v.size())];
  }

  // k distinct indices out of [0, n), in draw order.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 eng_;
};

// --- small string helpers ---

std::string lowercase(std::string_view s);
std::string trim(std::string_view s);
bool contains_ci(std::string_view haystack, std::string_view needle);
std::string replace_all(std::string_view text, std::string_view from, std::string_view to);
std::size_t count_occurrences(std::string_view text, std::string_view needle);

// Fixed two-decimal formatting used by every report surface.
std::string format2(double v);

// --- filesystem ---

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
std::string read_file_text(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path, std::string_view data);
void write_file_atomic(const std::filesystem::path& path, const std::vector<std::uint8_t>& data);

}  // namespace pvit
