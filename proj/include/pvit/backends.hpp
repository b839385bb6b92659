#pragma once

#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pvit/assets.hpp"
#include "pvit/common.hpp"
#include "pvit/config.hpp"
#include "pvit/geometry.hpp"
#include "pvit/log.hpp"
#include "pvit/serializer.hpp"

namespace pvit {

enum class Capability { detect, face, augment, caption, complete, similarity, model_under_test };
const char* capability_name(Capability cap);

struct Detection {
  BBox box;
  double score = 0.0;
  std::string label;

  bool operator==(const Detection&) const = default;
};

// A single backend call. `canonical` is the digest source and must identify
// the request completely (image content by hash, never by path); `payload`
// carries transport-only extras such as base64 image bytes.
struct CallRequest {
  Capability capability = Capability::detect;
  nlohmann::json canonical;
  nlohmann::json payload;
};

// Hex digest of the canonicalized request. Object keys are emitted sorted, so
// the digest is stable under field reordering.
std::string request_digest(const CallRequest& req);

// One capability endpoint. perform() returns the raw response payload (JSON
// text), throwing PvitError on failure. Unreachable/EmptyCompletion errors
// are retried by the caller; everything else propagates immediately.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual std::string perform(const CallRequest& req) = 0;
};

// Content-addressed on-disk response cache: capability + request digest keys
// a file holding the raw payload. Writers are serialized per key.
class CallCache {
 public:
  explicit CallCache(std::filesystem::path dir);

  std::optional<std::string> get(Capability cap, const std::string& digest) const;
  void put(Capability cap, const std::string& digest, const nlohmann::json& canonical,
           const std::string& payload) const;
  std::mutex& key_mutex(const std::string& digest);

 private:
  std::filesystem::path file_for(Capability cap, const std::string& digest) const;

  std::filesystem::path dir_;
  mutable std::mutex mu_;
  std::map<std::string, std::unique_ptr<std::mutex>> key_locks_;
};

struct BackendCounters {
  std::atomic<long> upstream{0};
  std::atomic<long> cache_hits{0};
};

struct SerializedPrefix {
  std::string text;              // wrapper groups with <image:k> slots, k = 1..images.size()
  std::vector<ImageRef> images;  // one per wrapper group
};

// Facade over all external model capabilities. Thread-safe; all calls are
// cached by request digest and retried within the configured budget.
class Backends {
 public:
  Backends(BackendsConfig cfg, std::filesystem::path cache_dir, const AssetStore* assets,
           Logger* log);

  // Replaces the transport for one capability (tests and remote wiring).
  void set_transport(Capability cap, std::shared_ptr<Transport> transport);
  Transport* transport(Capability cap);

  std::vector<Detection> detect_objects(const ImageRef& image, const std::string& prompt);
  std::vector<Detection> detect_faces(const ImageRef& image);
  std::vector<ImageRef> generate_identity_images(const ImageRef& face, int n, std::uint64_t seed);
  std::string describe_image(const std::vector<ImageRef>& images, const std::string& prompt);
  std::string complete_text(const std::string& prompt, std::uint64_t seed);
  double image_text_similarity(const ImageRef& image, const std::string& text);
  std::string query_model_under_test(const SerializedPrefix& prefix, const ImageRef& scene,
                                     const std::string& question, const std::string& key);

  long upstream_calls(Capability cap) const;
  long cache_hits(Capability cap) const;
  long total_upstream_calls() const;

  const BackendsConfig& config() const { return cfg_; }

 private:
  std::string call(const CallRequest& req, const std::function<void(const nlohmann::json&)>& validate);
  nlohmann::json image_part(const ImageRef& ref, nlohmann::json* payload_images);

  BackendsConfig cfg_;
  CallCache cache_;
  const AssetStore* assets_;
  Logger* log_;
  std::map<Capability, std::shared_ptr<Transport>> transports_;
  mutable std::map<Capability, BackendCounters> counters_;
  std::mutex counters_mu_;
};

// Builds a Backends facade with per-capability transports resolved from the
// config (fixture or remote), honoring PVIT_<CAP>_{ENDPOINT,API_KEY,TIMEOUT_MS}
// environment overrides. Fixture transports see the annotations of every
// corpus the run touches (training, bench, explicit fixture_dir).
std::unique_ptr<Backends> make_backends(const RunConfig& cfg, const AssetStore& assets, Logger* log);

// Fixture transport factory (pure functions of the request plus the fixture
// annotation index; see fixture.cpp).
struct FixtureAnnotations;
std::shared_ptr<Transport> make_fixture_transport(Capability cap, const BackendsConfig& cfg,
                                                  const FixtureAnnotations& annotations);

// Remote transport factory (HTTP; see remote.cpp).
std::shared_ptr<Transport> make_remote_transport(Capability cap, const CapabilityConfig& resolved,
                                                 int timeout_ms);

}  // namespace pvit
