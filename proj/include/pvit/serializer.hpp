#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pvit/assets.hpp"

namespace pvit {

inline constexpr std::string_view kPersonStart = "<|person_start|>";
inline constexpr std::string_view kPersonEnd = "<|person_end|>";
inline constexpr std::string_view kNamePlaceholder = "<name>";

// "<image:k>", 1-based. Slot k in a serialized instance refers to the k-th
// image: prefix images first, then the scene image at slot K+1.
std::string image_slot(int k);

// One multimodal prefix entry: a personal image plus the introduction text
// that binds an identity to it (a name, or a pronoun phrase).
struct PrefixEntry {
  ImageRef image;
  std::string intro;
  std::string person_id;

  bool operator==(const PrefixEntry&) const = default;
};

struct SupervisionSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const SupervisionSpan&) const = default;
};

struct SerializedInstance {
  std::string text;
  SupervisionSpan supervision;  // covers exactly the response characters
};

// Text-only projection of a serialized instance, recovered by the parser.
struct ParsedInstance {
  std::vector<std::string> intros;
  int scene_slot = 0;  // always intros.size() + 1
  std::string query;
  std::string response;

  bool operator==(const ParsedInstance&) const = default;
};

// Prefix text: one "<|person_start|><image:k>{intro}<|person_end|>" group per
// entry, k counting from 1. Throws Err::Precondition when an intro is empty
// or embeds wrapper/slot markers.
std::string serialize_prefix(const std::vector<PrefixEntry>& entries);

// Full instance: prefix groups, scene slot, query, response. The supervision
// span covers the response and nothing else.
SerializedInstance serialize_instance(const std::vector<PrefixEntry>& prefix, const ImageRef& scene,
                                      const std::string& query, const std::string& response);

// Strict inverse of serialize_instance over the text projection; validates
// the wrapper grammar (balanced, non-nested, exactly one image slot per
// group, sequential slot numbers). Throws Err::ParseFailure on any violation.
ParsedInstance parse_instance(const std::string& serialized, const SupervisionSpan& supervision);

// True when text is a well-formed prefix for `image_count` images.
bool prefix_well_formed(const std::string& prefix_text, int image_count);

}  // namespace pvit
