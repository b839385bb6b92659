#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace pvit {

// Generation prompt templates. Compiled-in defaults are used unless a
// prompts directory overrides them; files are named <key>.txt. Placeholders
// ({Information}, {Person Information}, {Holistic Information}) are replaced
// literally at render time.
class PromptLibrary {
 public:
  PromptLibrary();  // defaults only
  explicit PromptLibrary(const std::filesystem::path& overrides_dir);

  const std::string& get(const std::string& key) const;
  std::string render(const std::string& key,
                     const std::map<std::string, std::string>& substitutions) const;

  static const std::map<std::string, std::string>& defaults();

  // Writes every default template into `dir` (repo seeding, experiments).
  static void write_defaults(const std::filesystem::path& dir);

 private:
  std::map<std::string, std::string> templates_;
};

}  // namespace pvit
