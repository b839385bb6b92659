#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>

namespace pvit {

// Structured one-line-per-event log: `<ts> stage=<s> item=<i> event=<e> <extra>`.
// Safe for concurrent use. A default-constructed logger is a silent sink.
class Logger {
 public:
  Logger() = default;
  Logger(std::filesystem::path file, bool echo_stderr);

  void event(const std::string& stage, const std::string& item, const std::string& event,
             const std::string& extra = "");

 private:
  std::mutex mu_;
  std::ofstream out_;
  bool echo_stderr_ = false;
  bool enabled_ = false;
};

}  // namespace pvit
