#pragma once

#include "vtx/induction/universal.hpp"

#include <string>
#include <utility>
#include <vector>

namespace vtx {

/// Ordered list of facts and check records. Rendering depends only on the
/// insertion order, so identical runs give identical bytes.
class Report {
 public:
  struct Check {
    std::string id, anchor, status, witness;
    std::size_t pass = 0, fail = 0, vacuous = 0, uncertified = 0;
  };

  explicit Report(std::string command) : command_(std::move(command)) {}

  void info(const std::string& key, const std::string& value) { info_.emplace_back(key, value); }
  void check(const std::string& id, const std::string& anchor, const CheckCount& c);
  void check(const std::string& id, const std::string& anchor, bool pass, const std::string& witness = "");
  /// Tabular payload (one row per entry), kept out of the text rendering unless asked for.
  void table(const std::string& name, std::vector<std::string> rows) { tables_.emplace_back(name, std::move(rows)); }

  [[nodiscard]] bool failed() const;
  [[nodiscard]] const std::vector<Check>& checks() const { return checks_; }

  [[nodiscard]] std::string text(bool with_tables) const;
  [[nodiscard]] std::string structured() const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> info_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, std::vector<std::string>>> tables_;
};

}  // namespace vtx
