#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mb {

/// One executed check. `anchor` names the statement the check instantiates.
struct CheckRecord {
  std::string check;
  std::string anchor;
  std::string instance;
  std::string bound;  // "exact", "battery", "degrees<=N-1", ...
  bool pass = false;
  std::string witness;
};

struct CheckReport {
  std::vector<CheckRecord> records;

  bool pass() const;
  std::size_t failures() const;
  const CheckRecord* first_failure() const;
  void append(const CheckReport& other);
  /// Runs `body`; an empty optional means pass, a string is the witness. Exceptions count as failures.
  void run(std::string check, std::string anchor, std::string instance, std::string bound,
           const std::function<std::optional<std::string>()>& body);
  void add(std::string check, std::string anchor, std::string instance, std::string bound, bool pass, std::string witness = {});
};

}  // namespace mb
