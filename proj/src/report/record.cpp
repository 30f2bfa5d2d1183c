#include "mb/report/record.hpp"

#include <exception>

namespace mb {

bool CheckReport::pass() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : records) n += !r.pass;
  return n;
}

const CheckRecord* CheckReport::first_failure() const {
  for (const auto& r : records) {
    if (!r.pass) return &r;
  }
  return nullptr;
}

void CheckReport::append(const CheckReport& other) { records.insert(records.end(), other.records.begin(), other.records.end()); }

void CheckReport::run(std::string check, std::string anchor, std::string instance, std::string bound,
                      const std::function<std::optional<std::string>()>& body) {
  CheckRecord r{std::move(check), std::move(anchor), std::move(instance), std::move(bound), false, {}};
  try {
    auto w = body();
    r.pass = !w.has_value();
    if (w) r.witness = *w;
  } catch (const std::exception& e) {
    r.witness = std::string("exception: ") + e.what();
  }
  records.push_back(std::move(r));
}

void CheckReport::add(std::string check, std::string anchor, std::string instance, std::string bound, bool pass, std::string witness) {
  records.push_back(CheckRecord{std::move(check), std::move(anchor), std::move(instance), std::move(bound), pass, std::move(witness)});
}

}  // namespace mb
