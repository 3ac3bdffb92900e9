#include "ccs/report.hpp"

#include <algorithm>

namespace ccs {

void Report::add(std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(name), passed, std::move(detail)});
}

void Report::merge(const Report& other, std::string_view prefix) {
  for (const auto& c : other.checks_) {
    std::string name = c.name;
    if (!prefix.empty()) name = std::string(prefix) + (prefix.back() == '.' ? "" : ".") + c.name;
    checks_.push_back({std::move(name), c.passed, c.detail});
  }
}

bool Report::ok() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::find(std::string_view name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::passed(std::string_view name) const {
  const Check* c = find(name);
  return c != nullptr && c->passed;
}

std::string Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
  return {};
}

}  // namespace ccs
