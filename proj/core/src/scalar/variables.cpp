#include "rbl/scalar/variables.hpp"

#include <array>
#include <cctype>
#include <deque>
#include <mutex>

#include "rbl/scalar/error.hpp"

namespace rbl {
namespace {

struct Registry {
  std::mutex mu;
  std::deque<std::string> names;  // deque keeps references stable on append

  Registry() {
    for (const char* n : {"a", "b", "k", "x1", "x2", "x3", "y1", "y2", "y3", "sa", "sb"}) {
      names.emplace_back(n);
    }
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        names.push_back("r" + std::to_string(i) + std::to_string(j));
      }
    }
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool is_valid_variable_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return name != "i" && name != "sqrt";
}

std::optional<VarId> find_variable(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  for (std::size_t i = 0; i < r.names.size(); ++i) {
    if (r.names[i] == name) return static_cast<VarId>(i);
  }
  return std::nullopt;
}

VarId variable(std::string_view name) {
  if (!is_valid_variable_name(name)) {
    throw Error(ErrorKind::ParseError, "invalid parameter name '" + std::string(name) + "'");
  }
  auto& r = registry();
  std::lock_guard lock(r.mu);
  for (std::size_t i = 0; i < r.names.size(); ++i) {
    if (r.names[i] == name) return static_cast<VarId>(i);
  }
  if (r.names.size() >= kMaxVariables) {
    throw Error(ErrorKind::CapacityExceeded, "too many formal parameters");
  }
  r.names.emplace_back(name);
  return static_cast<VarId>(r.names.size() - 1);
}

const std::string& variable_name(VarId id) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return r.names.at(id);
}

std::size_t variable_count() {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return r.names.size();
}

}  // namespace rbl
