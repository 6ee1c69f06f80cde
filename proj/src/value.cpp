#include "mvm/value.hpp"

#include <stdexcept>

namespace mvm {

const Rational& Value::scalar() const {
  if (coords_.size() != 1) throw std::logic_error("scalar() on a value with " + std::to_string(coords_.size()) + " coordinates");
  return coords_.front();
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.coords_.size() != b.coords_.size()) return a.coords_.size() <=> b.coords_.size();
  for (std::size_t i = 0; i < a.coords_.size(); ++i)
    if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Value::str() const {
  if (coords_.size() == 1) return coords_.front().str();
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].str();
  }
  return out + ")";
}

std::size_t Value::hash() const {
  std::size_t h = coords_.size();
  for (const auto& c : coords_) h = h * 1000003ULL ^ c.hash();
  return h;
}

std::string format_env(const Env& env) {
  std::string out = "[";
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (i) out += ", ";
    out += "x" + std::to_string(i + 1) + "=" + env[i].str();
  }
  return out + "]";
}

}  // namespace mvm
