#include "burchlab/ring.hpp"

#include <cctype>
#include <set>

#include "burchlab/errors.hpp"

namespace burchlab {

bool valid_variable_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

RingDescriptor::RingDescriptor(std::uint32_t characteristic, std::vector<std::string> variables,
                               int degree_cap)
    : field_(characteristic), variables_(std::move(variables)), degree_cap_(degree_cap) {
  if (variables_.empty()) throw Error("a ring needs at least one variable");
  if (variables_.size() > Monomial::kMaxVariables)
    throw Error("at most " + std::to_string(Monomial::kMaxVariables) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!valid_variable_name(v)) throw Error("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error("duplicate variable name '" + v + "'");
  }
  if (degree_cap_ < 1 || degree_cap_ > 0xffff) throw Error("degree cap out of range");
}

int RingDescriptor::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return static_cast<int>(i);
  return -1;
}

void RingDescriptor::check_degree(int degree) const {
  if (degree > degree_cap_) throw DegreeCapExceeded(degree, degree_cap_);
}

Ring make_ring(std::uint32_t characteristic, std::vector<std::string> variables, int degree_cap) {
  return std::make_shared<const RingDescriptor>(characteristic, std::move(variables), degree_cap);
}

Ring with_degree_cap(const Ring& ring, int degree_cap) {
  return make_ring(ring->characteristic(), ring->variables(), degree_cap);
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (a.get() != b.get() && !a->same_ring(*b)) throw RingMismatch();
}

}  // namespace burchlab
