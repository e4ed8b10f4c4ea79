#include "solveinstein/family.hpp"

#include "solveinstein/errors.hpp"

namespace solveinstein {

Family Family::quaternionic(int m) {
  if (m < 3) {
    throw ConfigError("quaternionic family requires m >= 3, got m = " + std::to_string(m));
  }
  return Family(Kind::Quaternionic, m);
}

Family Family::octonionic() { return Family(Kind::Octonionic, 0); }

std::string Family::name() const {
  if (kind_ == Kind::Quaternionic) {
    return "quaternionic(m=" + std::to_string(m_) + ")";
  }
  return "octonionic";
}

}  // namespace solveinstein
