#include "ballspec/certificate.hpp"

#include <sstream>

#include "ballspec/errors.hpp"

namespace ballspec {

Inequality strictly_less(std::string name, double lhs, double rhs) {
  Inequality q;
  q.name = std::move(name);
  q.lhs = lhs;
  q.rhs = rhs;
  q.holds = lhs < rhs;
  return q;
}

void require_all(const std::string& module, const std::vector<Inequality>& checks) {
  for (const auto& q : checks) {
    if (!q.holds) {
      std::ostringstream os;
      os.precision(17);
      os << "inequality '" << q.name << "' fails: " << q.lhs << " is not < " << q.rhs;
      throw CertificateFailure(module, os.str());
    }
  }
}

}  // namespace ballspec
