#include "kahler/family.hpp"

#include <sstream>
#include <stdexcept>

namespace kahler {

FamilyParams FamilyParams::make(double alpha, double beta, int dim) {
  FamilyParams p{alpha, beta, dim};
  require_admissible(p);
  return p;
}

std::string FamilyParams::violations() const {
  std::ostringstream msg;
  const char* sep = "";
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    msg << sep << "alpha and beta must be finite";
    sep = "; ";
  }
  if (!(beta >= 0.0)) {
    msg << sep << "beta >= 0 required (got beta=" << beta << ")";
    sep = "; ";
  }
  if (!(alpha > beta)) {
    msg << sep << "alpha > beta required (got alpha=" << alpha << ", beta=" << beta << ")";
    sep = "; ";
  }
  if (dim < 2) {
    msg << sep << "n >= 2 required (got n=" << dim << ")";
  }
  return msg.str();
}

void require_admissible(const FamilyParams& params) {
  if (auto v = params.violations(); !v.empty()) throw std::domain_error(v);
}

LogRadius::LogRadius(double u) : u_(u) {
  if (!(u >= 0.0) || std::isinf(u)) {
    std::ostringstream msg;
    msg << "log radius must be finite and >= 0 (got u=" << u << ")";
    throw std::domain_error(msg.str());
  }
}

}  // namespace kahler
