#include "moebius/series.hpp"

namespace moebius {

std::string monomial_to_string(const Monomial& m, const char* symbol) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t k = i;
    while (k < m.size() && m[k] == m[i]) ++k;
    if (!out.empty()) out += "*";
    out += std::string(symbol) + "_" + std::to_string(m[i]);
    if (k - i > 1) out += "^" + std::to_string(k - i);
    i = k;
  }
  return out;
}

}  // namespace moebius
