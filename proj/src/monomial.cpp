#include "wc/monomial.hpp"

namespace wc {

std::string monomial_to_string(const Monomial& m, int nvars,
                               const std::function<std::string(int)>& name,
                               const std::vector<int>& print_order) {
  std::string out;
  auto emit = [&](int i) {
    if (m.exp(i) == 0) return;
    if (!out.empty()) out += '*';
    out += name(i);
    if (m.exp(i) > 1) out += '^' + std::to_string(m.exp(i));
  };
  if (print_order.empty()) {
    for (int i = 0; i < nvars; ++i) emit(i);
  } else {
    for (int i : print_order) emit(i);
  }
  return out.empty() ? "1" : out;
}

}  // namespace wc
