// V_{-1} applied to s_{(7,6,6,4,1,1)}, by the single-box rule and by the
// general border-strip coefficient rule.
#include <virwalk/virwalk.hpp>

#include <iostream>

int main() {
  using namespace virwalk;
  const Partition lambda{7, 6, 6, 4, 1, 1};
  const SchurExpansion fast = apply_virasoro_expansion(-1, SchurExpansion::basis(lambda));
  for (const auto& [mu, c] : fast.coeffs()) std::cout << c.get_str() << " s_(" << mu.to_string() << ")\n";

  const SchurExpansion general = apply_virasoro_expansion(-1, SchurExpansion::basis(lambda), VirasoroPath::general);
  std::cout << (general == fast ? "general rule: agree\n" : "general rule: DISAGREE\n");
  return general == fast ? 0 : 1;
}
