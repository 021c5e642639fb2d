#include "qhcurve/numerical_semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qhcurve {

std::vector<bool> semigroup_sieve(const std::vector<int>& generators, int limit) {
  std::vector<bool> in(static_cast<std::size_t>(std::max(limit, 0)), false);
  if (limit <= 0) return in;
  in[0] = true;
  for (int s = 1; s < limit; ++s)
    for (int g : generators)
      if (g > 0 && g <= s && in[static_cast<std::size_t>(s - g)]) {
        in[static_cast<std::size_t>(s)] = true;
        break;
      }
  return in;
}

std::optional<int> monomial_conductor(const std::vector<int>& generators) {
  int d = 0;
  int smallest = 0;
  for (int g : generators) {
    if (g <= 0) throw std::invalid_argument("semigroup generators must be positive");
    d = std::gcd(d, g);
    smallest = smallest == 0 ? g : std::min(smallest, g);
  }
  if (d != 1) return std::nullopt;
  if (smallest == 1) return 0;
  // Frobenius number of a gcd-1 set is below (max - 1) * (min - 1), so this window suffices.
  const int largest = *std::max_element(generators.begin(), generators.end());
  const int limit = (largest - 1) * (smallest - 1) + 2 * smallest + 1;
  const auto in = semigroup_sieve(generators, limit);
  int c = 0;
  for (int s = 0; s < limit; ++s)
    if (!in[static_cast<std::size_t>(s)]) c = s + 1;
  return c;
}

std::vector<int> minimal_generators(const std::vector<bool>& members, int conductor) {
  int smallest = 0;
  for (std::size_t s = 1; s < members.size(); ++s)
    if (members[s]) {
      smallest = static_cast<int>(s);
      break;
    }
  if (smallest == 0) throw std::invalid_argument("semigroup has no positive element in the window");
  const int bound = conductor + smallest;
  if (static_cast<int>(members.size()) < bound)
    throw std::invalid_argument("membership window too short for minimal generators");
  std::vector<int> gens;
  for (int s = 1; s < bound; ++s) {
    if (!members[static_cast<std::size_t>(s)]) continue;
    bool decomposable = false;
    for (int g : gens)
      if (s - g > 0 && members[static_cast<std::size_t>(s - g)]) {
        decomposable = true;
        break;
      }
    if (!decomposable) gens.push_back(s);
  }
  return gens;
}

}  // namespace qhcurve
