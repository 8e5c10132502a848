#include "cayley/random.hpp"

namespace cayley {

Element random_element(SplitMix64& rng, std::size_t dim) {
  Element x(dim);
  for (std::size_t i = 0; i < dim; ++i) x[i] = rng.complex_unit_box();
  return x;
}

Element random_real_element(SplitMix64& rng, std::size_t dim) {
  Element x(dim);
  for (std::size_t i = 0; i < dim; ++i) x[i] = rng.uniform(-1.0, 1.0);
  return x;
}

}  // namespace cayley
