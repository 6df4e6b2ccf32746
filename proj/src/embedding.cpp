#include "weylrestrict/embedding.hpp"

#include "weylrestrict/errors.hpp"

namespace wr {

CoordVector Embedding::pad(const CoordVector& x) const {
  if (static_cast<int>(x.size()) != small_dim) throw DimensionError("pad: wrong source dimension");
  CoordVector y(large_dim);
  for (int i = 0; i < small_dim; ++i) y[i] = x[i];
  return y;
}

CoordVector Embedding::truncate(const CoordVector& y) const {
  if (static_cast<int>(y.size()) != large_dim) throw DimensionError("truncate: wrong source dimension");
  CoordVector x(small_dim);
  for (int i = 0; i < small_dim; ++i) x[i] = y[i];
  return x;
}

Poly Embedding::restrict(const Poly& p) const {
  if (static_cast<int>(p.nvars()) != large_dim) throw DimensionError("restrict: wrong variable count");
  return restrict_prefix(p, small_dim);
}

Embedding make_embedding(int small_dim, int large_dim) {
  if (small_dim < 0 || small_dim > large_dim) throw DimensionError("embedding needs small_dim <= large_dim");
  return {small_dim, large_dim};
}

Embedding make_embedding(const RootSystem& small, const RootSystem& large) {
  if (small.type != large.type) throw std::invalid_argument("embedding between different classical types");
  return make_embedding(small.ambient_dim, large.ambient_dim);
}

}  // namespace wr
