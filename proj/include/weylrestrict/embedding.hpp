#pragma once

#include "weylrestrict/poly.hpp"
#include "weylrestrict/rational.hpp"
#include "weylrestrict/rootsys.hpp"

namespace wr {

// Inclusion R^small -> R^large placing the small coordinates at the low
// indices and zeros above.  In the usual left-to-right display of f_k..f_1
// this is padding on the left.
struct Embedding {
  int small_dim = 0;
  int large_dim = 0;

  CoordVector pad(const CoordVector& x) const;
  // Drop the padded coordinates.  For type A the caller re-projects.
  CoordVector truncate(const CoordVector& y) const;
  // Polynomial restriction: padded variables set to zero.
  Poly restrict(const Poly& p) const;
};

Embedding make_embedding(int small_dim, int large_dim);
Embedding make_embedding(const RootSystem& small, const RootSystem& large);

}  // namespace wr
