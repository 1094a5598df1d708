#pragma once

#include "bord/steenrod/steenrod.hpp"

namespace bord::steenrod {

/// Sq^i(w_j) by the Wu formula, as a polynomial in w_1..w_n (generator k-1 is w_k).
Polynomial wu_sq(int n, int i, int j);

/// Z2[w_1..w_n] with its Wu-formula action; no relations, so complete in every degree.
SteenrodSpec bo_spec(int n, int degree_bound);

/// Restriction of a Wu-type action to the generators w_k with k in `kept`, the others set to
/// zero. `scale` multiplies every degree (1 for w classes, 2 for mod-2 Chern classes, 4 for
/// symplectic Pontryagin classes); with scale s > 1 only Sq^{s*i} is nonzero. Generator names
/// are prefix + index.
SteenrodSpec wu_type_spec(const std::string& name, int n, const std::vector<int>& kept, int scale,
                          const std::string& prefix, int degree_bound);

/// (Sq^2 Sq^1 x + x Sq^1 x) x^2 + Sq^1 x Sq^2(x^2) + x Sq^3(x^2), for a degree-2 class x.
Polynomial wu_lemma_expression(const SteenrodSpec& spec, const Polynomial& x);

/// The expression above with x = w_2 in Z2[w2,w3,w4,w5] equals w5 w2^2 + w3^3 and is nonzero.
bool wu_manifold_lemma_check();

} // namespace bord::steenrod
