#pragma once

// Seeded random inputs shared by the property tests and the verify suites.

#include <cstdint>
#include <random>
#include <vector>

#include "cm/geometry.hpp"

namespace cm::random {

using Rng = std::mt19937_64;

/// Small nonzero rational: integers in [-3,3] or halves.
symb::Rational small_rational(Rng& rng);

/// Sparse polynomial of total degree <= max_degree with `terms` random terms.
symb::Polynomial random_polynomial(Rng& rng, int dim, int max_degree, int terms, bool x_only);

/// f of numerator degree <= 2, denominator 1 or a linear form 1 + c x^mu nonvanishing at the origin.
symb::RF random_function(Rng& rng, int dim);

/// Gamma^mu_{nu al} polynomial in x of degree <= max_degree, about half of the entries nonzero.
geometry::Connection random_connection(Rng& rng, int dim, int max_degree = 2);

/// Degree <= 2 map with unipotent triangular Jacobian for dim >= 2.
/// In dim 1 the only such maps are translations, so x + c + b x^2 is used instead.
geometry::PolyDiffeo random_diffeo(Rng& rng, int dim);

/// Invertible rational matrix with small entries.
std::vector<std::vector<symb::Rational>> random_invertible(Rng& rng, int dim);

}  // namespace cm::random
