#pragma once

#include "heightlab/poly.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>

namespace heightlab {

/// n! * (1 + x + x^2/2! + ... + x^n/n!): monic, coefficient of x^j is n!/j!.
IntPoly laguerre_poly(unsigned long n);

/// |N(beta)| for a root beta of laguerre_poly(n), namely n!.
mpz_class laguerre_norm(unsigned long n);

/// Checks that are necessary (never sufficient) for the Galois group of p
/// to be the alternating group.
struct AlternatingEvidence {
    mpz_class discriminant;
    bool squarefree = false;
    bool disc_is_square = false;
    /// Absent when p is not squarefree.
    std::optional<IrreducibilityEvidence> irreducibility;
};

AlternatingEvidence an_necessary_conditions(const IntPoly& p, std::size_t prime_budget = 20);

} // namespace heightlab
