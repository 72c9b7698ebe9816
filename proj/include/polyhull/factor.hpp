#pragma once

#include <stdexcept>
#include <vector>

#include "polyhull/bipoly.hpp"
#include "polyhull/unipoly.hpp"

namespace polyhull {

struct DegreeTooLarge : std::runtime_error {
    explicit DegreeTooLarge(int deg, int cap)
        : std::runtime_error("total degree " + std::to_string(deg) +
                             " exceeds factorization cap " + std::to_string(cap)) {}
};

struct Factor {
    BiPoly poly;       // monic under graded lex, non-constant
    int multiplicity;  // >= 1
};

// unit * prod(poly^multiplicity) reconstructs the factored polynomial
// exactly; factors are sorted by BiPoly::compare for determinism.
struct FactorList {
    GaussianRational unit;
    std::vector<Factor> factors;

    BiPoly reconstruct() const;
};

// Degree cap honoured by factor_irreducible; POLYHULL_MAX_DEGREE overrides
// the default of 16.
int factorization_degree_cap();

// Complete factorization over Q(i): monomial part, square-free decomposition
// via GCDs, then irreducible splitting (generic-line univariate image plus
// power-series lifting with exact linear algebra, verified by exact
// division). Throws DegreeTooLarge beyond the cap.
FactorList factor_irreducible(const BiPoly& f);

// Monic irreducible factors with multiplicity; unit recovered separately by
// the caller when needed.
std::vector<std::pair<UniPoly, int>> factor_univariate(const UniPoly& f);

}  // namespace polyhull
