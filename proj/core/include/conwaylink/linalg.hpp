#pragma once

#include <optional>
#include <vector>

#include "conwaylink/laurent.hpp"

namespace cwl {

// Exact rational linear algebra used by the fitting and conversion routines.
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

struct LinearSolve {
    bool consistent = false;
    int rank = 0;            // rank of the coefficient matrix
    int rank_augmented = 0;  // rank of [A | b]
    RatVec solution;         // a particular solution (free variables set to 0)
    std::vector<int> free_columns;
};

// Solve A x = b exactly over the rationals (Gauss-Jordan).
LinearSolve solve_linear(RatMat A, RatVec b);

int rank_rational(RatMat A);

// Fraction-free (Bareiss) determinant of a square matrix over a Laurent
// polynomial ring; all divisions are exact.
LaurentPoly bareiss_determinant(std::vector<std::vector<LaurentPoly>> m);

// Rank of a matrix with Laurent polynomial entries over the fraction field.
int rank_poly_matrix(std::vector<std::vector<LaurentPoly>> m);

}  // namespace cwl
