#pragma once

#include "syzcert/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace syzcert {

enum class LieType { A, B, C, D, E, F, G };

LieType lie_type_from_char(char c);
char lie_type_to_char(LieType t);

/// A rational homogeneous space G/P of Picard number one: simple type, rank,
/// and the marked node of the maximal parabolic (Bourbaki numbering).
///
/// Familiar spaces: (A, n, 1) projective n-space; (A, n, m) Grassmannian of
/// m-planes in (n+1)-space; (B, m, 1) quadric of dimension 2m-1; (D, m, 1)
/// quadric of dimension 2m-2; (C, m, 1) projective (2m-1)-space; (B/D, m, last)
/// spinor varieties; (G, 2, *) the two G_2 homogeneous spaces.
struct RootDatum {
    LieType type = LieType::A;
    int rank = 1;
    int marked_node = 1;
};

/// One positive root alpha in simple-root coordinates with the two coroot
/// pairings the product formula needs.
struct PositiveRoot {
    std::vector<int> simple_coeffs;
    int lambda_pairing = 0;  // <omega_marked, alpha^vee>
    int rho_pairing = 0;     // <rho, alpha^vee> = sum of coroot coefficients
};

struct RootTable {
    RootDatum datum;
    std::vector<PositiveRoot> roots;  // sorted by height, then reverse-lex
};

// Cartan matrix in the convention C[i][j] = <alpha_j, alpha_i^vee>, 0-indexed.
// Throws on rank outside the type's range (A >= 1, B/C >= 2, D >= 3, E 6..8,
// F = 4, G = 2).
std::vector<std::vector<int>> cartan_matrix(LieType type, int rank);

// Positive roots with coroot pairings, generated by root strings from the
// Cartan matrix; all arithmetic exact, pairings verified integral.
RootTable build_root_table(const RootDatum& rd);

// Euler characteristic polynomial of the marked line bundle:
//   prod over positive roots alpha with <lambda, alpha^vee> != 0 of
//   (t <lambda, alpha^vee>/<rho, alpha^vee> + 1).
Polynomial hilbert_homogeneous(const RootTable& rt);
Polynomial hilbert_homogeneous(const RootDatum& rd);

// Number of positive roots with nonzero lambda-pairing = dim G/P = degree of
// the polynomial above.
int dim_homogeneous(const RootTable& rt);
int dim_homogeneous(const RootDatum& rd);

// The (lambda-pairing, rho-pairing) pairs of the roots contributing a linear
// factor, in table order.
std::vector<std::pair<int, int>> factored_form(const RootTable& rt);

}  // namespace syzcert
