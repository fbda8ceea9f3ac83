#pragma once
#include "cyclo/algebra.hpp"

namespace cyclo {

// The level-n simplicial coordinate algebra k[t_0..t_n]/(sum t_i - 1),
// presented on the generators t_1..t_n (t_0 eliminated as 1 - sum t_i) and
// truncated at total degree <= d. Weight of a monomial is its total degree.
AlgebraPtr simplex_algebra(int n, int d);

// Face map out of level n (target level n-1), 0 <= r <= n.
AlgebraMorphism simplex_face(int n, int r, int d);

// Degeneracy map out of level n (target level n+1), 0 <= r <= n.
AlgebraMorphism simplex_degeneracy(int n, int r, int d);

// Checks all five simplicial identity families on generators for levels up
// to n_max at degree truncation d; returns violations, empty on success.
std::vector<std::string> check_simplicial_identities(int n_max, int d);

} // namespace cyclo
