#pragma once

#include <string>
#include <vector>

#include "qnoether/integer.hpp"

namespace qn::skewnormal {

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix identity(int n);
IntMatrix transpose(const IntMatrix& a);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix congruence(const IntMatrix& s, const IntMatrix& u);  // u^T s u
bool is_skew(const IntMatrix& s);
// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& a);
Int entry_gcd(const IntMatrix& a);

struct NormalForm {
  IntMatrix U;
  IntMatrix D;
};

// U unimodular with D = U^T S U block diagonal: 2x2 blocks [[0,k],[-k,0]]
// in ascending |k|, then zeros. Throws std::invalid_argument on non-skew input.
NormalForm skew_normal_form(const IntMatrix& s);

// Block parameters k_1..k_n >= 0 of a 2n x 2n skew matrix.
std::vector<Int> quantum_plane_exponents(const IntMatrix& s);

bool check_congruence(const IntMatrix& s, const IntMatrix& u, const IntMatrix& d);

// "dim\nrow\nrow..." text format.
IntMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntMatrix& a);

}  // namespace qn::skewnormal
