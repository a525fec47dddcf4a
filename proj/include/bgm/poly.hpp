#pragma once

#include <random>
#include <string>
#include <vector>

#include "bgm/linalg.hpp"

namespace bgm {

// Dense univariate polynomials over F_p, coefficients low degree first,
// never with trailing zeros (the zero polynomial is empty).
using Poly = std::vector<elem>;

namespace poly {

int deg(const Poly& f);
void trim(Poly& f);
Poly monic(const Field& F, Poly f);
Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
void divmod(const Field& F, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly mod(const Field& F, const Poly& a, const Poly& m);
Poly div(const Field& F, const Poly& a, const Poly& b);
Poly gcd(const Field& F, Poly a, Poly b);
Poly derivative(const Field& F, const Poly& f);
Poly powmod(const Field& F, Poly b, std::uint64_t e, const Poly& m);
Poly x();
bool is_irreducible(const Field& F, const Poly& f);
// a nontrivial monic factor g of the squarefree polynomial f, or {} if f is irreducible
Poly split_squarefree(const Field& F, const Poly& f, std::mt19937_64& rng);
Poly squarefree_part(const Field& F, const Poly& f);

Mat evaluate(const Field& F, const Poly& f, const Mat& m);
Poly minimal_polynomial(const Field& F, const Mat& m);

std::string to_string(const Field& F, const Poly& f);

}  // namespace poly
}  // namespace bgm
