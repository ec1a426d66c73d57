#pragma once

#include "gkm/linalg.hpp"

#include <map>
#include <vector>

namespace gkm {

/// All degree-d monomials in r variables, ordered graded-lexicographically
/// (within the fixed degree: exponent tuples in descending lex order).
/// The ordering is total and deterministic across runs.
struct MonomialBasis {
    int rank = 1;
    int degree = 0;
    std::vector<std::vector<int>> monomials;
    std::map<std::vector<int>, std::size_t> index;

    std::size_t size() const { return monomials.size(); }

    /// Memoized, thread-safe accessor. rank >= 1, degree >= 0.
    static const MonomialBasis& get(int rank, int degree);
};

/// dim of the space of degree-d homogeneous polynomials in r variables,
/// C(d + r - 1, r - 1).
long long dim_homogeneous(int rank, int degree);

/// A homogeneous polynomial, coefficients indexed by MonomialBasis(rank, degree).
struct HomogeneousPoly {
    int rank = 1;
    int degree = 0;
    std::vector<Rational> coeffs;

    static HomogeneousPoly zero(int rank, int degree);
    static HomogeneousPoly constant(int rank, const Rational& c);
    static HomogeneousPoly linear_form(const QVector& alpha);  // <alpha, x>

    bool is_zero() const;
};

/// Exact product; degree adds. Throws on rank mismatch.
HomogeneousPoly poly_multiply(const HomogeneousPoly& a, const HomogeneousPoly& b);
HomogeneousPoly poly_add(const HomogeneousPoly& a, const HomogeneousPoly& b);
HomogeneousPoly poly_scale(const HomogeneousPoly& a, const Rational& c);

/// Substitutes x_i -> variable_images[i], a linear form in out_rank variables.
/// The result is homogeneous of the same degree in out_rank variables.
HomogeneousPoly substitute_linear(const HomogeneousPoly& p,
                                  const std::vector<QVector>& variable_images,
                                  int out_rank);

/// Constraint matrix C with columns indexed by MonomialBasis(rank, degree):
/// a degree-d polynomial g is divisible by the linear form <alpha, x> iff
/// C * coeff(g) = 0. Built by restricting to a rational parametrization of
/// the hyperplane ker alpha (pivot on the first nonzero entry of alpha,
/// denominators cleared). Throws on alpha = 0.
QMatrix divisibility_constraints(int rank, int degree, const QVector& alpha);

}  // namespace gkm
