#ifndef VERLIE_FORMS_HPP
#define VERLIE_FORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "verlie/liealg.hpp"
#include "verlie/uea.hpp"

namespace verlie {

/// An invariant bilinear form on gl(m*1 + nP), stored as a Gram matrix over
/// the matrix-unit basis z (x) w*.
struct BilinearForm {
    Mat gram;
    FieldElem lambda = 0;
    FieldElem mu = 0;
};

/// The two-parameter family: on the traceless part the form is mu * Tr(xy);
/// the remaining pairings depend on the parity of m (odd m pairs the identity
/// against itself with lambda; even m pairs the lifted generator
/// h = y_n (x) y_n* with itself by lambda and with the identity by mu).
BilinearForm build_form(const GlAlgebra& gl, FieldElem lambda, FieldElem mu);

struct FormReport {
    bool symmetric = false;
    bool adjoint_invariant = false;   // B(ad_X Y, Z) + B(Y, ad_X Z) = 0
    bool d_invariant = false;         // B(u', v) = B(u, v')
    bool nondegenerate = false;
};

FormReport check_form(const BilinearForm& b, const GlAlgebra& gl);

/// Dimension of the space of adjoint-invariant bilinear forms on gl
/// (full linear solve; no symmetry imposed a priori).
int invariant_form_space_dim(const GlAlgebra& gl);

/// Casimir element sum (gram^-1)_{ij} b_i b_j in U(gl); requires a
/// nondegenerate, adjoint- and d-invariant form.
UEAElement casimir(const BilinearForm& b, const GlAlgebra& gl, const Uea& u);

/// The closed-form Casimir: for even m,
///   (lambda/mu^2) sum_i ((x_i(x)x_i*)^2 + x_i(x)x_i*) + ((lambda+mu)/mu^2) I,
/// for odd m the 1/lambda-scaled analogue.
UEAElement casimir_closed_form(const BilinearForm& b, const GlAlgebra& gl, const Uea& u);

struct CentralityVerdict {
    std::string label;
    std::string family;
    bool central = false;
};

/// Oracle-tests each element of the claimed degree-2/4 central family in
/// U(gl(m*1+nP)); nothing is assumed, every verdict is computed.
std::vector<CentralityVerdict> four_center_check(const GlAlgebra& gl, const Uea& u);

/// Verifies [X,[X,Y]] = [X^[2], Y] + [X', Y X'] in U(gl) over all ordered
/// pairs of matrix-unit basis elements.
bool ad4_identity_check(const GlAlgebra& gl, const Uea& u);

struct ConjectureSolution {
    bool solvable = false;
    int solution_space_dim = 0;       // affine dimension when solvable
    std::vector<std::string> monomials;
    Vec particular;
};

/// Solves, in the coefficients of noncommutative monomials of degree <= 4 in
/// {X, X^[2], X'}, for centrality of X^4 + (X^[2])^2 + F; the affine solution
/// set may be empty.
ConjectureSolution conjecture_solve(const GlAlgebra& gl, const Uea& u, const Vec& x_matrix_coords);

}  // namespace verlie

#endif
