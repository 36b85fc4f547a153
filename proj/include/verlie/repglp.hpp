#ifndef VERLIE_REPGLP_HPP
#define VERLIE_REPGLP_HPP

#include <optional>
#include <string>
#include <vector>

#include "verlie/gf.hpp"

namespace verlie {

/// A finite-dimensional representation of gl(P), given by the action of the
/// generators x, y, y', e together with the module's own d-action.
struct GlPModule {
    const Field* field = nullptr;
    int dim = 0;
    Mat d;                 // D_M, D_M^2 = 0
    Mat x, y, yp, e;

    std::string describe() const;
};

struct SimpleLabel {
    int eps = 0;
    FieldElem a = 0;
    FieldElem b = 0;
    bool operator==(const SimpleLabel& o) const { return eps == o.eps && a == o.a && b == o.b; }
    std::string to_string(const Field& f) const;
};

/// L(eps, a, b): for eps = 1 the two-dimensional module on P; for eps = 0 and
/// a != 0 the two-dimensional module on 1+1; for eps = 0, a = 0 the
/// one-dimensional module. The x-matrix entry is a^2, so x^2 acts by the
/// scalar a^2 throughout.
GlPModule make_simple(int eps, FieldElem a, FieldElem b, const Field& f);

/// All module invariants: D^2 = 0, equivariance rho(g') = [D, rho(g)],
/// bracket compatibility rho([g,h]) = rho(g)rho(h) + rho(h)rho(g) +
/// rho(h')rho(g'), and e central idempotent.
bool check_module(const GlPModule& m);

/// Exhaustive subspace sweep for proper nonzero invariant subspaces.
bool is_simple_module(const GlPModule& m);

/// Tensor product through the braiding:
/// g(m (x) n) = gm (x) n + m (x) gn + m' (x) g'n.
GlPModule tensor_modules(const GlPModule& a, const GlPModule& b);

/// Reads (eps, a, b) off a simple module; a is recovered from the scalar of
/// rho(x)^2 by the inverse Frobenius, b from the y-eigenvalue on ker rho(y')
/// shifted by one (two-dimensional eps = 1), from the y-scalar (dim 1), and
/// canonicalized to the lexicographically least of {b, b+1} when eps = 0,
/// a = 1.
SimpleLabel identify_simple(const GlPModule& m);

struct CompositionSeries {
    std::vector<SimpleLabel> factors;   // head first
    bool split = false;
};

CompositionSeries composition_series(const GlPModule& m);

/// The fixed restriction matrices of the general-linear group
/// representations: trivial, T1, T2, T3, chi, xi, xiT1, xiT3.
GlPModule glp_restrict(const std::string& name, const Field& f);

/// All invariant subspaces, as echelon-basis row matrices (proper, nonzero).
std::vector<Mat> invariant_subspaces(const GlPModule& m);

/// Submodule on an invariant subspace / quotient by one.
GlPModule restrict_module(const GlPModule& m, const Mat& rows);
GlPModule quotient_module(const GlPModule& m, const Mat& rows);

}  // namespace verlie

#endif
