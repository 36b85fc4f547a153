#ifndef VERLIE_COHOM_HPP
#define VERLIE_COHOM_HPP

#include <vector>

#include "verlie/gf.hpp"

namespace verlie {

/// An ordinary Lie algebra (alternating bracket, characteristic 2) together
/// with a representation: rho([a,b]) = rho(a)rho(b) + rho(b)rho(a).
struct OrdinaryLieModule {
    const Field* field = nullptr;
    int ldim = 0;                      // dim L
    int mdim = 0;                      // dim M
    std::vector<FieldElem> l_c;        // ldim^3 structure constants
    std::vector<Mat> rho;              // ldim action matrices, mdim x mdim

    Vec l_bracket_basis(int i, int j) const;
    bool module_axiom_holds() const;
};

struct CohomologyResult {
    int dimension = 0;
    std::vector<Vec> cocycles;      // coordinates in the cochain space
    std::vector<Vec> coboundaries;
    int cochain_dim = 0;
};

/// Chevalley-Eilenberg cohomology in degree 1 or 2. In degree 2 the ordinary
/// complex uses alternating cochains; the extended variant uses symmetric
/// 2-cochains with the same 2-cocycle condition and the ordinary
/// coboundaries.
///
/// Cochain coordinates: degree 1 is Hom(L, M) flattened as (l * mdim + m);
/// degree 2 ordinary enumerates pairs i < j, extended enumerates i <= j,
/// each pair contributing mdim coordinates.
CohomologyResult ce_cohomology(const OrdinaryLieModule& lm, int degree, bool extended);

/// The quadratic refinement x -> c(x, x) of a symmetric 2-cochain, evaluated
/// on the basis. It is additive and Frobenius-semilinear; for extended
/// 2-cocycles its values are invariant under the module action.
struct PMapResult {
    std::vector<Vec> values;           // p(c)(e_i)
    bool invariant = false;            // rho(z) p(c)(x) = 0 for all z, x
    bool vanishes_on_derived = false;  // p(c)([x,y]) = 0 for all basis pairs
};
PMapResult p_map(const OrdinaryLieModule& lm, const std::vector<Vec>& sym_cochain);

/// Evaluates a symmetric 2-cochain given in extended coordinates (i <= j).
Vec sym_cochain_eval(const OrdinaryLieModule& lm, const std::vector<Vec>& c, const Vec& x,
                     const Vec& y);

}  // namespace verlie

#endif
