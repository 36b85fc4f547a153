#ifndef VERLIE_LIEALG_HPP
#define VERLIE_LIEALG_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "verlie/ver4.hpp"

namespace verlie {

/// Structure constants of a candidate bracket on a space with differential d.
/// c[i][j][k] is the coefficient of b_k in [b_i, b_j], stored flat at
/// index (i*dim + j)*dim + k.
struct BracketStructure {
    Mat d;                          // explicit d-action, d^2 = 0
    std::vector<FieldElem> c;

    int dim() const { return d.rows(); }
    const Field& field() const { return d.field(); }

    FieldElem coeff(int i, int j, int k) const {
        return c[(static_cast<size_t>(i) * dim() + j) * dim() + k];
    }
    FieldElem& coeff(int i, int j, int k) {
        return c[(static_cast<size_t>(i) * dim() + j) * dim() + k];
    }

    Vec bracket_basis(int i, int j) const;     // [b_i, b_j]
    Vec bracket(const Vec& u, const Vec& v) const;
    Vec d_apply(const Vec& u) const { return d.apply(u); }

    bool operator==(const BracketStructure& o) const { return d == o.d && c == o.c; }
    bool operator<(const BracketStructure& o) const { return c < o.c; }
};

BracketStructure zero_bracket(const DSpace& s);
BracketStructure zero_bracket_canonical(const Ver4Object& x, const Field& f);

struct AxiomReport {
    bool skew = false;
    bool derivation = false;
    bool jacobi = false;
    bool lie_condition = false;
    std::vector<std::array<int, 3>> witnesses;   // failing basis tuples (padded with -1)

    bool all() const { return skew && derivation && jacobi && lie_condition; }
};

AxiomReport check_axioms(const BracketStructure& l);

/// Jacobi identity alone, over all basis triples (the quadratic part of the
/// axiom system; the linear axioms are assumed already enforced).
bool jacobi_holds(const BracketStructure& l);

/// gl(X) = X (x) X* with [A,B] = AB + BA + A'B' (characteristic 2) and
/// A' = DA + AD.  Carries both the matrix-unit basis z (x) w* and a canonical
/// PBW-ready basis (trivial generators x_i (x) x_j*, then pairs u |-> du).
struct GlAlgebra {
    Ver4Object space;                 // the underlying X
    Ver4Object obj;                   // iso type of gl(X) itself
    BracketStructure matrix_basis;    // structure constants over z (x) w*
    BracketStructure canonical;       // structure constants over the canonical basis
    Mat canon_to_matrix;              // columns: canonical basis vectors in z (x) w* coords
    Mat matrix_to_canon;
    std::vector<std::string> matrix_labels;   // "z(x)w*" style labels
    Vec identity_matrix_vec;          // I in matrix-basis coordinates
    Vec trace_form;                   // tr as a functional on matrix-basis coords

    int dim() const { return matrix_basis.dim(); }

    /// Index of z (x) w* in the matrix basis (z, w are X basis indices).
    int unit_index(int z, int w) const { return z * space.dim() + w; }

    Vec to_canonical(const Vec& v) const { return matrix_to_canon.apply(v); }
    Vec to_matrix(const Vec& v) const { return canon_to_matrix.apply(v); }

    /// The element as a dim(X) x dim(X) matrix, from matrix-basis coordinates.
    Mat as_matrix(const Vec& v) const;
    Vec from_matrix(const Mat& m) const;

    /// Matrix square of an element (the restricted power), matrix-basis coords.
    Vec matrix_square(const Vec& v) const;
};

GlAlgebra make_gl(const Ver4Object& x, const Field& f);

/// A Lie algebra presented on a subspace basis of an ambient bracket
/// structure, with the change of coordinates kept.
struct SubAlgebra {
    BracketStructure structure;       // bracket in the subspace basis
    Mat basis;                        // columns: subspace basis in ambient coords
    Vec identity_coords;              // I in subspace coords (sl/psl bookkeeping)
};

SubAlgebra make_sl(const GlAlgebra& gl);
/// psl = sl / <I>; requires m even (I traceless).
SubAlgebra make_psl(const GlAlgebra& gl);

/// The three bracket structures on P over any field.
BracketStructure make_p_abelian(const Field& f);
BracketStructure make_p_semisimple(const Field& f);   // [x',x] = x'
BracketStructure make_p_nilpotent(const Field& f);    // [x,x] = x'

enum class NamedAlgebra { gl, sl, psl, P_a, P_s, P_n };
BracketStructure construct(NamedAlgebra name, const Ver4Object& x, const Field& f);

/// Transport of structure constants along an invertible morphism g:
/// [u,v]_new = g [g^-1 u, g^-1 v]_old.
BracketStructure transport(const BracketStructure& l, const Mat& g);

}  // namespace verlie

#endif
