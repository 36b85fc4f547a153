#ifndef VERLIE_VER4_HPP
#define VERLIE_VER4_HPP

#include "verlie/gf.hpp"

namespace verlie {

/// The object m*1 + n*P with its canonical basis
///   x_1..x_m (trivial summands), y_1..y_n, y'_1..y'_n,
/// and the canonical differential D x_i = 0, D y_j = y'_j, D y'_j = 0.
/// This basis order is global and never permuted.
struct Ver4Object {
    int m = 0;
    int n = 0;

    int dim() const { return m + 2 * n; }
    int trivial_index(int i) const { return i; }            // x_{i+1}
    int unprimed_index(int j) const { return m + j; }       // y_{j+1}
    int primed_index(int j) const { return m + n + j; }     // y'_{j+1}

    Mat d_matrix(const Field& f) const;
    std::string basis_label(int i) const;
};

Ver4Object make_object(int m, int n);

/// A space carrying an explicit differential with d^2 = 0; used for tensor
/// products, duals and Hom spaces whose induced d-action is not in canonical
/// form.
struct DSpace {
    Mat d;
    int dim() const { return d.rows(); }
};

DSpace canonical_dspace(const Ver4Object& x, const Field& f);

/// Isomorphism type (m, n) of an explicit d-space: n = rank d, m = dim - 2n.
Ver4Object iso_type(const DSpace& s);

/// Braiding c : X (x) Y -> Y (x) X, c(u(x)v) = v(x)u + v'(x)u'.
/// Tensor bases are ordered row-major: index(u_i (x) v_j) = i*dimY + j.
Mat braiding(const DSpace& x, const DSpace& y);

DSpace tensor_space(const DSpace& x, const DSpace& y);  // d (x) 1 + 1 (x) d
DSpace dual_space(const DSpace& x);                     // d^T in the dual basis
DSpace hom_space(const DSpace& x, const DSpace& y);     // A -> D_Y A + A D_X

/// true iff f D_X = D_Y f (with shape checks).
bool is_morphism(const Mat& f, const DSpace& x, const DSpace& y);

/// Coevaluation 1 -> X (x) X*: 1 |-> sum_i b_i (x) b_i*.
Vec coevaluation(const DSpace& x);

/// Evaluation X* (x) X -> 1 as a 1 x dim^2 matrix.
Mat evaluation(const DSpace& x);

}  // namespace verlie

#endif
