#include "verlie/ver4.hpp"

namespace verlie {

Mat Ver4Object::d_matrix(const Field& f) const {
    Mat d(dim(), dim(), f);
    for (int j = 0; j < n; ++j) d(primed_index(j), unprimed_index(j)) = 1;
    return d;
}

std::string Ver4Object::basis_label(int i) const {
    if (i < m) return "x" + std::to_string(i + 1);
    if (i < m + n) return "y" + std::to_string(i - m + 1);
    return "y" + std::to_string(i - m - n + 1) + "'";
}

Ver4Object make_object(int m, int n) {
    if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("make_object: need m + n >= 1");
    return Ver4Object{m, n};
}

DSpace canonical_dspace(const Ver4Object& x, const Field& f) {
    return DSpace{x.d_matrix(f)};
}

Ver4Object iso_type(const DSpace& s) {
    int n = rank(s.d);
    return Ver4Object{s.dim() - 2 * n, n};
}

Mat braiding(const DSpace& x, const DSpace& y) {
    const Field& f = x.d.field();
    int dx = x.dim(), dy = y.dim();
    Mat c(dx * dy, dx * dy, f);
    for (int i = 0; i < dx; ++i)
        for (int j = 0; j < dy; ++j) {
            int src = i * dy + j;
            c(j * dx + i, src) ^= 1;  // v (x) u
            // v' (x) u'
            for (int p = 0; p < dy; ++p) {
                FieldElem vp = y.d(p, j);
                if (!vp) continue;
                for (int q = 0; q < dx; ++q) {
                    FieldElem uq = x.d(q, i);
                    if (!uq) continue;
                    c(p * dx + q, src) ^= f.mul(vp, uq);
                }
            }
        }
    return c;
}

DSpace tensor_space(const DSpace& x, const DSpace& y) {
    const Field& f = x.d.field();
    Mat ix = Mat::identity(x.dim(), f), iy = Mat::identity(y.dim(), f);
    return DSpace{x.d.kronecker(iy) + ix.kronecker(y.d)};
}

DSpace dual_space(const DSpace& x) {
    return DSpace{x.d.transpose()};
}

DSpace hom_space(const DSpace& x, const DSpace& y) {
    // Hom(X, Y) = Y (x) X*; a map A corresponds to the vector of entries
    // A(r, c) at index r*dimX + c, and d acts by A -> D_Y A + A D_X.
    return tensor_space(y, dual_space(x));
}

bool is_morphism(const Mat& f, const DSpace& x, const DSpace& y) {
    if (f.cols() != x.dim() || f.rows() != y.dim())
        throw std::invalid_argument("is_morphism: shape mismatch");
    return f * x.d == y.d * f;
}

Vec coevaluation(const DSpace& x) {
    int d = x.dim();
    Vec v(static_cast<size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i) v[static_cast<size_t>(i) * d + i] = 1;
    return v;
}

Mat evaluation(const DSpace& x) {
    int d = x.dim();
    Mat e(1, d * d, x.d.field());
    for (int i = 0; i < d; ++i) e(0, i * d + i) = 1;
    return e;
}

}  // namespace verlie
