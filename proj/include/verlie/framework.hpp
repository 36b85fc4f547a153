#ifndef VERLIE_FRAMEWORK_HPP
#define VERLIE_FRAMEWORK_HPP

#include <array>
#include <string>
#include <vector>

#include "verlie/liealg.hpp"

namespace verlie {

/// Classification data for a Lie structure on m*1 + nP:
///   L   an ordinary (m+n)-dimensional Lie algebra (basis w_0..w_{m+n-1}),
///   d   an injection V -> L (columns: images of v_1..v_n),
///   f   the action of L on V (one n x n matrix per L basis element),
///   A   a map L -> Hom(V, L),
///   B   a symmetric map V (x) V -> V vanishing on the diagonal,
///   C   a map V (x) V -> L with C(x,y) + C(y,x) = [y', x'].
/// Only the (i <= j) entries of C are stored; the rest follow from the
/// constraint.
struct FrameworkTuple {
    const Field* field = nullptr;
    int m = 0, n = 0;

    std::vector<FieldElem> l_c;     // (m+n)^3 structure constants of L
    Mat d_incl;                     // (m+n) x n
    std::vector<Mat> f_act;         // size m+n, each n x n
    std::vector<Mat> a_act;         // size m+n, each (m+n) x n: A(w_k) v_j
    std::vector<Vec> b_map;         // n*n entries, each Vec(n)
    std::vector<Vec> c_upper;       // n*n entries, each Vec(m+n); only i<=j used

    int ldim() const { return m + n; }

    Vec l_bracket_basis(int i, int j) const;
    Vec l_bracket(const Vec& a, const Vec& b) const;
    Mat f_of(const Vec& w) const;            // f extended linearly over L
    Vec a_of(const Vec& w, const Vec& v) const;  // A(w)v, linear in both
    Vec b_of(int i, int j) const { return b_map[static_cast<size_t>(i) * n + j]; }
    Vec c_of(int i, int j) const;            // full C including derived lower part
};

FrameworkTuple empty_tuple(int m, int n, const Field& f);

struct RelationReport {
    // structural prerequisites
    bool l_alternating = false;
    bool l_jacobi = false;
    bool f_representation = false;
    bool a_derivation = false;
    bool b_symmetric_alternating = false;
    bool d_injective = false;
    bool d_equivariant = false;    // [d(v), z] = d(f(z)v)
    // relation 0 reconstructed from the prose, then the displayed list
    std::array<bool, 9> relation{};
    bool all() const;
    std::vector<std::string> failures() const;
};

struct AssembledStructure {
    BracketStructure structure;    // over the canonical object (m, n)
    RelationReport report;
    Mat l_embedding;               // (m+2n) x (m+n): L basis into ambient coords
};

/// Builds the bracket on V + L defined by the tuple and checks the
/// classification relations. The relation report is all-true exactly when
/// the assembled bracket satisfies the Lie axioms (cross-validated in tests).
AssembledStructure assemble_from_tuple(const FrameworkTuple& t);

}  // namespace verlie

#endif
