#ifndef VERLIE_KOSZUL_HPP
#define VERLIE_KOSZUL_HPP

#include <map>
#include <string>
#include <vector>

#include "verlie/ver4.hpp"

namespace verlie {

/// One bidegree (j, i) of a Koszul complex S^j X (x) Lambda^i X together with
/// the differential into bidegree (j+1, i-1).
struct KoszulSlice {
    int j = 0, i = 0;
    int dim = 0;
    std::vector<std::string> basis_labels;
    Mat differential;                 // dim(j+1, i-1) x dim(j, i)
};

/// The slice for X = P transcribed from the closed-form differential:
/// basis x^j t_i, x^j x_i, x^{j-1}x' t_i, x^{j-1}x' x_i (members with
/// negative powers omitted; Lambda^0 has t_0 = 1, x_0 = 0).
KoszulSlice koszul_P(int j, int i, const Field& f);

/// Generic construction: S^j X as a quotient of X^(x)j by the positioned
/// images of c-1, Lambda^i X as the intersection of those images, and the
/// differential via coevaluation, the middle braiding and multiplication /
/// contraction.
class KoszulGeneric {
public:
    KoszulGeneric(const DSpace& x, int max_total_degree);

    int sym_dim(int j) const;
    int ext_dim(int i) const;
    KoszulSlice slice(int j, int i) const;

private:
    DSpace x_;
    int maxdeg_;
    // S^j: quotient matrices q_j: X^(x)j -> S^j, sections s_j with q s = id,
    // induced d; Lambda^i: inclusion columns into X^(x)i, induced d.
    std::vector<Mat> sym_q_, sym_s_, sym_d_;
    std::vector<Mat> ext_cols_, ext_d_;
    friend KoszulSlice koszul_generic(const DSpace& x, int j, int i);
};

KoszulSlice koszul_generic(const DSpace& x, int j, int i);

struct HomologyReport {
    // homology dimension per bidegree (j, i), i + j <= max degree
    std::map<std::pair<int, int>, int> dims;
    bool d_squared_zero = true;
    bool exact_in_positive_degrees = true;
    int degree_zero_dim = 0;          // homology at (0, 0)
};

/// Homology of the Koszul complex of X at each bidegree of total degree
/// <= max_total_degree. X = P uses the closed-form slices (no guard);
/// the generic path guards on dim(X)^(i+j).
HomologyReport verify_exactness(const Ver4Object& x, int max_total_degree, const Field& f,
                                bool force_generic = false);

}  // namespace verlie

#endif
