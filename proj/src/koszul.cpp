#include "verlie/koszul.hpp"

#include <cmath>
#include <stdexcept>

#include "verlie/guards.hpp"

namespace verlie {

namespace {

std::string pow_label(const std::string& base, int e) {
    if (e == 0) return "";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

std::string sym_label_P(int j, int which) {
    // which 0: x^j, which 1: x^{j-1} x'
    if (which == 0) return j == 0 ? "1" : pow_label("x", j);
    std::string head = pow_label("x", j - 1);
    return head.empty() ? "x'" : head + "x'";
}

std::string ext_label_P(int i, int which) {
    if (i == 0) return "t0";
    return (which == 0 ? "t" : "x") + std::to_string(i);
}

int sym_dim_P(int j) { return j == 0 ? 1 : 2; }
int ext_dim_P(int i) { return i == 0 ? 1 : 2; }

}  // namespace

KoszulSlice koszul_P(int j, int i, const Field& f) {
    if (j < 0 || i < 0) throw std::invalid_argument("koszul_P: negative bidegree");
    KoszulSlice s;
    s.j = j;
    s.i = i;
    int sd = sym_dim_P(j), ed = ext_dim_P(i);
    s.dim = sd * ed;
    for (int a = 0; a < sd; ++a)
        for (int b = 0; b < ed; ++b)
            s.basis_labels.push_back(sym_label_P(j, a) + "(x)" + ext_label_P(i, b));

    if (i == 0) {
        s.differential = Mat(0, s.dim, f);
        return s;
    }
    int tsd = sym_dim_P(j + 1), ted = ext_dim_P(i - 1);
    Mat d(tsd * ted, s.dim, f);
    // source index (a, b): a = 0 -> x^j, a = 1 -> x^{j-1}x'; b = 0 -> t_i, b = 1 -> x_i
    // target index (a', b') over (x^{j+1}, x^j x') and (t_{i-1}, x_{i-1}).
    auto src = [&](int a, int b) { return a * ed + b; };
    auto tgt = [&](int a, int b) { return a * ted + b; };
    // alpha = coefficient of x^j (x) t_i: image x^j x' (x) t_{i-1}
    d(tgt(1, 0), src(0, 0)) = 1;
    // beta = x^j (x) x_i: image x^{j+1} (x) t_{i-1} + x^j x' (x) x_{i-1}
    d(tgt(0, 0), src(0, 1)) = 1;
    if (i - 1 >= 1) d(tgt(1, 1), src(0, 1)) = 1;
    if (j >= 1) {
        // gamma = x^{j-1}x' (x) t_i: image 0
        // delta = x^{j-1}x' (x) x_i: image x^j x' (x) t_{i-1}
        d(tgt(1, 0), src(1, 1)) = 1;
    }
    s.differential = d;
    return s;
}

namespace {

// basis matrix of the intersection of two column spans
Mat intersect_colspaces(const Mat& a, const Mat& b) {
    const Field& f = a.field();
    if (a.cols() == 0 || b.cols() == 0) return Mat(a.rows(), 0, f);
    Mat joint(a.rows(), a.cols() + b.cols(), f);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) joint(r, c) = a(r, c);
        for (int c = 0; c < b.cols(); ++c) joint(r, a.cols() + c) = b(r, c);
    }
    std::vector<Vec> ker = kernel_basis(joint);
    std::vector<Vec> inter;
    for (const Vec& k : ker) {
        Vec u(k.begin(), k.begin() + a.cols());
        Vec v(a.rows(), 0);
        for (int c = 0; c < a.cols(); ++c)
            if (u[c])
                for (int r = 0; r < a.rows(); ++r) v[r] ^= f.mul(u[c], a(r, c));
        inter.push_back(std::move(v));
    }
    if (inter.empty()) return Mat(a.rows(), 0, f);
    Mat rows = row_space(Mat::from_rows(inter, a.rows(), f));
    return rows.transpose();
}

// column-space basis
Mat colspace(const Mat& a) { return row_space(a.transpose()).transpose(); }

}  // namespace

KoszulGeneric::KoszulGeneric(const DSpace& x, int max_total_degree)
    : x_(x), maxdeg_(max_total_degree) {
    const Field& f = x.d.field();
    int dx = x.dim();
    double work = std::pow(static_cast<double>(dx), maxdeg_);
    guard_check(static_cast<long long>(work), 1LL << 13, "koszul tensor power size");

    // tensor powers and their differentials
    std::vector<DSpace> pow;
    pow.push_back(DSpace{Mat(1, 1, f)});
    for (int k = 1; k <= maxdeg_; ++k) pow.push_back(tensor_space(pow[k - 1], x));

    // Lambda^2 = im(c - 1) in X (x) X
    Mat c2 = braiding(x, x) + Mat::identity(dx * dx, f);
    Mat lam2 = colspace(c2);

    // degree-k ideal part W_k = sum of positioned Lambda^2 blocks
    auto ideal_cols = [&](int k) {
        if (k < 2) return Mat(static_cast<int>(std::pow(dx, k)), 0, f);
        int dk = static_cast<int>(std::pow(dx, k));
        std::vector<Vec> cols;
        for (int p = 0; p + 2 <= k; ++p) {
            int left = static_cast<int>(std::pow(dx, p));
            int right = static_cast<int>(std::pow(dx, k - p - 2));
            for (int lc = 0; lc < left; ++lc)
                for (int w = 0; w < lam2.cols(); ++w)
                    for (int rc = 0; rc < right; ++rc) {
                        Vec v(dk, 0);
                        for (int mid = 0; mid < dx * dx; ++mid) {
                            FieldElem e = lam2(mid, w);
                            if (!e) continue;
                            long long idx = (static_cast<long long>(lc) * dx * dx + mid) * right + rc;
                            v[static_cast<size_t>(idx)] ^= e;
                        }
                        cols.push_back(std::move(v));
                    }
        }
        if (cols.empty()) return Mat(dk, 0, f);
        return row_space(Mat::from_rows(cols, dk, f)).transpose();
    };

    sym_q_.resize(maxdeg_ + 1);
    sym_s_.resize(maxdeg_ + 1);
    sym_d_.resize(maxdeg_ + 1);
    ext_cols_.resize(maxdeg_ + 1);
    ext_d_.resize(maxdeg_ + 1);

    for (int k = 0; k <= maxdeg_; ++k) {
        int dk = static_cast<int>(std::pow(dx, k));
        Mat w = ideal_cols(k);
        // reduced row echelon of W^T gives pivot coordinates; the quotient
        // keeps the non-pivot coordinates.
        Mat rr = row_space(w.transpose());
        std::vector<int> pivot(dk, -1);
        for (int r = 0; r < rr.rows(); ++r)
            for (int c = 0; c < dk; ++c)
                if (rr(r, c)) { pivot[c] = r; break; }
        std::vector<int> keep;
        for (int c = 0; c < dk; ++c) {
            bool is_pivot = false;
            for (int r = 0; r < rr.rows(); ++r) {
                int pc = -1;
                for (int cc = 0; cc < dk; ++cc)
                    if (rr(r, cc)) { pc = cc; break; }
                if (pc == c) { is_pivot = true; break; }
            }
            if (!is_pivot) keep.push_back(c);
        }
        int sk = static_cast<int>(keep.size());
        // q: reduce modulo rr rows, read off kept coordinates
        Mat q(sk, dk, f);
        for (int c = 0; c < dk; ++c) {
            Vec v(dk, 0);
            v[c] = 1;
            for (int r = 0; r < rr.rows(); ++r) {
                int pc = -1;
                for (int cc = 0; cc < dk; ++cc)
                    if (rr(r, cc)) { pc = cc; break; }
                if (pc >= 0 && v[pc]) {
                    FieldElem s = v[pc];
                    for (int cc = 0; cc < dk; ++cc) v[cc] ^= f.mul(s, rr(r, cc));
                }
            }
            for (int i2 = 0; i2 < sk; ++i2) q(i2, c) = v[keep[i2]];
        }
        Mat s(dk, sk, f);
        for (int i2 = 0; i2 < sk; ++i2) s(keep[i2], i2) = 1;
        sym_q_[k] = q;
        sym_s_[k] = s;
        sym_d_[k] = q * pow[k].d * s;

        // Lambda^k: intersection over positions of im(c_p - 1)
        if (k == 0 || k == 1) {
            ext_cols_[k] = Mat::identity(dk, f);
        } else {
            Mat inter(dk, 0, f);
            bool first = true;
            for (int p = 0; p + 2 <= k; ++p) {
                int left = static_cast<int>(std::pow(dx, p));
                int right = static_cast<int>(std::pow(dx, k - p - 2));
                Mat cp = Mat::identity(left, f)
                             .kronecker(c2)
                             .kronecker(Mat::identity(right, f));
                Mat im = colspace(cp);
                inter = first ? im : intersect_colspaces(inter, im);
                first = false;
            }
            ext_cols_[k] = inter;
        }
        // induced d on Lambda^k (solve coordinates in the subspace)
        int ek = ext_cols_[k].cols();
        Mat ed(ek, ek, f);
        for (int c = 0; c < ek; ++c) {
            Vec img = pow[k].d.apply(ext_cols_[k].col(c));
            LinearSolution sol = solve_linear(ext_cols_[k], img);
            if (!sol.consistent) throw std::logic_error("koszul: Lambda not d-stable");
            for (int r = 0; r < ek; ++r) ed(r, c) = sol.particular[r];
        }
        ext_d_[k] = ed;
    }
}

int KoszulGeneric::sym_dim(int j) const { return sym_q_[j].rows(); }
int KoszulGeneric::ext_dim(int i) const { return ext_cols_[i].cols(); }

KoszulSlice KoszulGeneric::slice(int j, int i) const {
    const Field& f = x_.d.field();
    int dx = x_.dim();
    KoszulSlice s;
    s.j = j;
    s.i = i;
    int sd = sym_dim(j), ed = ext_dim(i);
    s.dim = sd * ed;
    for (int a = 0; a < sd; ++a)
        for (int b = 0; b < ed; ++b)
            s.basis_labels.push_back("s" + std::to_string(a) + "(x)l" + std::to_string(b));
    if (i == 0 || j + 1 + i - 1 > maxdeg_) {
        s.differential = Mat(i == 0 ? 0 : sym_dim(j + 1) * ext_dim(i - 1), s.dim, f);
        return s;
    }

    int tsd = sym_dim(j + 1), ted = ext_dim(i - 1);
    Mat out(tsd * ted, s.dim, f);
    int dj = static_cast<int>(std::pow(dx, j));
    int di1 = static_cast<int>(std::pow(dx, i - 1));

    // mu: X (x) S^j -> S^{j+1} on a lifted representative
    auto mu = [&](int bvec, const Vec& sym_coord) {
        Vec lift = sym_s_[j].apply(sym_coord);
        Vec big(static_cast<size_t>(dx) * dj, 0);
        for (int t = 0; t < dj; ++t)
            if (lift[t]) big[static_cast<size_t>(bvec) * dj + t] = lift[t];
        return sym_q_[j + 1].apply(big);
    };
    // contraction of the g-th dual vector against the first slot of a
    // Lambda^i column, in Lambda^{i-1} coordinates
    auto contract = [&](int g, const Vec& ext_col_vec) {
        Vec low(di1, 0);
        for (int t = 0; t < di1; ++t) low[t] = ext_col_vec[static_cast<size_t>(g) * di1 + t];
        LinearSolution sol = solve_linear(ext_cols_[i - 1], low);
        if (!sol.consistent) throw std::logic_error("koszul: contraction left Lambda");
        return sol.particular;
    };

    for (int a = 0; a < sd; ++a)
        for (int b = 0; b < ed; ++b) {
            Vec sym_coord(sd, 0);
            sym_coord[a] = 1;
            Vec ext_vec = ext_cols_[i].col(b);
            Vec dsym = sym_d_[j].apply(sym_coord);
            int col = a * ed + b;
            for (int g = 0; g < dx; ++g) {
                // term mu(b_g (x) s) (x) contract(b_g*, w)
                Vec ms = mu(g, sym_coord);
                Vec cw = contract(g, ext_vec);
                for (int r1 = 0; r1 < tsd; ++r1)
                    for (int r2 = 0; r2 < ted; ++r2)
                        out(r1 * ted + r2, col) ^= f.mul(ms[r1], cw[r2]);
                // braiding correction: mu(b_g (x) d s) (x) contract(d b_g*, w)
                if (!vec_is_zero(dsym)) {
                    Vec ms2 = mu(g, dsym);
                    // d(b_g*) = sum_r D(g, r) b_r*
                    Vec cw2(ted, 0);
                    for (int r = 0; r < dx; ++r) {
                        FieldElem e = x_.d(g, r);
                        if (!e) continue;
                        Vec c1 = contract(r, ext_vec);
                        for (int r2 = 0; r2 < ted; ++r2) cw2[r2] ^= f.mul(e, c1[r2]);
                    }
                    for (int r1 = 0; r1 < tsd; ++r1)
                        for (int r2 = 0; r2 < ted; ++r2)
                            out(r1 * ted + r2, col) ^= f.mul(ms2[r1], cw2[r2]);
                }
            }
        }
    s.differential = out;
    return s;
}

KoszulSlice koszul_generic(const DSpace& x, int j, int i) {
    KoszulGeneric k(x, i + j + 1);
    return k.slice(j, i);
}

HomologyReport verify_exactness(const Ver4Object& x, int max_total_degree, const Field& f,
                                bool force_generic) {
    HomologyReport rep;
    bool fast = (x.m == 0 && x.n == 1) && !force_generic;
    KoszulGeneric* gen = nullptr;
    if (!fast) gen = new KoszulGeneric(canonical_dspace(x, f), max_total_degree + 1);

    auto get_slice = [&](int j, int i) {
        return fast ? koszul_P(j, i, f) : gen->slice(j, i);
    };

    for (int total = 0; total <= max_total_degree; ++total)
        for (int i = 0; i <= total; ++i) {
            int j = total - i;
            KoszulSlice cur = get_slice(j, i);
            int out_rank = rank(cur.differential);
            int ker = cur.dim - out_rank;
            int in_rank = 0;
            if (j >= 1) {
                KoszulSlice prev = get_slice(j - 1, i + 1);
                in_rank = rank(prev.differential);
                // d^2 = 0
                if (!(cur.differential * prev.differential).is_zero())
                    rep.d_squared_zero = false;
            }
            int h = ker - in_rank;
            rep.dims[{j, i}] = h;
            if (total == 0)
                rep.degree_zero_dim = h;
            else if (h != 0)
                rep.exact_in_positive_degrees = false;
        }
    delete gen;
    return rep;
}

}  // namespace verlie
