#include "verlie/repglp.hpp"

#include <algorithm>
#include <set>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "verlie/guards.hpp"

namespace verlie {

namespace {

// gl(P) bracket table on the generator order (x, y, y', e), with the
// d-images x -> e, y -> y', y' -> 0, e -> 0.
// Entries: [g_i, g_j] as coefficients over (x, y, y', e).
const int GX = 0, GY = 1, GYP = 2, GE = 3;

Vec glp_bracket(int i, int j) {
    auto v = [](int a, int b, int c, int d) { return Vec{static_cast<FieldElem>(a),
                                                         static_cast<FieldElem>(b),
                                                         static_cast<FieldElem>(c),
                                                         static_cast<FieldElem>(d)}; };
    if (i == GX && j == GX) return v(0, 0, 0, 1);       // [x,x] = e
    if ((i == GX && j == GY) || (i == GY && j == GX)) return v(1, 0, 1, 0);   // x + y'
    if ((i == GX && j == GYP) || (i == GYP && j == GX)) return v(0, 0, 0, 1); // e
    if ((i == GY && j == GYP) || (i == GYP && j == GY)) return v(0, 0, 1, 0); // y'
    return v(0, 0, 0, 0);
}

int dprime_of(int g) {
    if (g == GX) return GE;
    if (g == GY) return GYP;
    return -1;
}

Mat zero_like(const GlPModule& m) { return Mat(m.dim, m.dim, *m.field); }

Mat action_of(const GlPModule& m, int g) {
    switch (g) {
        case GX: return m.x;
        case GY: return m.y;
        case GYP: return m.yp;
        default: return m.e;
    }
}

}  // namespace

std::string SimpleLabel::to_string(const Field& f) const {
    return "L(" + std::to_string(eps) + "," + f.to_string(a) + "," + f.to_string(b) + ")";
}

std::string GlPModule::describe() const {
    std::ostringstream os;
    os << "dim " << dim;
    return os.str();
}

GlPModule make_simple(int eps, FieldElem a, FieldElem b, const Field& f) {
    GlPModule m;
    m.field = &f;
    if (eps == 0 && a == 0) {
        m.dim = 1;
        m.d = Mat(1, 1, f);
        m.x = m.yp = m.e = Mat(1, 1, f);
        m.y = Mat(1, 1, f);
        m.y(0, 0) = b;
        return m;
    }
    m.dim = 2;
    m.y = Mat(2, 2, f);
    m.y(0, 0) = b;
    m.y(1, 1) = f.add(b, 1);
    m.x = Mat(2, 2, f);
    m.x(0, 1) = 1;
    m.x(1, 0) = f.sqr(a);          // x^2 acts by a^2
    m.yp = Mat(2, 2, f);
    m.e = Mat(2, 2, f);
    m.d = Mat(2, 2, f);
    if (eps == 1) {
        m.yp(1, 0) = 1;
        m.e = Mat::identity(2, f);
        m.d(1, 0) = 1;   // forced by equivariance against these matrices
    }
    return m;
}

bool check_module(const GlPModule& m) {
    const Field& f = *m.field;
    if (!(m.d * m.d).is_zero()) return false;
    // equivariance: rho(g') = D rho(g) + rho(g) D for g = x, y
    if (m.e != m.d * m.x + m.x * m.d) return false;
    if (m.yp != m.d * m.y + m.y * m.d) return false;
    // bracket compatibility over all generator pairs
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Vec br = glp_bracket(i, j);
            Mat lhs = zero_like(m);
            for (int k = 0; k < 4; ++k)
                if (br[k]) {
                    Mat ak = action_of(m, k);
                    for (int r = 0; r < m.dim; ++r)
                        for (int c = 0; c < m.dim; ++c) lhs(r, c) ^= f.mul(br[k], ak(r, c));
                }
            Mat rhs = action_of(m, i) * action_of(m, j) + action_of(m, j) * action_of(m, i);
            int jp = dprime_of(j), ip = dprime_of(i);
            if (jp >= 0 && ip >= 0) rhs = rhs + action_of(m, jp) * action_of(m, ip);
            if (lhs != rhs) return false;
        }
    // e central idempotent (implied by the above; checked explicitly)
    if (m.e * m.e != m.e) return false;
    for (int g = 0; g < 4; ++g)
        if (m.e * action_of(m, g) != action_of(m, g) * m.e) return false;
    return true;
}

namespace {

std::vector<Vec> module_closure(const GlPModule& m, const Vec& v) {
    std::vector<Vec> basis;
    std::vector<Vec> queue;
    const Field& f = *m.field;
    auto try_add = [&](const Vec& w) {
        if (!in_span(basis, w, f)) {
            basis.push_back(w);
            queue.push_back(w);
        }
    };
    try_add(v);
    while (!queue.empty()) {
        Vec w = queue.back();
        queue.pop_back();
        try_add(m.d.apply(w));
        try_add(m.x.apply(w));
        try_add(m.y.apply(w));
        try_add(m.yp.apply(w));
        try_add(m.e.apply(w));
    }
    return basis;
}

Mat echelon_of(const std::vector<Vec>& vecs, int len, const Field& f) {
    if (vecs.empty()) return Mat(0, len, f);
    return row_space(Mat::from_rows(vecs, len, f));
}

Vec nth_vector(long long r, int dim, const Field& f) {
    Vec v(dim, 0);
    for (int i = 0; i < dim; ++i) {
        v[i] = static_cast<FieldElem>(r % f.size());
        r /= f.size();
    }
    return v;
}

}  // namespace

bool is_simple_module(const GlPModule& m) {
    const Field& f = *m.field;
    if (m.dim == 0) return false;
    long long points = 1;
    for (int i = 0; i < m.dim; ++i) {
        points *= f.size();
        guard_check(points, 1LL << 20, "module simplicity sweep");
    }
    for (long long r = 1; r < points; ++r)
        if (static_cast<int>(module_closure(m, nth_vector(r, m.dim, f)).size()) != m.dim)
            return false;
    return true;
}

std::vector<Mat> invariant_subspaces(const GlPModule& m) {
    const Field& f = *m.field;
    long long points = 1;
    for (int i = 0; i < m.dim; ++i) {
        points *= f.size();
        guard_check(points, 1LL << 20, "submodule enumeration sweep");
    }
    std::set<std::vector<FieldElem>> seen;   // echelon data keyed
    std::vector<Mat> subs;
    auto add_sub = [&](const Mat& ech) {
        if (ech.rows() == 0 || ech.rows() == m.dim) return;
        std::vector<FieldElem> key = ech.data();
        key.push_back(static_cast<FieldElem>(ech.rows()));
        if (seen.insert(key).second) subs.push_back(ech);
    };
    // cyclic submodules
    for (long long r = 1; r < points; ++r) {
        std::vector<Vec> cl = module_closure(m, nth_vector(r, m.dim, f));
        add_sub(echelon_of(cl, m.dim, f));
    }
    // close under sums
    bool grew = true;
    while (grew) {
        grew = false;
        size_t sz = subs.size();
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = i + 1; j < sz; ++j) {
                std::vector<Vec> rows;
                for (int r = 0; r < subs[i].rows(); ++r) rows.push_back(subs[i].row(r));
                for (int r = 0; r < subs[j].rows(); ++r) rows.push_back(subs[j].row(r));
                Mat sum = echelon_of(rows, m.dim, f);
                size_t before = subs.size();
                add_sub(sum);
                if (subs.size() > before) grew = true;
            }
    }
    std::sort(subs.begin(), subs.end(), [](const Mat& a, const Mat& b) {
        if (a.rows() != b.rows()) return a.rows() < b.rows();
        return a.data() < b.data();
    });
    return subs;
}

GlPModule restrict_module(const GlPModule& m, const Mat& rows) {
    const Field& f = *m.field;
    int ds = rows.rows();
    Mat basis = rows.transpose();   // columns span the subspace
    auto coords = [&](const Vec& v) {
        LinearSolution sol = solve_linear(basis, v);
        if (!sol.consistent) throw std::logic_error("restrict_module: not invariant");
        return sol.particular;
    };
    auto push = [&](const Mat& act) {
        Mat r(ds, ds, f);
        for (int c = 0; c < ds; ++c) {
            Vec img = coords(act.apply(basis.col(c)));
            for (int rr = 0; rr < ds; ++rr) r(rr, c) = img[rr];
        }
        return r;
    };
    GlPModule out;
    out.field = &f;
    out.dim = ds;
    out.d = push(m.d);
    out.x = push(m.x);
    out.y = push(m.y);
    out.yp = push(m.yp);
    out.e = push(m.e);
    return out;
}

GlPModule quotient_module(const GlPModule& m, const Mat& rows) {
    const Field& f = *m.field;
    // quotient coordinates: non-pivot standard coordinates after reduction
    Mat rr = row_space(rows);
    std::vector<int> pivots;
    for (int r = 0; r < rr.rows(); ++r)
        for (int c = 0; c < m.dim; ++c)
            if (rr(r, c)) { pivots.push_back(c); break; }
    std::vector<int> keep;
    for (int c = 0; c < m.dim; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) keep.push_back(c);
    int dq = static_cast<int>(keep.size());
    auto reduce_vec = [&](Vec v) {
        for (int r = 0; r < rr.rows(); ++r) {
            int pc = pivots[r];
            if (v[pc]) {
                FieldElem s = v[pc];
                for (int c = 0; c < m.dim; ++c) v[c] ^= f.mul(s, rr(r, c));
            }
        }
        Vec q(dq, 0);
        for (int i = 0; i < dq; ++i) q[i] = v[keep[i]];
        return q;
    };
    auto push = [&](const Mat& act) {
        Mat r(dq, dq, f);
        for (int c = 0; c < dq; ++c) {
            Vec e(m.dim, 0);
            e[keep[c]] = 1;
            Vec img = reduce_vec(act.apply(e));
            for (int rr2 = 0; rr2 < dq; ++rr2) r(rr2, c) = img[rr2];
        }
        return r;
    };
    GlPModule out;
    out.field = &f;
    out.dim = dq;
    out.d = push(m.d);
    out.x = push(m.x);
    out.y = push(m.y);
    out.yp = push(m.yp);
    out.e = push(m.e);
    return out;
}

GlPModule tensor_modules(const GlPModule& a, const GlPModule& b) {
    const Field& f = *a.field;
    int dt = a.dim * b.dim;
    Mat ia = Mat::identity(a.dim, f), ib = Mat::identity(b.dim, f);
    GlPModule out;
    out.field = &f;
    out.dim = dt;
    out.d = a.d.kronecker(ib) + ia.kronecker(b.d);
    // g (m (x) n) = gm (x) n + m (x) gn + m' (x) g'n
    out.x = a.x.kronecker(ib) + ia.kronecker(b.x) + a.d.kronecker(b.e);
    out.y = a.y.kronecker(ib) + ia.kronecker(b.y) + a.d.kronecker(b.yp);
    out.yp = a.yp.kronecker(ib) + ia.kronecker(b.yp);
    out.e = a.e.kronecker(ib) + ia.kronecker(b.e);
    return out;
}

SimpleLabel identify_simple(const GlPModule& m) {
    const Field& f = *m.field;
    SimpleLabel lab;
    if (m.dim < 1 || m.dim > 2)
        throw std::invalid_argument("identify_simple: expected dimension 1 or 2");
    // eps from rho(e) (scalar 0 or 1)
    FieldElem esc = m.e(0, 0);
    if (m.e != (esc ? Mat::identity(m.dim, f) : Mat(m.dim, m.dim, f)) || esc > 1)
        throw std::invalid_argument("identify_simple: e does not act by 0 or 1");
    lab.eps = esc;

    // a from the scalar of rho(x)^2 by the inverse Frobenius
    Mat x2 = m.x * m.x;
    FieldElem x2s = x2(0, 0);
    if (x2 != [&] {
            Mat s(m.dim, m.dim, f);
            for (int i = 0; i < m.dim; ++i) s(i, i) = x2s;
            return s;
        }())
        throw std::invalid_argument("identify_simple: x^2 is not scalar");
    lab.a = f.frobenius_sqrt(x2s);

    if (m.dim == 1) {
        lab.b = m.y(0, 0);
        return lab;
    }
    if (lab.eps == 1) {
        // y-eigenvalue on ker rho(y'), shifted by one
        std::vector<Vec> ker = kernel_basis(m.yp);
        if (ker.size() != 1) throw std::invalid_argument("identify_simple: unexpected ker y'");
        Vec v = ker[0];
        Vec yv = m.y.apply(v);
        // yv = beta v on the kernel line
        FieldElem beta = 0;
        for (int i = 0; i < m.dim; ++i)
            if (v[i]) { beta = f.div(yv[i], v[i]); break; }
        lab.b = f.add(beta, 1);
        return lab;
    }
    // eps = 0, two-dimensional (a != 0): y-eigenvalues are {b, b+1}; the two
    // parameters give isomorphic modules, so take the lexicographically least
    FieldElem e1 = m.y(0, 0);
    // eigenvalues of the 2x2 y-matrix: roots of the characteristic polynomial
    FieldElem tr = f.add(m.y(0, 0), m.y(1, 1));
    FieldElem dt = f.add(f.mul(m.y(0, 0), m.y(1, 1)), f.mul(m.y(0, 1), m.y(1, 0)));
    // over these modules tr = 1 and the two roots are b, b+1
    if (tr != 1) throw std::invalid_argument("identify_simple: unexpected y trace");
    FieldElem b = 0;
    bool found = false;
    for (int cand = 0; cand < f.size() && !found; ++cand) {
        FieldElem c = static_cast<FieldElem>(cand);
        if (f.add(f.mul(c, f.add(c, tr)), dt) == 0) {   // c^2 + tr c + dt = 0
            b = c;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("identify_simple: y has no eigenvalue in the field");
    lab.b = std::min<FieldElem>(b, f.add(b, 1));
    (void)e1;
    return lab;
}

CompositionSeries composition_series(const GlPModule& m) {
    CompositionSeries out;
    if (m.dim == 0) {
        out.split = true;
        return out;
    }
    std::vector<Mat> subs = invariant_subspaces(m);
    if (subs.empty()) {
        out.factors.push_back(identify_simple(m));
        out.split = true;
        return out;
    }
    const Field& f = *m.field;

    // socle = sum of minimal submodules
    std::vector<Mat> minimal;
    for (const Mat& s : subs) {
        bool is_min = true;
        for (const Mat& t : subs)
            if (t.rows() < s.rows()) {
                // t strictly inside s?
                bool inside = true;
                std::vector<Vec> srows;
                for (int r = 0; r < s.rows(); ++r) srows.push_back(s.row(r));
                for (int r = 0; r < t.rows() && inside; ++r)
                    if (!in_span(srows, t.row(r), f)) inside = false;
                if (inside) is_min = false;
            }
        if (is_min) minimal.push_back(s);
    }
    std::vector<Vec> socle_rows;
    for (const Mat& s : minimal)
        for (int r = 0; r < s.rows(); ++r) socle_rows.push_back(s.row(r));
    Mat socle = row_space(Mat::from_rows(socle_rows, m.dim, f));
    out.split = socle.rows() == m.dim;

    // radical = intersection of maximal submodules; head = M / radical
    std::vector<Mat> maximal;
    for (const Mat& s : subs) {
        bool is_max = true;
        for (const Mat& t : subs)
            if (t.rows() > s.rows()) {
                bool inside = true;
                std::vector<Vec> trows;
                for (int r = 0; r < t.rows(); ++r) trows.push_back(t.row(r));
                for (int r = 0; r < s.rows() && inside; ++r)
                    if (!in_span(trows, s.row(r), f)) inside = false;
                if (inside) is_max = false;
            }
        if (is_max) maximal.push_back(s);
    }
    // intersect row spaces
    auto intersect_rows = [&](const Mat& a, const Mat& b) {
        // x in both row spaces: x = a^T u = b^T v
        Mat at = a.transpose(), bt = b.transpose();
        Mat joint(m.dim, at.cols() + bt.cols(), f);
        for (int r = 0; r < m.dim; ++r) {
            for (int c = 0; c < at.cols(); ++c) joint(r, c) = at(r, c);
            for (int c = 0; c < bt.cols(); ++c) joint(r, at.cols() + c) = bt(r, c);
        }
        std::vector<Vec> ker = kernel_basis(joint);
        std::vector<Vec> pts;
        for (const Vec& k : ker) {
            Vec u(k.begin(), k.begin() + at.cols());
            Vec x(m.dim, 0);
            for (int c = 0; c < at.cols(); ++c)
                if (u[c])
                    for (int r = 0; r < m.dim; ++r) x[r] ^= f.mul(u[c], at(r, c));
            pts.push_back(std::move(x));
        }
        return echelon_of(pts, m.dim, f);
    };
    Mat rad = maximal.empty() ? Mat(0, m.dim, f) : maximal[0];
    for (size_t i = 1; i < maximal.size(); ++i) rad = intersect_rows(rad, maximal[i]);

    // head factors (semisimple quotient), then recurse into the radical
    GlPModule head = quotient_module(m, rad);
    std::function<void(const GlPModule&)> peel = [&](const GlPModule& h) {
        if (h.dim == 0) return;
        std::vector<Mat> hsubs = invariant_subspaces(h);
        if (hsubs.empty()) {
            out.factors.push_back(identify_simple(h));
            return;
        }
        // take the first minimal submodule as a factor; quotient and continue
        Mat w = hsubs.front();
        out.factors.push_back(identify_simple(restrict_module(h, w)));
        peel(quotient_module(h, w));
    };
    peel(head);
    if (rad.rows() > 0) {
        CompositionSeries tail = composition_series(restrict_module(m, rad));
        for (const auto& lab : tail.factors) out.factors.push_back(lab);
    }
    return out;
}

GlPModule glp_restrict(const std::string& name, const Field& f) {
    auto dim1 = [&](FieldElem yval) {
        GlPModule m;
        m.field = &f;
        m.dim = 1;
        m.d = m.x = m.yp = m.e = Mat(1, 1, f);
        m.y = Mat(1, 1, f);
        m.y(0, 0) = yval;
        return m;
    };
    if (name == "trivial" || name == "chi") return dim1(0);
    if (name == "xi") return dim1(1);
    if (name == "T1") return make_simple(1, 0, 0, f);
    if (name == "T2") {
        GlPModule m;
        m.field = &f;
        m.dim = 2;
        m.d = Mat(2, 2, f);
        m.x = Mat(2, 2, f);
        m.x(0, 1) = m.x(1, 0) = 1;
        m.y = Mat(2, 2, f);
        m.y(1, 1) = 1;
        m.yp = Mat(2, 2, f);
        m.e = Mat(2, 2, f);
        return m;
    }
    if (name == "T3") {
        GlPModule m;
        m.field = &f;
        m.dim = 2;
        m.x = Mat(2, 2, f);
        m.x(0, 1) = m.x(1, 0) = 1;
        m.y = Mat(2, 2, f);
        m.y(1, 1) = 1;
        m.yp = Mat(2, 2, f);
        m.yp(1, 0) = 1;
        m.e = Mat::identity(2, f);
        m.d = Mat(2, 2, f);
        m.d(1, 0) = 1;
        return m;
    }
    if (name == "xiT1") return tensor_modules(dim1(1), glp_restrict("T1", f));
    if (name == "xiT3") return tensor_modules(dim1(1), glp_restrict("T3", f));
    throw std::invalid_argument("glp_restrict: unknown name " + name);
}

}  // namespace verlie
