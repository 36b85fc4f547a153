#include "verlie/forms.hpp"

#include <stdexcept>

#include "verlie/guards.hpp"

namespace verlie {

namespace {

FieldElem trace_of(const GlAlgebra& gl, const Vec& v) {
    const Field& f = gl.matrix_basis.field();
    FieldElem t = 0;
    for (size_t i = 0; i < v.size(); ++i)
        if (gl.trace_form[i]) t ^= f.mul(gl.trace_form[i], v[i]);
    return t;
}

FieldElem mat_trace(const Mat& m, const Field& f) {
    FieldElem t = 0;
    for (int i = 0; i < m.rows(); ++i) t ^= m(i, i);
    return t;
}

}  // namespace

BilinearForm build_form(const GlAlgebra& gl, FieldElem lambda, FieldElem mu) {
    if (gl.space.n < 1) throw std::invalid_argument("build_form: need n >= 1");
    const Field& f = gl.matrix_basis.field();
    int dg = gl.dim();
    bool modd = gl.space.m % 2 == 1;
    int yn = gl.space.unprimed_index(gl.space.n - 1);

    auto value = [&](const Vec& u, const Vec& v) -> FieldElem {
        FieldElem tu = trace_of(gl, u), tv = trace_of(gl, v);
        if (modd) {
            // u = tr(u) I + su with su traceless (tr I = m odd = 1)
            Vec su = vec_add(u, vec_scale(tu, gl.identity_matrix_vec, f));
            Vec sv = vec_add(v, vec_scale(tv, gl.identity_matrix_vec, f));
            FieldElem r = f.mul(f.mul(tu, tv), lambda);
            r ^= f.mul(mu, mat_trace(gl.as_matrix(su) * gl.as_matrix(sv), f));
            return r;
        }
        // even m: u = tr(u) h + su with h = y_n (x) y_n*; B(h, I) = mu and the
        // identity-coefficient of a traceless s is its (y_n, y_n) entry.
        Vec h(dg, 0);
        h[gl.unit_index(yn, yn)] = 1;
        Vec su = vec_add(u, vec_scale(tu, h, f));
        Vec sv = vec_add(v, vec_scale(tv, h, f));
        FieldElem r = f.mul(f.mul(tu, tv), lambda);
        Mat msu = gl.as_matrix(su), msv = gl.as_matrix(sv);
        r ^= f.mul(mu, f.add(f.mul(tu, msv(yn, yn)), f.mul(tv, msu(yn, yn))));
        r ^= f.mul(mu, mat_trace(msu * msv, f));
        return r;
    };

    BilinearForm b;
    b.lambda = lambda;
    b.mu = mu;
    b.gram = Mat(dg, dg, f);
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j < dg; ++j) {
            Vec ei(dg, 0), ej(dg, 0);
            ei[i] = 1;
            ej[j] = 1;
            b.gram(i, j) = value(ei, ej);
        }
    return b;
}

FormReport check_form(const BilinearForm& b, const GlAlgebra& gl) {
    const Field& f = gl.matrix_basis.field();
    int dg = gl.dim();
    FormReport rep;
    rep.symmetric = b.gram == b.gram.transpose();

    auto eval = [&](const Vec& u, const Vec& v) -> FieldElem {
        FieldElem r = 0;
        Vec gv = b.gram.apply(v);
        for (int i = 0; i < dg; ++i)
            if (u[i]) r ^= f.mul(u[i], gv[i]);
        return r;
    };

    rep.adjoint_invariant = true;
    for (int x = 0; x < dg && rep.adjoint_invariant; ++x)
        for (int y = 0; y < dg && rep.adjoint_invariant; ++y) {
            Vec ey(dg, 0);
            ey[y] = 1;
            Vec ady = gl.matrix_basis.bracket_basis(x, y);
            for (int z = 0; z < dg; ++z) {
                Vec ez(dg, 0);
                ez[z] = 1;
                Vec adz = gl.matrix_basis.bracket_basis(x, z);
                if (f.add(eval(ady, ez), eval(ey, adz)) != 0) {
                    rep.adjoint_invariant = false;
                    break;
                }
            }
        }

    rep.d_invariant = true;
    const Mat& d = gl.matrix_basis.d;
    for (int u = 0; u < dg && rep.d_invariant; ++u)
        for (int v = 0; v < dg; ++v) {
            Vec eu(dg, 0), ev(dg, 0);
            eu[u] = 1;
            ev[v] = 1;
            if (eval(d.apply(eu), ev) != eval(eu, d.apply(ev))) {
                rep.d_invariant = false;
                break;
            }
        }

    rep.nondegenerate = det(b.gram) != 0;
    return rep;
}

int invariant_form_space_dim(const GlAlgebra& gl) {
    const Field& f = gl.matrix_basis.field();
    int dg = gl.dim();
    // unknowns: gram entries g_{yz}; constraints B([x,y], z) + B(y, [x,z]) = 0
    std::vector<Vec> rows;
    auto idx = [dg](int y, int z) { return static_cast<size_t>(y) * dg + z; };
    for (int x = 0; x < dg; ++x)
        for (int y = 0; y < dg; ++y)
            for (int z = 0; z < dg; ++z) {
                Vec row(static_cast<size_t>(dg) * dg, 0);
                Vec ady = gl.matrix_basis.bracket_basis(x, y);
                Vec adz = gl.matrix_basis.bracket_basis(x, z);
                for (int k = 0; k < dg; ++k) {
                    if (ady[k]) row[idx(k, z)] ^= ady[k];
                    if (adz[k]) row[idx(y, k)] ^= adz[k];
                }
                rows.push_back(std::move(row));
            }
    return static_cast<int>(kernel_basis(Mat::from_rows(rows, dg * dg, f)).size());
}

UEAElement casimir(const BilinearForm& b, const GlAlgebra& gl, const Uea& u) {
    FormReport rep = check_form(b, gl);
    if (!rep.nondegenerate || !rep.adjoint_invariant || !rep.d_invariant)
        throw std::invalid_argument("casimir: form must be nondegenerate and invariant");
    const Field& f = gl.matrix_basis.field();
    int dg = gl.dim();
    // move the Gram matrix to the canonical basis: G_c = T^t G T with
    // T = canonical -> matrix-unit coordinates
    Mat gc = gl.canon_to_matrix.transpose() * b.gram * gl.canon_to_matrix;
    auto ginv = inverse(gc);
    if (!ginv) throw std::logic_error("casimir: gram inversion failed");
    UEAElement c;
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j < dg; ++j) {
            FieldElem s = (*ginv)(i, j);
            if (!s) continue;
            c = u.add(c, u.scale(s, u.normal_form({i, j})));
        }
    return c;
}

UEAElement casimir_closed_form(const BilinearForm& b, const GlAlgebra& gl, const Uea& u) {
    const Field& f = gl.matrix_basis.field();
    bool modd = gl.space.m % 2 == 1;
    FieldElem c_sq, c_id;
    if (modd) {
        if (b.lambda == 0) throw std::invalid_argument("closed form: lambda = 0");
        c_sq = f.inv(b.lambda);
        c_id = f.inv(b.lambda);
    } else {
        if (b.mu == 0) throw std::invalid_argument("closed form: mu = 0");
        FieldElem mu2 = f.inv(f.mul(b.mu, b.mu));
        c_sq = f.mul(b.lambda, mu2);
        c_id = f.mul(f.add(b.lambda, b.mu), mu2);
    }
    UEAElement out;
    for (int i = 0; i < gl.space.m; ++i) {
        int xi = gl.space.trivial_index(i);
        Vec hv(static_cast<size_t>(gl.dim()), 0);
        hv[gl.unit_index(xi, xi)] = 1;
        UEAElement h = u.from_vector(gl.to_canonical(hv));
        out = u.add(out, u.scale(c_sq, u.add(u.multiply(h, h), h)));
    }
    UEAElement id_elem = u.from_vector(gl.to_canonical(gl.identity_matrix_vec));
    out = u.add(out, u.scale(c_id, id_elem));
    return out;
}

std::vector<CentralityVerdict> four_center_check(const GlAlgebra& gl, const Uea& u) {
    const Field& f = gl.matrix_basis.field();
    const Ver4Object& x = gl.space;
    std::vector<CentralityVerdict> out;

    auto elem = [&](int z, int w) {
        Vec v(static_cast<size_t>(gl.dim()), 0);
        v[gl.unit_index(z, w)] = 1;
        return u.from_vector(gl.to_canonical(v));
    };
    auto label = [&](int z, int w) { return gl.matrix_labels[gl.unit_index(z, w)]; };
    auto record = [&](const std::string& lab, const std::string& family, const UEAElement& e) {
        out.push_back({lab, family, u.is_central(e)});
    };

    // squares of ker-d matrix units
    for (int i = 0; i < x.m; ++i)
        for (int j = 0; j < x.m; ++j)
            record(label(x.trivial_index(i), x.trivial_index(j)) + "^2", "square",
                   u.power(elem(x.trivial_index(i), x.trivial_index(j)), 2));
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.m; ++j)
            record(label(x.primed_index(i), x.trivial_index(j)) + "^2", "square",
                   u.power(elem(x.primed_index(i), x.trivial_index(j)), 2));
    for (int i = 0; i < x.m; ++i)
        for (int j = 0; j < x.n; ++j)
            record(label(x.trivial_index(i), x.unprimed_index(j)) + "^2", "square",
                   u.power(elem(x.trivial_index(i), x.unprimed_index(j)), 2));

    // fourth powers of the square-zero families
    for (int i = 0; i < x.m; ++i)
        for (int j = 0; j < x.n; ++j)
            record(label(x.trivial_index(i), x.primed_index(j)) + "^4", "fourth",
                   u.power(elem(x.trivial_index(i), x.primed_index(j)), 4));
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.m; ++j)
            record(label(x.unprimed_index(i), x.trivial_index(j)) + "^4", "fourth",
                   u.power(elem(x.unprimed_index(i), x.trivial_index(j)), 4));
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
            if (i != j)
                record(label(x.unprimed_index(i), x.unprimed_index(j)) + "^4", "fourth",
                       u.power(elem(x.unprimed_index(i), x.unprimed_index(j)), 4));
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
            if (i != j)
                record(label(x.primed_index(i), x.primed_index(j)) + "^4", "fourth",
                       u.power(elem(x.primed_index(i), x.primed_index(j)), 4));

    // y_i (x) y_i'^*: fourth power minus square
    for (int i = 0; i < x.n; ++i) {
        UEAElement e = elem(x.unprimed_index(i), x.primed_index(i));
        record(label(x.unprimed_index(i), x.primed_index(i)) + "^4 + ^2", "fourth-minus-square",
               u.add(u.power(e, 4), u.power(e, 2)));
    }

    // y_i (x) y_i^*: claimed fourth power (tested, not assumed)
    for (int i = 0; i < x.n; ++i)
        record(label(x.unprimed_index(i), x.unprimed_index(i)) + "^4", "diag-fourth",
               u.power(elem(x.unprimed_index(i), x.unprimed_index(i)), 4));

    (void)f;
    return out;
}

bool ad4_identity_check(const GlAlgebra& gl, const Uea& u) {
    int dg = gl.dim();
    for (int xi = 0; xi < dg; ++xi)
        for (int yi = 0; yi < dg; ++yi) {
            Vec xv(static_cast<size_t>(dg), 0), yv(static_cast<size_t>(dg), 0);
            xv[xi] = 1;
            yv[yi] = 1;

            const BracketStructure& g = gl.matrix_basis;
            Vec lhs_vec = g.bracket(xv, g.bracket(xv, yv));
            Vec x2 = gl.matrix_square(xv);
            Vec rhs1_vec = g.bracket(x2, yv);
            Vec xprime = g.d.apply(xv);

            UEAElement lhs = u.from_vector(gl.to_canonical(lhs_vec));
            UEAElement rhs = u.from_vector(gl.to_canonical(rhs1_vec));
            // [X', Y X'] = X'(Y X') + (Y X')X'   (the prime of X' vanishes)
            UEAElement xp = u.from_vector(gl.to_canonical(xprime));
            UEAElement y = u.from_vector(gl.to_canonical(yv));
            UEAElement yxp = u.multiply(y, xp);
            rhs = u.add(rhs, u.add(u.multiply(xp, yxp), u.multiply(yxp, xp)));
            if (lhs != rhs) return false;
        }
    return true;
}

ConjectureSolution conjecture_solve(const GlAlgebra& gl, const Uea& u,
                                    const Vec& x_matrix_coords) {
    const Field& f = gl.matrix_basis.field();
    ConjectureSolution out;

    UEAElement xe = u.from_vector(gl.to_canonical(x_matrix_coords));
    UEAElement x2 = u.from_vector(gl.to_canonical(gl.matrix_square(x_matrix_coords)));
    UEAElement xp = u.from_vector(gl.to_canonical(gl.matrix_basis.d.apply(x_matrix_coords)));

    // fixed part: X^4 + (X^[2])^2
    UEAElement fixed = u.add(u.power(xe, 4), u.multiply(x2, x2));

    // noncommutative monomials of degree <= 4 in {X, X^[2], X'} (degree of
    // each letter counted as 1)
    std::vector<UEAElement> letters = {xe, x2, xp};
    std::vector<std::string> letter_names = {"X", "X[2]", "X'"};
    std::vector<UEAElement> monos = {u.unit()};
    std::vector<std::string> names = {"1"};
    std::vector<UEAElement> frontier = {u.unit()};
    std::vector<std::string> fnames = {""};
    for (int deg = 1; deg <= 4; ++deg) {
        std::vector<UEAElement> next;
        std::vector<std::string> nnames;
        for (size_t i = 0; i < frontier.size(); ++i)
            for (size_t l = 0; l < letters.size(); ++l) {
                next.push_back(u.multiply(frontier[i], letters[l]));
                nnames.push_back(fnames[i].empty() ? letter_names[l]
                                                   : fnames[i] + "*" + letter_names[l]);
            }
        monos.insert(monos.end(), next.begin(), next.end());
        names.insert(names.end(), nnames.begin(), nnames.end());
        frontier = std::move(next);
        fnames = std::move(nnames);
    }
    out.monomials = names;

    // commutators with each generator must vanish: linear system in the
    // monomial coefficients with the fixed part as inhomogeneity
    std::map<PBWMonomial, int> tindex;
    std::vector<Vec> cols(monos.size());
    std::vector<Vec> rhs_parts;
    auto commutator = [&](const UEAElement& z, int g) {
        UEAElement ge = u.generator(g);
        return u.add(u.multiply(z, ge), u.multiply(ge, z));
    };
    std::vector<UEAElement> mono_comms(monos.size());
    std::vector<UEAElement> fixed_comms;
    for (int g = 0; g < u.generators(); ++g) {
        fixed_comms.push_back(commutator(fixed, g));
        for (const auto& [m, c] : fixed_comms.back())
            if (!tindex.count(m)) tindex[m] = static_cast<int>(tindex.size());
    }
    std::vector<std::vector<UEAElement>> all_comms(monos.size());
    for (size_t i = 0; i < monos.size(); ++i)
        for (int g = 0; g < u.generators(); ++g) {
            all_comms[i].push_back(commutator(monos[i], g));
            for (const auto& [m, c] : all_comms[i].back())
                if (!tindex.count(m)) tindex[m] = static_cast<int>(tindex.size());
        }
    int trows = static_cast<int>(tindex.size()) * u.generators();
    Mat sys(trows, static_cast<int>(monos.size()), f);
    Vec rhs(trows, 0);
    int tcount = static_cast<int>(tindex.size());
    for (int g = 0; g < u.generators(); ++g) {
        for (const auto& [m, c] : fixed_comms[g]) rhs[g * tcount + tindex.at(m)] = c;
        for (size_t i = 0; i < monos.size(); ++i)
            for (const auto& [m, c] : all_comms[i][g])
                sys(g * tcount + tindex.at(m), static_cast<int>(i)) = c;
    }
    LinearSolution sol = solve_linear(sys, rhs);
    out.solvable = sol.consistent;
    if (sol.consistent) {
        out.solution_space_dim = static_cast<int>(sol.kernel.size());
        out.particular = sol.particular;
    }
    return out;
}

}  // namespace verlie
