#include "verlie/cohom.hpp"

#include <stdexcept>

namespace verlie {

Vec OrdinaryLieModule::l_bracket_basis(int i, int j) const {
    Vec r(ldim);
    for (int k = 0; k < ldim; ++k) r[k] = l_c[(static_cast<size_t>(i) * ldim + j) * ldim + k];
    return r;
}

bool OrdinaryLieModule::module_axiom_holds() const {
    const Field& f = *field;
    for (int i = 0; i < ldim; ++i)
        for (int j = 0; j < ldim; ++j) {
            Mat lhs(mdim, mdim, f);
            Vec br = l_bracket_basis(i, j);
            for (int k = 0; k < ldim; ++k)
                if (br[k])
                    for (int r = 0; r < mdim; ++r)
                        for (int c = 0; c < mdim; ++c) lhs(r, c) ^= f.mul(br[k], rho[k](r, c));
            if (lhs != rho[i] * rho[j] + rho[j] * rho[i]) return false;
        }
    return true;
}

namespace {

// pair index helpers for 2-cochains
struct PairIndex {
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> at;     // at[i][j] = pair slot or -1

    PairIndex(int l, bool with_diagonal) {
        at.assign(l, std::vector<int>(l, -1));
        for (int i = 0; i < l; ++i)
            for (int j = with_diagonal ? i : i + 1; j < l; ++j) {
                at[i][j] = static_cast<int>(pairs.size());
                pairs.emplace_back(i, j);
            }
    }
    int slot(int i, int j) const { return i <= j ? at[i][j] : at[j][i]; }
};

}  // namespace

CohomologyResult ce_cohomology(const OrdinaryLieModule& lm, int degree, bool extended) {
    if (degree != 1 && degree != 2) throw std::invalid_argument("ce_cohomology: degree must be 1 or 2");
    if (!lm.module_axiom_holds()) throw std::invalid_argument("ce_cohomology: module axiom fails");
    const Field& f = *lm.field;
    const int l = lm.ldim, m = lm.mdim;

    auto act = [&](int z, const Vec& v) { return lm.rho[z].apply(v); };

    CohomologyResult res;
    if (degree == 1) {
        // cocycles: ker d^1 inside Hom(L, M); coboundaries: im d^0
        const int cdim = l * m;
        res.cochain_dim = cdim;
        std::vector<Vec> rows;
        // d1(phi)(x,y) = x phi(y) + y phi(x) + phi([x,y])
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                for (int r = 0; r < m; ++r) {
                    Vec row(cdim, 0);
                    for (int c = 0; c < m; ++c) {
                        row[j * m + c] ^= lm.rho[i](r, c);
                        row[i * m + c] ^= lm.rho[j](r, c);
                    }
                    Vec br = lm.l_bracket_basis(i, j);
                    for (int k = 0; k < l; ++k)
                        if (br[k]) row[k * m + r] ^= br[k];
                    rows.push_back(std::move(row));
                }
        res.cocycles = rows.empty() ? std::vector<Vec>{}
                                    : kernel_basis(Mat::from_rows(rows, cdim, f));
        if (rows.empty()) {
            // everything is a cocycle
            for (int i = 0; i < cdim; ++i) {
                Vec e(cdim, 0);
                e[i] = 1;
                res.cocycles.push_back(std::move(e));
            }
        }
        // d0(v)(x) = x v
        std::vector<Vec> cobs;
        for (int c = 0; c < m; ++c) {
            Vec img(cdim, 0);
            for (int z = 0; z < l; ++z)
                for (int r = 0; r < m; ++r) img[z * m + r] = lm.rho[z](r, c);
            cobs.push_back(std::move(img));
        }
        res.coboundaries = cobs;
        res.dimension = span_rank(res.cocycles, cdim, f) -
                        span_rank(res.coboundaries, cdim, f);
        return res;
    }

    // degree 2
    PairIndex pi(l, extended);
    const int cdim = static_cast<int>(pi.pairs.size()) * m;
    res.cochain_dim = cdim;
    auto coord = [&](int i, int j, int r) { return pi.slot(i, j) * m + r; };

    // cocycle condition (fully symmetric in the arguments for both variants):
    //   sum_cyc x psi(y,z) + sum_cyc psi([x,y], z) = 0
    std::vector<Vec> rows;
    for (int i = 0; i < l; ++i)
        for (int j = i; j < l; ++j)
            for (int k = j; k < l; ++k) {
                if (!extended && (i == j || j == k)) continue;
                for (int r = 0; r < m; ++r) {
                    Vec row(cdim, 0);
                    auto add_action = [&](int z, int aa, int bb) {
                        if (!extended && aa == bb) return;   // alternating: psi(a,a) = 0
                        for (int c = 0; c < m; ++c) row[coord(aa, bb, c)] ^= lm.rho[z](r, c);
                    };
                    auto add_bracket = [&](int aa, int bb, int cc) {
                        Vec br = lm.l_bracket_basis(aa, bb);
                        for (int k2 = 0; k2 < l; ++k2) {
                            if (!br[k2]) continue;
                            if (!extended && k2 == cc) continue;
                            row[coord(k2, cc, r)] ^= br[k2];
                        }
                    };
                    add_action(i, j, k);
                    add_action(k, i, j);
                    add_action(j, k, i);
                    add_bracket(i, j, k);
                    add_bracket(k, i, j);
                    add_bracket(j, k, i);
                    rows.push_back(std::move(row));
                }
            }
    if (rows.empty()) {
        for (int i = 0; i < cdim; ++i) {
            Vec e(cdim, 0);
            e[i] = 1;
            res.cocycles.push_back(std::move(e));
        }
    } else {
        res.cocycles = kernel_basis(Mat::from_rows(rows, cdim, f));
    }

    // coboundaries d1(phi)(x,y) = x phi(y) + y phi(x) + phi([x,y]); these are
    // symmetric with zero diagonal, so they embed in both cochain spaces.
    std::vector<Vec> cobs;
    for (int z = 0; z < l; ++z)
        for (int c = 0; c < m; ++c) {
            // phi = E_{zc}: phi(e_z) = e_c
            Vec img(cdim, 0);
            for (int i = 0; i < l; ++i)
                for (int j = extended ? i : i + 1; j < l; ++j) {
                    Vec val(m, 0);
                    if (j == z) val = vec_add(val, act(i, [&] {
                                                  Vec e(m, 0);
                                                  e[c] = 1;
                                                  return e;
                                              }()));
                    if (i == z) val = vec_add(val, act(j, [&] {
                                                  Vec e(m, 0);
                                                  e[c] = 1;
                                                  return e;
                                              }()));
                    Vec br = lm.l_bracket_basis(i, j);
                    if (br[z]) val[c] ^= br[z];
                    for (int r = 0; r < m; ++r)
                        if (val[r]) img[coord(i, j, r)] ^= val[r];
                }
            cobs.push_back(std::move(img));
        }
    res.coboundaries = cobs;
    res.dimension =
        span_rank(res.cocycles, cdim, f) - span_rank(res.coboundaries, cdim, f);
    return res;
}

Vec sym_cochain_eval(const OrdinaryLieModule& lm, const std::vector<Vec>& c, const Vec& x,
                     const Vec& y) {
    const Field& f = *lm.field;
    PairIndex pi(lm.ldim, true);
    Vec r(lm.mdim, 0);
    for (int i = 0; i < lm.ldim; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < lm.ldim; ++j) {
            if (!y[j]) continue;
            const Vec& val = c[pi.slot(i, j)];
            FieldElem s = f.mul(x[i], y[j]);
            for (int k = 0; k < lm.mdim; ++k) r[k] ^= f.mul(s, val[k]);
        }
    }
    return r;
}

PMapResult p_map(const OrdinaryLieModule& lm, const std::vector<Vec>& sym_cochain) {
    PMapResult out;
    PairIndex pi(lm.ldim, true);
    if (static_cast<int>(sym_cochain.size()) != static_cast<int>(pi.pairs.size()))
        throw std::invalid_argument("p_map: cochain has wrong shape");
    for (int i = 0; i < lm.ldim; ++i) out.values.push_back(sym_cochain[pi.slot(i, i)]);
    out.invariant = true;
    for (int z = 0; z < lm.ldim && out.invariant; ++z)
        for (int i = 0; i < lm.ldim && out.invariant; ++i)
            if (!vec_is_zero(lm.rho[z].apply(out.values[i]))) out.invariant = false;
    out.vanishes_on_derived = true;
    for (int i = 0; i < lm.ldim && out.vanishes_on_derived; ++i)
        for (int j = 0; j < lm.ldim && out.vanishes_on_derived; ++j) {
            Vec br = lm.l_bracket_basis(i, j);
            if (!vec_is_zero(sym_cochain_eval(lm, sym_cochain, br, br)))
                out.vanishes_on_derived = false;
        }
    return out;
}

}  // namespace verlie
