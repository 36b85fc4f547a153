#include "verlie/classify.hpp"

#include <algorithm>
#include <set>

#include "verlie/guards.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace verlie {

namespace {

Vec unit(int n, int i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

// Decode the r-th point of the affine space particular + span(kernel) by
// base-q digits; deterministic in r.
std::vector<FieldElem> kernel_point(const std::vector<Vec>& kernel, long long r, int len,
                                    const Field& f) {
    std::vector<FieldElem> pt(len, 0);
    for (const Vec& k : kernel) {
        FieldElem digit = static_cast<FieldElem>(r % f.size());
        r /= f.size();
        if (digit)
            for (int i = 0; i < len; ++i) pt[i] ^= f.mul(digit, k[i]);
    }
    return pt;
}

BracketStructure structure_from_tensor(const Ver4Object& x, const Field& f,
                                       const std::vector<FieldElem>& tensor) {
    BracketStructure l = zero_bracket_canonical(x, f);
    l.c = tensor;
    return l;
}

}  // namespace

std::vector<std::vector<FieldElem>> structure_kernel(const Ver4Object& x, const Field& f) {
    int n = x.dim();
    int unknowns = n * n * n;
    Mat d = x.d_matrix(f);
    std::vector<Vec> db(n);
    for (int i = 0; i < n; ++i) db[i] = d.col(i);

    // Rows of the linear system over the c[i][j][k] unknowns.
    std::vector<Vec> rows;
    auto idx = [n](int i, int j, int k) { return (static_cast<size_t>(i) * n + j) * n + k; };

    // skew: [b_i,b_j] + [b_j,b_i] + [db_j, db_i] = 0, componentwise
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec row(unknowns, 0);
                row[idx(i, j, k)] ^= 1;
                row[idx(j, i, k)] ^= 1;
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q)
                        if (db[j][p] && db[i][q]) row[idx(p, q, k)] ^= f.mul(db[j][p], db[i][q]);
                rows.push_back(std::move(row));
            }

    // derivation: d[b_i,b_j] = [db_i, b_j] + [b_i, db_j]
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec row(unknowns, 0);
                // component k of d applied to [b_i,b_j]
                for (int p = 0; p < n; ++p)
                    if (d(k, p)) row[idx(i, j, p)] ^= d(k, p);
                for (int p = 0; p < n; ++p)
                    if (db[i][p]) row[idx(p, j, k)] ^= db[i][p];
                for (int q = 0; q < n; ++q)
                    if (db[j][q]) row[idx(i, q, k)] ^= db[j][q];
                rows.push_back(std::move(row));
            }

    // alternating on ker d basis (canonical: trivial and primed generators)
    std::vector<int> kerd;
    for (int i = 0; i < x.m; ++i) kerd.push_back(x.trivial_index(i));
    for (int j = 0; j < x.n; ++j) kerd.push_back(x.primed_index(j));
    for (int e : kerd)
        for (int k = 0; k < n; ++k) {
            Vec row(unknowns, 0);
            row[idx(e, e, k)] = 1;
            rows.push_back(std::move(row));
        }

    return kernel_basis(Mat::from_rows(rows, unknowns, f));
}

namespace {

std::vector<BracketStructure> enumerate_impl(const Ver4Object& x, const Field& f,
                                             bool parallel) {
    std::vector<Vec> kernel = structure_kernel(x, f);
    long long points = 1;
    for (size_t i = 0; i < kernel.size(); ++i) {
        points *= f.size();
        guard_check(points, 1LL << 24, "enumerate_structures sweep size");
    }
    int unknowns = x.dim() * x.dim() * x.dim();

    std::vector<std::vector<FieldElem>> found;
#ifdef _OPENMP
    if (parallel) {
        int chunks = omp_get_max_threads() * 4;
        std::vector<std::vector<std::vector<FieldElem>>> per_chunk(chunks);
        long long step = (points + chunks - 1) / chunks;
#pragma omp parallel for schedule(dynamic)
        for (int c = 0; c < chunks; ++c) {
            long long lo = c * step, hi = std::min(points, lo + step);
            for (long long r = lo; r < hi; ++r) {
                std::vector<FieldElem> tensor = kernel_point(kernel, r, unknowns, f);
                BracketStructure l = structure_from_tensor(x, f, tensor);
                if (jacobi_holds(l)) per_chunk[c].push_back(std::move(tensor));
            }
        }
        for (auto& chunk : per_chunk)
            for (auto& t : chunk) found.push_back(std::move(t));
    } else
#endif
    {
        (void)parallel;
        for (long long r = 0; r < points; ++r) {
            std::vector<FieldElem> tensor = kernel_point(kernel, r, unknowns, f);
            BracketStructure l = structure_from_tensor(x, f, tensor);
            if (jacobi_holds(l)) found.push_back(std::move(tensor));
        }
    }
    std::sort(found.begin(), found.end());
    std::vector<BracketStructure> out;
    out.reserve(found.size());
    for (auto& t : found) out.push_back(structure_from_tensor(x, f, t));
    return out;
}

}  // namespace

std::vector<BracketStructure> enumerate_structures(const Ver4Object& x, const Field& f) {
    return enumerate_impl(x, f, true);
}

std::vector<BracketStructure> enumerate_structures_serial(const Ver4Object& x, const Field& f) {
    return enumerate_impl(x, f, false);
}

std::vector<Mat> automorphisms(const Ver4Object& x, const Field& f) {
    int n = x.dim();
    Mat d = x.d_matrix(f);
    // d-commutant as a linear subspace of n x n matrices
    std::vector<Vec> rows;
    auto idx = [n](int r, int c) { return static_cast<size_t>(r) * n + c; };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Vec row(static_cast<size_t>(n) * n, 0);
            // (gD - Dg)(r, c) = sum_k g(r,k) D(k,c) - D(r,k) g(k,c)
            for (int k = 0; k < n; ++k) {
                if (d(k, c)) row[idx(r, k)] ^= d(k, c);
                if (d(r, k)) row[idx(k, c)] ^= d(r, k);
            }
            rows.push_back(std::move(row));
        }
    std::vector<Vec> kernel = kernel_basis(Mat::from_rows(rows, n * n, f));
    long long points = 1;
    for (size_t i = 0; i < kernel.size(); ++i) {
        points *= f.size();
        guard_check(points, 1LL << 22, "automorphism sweep size");
    }
    std::vector<Mat> out;
    for (long long r = 0; r < points; ++r) {
        std::vector<FieldElem> entries = kernel_point(kernel, r, n * n, f);
        Mat g(n, n, f);
        g.data() = entries;
        if (det(g) != 0) out.push_back(std::move(g));
    }
    return out;
}

BracketStructure canonical_form(const BracketStructure& l, const std::vector<Mat>& group) {
    BracketStructure least = l;
    for (const Mat& g : group) {
        BracketStructure cur = transport(l, g);
        if (cur.c < least.c) least = cur;
    }
    return least;
}

OrbitReport orbit_classify(const std::vector<BracketStructure>& structures,
                           const std::vector<Mat>& group) {
    OrbitReport rep;
    rep.total = static_cast<long long>(structures.size());
    std::set<std::vector<FieldElem>> seen;
    std::map<std::vector<FieldElem>, long long> orbit_sizes;
    for (const auto& l : structures) {
        if (seen.count(l.c)) continue;
        // walk the whole orbit
        std::set<std::vector<FieldElem>> orbit;
        for (const Mat& g : group) orbit.insert(transport(l, g).c);
        for (const auto& t : orbit) seen.insert(t);
        BracketStructure repst = l;
        repst.c = *orbit.begin();
        orbit_sizes[repst.c] = static_cast<long long>(orbit.size());
        rep.representatives.push_back(std::move(repst));
    }
    std::sort(rep.representatives.begin(), rep.representatives.end(),
              [](const BracketStructure& a, const BracketStructure& b) { return a.c < b.c; });
    for (const auto& r : rep.representatives) rep.sizes.push_back(orbit_sizes[r.c]);
    rep.matches.assign(rep.representatives.size(), "");
    return rep;
}

std::optional<Mat> isomorphism_search(const BracketStructure& l1, const BracketStructure& l2,
                                      int ext_degree) {
    if (l1.dim() != l2.dim()) return std::nullopt;
    const Field& f = Field::gf(ext_degree);
    int n = l1.dim();
    // GF(2) entries embed verbatim into any GF(2^k); other proper subfield
    // embeddings are not bit-pattern maps, so only degree-1 lifts are allowed.
    auto liftable = [&](const BracketStructure& l) {
        return l.field().degree() == ext_degree || l.field().degree() == 1;
    };
    if (!liftable(l1) || !liftable(l2))
        throw std::invalid_argument("isomorphism_search: unsupported field lift");
    auto lift = [&](const BracketStructure& l) {
        BracketStructure out;
        out.d = Mat(n, n, f);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.d(i, j) = l.d(i, j);
        out.c = l.c;
        return out;
    };
    BracketStructure a = lift(l1), b = lift(l2);

    // sweep the d-commutant of a's differential
    std::vector<Vec> rows;
    auto idx = [n](int r, int c) { return static_cast<size_t>(r) * n + c; };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Vec row(static_cast<size_t>(n) * n, 0);
            for (int k = 0; k < n; ++k) {
                if (a.d(k, c)) row[idx(r, k)] ^= a.d(k, c);
                if (b.d(r, k)) row[idx(k, c)] ^= b.d(r, k);
            }
            rows.push_back(std::move(row));
        }
    std::vector<Vec> kernel = kernel_basis(Mat::from_rows(rows, n * n, f));
    long long points = 1;
    for (size_t i = 0; i < kernel.size(); ++i) {
        points *= f.size();
        guard_check(points, 1LL << 22, "isomorphism search sweep size");
    }
    for (long long r = 0; r < points; ++r) {
        std::vector<FieldElem> entries = kernel_point(kernel, r, n * n, f);
        Mat g(n, n, f);
        g.data() = entries;
        if (det(g) == 0) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                Vec lhs = g.apply(a.bracket_basis(i, j));
                Vec rhs = b.bracket(g.col(i), g.col(j));
                if (lhs != rhs) ok = false;
            }
        if (ok) return g;
    }
    return std::nullopt;
}

std::vector<Vec> ideal_closure(const BracketStructure& l, const Vec& v) {
    int n = l.dim();
    std::vector<Vec> basis;
    std::vector<Vec> queue;
    auto try_add = [&](const Vec& w) {
        if (!in_span(basis, w, l.field())) {
            basis.push_back(w);
            queue.push_back(w);
        }
    };
    try_add(v);
    while (!queue.empty()) {
        Vec w = queue.back();
        queue.pop_back();
        try_add(l.d.apply(w));
        for (int i = 0; i < n; ++i) try_add(l.bracket(unit(n, i), w));
    }
    return basis;
}

namespace {

bool simple_impl(const BracketStructure& l, bool parallel) {
    int n = l.dim();
    const Field& f = l.field();
    long long points = 1;
    for (int i = 0; i < n; ++i) {
        points *= f.size();
        guard_check(points, 1LL << 20, "simplicity sweep size");
    }
    if (n <= 1) return false;   // conventions aside, dim-1 cannot be simple here

    auto vec_of = [&](long long r) {
        Vec v(n, 0);
        for (int i = 0; i < n; ++i) {
            v[i] = static_cast<FieldElem>(r % f.size());
            r /= f.size();
        }
        return v;
    };

    bool simple = true;
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 256) shared(simple)
        for (long long r = 1; r < points; ++r) {
            if (!simple) continue;
            Vec v = vec_of(r);
            if (static_cast<int>(ideal_closure(l, v).size()) != n) {
#pragma omp critical
                simple = false;
            }
        }
        return simple;
    }
#endif
    (void)parallel;
    for (long long r = 1; r < points && simple; ++r)
        if (static_cast<int>(ideal_closure(l, vec_of(r)).size()) != n) simple = false;
    return simple;
}

}  // namespace

bool is_simple_lie(const BracketStructure& l) { return simple_impl(l, true); }
bool is_simple_lie_serial(const BracketStructure& l) { return simple_impl(l, false); }

std::vector<Vec> derived_subalgebra(const BracketStructure& l) {
    int n = l.dim();
    std::vector<Vec> basis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec b = l.bracket_basis(i, j);
            if (!in_span(basis, b, l.field())) basis.push_back(b);
        }
    // iterate to a fixpoint (single layer suffices in practice)
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> snapshot = basis;
        for (int i = 0; i < n; ++i)
            for (const Vec& w : snapshot) {
                Vec e(n, 0);
                e[i] = 1;
                Vec b = l.bracket(e, w);
                if (!in_span(basis, b, l.field())) {
                    basis.push_back(b);
                    grew = true;
                }
            }
    }
    return basis;
}

}  // namespace verlie
