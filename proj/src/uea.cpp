#include "verlie/uea.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "verlie/guards.hpp"

namespace verlie {

namespace {

void accumulate(std::map<std::vector<std::uint8_t>, FieldElem>& m,
                const std::vector<std::uint8_t>& key, FieldElem c) {
    if (!c) return;
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, c);
    } else {
        it->second = static_cast<FieldElem>(it->second ^ c);
        if (!it->second) m.erase(it);
    }
}

}  // namespace

Uea::Uea(const BracketStructure& l, const Ver4Object& obj) : l_(l), obj_(obj) {
    dim_ = obj.dim();
    if (l.dim() != dim_ || l.d != obj.d_matrix(l.field()))
        throw std::invalid_argument("Uea: algebra is not in canonical object form");
    const int m = obj.m, n = obj.n;
    pos_.resize(dim_);
    basis_.resize(dim_);
    for (int j = 0; j < n; ++j) {
        pos_[obj.primed_index(j)] = j;
        basis_[j] = obj.primed_index(j);
    }
    for (int i = 0; i < m; ++i) {
        pos_[obj.trivial_index(i)] = n + i;
        basis_[n + i] = obj.trivial_index(i);
    }
    for (int j = 0; j < n; ++j) {
        pos_[obj.unprimed_index(j)] = n + m + j;
        basis_[n + m + j] = obj.unprimed_index(j);
    }
    dpos_.assign(dim_, -1);
    preimage_.assign(dim_, -1);
    for (int j = 0; j < n; ++j) {
        dpos_[n + m + j] = j;
        preimage_[j] = n + m + j;
    }

    // Degree-1 relations [e,e] = 0 for e in the canonical ker-d basis; for a
    // Lie algebra these all vanish, but defective structures force some
    // generators to lower combinations, which pbw_check must see.
    std::vector<Vec> rels;
    for (int j = 0; j < n; ++j) {
        int b = obj.primed_index(j);
        Vec r = l_.bracket_basis(b, b);
        if (!vec_is_zero(r)) rels.push_back(r);
    }
    for (int i = 0; i < m; ++i) {
        int b = obj.trivial_index(i);
        Vec r = l_.bracket_basis(b, b);
        if (!vec_is_zero(r)) rels.push_back(r);
    }
    eliminated_.assign(dim_, false);
    subst_.assign(dim_, Vec());
    if (!rels.empty()) {
        Mat rs = row_space(Mat::from_rows(rels, dim_, l_.field()));
        for (int r = 0; r < rs.rows(); ++r) {
            int piv = -1;
            for (int c = 0; c < dim_; ++c)
                if (rs(r, c)) { piv = c; break; }
            // pivot column indexes a basis element; replace it everywhere
            Vec repl(dim_, 0);
            FieldElem inv = l_.field().inv(rs(r, piv));
            for (int c = piv + 1; c < dim_; ++c) repl[c] = l_.field().mul(inv, rs(r, c));
            int p = pos_[piv];
            eliminated_[p] = true;
            Vec repl_pos(dim_, 0);
            for (int c = 0; c < dim_; ++c) repl_pos[pos_[c]] = repl[c];
            subst_[p] = repl_pos;
        }
    }
}

Vec Uea::bracket_positions(int p, int q) const {
    Vec b = l_.bracket_basis(basis_[p], basis_[q]);
    Vec r(dim_, 0);
    for (int k = 0; k < dim_; ++k) r[pos_[k]] = b[k];
    return r;
}

void Uea::reduce(std::map<Word, FieldElem>& pending, UEAElement& done) const {
    const Field& f = field();
    long long steps = 0;
    const long long step_guard = guard_limit(1LL << 26);
    while (!pending.empty()) {
        if (++steps > step_guard) throw GuardError("uea rewriting step guard exceeded");
        auto it = pending.begin();
        Word w = it->first;
        FieldElem coeff = it->second;
        pending.erase(it);

        int spot = -1;
        enum class Kind { Subst, Swap, Square } kind = Kind::Subst;
        for (size_t i = 0; i < w.size(); ++i) {
            if (eliminated_[w[i]]) {
                spot = static_cast<int>(i);
                kind = Kind::Subst;
                break;
            }
            if (i + 1 < w.size()) {
                if (w[i] > w[i + 1]) {
                    spot = static_cast<int>(i);
                    kind = Kind::Swap;
                    break;
                }
                if (w[i] == w[i + 1] && primed_position(w[i])) {
                    spot = static_cast<int>(i);
                    kind = Kind::Square;
                    break;
                }
            }
        }

        if (spot < 0) {
            PBWMonomial mono(dim_, 0);
            for (std::uint8_t p : w) ++mono[p];
            accumulate(done, mono, coeff);
            continue;
        }

        if (kind == Kind::Subst) {
            const Vec& repl = subst_[w[spot]];
            for (int p = 0; p < dim_; ++p) {
                if (!repl[p]) continue;
                Word nw = w;
                nw[spot] = static_cast<std::uint8_t>(p);
                accumulate(pending, nw, f.mul(coeff, repl[p]));
            }
            continue;
        }

        if (kind == Kind::Swap) {
            int u = w[spot], v = w[spot + 1];
            // u v -> v u + v' u' + [u, v]
            Word sw = w;
            std::swap(sw[spot], sw[spot + 1]);
            accumulate(pending, sw, coeff);
            if (dpos_[u] >= 0 && dpos_[v] >= 0) {
                Word cw = w;
                cw[spot] = static_cast<std::uint8_t>(dpos_[v]);
                cw[spot + 1] = static_cast<std::uint8_t>(dpos_[u]);
                accumulate(pending, cw, coeff);
            }
            Vec br = bracket_positions(u, v);
            for (int p = 0; p < dim_; ++p) {
                if (!br[p]) continue;
                Word bw;
                bw.reserve(w.size() - 1);
                bw.insert(bw.end(), w.begin(), w.begin() + spot);
                bw.push_back(static_cast<std::uint8_t>(p));
                bw.insert(bw.end(), w.begin() + spot + 2, w.end());
                accumulate(pending, bw, f.mul(coeff, br[p]));
            }
            continue;
        }

        // Square of a primed generator z = w': z z -> [w, w].
        int z = w[spot];
        Vec br = bracket_positions(preimage_[z], preimage_[z]);
        for (int p = 0; p < dim_; ++p) {
            if (!br[p]) continue;
            Word bw;
            bw.reserve(w.size() - 1);
            bw.insert(bw.end(), w.begin(), w.begin() + spot);
            bw.push_back(static_cast<std::uint8_t>(p));
            bw.insert(bw.end(), w.begin() + spot + 2, w.end());
            accumulate(pending, bw, f.mul(coeff, br[p]));
        }
    }
}

UEAElement Uea::normal_form(const std::vector<int>& word_basis_indices) const {
    Word w;
    w.reserve(word_basis_indices.size());
    for (int b : word_basis_indices) w.push_back(static_cast<std::uint8_t>(pos_[b]));
    std::map<Word, FieldElem> pending;
    pending[w] = 1;
    UEAElement done;
    reduce(pending, done);
    return done;
}

UEAElement Uea::generator(int basis_index) const {
    return normal_form({basis_index});
}

UEAElement Uea::from_vector(const Vec& v) const {
    UEAElement r;
    for (int i = 0; i < dim_; ++i) {
        if (!v[i]) continue;
        PBWMonomial m(dim_, 0);
        m[pos_[i]] = 1;
        accumulate(r, m, v[i]);
    }
    // eliminated generators must still be rewritten
    std::map<Word, FieldElem> pending;
    UEAElement out;
    for (const auto& [m, c] : r) {
        Word w;
        for (int p = 0; p < dim_; ++p)
            for (int k = 0; k < m[p]; ++k) w.push_back(static_cast<std::uint8_t>(p));
        accumulate(pending, w, c);
    }
    reduce(pending, out);
    return out;
}

UEAElement Uea::unit() const {
    UEAElement r;
    r[PBWMonomial(dim_, 0)] = 1;
    return r;
}

std::vector<int> Uea::monomial_word(const PBWMonomial& m) const {
    std::vector<int> w;
    for (int p = 0; p < dim_; ++p)
        for (int k = 0; k < m[p]; ++k) w.push_back(basis_[p]);
    return w;
}

UEAElement Uea::multiply(const UEAElement& a, const UEAElement& b) const {
    const Field& f = field();
    std::map<Word, FieldElem> pending;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Word w;
            for (int p = 0; p < dim_; ++p)
                for (int k = 0; k < ma[p]; ++k) w.push_back(static_cast<std::uint8_t>(p));
            for (int p = 0; p < dim_; ++p)
                for (int k = 0; k < mb[p]; ++k) w.push_back(static_cast<std::uint8_t>(p));
            accumulate(pending, w, f.mul(ca, cb));
        }
    UEAElement out;
    reduce(pending, out);
    return out;
}

UEAElement Uea::add(const UEAElement& a, const UEAElement& b) const {
    UEAElement r = a;
    for (const auto& [m, c] : b) accumulate(r, m, c);
    return r;
}

UEAElement Uea::scale(FieldElem c, const UEAElement& a) const {
    UEAElement r;
    if (!c) return r;
    for (const auto& [m, cc] : a) r[m] = field().mul(c, cc);
    return r;
}

UEAElement Uea::power(const UEAElement& a, int k) const {
    UEAElement r = unit();
    for (int i = 0; i < k; ++i) r = multiply(r, a);
    return r;
}

bool Uea::is_central(const UEAElement& z) const {
    for (int i = 0; i < dim_; ++i) {
        UEAElement g = generator(i);
        if (add(multiply(z, g), multiply(g, z)) != UEAElement{}) return false;
    }
    return true;
}

int Uea::degree(const PBWMonomial& m) {
    int d = 0;
    for (std::uint8_t e : m) d += e;
    return d;
}

std::vector<PBWMonomial> Uea::monomials_up_to(int max_degree) const {
    std::vector<PBWMonomial> out;
    PBWMonomial cur(dim_, 0);
    // graded enumeration: for each total degree, lexicographic
    for (int deg = 0; deg <= max_degree; ++deg) {
        std::vector<PBWMonomial> level;
        std::function<void(int, int)> rec = [&](int p, int rem) {
            if (p == dim_) {
                if (rem == 0) level.push_back(cur);
                return;
            }
            int cap = primed_position(p) ? 1 : rem;
            for (int e = 0; e <= std::min(cap, rem); ++e) {
                cur[p] = static_cast<std::uint8_t>(e);
                rec(p + 1, rem - e);
            }
            cur[p] = 0;
        };
        rec(0, deg);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<UEAElement> Uea::centralizer_basis(int max_degree) const {
    const Field& f = field();
    std::vector<PBWMonomial> monos = monomials_up_to(max_degree);
    guard_check(static_cast<long long>(monos.size()) * dim_, 1LL << 22,
                "centralizer monomial count");

    // index map for result monomials (degree <= max_degree + 1)
    std::vector<PBWMonomial> targets = monomials_up_to(max_degree + 1);
    std::map<PBWMonomial, int> tindex;
    for (size_t i = 0; i < targets.size(); ++i) tindex[targets[i]] = static_cast<int>(i);

    Mat sys(static_cast<int>(targets.size()) * dim_, static_cast<int>(monos.size()), f);
    for (size_t col = 0; col < monos.size(); ++col) {
        UEAElement zm;
        zm[monos[col]] = 1;
        for (int g = 0; g < dim_; ++g) {
            UEAElement ge = generator(g);
            UEAElement comm = add(multiply(zm, ge), multiply(ge, zm));
            for (const auto& [m, c] : comm)
                sys(g * static_cast<int>(targets.size()) + tindex.at(m),
                    static_cast<int>(col)) = c;
        }
    }
    std::vector<UEAElement> basis;
    for (const Vec& k : kernel_basis(sys)) {
        UEAElement z;
        for (size_t i = 0; i < monos.size(); ++i)
            if (k[i]) z[monos[i]] = k[i];
        basis.push_back(std::move(z));
    }
    return basis;
}

Uea::PbwReport Uea::pbw_check(int max_degree) const {
    PbwReport rep;
    const Field& f = field();
    std::vector<PBWMonomial> monos = monomials_up_to(max_degree);
    std::map<PBWMonomial, int> mindex;
    for (size_t i = 0; i < monos.size(); ++i) mindex[monos[i]] = static_cast<int>(i);

    double wordcount = 0;
    for (int len = 0, p = 1; len <= max_degree; ++len, p *= dim_) wordcount += p;
    guard_check(static_cast<long long>(wordcount), 1LL << 22, "pbw word count");

    std::vector<Vec> rows;          // normal forms as coordinate vectors
    std::vector<int> row_degree;    // word length producing each row
    std::vector<std::vector<int>> words = {{}};
    rows.push_back(Vec(monos.size(), 0));
    {
        UEAElement u = unit();
        Vec r(monos.size(), 0);
        for (const auto& [m, c] : u) r[mindex.at(m)] = c;
        rows.back() = r;
        row_degree.push_back(0);
    }
    std::vector<std::vector<int>> frontier = {{}};
    for (int len = 1; len <= max_degree; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (int g = 0; g < dim_; ++g) {
                std::vector<int> nw = w;
                nw.push_back(g);
                Vec r(monos.size(), 0);
                for (const auto& [m, c] : normal_form(nw)) r[mindex.at(m)] = c;
                rows.push_back(std::move(r));
                row_degree.push_back(len);
                next.push_back(std::move(nw));
            }
        frontier = std::move(next);
    }

    rep.expected_dims.resize(max_degree + 1);
    rep.actual_dims.resize(max_degree + 1);
    for (int deg = 0; deg <= max_degree; ++deg) {
        int expected = 0;
        for (const auto& m : monos)
            if (degree(m) <= deg) ++expected;
        std::vector<Vec> upto;
        for (size_t i = 0; i < rows.size(); ++i)
            if (row_degree[i] <= deg) upto.push_back(rows[i]);
        rep.expected_dims[deg] = expected;
        rep.actual_dims[deg] = span_rank(upto, static_cast<int>(monos.size()), f);
        if (rep.actual_dims[deg] < rep.expected_dims[deg]) rep.defect = true;
    }
    return rep;
}

UEAElement Uea::project_idempotent(const UEAElement& z, const UEAElement& e, int side) const {
    if (multiply(e, e) != e || !is_central(e))
        throw std::invalid_argument("project_idempotent: e is not a central idempotent");
    if (side == 1) return multiply(z, e);
    if (side == 0) return add(z, multiply(z, e));
    throw std::invalid_argument("project_idempotent: side must be 0 or 1");
}

std::string Uea::monomial_label(const PBWMonomial& m) const {
    if (degree(m) == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (int p = 0; p < dim_; ++p) {
        if (!m[p]) continue;
        if (!first) os << "*";
        first = false;
        os << obj_.basis_label(basis_[p]);
        if (m[p] > 1) os << "^" << static_cast<int>(m[p]);
    }
    return os.str();
}

std::string Uea::to_string(const UEAElement& a) const {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : a) {
        if (!first) os << " + ";
        first = false;
        std::string cs = field().to_string(c);
        if (cs != "1" || degree(m) == 0) os << "(" << cs << ")";
        if (degree(m) > 0) os << monomial_label(m);
    }
    return os.str();
}

}  // namespace verlie
