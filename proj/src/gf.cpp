#include "verlie/gf.hpp"

#include <algorithm>
#include <array>

namespace verlie {

namespace {

unsigned clmul(unsigned a, unsigned b) {
    unsigned r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

unsigned reduce(unsigned x, unsigned modulus, int k) {
    for (int d = 7; d >= k; --d)
        if (x & (1u << d)) x ^= modulus << (d - k);
    return x;
}

}  // namespace

Field::Field(int k, unsigned modulus) : k_(k), modulus_(modulus) {
    const int q = 1 << k;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            mul_[a][b] = static_cast<FieldElem>(reduce(clmul(a, b), modulus, k));
    inv_[0] = 0;  // never queried; inv(0) throws
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a][b] == 1) inv_[a] = static_cast<FieldElem>(b);
    // a -> a^2 is a bijection; invert it by table scan.
    for (int a = 0; a < q; ++a) sqrt_[mul_[a][a]] = static_cast<FieldElem>(a);
}

const Field& Field::gf(int degree) {
    static const Field f1(1, 0b10);      // t
    static const Field f2(2, 0b111);     // t^2+t+1
    static const Field f3(3, 0b1011);    // t^3+t+1
    static const Field f4(4, 0b10011);   // t^4+t+1
    switch (degree) {
        case 1: return f1;
        case 2: return f2;
        case 3: return f3;
        case 4: return f4;
        default: throw std::invalid_argument("field degree must be 1..4");
    }
}

const Field& Field::by_name(const std::string& name) {
    if (name == "gf2") return gf(1);
    if (name == "gf4") return gf(2);
    if (name == "gf8") return gf(3);
    if (name == "gf16") return gf(4);
    throw std::invalid_argument("unknown field: " + name);
}

FieldElem Field::inv(FieldElem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

FieldElem Field::parse(const std::string& text) const {
    unsigned value = 0;
    size_t i = 0;
    if (text.empty()) throw std::invalid_argument("empty field literal");
    while (i < text.size()) {
        size_t j = i;
        while (j < text.size() && text[j] != '+') ++j;
        std::string term = text.substr(i, j - i);
        if (term == "0") {
            // contributes nothing
        } else if (term == "1") {
            value ^= 1;
        } else if (term == "t") {
            value ^= 2;
        } else if (term.rfind("t^", 0) == 0) {
            int p = std::stoi(term.substr(2));
            if (p < 0 || p > 3) throw std::invalid_argument("field literal exponent out of range");
            value ^= 1u << p;
        } else {
            throw std::invalid_argument("bad field literal term: " + term);
        }
        i = j + 1;
    }
    if (value >= static_cast<unsigned>(size()))
        throw std::invalid_argument("field literal not reduced in " + name() + ": " + text);
    return static_cast<FieldElem>(value);
}

std::string Field::to_string(FieldElem a) const {
    if (a == 0) return "0";
    std::string s;
    for (int p = 3; p >= 0; --p) {
        if (!(a & (1 << p))) continue;
        if (!s.empty()) s += "+";
        if (p == 0) s += "1";
        else if (p == 1) s += "t";
        else s += "t^" + std::to_string(p);
    }
    return s;
}

Mat Mat::identity(int n, const Field& f) {
    Mat m(n, n, f);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols, const Field& f) {
    Mat m(static_cast<int>(rows.size()), cols, f);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw std::invalid_argument("from_rows: ragged row");
        for (int c = 0; c < cols; ++c) m(static_cast<int>(r), c) = rows[r][c];
    }
    return m;
}

Vec Mat::row(int r) const {
    Vec v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

Vec Mat::col(int c) const {
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat+: shape mismatch");
    Mat m(rows_, cols_, *f_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] ^ o.e_[i];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat*: shape mismatch");
    Mat m(rows_, o.cols_, *f_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            FieldElem a = (*this)(i, k);
            if (!a) continue;
            for (int j = 0; j < o.cols_; ++j)
                m(i, j) ^= f_->mul(a, o(k, j));
        }
    return m;
}

Vec Mat::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Mat::apply: size mismatch");
    Vec r(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        FieldElem acc = 0;
        for (int j = 0; j < cols_; ++j) acc ^= f_->mul((*this)(i, j), v[j]);
        r[i] = acc;
    }
    return r;
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_, *f_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Mat Mat::kronecker(const Mat& o) const {
    Mat m(rows_ * o.rows_, cols_ * o.cols_, *f_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            FieldElem a = (*this)(i, j);
            if (!a) continue;
            for (int p = 0; p < o.rows_; ++p)
                for (int q = 0; q < o.cols_; ++q)
                    m(i * o.rows_ + p, j * o.cols_ + q) = f_->mul(a, o(p, q));
        }
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](FieldElem x) { return x == 0; });
}

namespace {

// In-place Gauss-Jordan on an augmented matrix [A | rhs]; returns pivot columns.
std::vector<int> eliminate(Mat& m, int acols) {
    const Field& f = m.field();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < acols && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c)) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        FieldElem piv = f.inv(m(r, c));
        for (int j = 0; j < m.cols(); ++j) m(r, j) = f.mul(piv, m(r, j));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || !m(i, c)) continue;
            FieldElem s = m(i, c);
            for (int j = 0; j < m.cols(); ++j) m(i, j) ^= f.mul(s, m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

LinearSolution solve_linear(const Mat& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve_linear: rhs length != rows");
    const Field& f = a.field();
    Mat aug(a.rows(), a.cols() + 1, f);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<int> pivots = eliminate(aug, a.cols());

    LinearSolution sol;
    // Inconsistent iff some reduced row is (0 ... 0 | nonzero).
    for (int i = static_cast<int>(pivots.size()); i < a.rows(); ++i)
        if (aug(i, a.cols())) return sol;
    sol.consistent = true;

    std::vector<int> pivot_of_col(a.cols(), -1);
    for (size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = static_cast<int>(i);

    sol.particular.assign(a.cols(), 0);
    for (size_t i = 0; i < pivots.size(); ++i)
        sol.particular[pivots[i]] = aug(static_cast<int>(i), a.cols());

    for (int c = 0; c < a.cols(); ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vec k(a.cols(), 0);
        k[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = aug(static_cast<int>(i), c);
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

int rank(const Mat& a) {
    Mat m = a;
    return static_cast<int>(eliminate(m, m.cols()).size());
}

std::vector<Vec> kernel_basis(const Mat& a) {
    return solve_linear(a, Vec(a.rows(), 0)).kernel;
}

FieldElem det(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det: not square");
    const Field& f = a.field();
    Mat m = a;
    FieldElem d = 1;
    int n = m.rows();
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (m(i, c)) { p = i; break; }
        if (p < 0) return 0;
        if (p != c)
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
        d = f.mul(d, m(c, c));
        FieldElem piv = f.inv(m(c, c));
        for (int i = c + 1; i < n; ++i) {
            if (!m(i, c)) continue;
            FieldElem s = f.mul(piv, m(i, c));
            for (int j = c; j < n; ++j) m(i, j) ^= f.mul(s, m(c, j));
        }
    }
    return d;
}

std::optional<Mat> inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
    const Field& f = a.field();
    int n = a.rows();
    Mat aug(n, 2 * n, f);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    if (static_cast<int>(eliminate(aug, n).size()) != n) return std::nullopt;
    Mat inv(n, n, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

Mat row_space(const Mat& a) {
    Mat m = a;
    int r = static_cast<int>(eliminate(m, m.cols()).size());
    Mat basis(r, a.cols(), a.field());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < a.cols(); ++j) basis(i, j) = m(i, j);
    return basis;
}

int span_rank(const std::vector<Vec>& vecs, int len, const Field& f) {
    if (vecs.empty()) return 0;
    return rank(Mat::from_rows(vecs, len, f));
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, const Field& f) {
    if (vec_is_zero(v)) return true;
    if (basis.empty()) return false;
    Mat a = Mat::from_rows(basis, static_cast<int>(v.size()), f).transpose();
    return solve_linear(a, v).consistent;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] ^ b[i];
    return r;
}

Vec vec_scale(FieldElem c, const Vec& a, const Field& f) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
    return r;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](FieldElem x) { return x == 0; });
}

}  // namespace verlie
