#ifndef VERLIE_GF_HPP
#define VERLIE_GF_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace verlie {

/// An element of GF(2^k), k <= 4, stored as the bit pattern of a polynomial
/// in t over GF(2), reduced modulo the field's fixed irreducible polynomial.
using FieldElem = std::uint8_t;

using Vec = std::vector<FieldElem>;

/// GF(2^k) with a fixed irreducible modulus per degree:
///   k=2: t^2+t+1, k=3: t^3+t+1, k=4: t^4+t+1.
/// All arithmetic is table-driven and exact.
class Field {
public:
    static const Field& gf(int degree);           // degree in {1,2,3,4}
    static const Field& by_name(const std::string& name);  // "gf2".."gf16"

    int degree() const { return k_; }
    int size() const { return 1 << k_; }
    std::string name() const { return "gf" + std::to_string(size()); }

    FieldElem add(FieldElem a, FieldElem b) const { return a ^ b; }
    FieldElem mul(FieldElem a, FieldElem b) const { return mul_[a][b]; }
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    FieldElem sqr(FieldElem a) const { return mul_[a][a]; }

    /// Unique square root: the inverse of the Frobenius a -> a^2.
    FieldElem frobenius_sqrt(FieldElem a) const { return sqrt_[a]; }

    /// Parses polynomial literals such as "0", "1", "t", "t+1", "t^2+t".
    FieldElem parse(const std::string& text) const;
    std::string to_string(FieldElem a) const;

private:
    explicit Field(int k, unsigned modulus);

    int k_;
    unsigned modulus_;
    FieldElem mul_[16][16];
    FieldElem inv_[16];
    FieldElem sqrt_[16];
};

/// Dense matrix over a fixed GF(2^k), row-major.
class Mat {
public:
    Mat() : rows_(0), cols_(0), f_(&Field::gf(1)) {}
    Mat(int rows, int cols, const Field& f)
        : rows_(rows), cols_(cols), f_(&f), e_(static_cast<size_t>(rows) * cols, 0) {}

    static Mat identity(int n, const Field& f);
    static Mat zero(int rows, int cols, const Field& f) { return Mat(rows, cols, f); }
    static Mat from_rows(const std::vector<Vec>& rows, int cols, const Field& f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *f_; }

    FieldElem operator()(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    FieldElem& operator()(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }

    Vec row(int r) const;
    Vec col(int c) const;

    Mat operator+(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Vec apply(const Vec& v) const;        // matrix * column vector
    Mat transpose() const;
    Mat kronecker(const Mat& o) const;    // tensor product, row-major block order
    bool is_zero() const;

    const std::vector<FieldElem>& data() const { return e_; }
    std::vector<FieldElem>& data() { return e_; }

private:
    int rows_, cols_;
    const Field* f_;
    std::vector<FieldElem> e_;
};

/// One particular solution plus a kernel basis, or inconsistent.
struct LinearSolution {
    bool consistent = false;
    Vec particular;                 // some x with Ax = b (when consistent)
    std::vector<Vec> kernel;        // basis of {x : Ax = 0}
};

LinearSolution solve_linear(const Mat& a, const Vec& b);
int rank(const Mat& a);
std::vector<Vec> kernel_basis(const Mat& a);
FieldElem det(const Mat& a);
std::optional<Mat> inverse(const Mat& a);

/// Row-space basis in reduced echelon form; rows are the basis vectors.
Mat row_space(const Mat& a);

/// rank of the span of `vecs` (each of length `len`).
int span_rank(const std::vector<Vec>& vecs, int len, const Field& f);

/// true iff v lies in the span of `basis`.
bool in_span(const std::vector<Vec>& basis, const Vec& v, const Field& f);

// Small vector helpers over a field.
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(FieldElem c, const Vec& a, const Field& f);
bool vec_is_zero(const Vec& a);

}  // namespace verlie

#endif
