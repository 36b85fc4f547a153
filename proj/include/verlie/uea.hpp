#ifndef VERLIE_UEA_HPP
#define VERLIE_UEA_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "verlie/liealg.hpp"

namespace verlie {

/// Exponent vector over the enveloping-algebra generator order:
/// primed generators first (capped at exponent 1), then trivial generators,
/// then unprimed generators; within a family, by index.
using PBWMonomial = std::vector<std::uint8_t>;

/// Finitely supported map PBW monomial -> coefficient; no zero coefficients
/// are stored.
using UEAElement = std::map<PBWMonomial, FieldElem>;

/// A Lie algebra prepared for enveloping-algebra computations. Requires the
/// canonical object form (d maps basis to basis), which fixes each primed
/// generator's designated preimage.
class Uea {
public:
    Uea(const BracketStructure& l, const Ver4Object& obj);

    const BracketStructure& algebra() const { return l_; }
    const Ver4Object& object() const { return obj_; }
    const Field& field() const { return l_.field(); }
    int generators() const { return dim_; }

    /// Positions: 0..n-1 primed, n..n+m-1 trivial, n+m..n+2n... unprimed.
    int position_of_basis(int basis_index) const { return pos_[basis_index]; }
    int basis_of_position(int p) const { return basis_[p]; }
    bool primed_position(int p) const { return p < obj_.n; }

    /// Normal form of a product of Lie basis elements (given as basis
    /// indices), as a linear combination of PBW monomials.
    UEAElement normal_form(const std::vector<int>& word_basis_indices) const;

    /// The generator b_i as a degree-1 element.
    UEAElement generator(int basis_index) const;
    /// A Lie-algebra vector as a degree-1 element.
    UEAElement from_vector(const Vec& v) const;
    UEAElement unit() const;

    UEAElement multiply(const UEAElement& a, const UEAElement& b) const;
    UEAElement add(const UEAElement& a, const UEAElement& b) const;
    UEAElement scale(FieldElem c, const UEAElement& a) const;
    UEAElement power(const UEAElement& a, int k) const;

    bool is_central(const UEAElement& z) const;

    /// Basis of {z : deg z <= max_degree, z central}.
    std::vector<UEAElement> centralizer_basis(int max_degree) const;

    struct PbwReport {
        std::vector<int> expected_dims;   // index = filtration degree
        std::vector<int> actual_dims;
        bool defect = false;
    };
    PbwReport pbw_check(int max_degree) const;

    /// Multiplies by e (side 1) or 1 + e (side 0); e must be a central
    /// idempotent.
    UEAElement project_idempotent(const UEAElement& z, const UEAElement& e, int side) const;

    /// All PBW monomials of degree <= max_degree, in graded lexicographic
    /// order (deterministic).
    std::vector<PBWMonomial> monomials_up_to(int max_degree) const;

    static int degree(const PBWMonomial& m);
    std::vector<int> monomial_word(const PBWMonomial& m) const;  // basis indices

    std::string to_string(const UEAElement& a) const;
    std::string monomial_label(const PBWMonomial& m) const;

private:
    BracketStructure l_;
    Ver4Object obj_;
    int dim_;
    std::vector<int> pos_;        // basis index -> position
    std::vector<int> basis_;      // position -> basis index
    std::vector<int> dpos_;       // position -> position of d(gen), or -1
    std::vector<int> preimage_;   // primed position -> preimage position
    // substitution for generators forced to a lower combination by the
    // degree-1 relations [e,e] = 0, e in ker d (empty for valid algebras)
    std::vector<bool> eliminated_;
    std::vector<Vec> subst_;      // position -> replacement over positions

    using Word = std::vector<std::uint8_t>;
    void reduce(std::map<Word, FieldElem>& pending, UEAElement& done) const;
    Vec bracket_positions(int p, int q) const;  // [g_p, g_q] over positions
};

}  // namespace verlie

#endif
