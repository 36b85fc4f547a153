#ifndef VERLIE_CLASSIFY_HPP
#define VERLIE_CLASSIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "verlie/liealg.hpp"

namespace verlie {

/// Exhaustive list of Lie structures on the canonical object (m, n): the
/// linear axioms (skew-symmetry, derivation, the ker-d alternating condition)
/// are solved exactly, then the affine solution space is filtered by the
/// quadratic Jacobi identity. The parallel kernel and the serial reference
/// return identical, deterministically ordered results.
std::vector<BracketStructure> enumerate_structures(const Ver4Object& x, const Field& f);
std::vector<BracketStructure> enumerate_structures_serial(const Ver4Object& x, const Field& f);

/// The linear-solution subspace the Jacobi filter sweeps (kernel basis of the
/// linear axiom system); exposed for the benchmark.
std::vector<std::vector<FieldElem>> structure_kernel(const Ver4Object& x, const Field& f);

/// All invertible d-commuting endomorphisms of the canonical object.
std::vector<Mat> automorphisms(const Ver4Object& x, const Field& f);

struct OrbitReport {
    std::vector<BracketStructure> representatives;   // lexicographically least in orbit
    std::vector<long long> sizes;
    std::vector<std::string> matches;                // representative -> row id + binding
    long long total = 0;
};

OrbitReport orbit_classify(const std::vector<BracketStructure>& structures,
                           const std::vector<Mat>& group);

/// Lexicographically least structure tensor in the orbit of l.
BracketStructure canonical_form(const BracketStructure& l, const std::vector<Mat>& group);

/// Exhaustive search for a d-commuting invertible intertwiner over
/// GF(2^ext_degree); nullopt means none exists at that field size.
std::optional<Mat> isomorphism_search(const BracketStructure& l1, const BracketStructure& l2,
                                      int ext_degree);

/// True iff the d-stable, bracket-stable span of every nonzero vector is the
/// whole algebra (swept exhaustively over the field).
bool is_simple_lie(const BracketStructure& l);
bool is_simple_lie_serial(const BracketStructure& l);

/// Span of all brackets, iterated to a fixpoint; rows of the result.
std::vector<Vec> derived_subalgebra(const BracketStructure& l);

/// Smallest d-stable, bracket-stable subspace containing v.
std::vector<Vec> ideal_closure(const BracketStructure& l, const Vec& v);

}  // namespace verlie

#endif
