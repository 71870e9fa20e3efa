#ifndef QUIVERCERT_KTHEORY_HPP
#define QUIVERCERT_KTHEORY_HPP

// The Grothendieck lattice in the simple basis: Euler pairing, numerical
// exceptionality, orthogonal sublattices and braid mutations of class
// sequences. Everything is exact integer arithmetic.

#include "rep.hpp"

namespace qvc {

using KClass = std::vector<Int>;

KClass class_of(const Representation& m);

std::string kclass_str(const KClass& v);

// chi(v, w) = v^T G w.
Int chi(const KClass& v, const KClass& w, const IMat& g);

// Numerically exceptional: chi(v, v) = 1.
bool is_exceptional_class(const KClass& v, const IMat& g);

enum class Side { Left, Right, Bi };

// Canonical (Hermite-reduced) row basis of the orthogonal lattice:
//   Left:  { v : chi(v, s) = 0 for all s in S }
//   Right: { v : chi(s, v) = 0 for all s in S }
//   Bi:    the intersection of both.
// The lattice is saturated, so it contains every integer solution.
IMat orthogonal_lattice(const std::vector<KClass>& s, const IMat& g, Side side);

// Gram matrix restricted to a lattice basis (rows): R[k][l] = chi(u_k, u_l).
IMat restricted_gram(const IMat& basis, const IMat& g);

// Class-level braid mutations of a numerical exceptional pair:
//   left:  (v, w) -> (w - chi(v,w) v, v)
//   right: (v, w) -> (w, v - chi(v,w) w)
// Throws InputError unless chi(v,v) = chi(w,w) = 1 and chi(w,v) = 0. The
// result is again an exceptional pair spanning the same sublattice.
std::pair<KClass, KClass> mutate_left(const KClass& v, const KClass& w, const IMat& g);
std::pair<KClass, KClass> mutate_right(const KClass& v, const KClass& w, const IMat& g);

// chi(v_i, v_i) = 1 everywhere and chi(v_j, v_i) = 0 for all j > i.
bool is_numerical_exceptional_sequence(const std::vector<KClass>& seq, const IMat& g);

// Numerical fullness shadow: the classes form a square matrix of determinant
// +1 or -1.
bool spans_full_lattice(const std::vector<KClass>& seq);

// Apply the braid generator at position i (0-based; acts on entries i, i+1).
// inverse = false applies the left mutation, true its inverse (right). The
// input must satisfy the sequence invariants; the output is re-verified and
// a violation throws std::logic_error (it would indicate a bug, so it is
// surfaced, never ignored).
std::vector<KClass> braid_act(const std::vector<KClass>& seq, int i, bool inverse, const IMat& g);

// Dimension vector of P_v, for each v in declared order (the rows of the
// Cartan matrix).
std::vector<KClass> projective_classes(const AlgebraPtr& alg);

// Vertex order in which the projective classes form a numerical exceptional
// sequence: reversed topological order (sinks first).
std::vector<int> exceptional_vertex_order(const AlgebraPtr& alg);

}  // namespace qvc

#endif
