#ifndef QUIVERCERT_HOMALG_HPP
#define QUIVERCERT_HOMALG_HPP

// Minimal projective resolutions, Ext dimensions, Euler characteristics,
// Cartan matrix, Gram form of the simples and global dimension.

#include "rep.hpp"

namespace qvc {

// A minimal projective resolution ... -> P^1 -> P^0 -> M -> 0.
//
// Term k is the direct sum of the projectives P_{terms[k][0]}, P_{terms[k][1]}
// and so on. The differential diff[k] (k >= 1) maps term k to term k-1 and is
// a matrix over the algebra: entry (r, c) lies in the span of normal paths
// terms[k-1][r] -> terms[k][c] and is the image of the c-th generator in the
// r-th summand. Composition of differentials is algebra multiplication.
struct Resolution {
    AlgebraPtr alg;
    Representation target;
    std::vector<std::vector<int>> terms;
    std::vector<std::vector<std::vector<LinComb>>> diff;  // diff[k]: |terms[k-1]| x |terms[k]|
    std::vector<HomMap> concrete;  // concrete[0]: term 0 -> M; concrete[k]: term k -> term k-1
    std::vector<Representation> term_reps;
    bool terminated = true;

    int length() const { return int(terms.size()) - 1; }
};

// Minimal resolution via projective covers of tops; lifts are chosen by
// canonical echelon form so the output is deterministic. Stops at the length
// bound; for an acyclic bound quiver, bound = #vertices always terminates.
Resolution minimal_resolution(const Representation& m, int length_bound);

// Resolution sanity: d d = 0, rank-accounted exactness, and minimality
// (no differential entry has a lazy component).
bool resolution_is_complex(const Resolution& r);
bool resolution_is_exact(const Resolution& r);
bool resolution_is_minimal(const Resolution& r);

// dim Ext^k(M, N), computed as homology of Hom(P^., N).
int ext_dim(const Representation& m, const Representation& n, int k);

// Ext dimensions for k = 0..kmax in one resolution pass.
std::vector<int> ext_table(const Representation& m, const Representation& n, int kmax);

// Sum of (-1)^k dim Ext^k(M, N); finite by acyclicity.
Int euler_char(const Representation& m, const Representation& n);

// C[i][j] = number of normal paths i -> j = dim Hom(P_j, P_i).
IMat cartan_matrix(const AlgebraPtr& alg);

// Gram form of the Euler pairing in the simple basis: chi(d, e) = d^T G e.
struct GramResult {
    IMat gram;
    // "combinatorial" when global dimension <= 2 and the declared relations
    // are minimal (then G[i][j] = delta - #arrows(i->j) + #relations(i->j));
    // otherwise "ext-table", computed from ext_dim over all simple pairs.
    std::string route;
    int global_dim = 0;
    bool relations_min = false;
};

GramResult gram_matrix_simples(const AlgebraPtr& alg);

// Max over simples of the minimal resolution length; -1 means ">= bound".
int global_dimension(const AlgebraPtr& alg, int bound);

}  // namespace qvc

#endif
