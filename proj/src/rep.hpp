#ifndef QUIVERCERT_REP_HPP
#define QUIVERCERT_REP_HPP

// Finite-dimensional representations of a bound quiver: per-vertex rational
// vector spaces and per-arrow matrices satisfying the relations. Hom spaces
// are computed exactly by solving the intertwiner linear system.

#include "algebra.hpp"
#include "linalg.hpp"

namespace qvc {

struct Representation {
    AlgebraPtr alg;
    std::vector<int> dims;       // per vertex, declared order
    std::vector<Mat> arrow_mat;  // per arrow a: shape dims[tgt(a)] x dims[src(a)]

    // Basis labels per vertex; empty for anonymous bases, path strings for
    // projectives. Purely informational.
    std::vector<std::vector<std::string>> basis_labels;

    int dim_at(int v) const { return dims[v]; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

// A morphism of representations: one matrix per vertex, N_a f_src = f_tgt M_a.
struct HomMap {
    std::vector<Mat> comp;  // comp[v]: dims N[v] x dims M[v]
};

// Validates shapes and checks every relation evaluates to the zero matrix;
// throws InputError naming the violated relation and a nonzero residual entry.
Representation make_representation(AlgebraPtr alg, std::vector<int> dims, std::vector<Mat> matrices);

Representation zero_rep(AlgebraPtr alg);
Representation simple_rep(AlgebraPtr alg, int v);

// Indecomposable projective at v: the space at vertex u is spanned by the
// normal paths v -> u (in path order), arrows act by composition followed by
// reduction. Satisfies dim Hom(P_v, M) = dim M_v for every M.
Representation projective_rep(AlgebraPtr alg, int v);

// Matrix of a path / algebra element acting on M (column vectors, so the
// matrix of p: u -> w has shape dims[w] x dims[u]).
Mat evaluate_path(const Representation& m, const Path& p);
Mat evaluate_elem(const Representation& m, const LinComb& x, int src, int tgt);

// Canonical basis of Hom(M, N): kernel of the intertwiner system in reduced
// echelon form, so the result is deterministic.
std::vector<HomMap> hom_basis(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);

// g after f: f in Hom(M,N), g in Hom(N,L), result in Hom(M,L).
HomMap compose_hom(const HomMap& f, const HomMap& g);

HomMap identity_hom(const Representation& m);
bool is_intertwiner(const Representation& m, const Representation& n, const HomMap& f);

// The bilinear composition map Hom(M,N) (x) Hom(N,L) -> Hom(M,L) on the
// canonical bases. Kernel elements are coefficient matrices c with rows
// indexed by the Hom(M,N) basis and columns by the Hom(N,L) basis.
struct CompositionKernel {
    int dim_mn = 0;
    int dim_nl = 0;
    int dim_ml = 0;
    int rank = 0;
    std::vector<Mat> kernel;  // each dim_mn x dim_nl
};

CompositionKernel kernel_of_composition(const Representation& m, const Representation& n,
                                        const Representation& l);

Representation direct_sum(const Representation& m, const Representation& n);
Representation direct_sum_many(AlgebraPtr alg, const std::vector<Representation>& parts);

// Representation file: "rep <quiver-file>" header, "dim <vertex> = <n>" lines,
// then "arrow <name>:" blocks with one row of rationals per line. Omitted
// vertices get dimension 0; arrow blocks with an empty matrix may be omitted.
// Throws ParseError with line numbers. The header path is returned so the
// caller can load the quiver; parsing the body needs the algebra already.
std::string rep_file_quiver_path(const std::string& text);
Representation parse_rep_file(const std::string& text, AlgebraPtr alg);

}  // namespace qvc

#endif
