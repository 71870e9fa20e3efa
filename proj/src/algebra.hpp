#ifndef QUIVERCERT_ALGEBRA_HPP
#define QUIVERCERT_ALGEBRA_HPP

// The finite-dimensional quotient algebra of an acyclic bound quiver: a
// normal-form path basis per (source, target) pair and a complete rewrite
// table expanding every non-normal path over the normal ones.
//
// Construction: the two-sided ideal spanned by all left/right path extensions
// of the relations is echelonized slice by slice, taking the greatest path
// (longest, then lexicographically last) of each ideal row as its leading
// monomial. Normal paths are the non-leading monomials; reduction is a single
// substitution pass through the table, so it is confluent by construction.

#include <map>
#include <memory>

#include "quiver.hpp"

namespace qvc {

// Sparse algebra element: a rational combination of paths.
struct LinComb {
    std::map<Path, Rat, PathLess> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Path& p, const Rat& c);
    LinComb operator+(const LinComb& o) const;
    LinComb operator-(const LinComb& o) const;
    LinComb scaled(const Rat& c) const;
    bool operator==(const LinComb& o) const { return terms == o.terms; }
    std::string str(const Quiver& q) const;

    static LinComb of(const Path& p, const Rat& c = 1);
};

class Algebra {
public:
    explicit Algebra(BoundQuiver bq);

    const BoundQuiver& bound_quiver() const { return bq_; }
    const Quiver& quiver() const { return bq_.quiver; }
    int num_vertices() const { return bq_.quiver.num_vertices(); }

    int dimension() const { return dim_; }
    int path_algebra_dimension() const { return int(all_paths_.size()); }
    int ideal_rank() const { return path_algebra_dimension() - dim_; }

    // Normal-form paths from vertex i to vertex j, sorted by PathLess.
    const std::vector<Path>& normal_paths(int i, int j) const { return normal_[i][j]; }
    int normal_count(int i, int j) const { return int(normal_[i][j].size()); }

    bool is_normal(const Path& p) const { return expansion_.find(p) == expansion_.end(); }

    // Number of minimal generators of the relation ideal from i to j, i.e.
    // the dimension of the (i, j) slice of I/(JI + IJ) with J the arrow
    // ideal. The declared relations are minimal when these counts match the
    // per-slice counts of declared relations.
    int minimal_relations_between(int i, int j) const { return min_rel_[i][j]; }
    bool relations_minimal() const;

    // Normal form of a path / element; every path of every length reduces.
    LinComb reduce(const Path& p) const;
    LinComb reduce(const LinComb& x) const;

    // Bilinear product in the quotient algebra, reduced to normal form.
    // Non-composable monomials multiply to zero.
    LinComb multiply(const LinComb& x, const LinComb& y) const;

    const std::vector<Path>& all_paths() const { return all_paths_; }

private:
    BoundQuiver bq_;
    std::vector<Path> all_paths_;
    std::vector<std::vector<std::vector<Path>>> normal_;  // [i][j]
    std::map<Path, LinComb, PathLess> expansion_;         // non-normal path -> combo of normal paths
    std::vector<std::vector<int>> min_rel_;               // [i][j]
    int dim_ = 0;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(BoundQuiver bq);

}  // namespace qvc

#endif
