#ifndef QUIVERCERT_QUIVER_HPP
#define QUIVERCERT_QUIVER_HPP

// Quivers, paths and relation expressions, plus the line-oriented spec parser.
//
// Paths are written and stored in functional order: "b1*a2" applies a2 first,
// then b1. Composition therefore reads like function composition and a path's
// source is the source of its last factor.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace qvc {

struct ParseError : std::runtime_error {
    ParseError(std::string msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line),
          col(col) {}
    int line;
    int col;
};

struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int num_vertices() const { return int(vertices.size()); }
    int num_arrows() const { return int(arrows.size()); }
    int vertex_index(const std::string& name) const;  // -1 if unknown
    int arrow_index(const std::string& name) const;   // -1 if unknown
};

// Arrow indices in functional order: arrows.front() is applied last. A lazy
// path e_v has no arrows and carries its vertex explicitly.
struct Path {
    int vertex = 0;           // source vertex (redundant for non-lazy paths)
    std::vector<int> arrows;  // functional order

    static Path lazy(int v) { return Path{v, {}}; }

    bool is_lazy() const { return arrows.empty(); }
    int length() const { return int(arrows.size()); }
    int source(const Quiver& q) const { return is_lazy() ? vertex : q.arrows[arrows.back()].src; }
    int target(const Quiver& q) const { return is_lazy() ? vertex : q.arrows[arrows.front()].tgt; }
    std::string str(const Quiver& q) const;
};

// Total order on paths: by length, then arrow sequence, then vertex. Used for
// canonical bases; within one (source, target) slice longer paths come later.
struct PathLess {
    bool operator()(const Path& a, const Path& b) const {
        if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
        if (a.arrows != b.arrows) return a.arrows < b.arrows;
        return a.vertex < b.vertex;
    }
};

inline bool operator==(const Path& a, const Path& b) { return a.vertex == b.vertex && a.arrows == b.arrows; }

struct RelationTerm {
    Rat coeff;
    Path path;
};

// Sum of parallel paths with rational coefficients; the relation asserts the
// sum is zero in the path algebra.
struct RelationExpr {
    std::vector<RelationTerm> terms;
    int src = 0;
    int tgt = 0;
    std::string str(const Quiver& q) const;
};

struct BoundQuiver {
    std::string name;
    Quiver quiver;
    std::vector<RelationExpr> relations;
    std::vector<int> topo_order;  // vertex indices, sources first

    int relations_between(int i, int j) const;
};

// Throws ParseError / InputError. Validates: unique names, declared endpoints,
// acyclicity, parallel relation terms, relation paths of length >= 2.
BoundQuiver parse_quiver_spec(const std::string& text);

// Functional composition p after q; throws InputError if target(q) != source(p).
Path compose_paths(const Quiver& qv, const Path& p, const Path& q);

// All paths of the acyclic quiver (finitely many), sorted by PathLess.
std::vector<Path> enumerate_paths(const Quiver& q);

}  // namespace qvc

#endif
