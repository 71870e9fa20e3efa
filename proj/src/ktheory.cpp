#include "ktheory.hpp"

#include <algorithm>

namespace qvc {

KClass class_of(const Representation& m) {
    KClass v;
    v.reserve(m.dims.size());
    for (int d : m.dims) v.push_back(d);
    return v;
}

std::string kclass_str(const KClass& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

Int chi(const KClass& v, const KClass& w, const IMat& g) {
    if (int(v.size()) != g.rows() || int(w.size()) != g.cols())
        throw InputError("class length does not match the Gram form (" + std::to_string(v.size()) + " and " +
                         std::to_string(w.size()) + " vs " + std::to_string(g.rows()) + ")");
    Int acc = 0;
    for (int i = 0; i < g.rows(); ++i) {
        if (v[size_t(i)] == 0) continue;
        Int row = 0;
        for (int j = 0; j < g.cols(); ++j) row += g.at(i, j) * w[size_t(j)];
        acc += v[size_t(i)] * row;
    }
    return acc;
}

bool is_exceptional_class(const KClass& v, const IMat& g) { return chi(v, v, g) == 1; }

IMat orthogonal_lattice(const std::vector<KClass>& s, const IMat& g, Side side) {
    const int n = g.rows();
    // Constraint rows: left orthogonality of v to s means (G s)^T v = 0,
    // right orthogonality means (s^T G) v = 0.
    std::vector<std::vector<Int>> rows;
    for (const KClass& cls : s) {
        if (int(cls.size()) != n) throw InputError("class length does not match the Gram form");
        if (side == Side::Left || side == Side::Bi) {
            std::vector<Int> r(n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) r[size_t(i)] += g.at(i, j) * cls[size_t(j)];
            rows.push_back(std::move(r));
        }
        if (side == Side::Right || side == Side::Bi) {
            std::vector<Int> r(n, 0);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) r[size_t(j)] += cls[size_t(i)] * g.at(i, j);
            rows.push_back(std::move(r));
        }
    }
    IMat constraints(int(rows.size()), n);
    for (int r = 0; r < int(rows.size()); ++r)
        for (int c = 0; c < n; ++c) constraints.at(r, c) = rows[size_t(r)][size_t(c)];
    return integer_kernel(constraints);
}

IMat restricted_gram(const IMat& basis, const IMat& g) {
    return basis * g * basis.transposed();
}

namespace {

void require_exceptional_pair(const KClass& v, const KClass& w, const IMat& g) {
    if (chi(v, v, g) != 1 || chi(w, w, g) != 1 || chi(w, v, g) != 0)
        throw InputError("not a numerical exceptional pair: need chi(v,v) = chi(w,w) = 1 and chi(w,v) = 0, got chi(v,v) = " +
                         chi(v, v, g).get_str() + ", chi(w,w) = " + chi(w, w, g).get_str() + ", chi(w,v) = " +
                         chi(w, v, g).get_str());
}

KClass combine(const KClass& a, const Int& c, const KClass& b) {
    KClass r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= c * b[i];
    return r;
}

}  // namespace

std::pair<KClass, KClass> mutate_left(const KClass& v, const KClass& w, const IMat& g) {
    require_exceptional_pair(v, w, g);
    Int c = chi(v, w, g);
    return {combine(w, c, v), v};
}

std::pair<KClass, KClass> mutate_right(const KClass& v, const KClass& w, const IMat& g) {
    require_exceptional_pair(v, w, g);
    Int c = chi(v, w, g);
    return {w, combine(v, c, w)};
}

bool is_numerical_exceptional_sequence(const std::vector<KClass>& seq, const IMat& g) {
    for (size_t i = 0; i < seq.size(); ++i)
        if (chi(seq[i], seq[i], g) != 1) return false;
    for (size_t j = 1; j < seq.size(); ++j)
        for (size_t i = 0; i < j; ++i)
            if (chi(seq[j], seq[i], g) != 0) return false;
    return true;
}

bool spans_full_lattice(const std::vector<KClass>& seq) {
    if (seq.empty()) return false;
    const int n = int(seq[0].size());
    if (int(seq.size()) != n) return false;
    IMat m(n, n);
    for (int r = 0; r < n; ++r) {
        if (int(seq[size_t(r)].size()) != n) return false;
        for (int c = 0; c < n; ++c) m.at(r, c) = seq[size_t(r)][size_t(c)];
    }
    Int d = det_bareiss(m);
    return d == 1 || d == -1;
}

std::vector<KClass> braid_act(const std::vector<KClass>& seq, int i, bool inverse, const IMat& g) {
    if (i < 0 || i + 1 >= int(seq.size()))
        throw InputError("braid generator index " + std::to_string(i + 1) + " out of range for a sequence of length " +
                         std::to_string(seq.size()));
    if (!is_numerical_exceptional_sequence(seq, g))
        throw InputError("input is not a numerical exceptional sequence");
    std::vector<KClass> out = seq;
    auto [a, b] = inverse ? mutate_right(seq[size_t(i)], seq[size_t(i) + 1], g)
                          : mutate_left(seq[size_t(i)], seq[size_t(i) + 1], g);
    out[size_t(i)] = a;
    out[size_t(i) + 1] = b;
    if (!is_numerical_exceptional_sequence(out, g))
        throw std::logic_error("mutation broke the exceptional sequence invariants");
    return out;
}

std::vector<KClass> projective_classes(const AlgebraPtr& alg) {
    const int n = alg->num_vertices();
    std::vector<KClass> rows;
    rows.reserve(size_t(n));
    for (int v = 0; v < n; ++v) {
        KClass r(size_t(n), Int(0));
        for (int u = 0; u < n; ++u) r[size_t(u)] = alg->normal_count(v, u);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<int> exceptional_vertex_order(const AlgebraPtr& alg) {
    std::vector<int> order = alg->bound_quiver().topo_order;
    std::reverse(order.begin(), order.end());
    return order;
}

}  // namespace qvc
