#include "algebra.hpp"

#include <algorithm>
#include <sstream>

#include "linalg.hpp"

namespace qvc {

void LinComb::add(const Path& p, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
        terms.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

LinComb LinComb::operator+(const LinComb& o) const {
    LinComb r = *this;
    for (const auto& [p, c] : o.terms) r.add(p, c);
    return r;
}

LinComb LinComb::operator-(const LinComb& o) const {
    LinComb r = *this;
    for (const auto& [p, c] : o.terms) r.add(p, -c);
    return r;
}

LinComb LinComb::scaled(const Rat& c) const {
    LinComb r;
    if (c == 0) return r;
    for (const auto& [p, k] : terms) r.terms.emplace(p, k * c);
    return r;
}

LinComb LinComb::of(const Path& p, const Rat& c) {
    LinComb r;
    r.add(p, c);
    return r;
}

std::string LinComb::str(const Quiver& q) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << a.get_str() << " ";
        os << p.str(q);
        first = false;
    }
    return os.str();
}

namespace {

bool composable(const Quiver& q, const Path& p2, const Path& p1) {
    // p2 after p1
    return p1.target(q) == p2.source(q);
}

}  // namespace

Algebra::Algebra(BoundQuiver bq) : bq_(std::move(bq)) {
    const Quiver& q = bq_.quiver;
    const int n = q.num_vertices();
    all_paths_ = enumerate_paths(q);

    // Paths grouped per (source, target) slice, in PathLess order.
    std::vector<std::vector<std::vector<Path>>> slice(
        n, std::vector<std::vector<Path>>(n));
    for (const Path& p : all_paths_) slice[p.source(q)][p.target(q)].push_back(p);

    // Every left/right path extension of every relation, grouped per slice.
    // Proper extensions (at least one non-lazy factor) span JI + IJ; they are
    // kept apart so the minimal generator count of the ideal can be read off.
    std::vector<std::vector<std::vector<LinComb>>> ideal(
        n, std::vector<std::vector<LinComb>>(n));
    std::vector<std::vector<std::vector<LinComb>>> proper(
        n, std::vector<std::vector<LinComb>>(n));
    for (const RelationExpr& rel : bq_.relations) {
        for (const Path& pre : all_paths_) {
            if (pre.target(q) != rel.src) continue;
            for (const Path& post : all_paths_) {
                if (post.source(q) != rel.tgt) continue;
                LinComb elt;
                for (const RelationTerm& t : rel.terms) {
                    Path ext = compose_paths(q, post, compose_paths(q, t.path, pre));
                    elt.add(ext, t.coeff);
                }
                if (elt.is_zero()) continue;
                ideal[pre.source(q)][post.target(q)].push_back(elt);
                if (!pre.is_lazy() || !post.is_lazy())
                    proper[pre.source(q)][post.target(q)].push_back(elt);
            }
        }
    }

    normal_.assign(n, std::vector<std::vector<Path>>(n));
    min_rel_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::vector<Path>& cols = slice[i][j];
            const std::vector<LinComb>& rows = ideal[i][j];
            if (rows.empty()) {
                normal_[i][j] = cols;
                continue;
            }
            // Columns in decreasing path order, so each echelon row is led
            // by the greatest path it touches.
            std::map<Path, int, PathLess> col_of;
            for (int k = 0; k < int(cols.size()); ++k)
                col_of.emplace(cols[int(cols.size()) - 1 - k], k);
            auto slice_matrix = [&](const std::vector<LinComb>& elts) {
                Mat m(int(elts.size()), int(cols.size()));
                for (int r = 0; r < int(elts.size()); ++r)
                    for (const auto& [p, c] : elts[r].terms) m.at(r, col_of.at(p)) = c;
                return m;
            };
            Mat m = slice_matrix(rows);
            std::vector<int> pivots = rref(m);
            min_rel_[i][j] = int(pivots.size()) - rank(slice_matrix(proper[i][j]));
            std::vector<bool> is_pivot(cols.size(), false);
            for (int pc : pivots) is_pivot[pc] = true;
            for (int k = 0; k < int(cols.size()); ++k) {
                const Path& p = cols[int(cols.size()) - 1 - k];
                if (!is_pivot[k]) normal_[i][j].push_back(p);
            }
            std::sort(normal_[i][j].begin(), normal_[i][j].end(), PathLess{});
            for (int r = 0; r < int(pivots.size()); ++r) {
                const Path& lead = cols[int(cols.size()) - 1 - pivots[r]];
                LinComb expand;
                for (int k = pivots[r] + 1; k < int(cols.size()); ++k) {
                    if (m.at(r, k) == 0) continue;
                    expand.add(cols[int(cols.size()) - 1 - k], -m.at(r, k));
                }
                expansion_.emplace(lead, expand);
            }
        }
    }

    dim_ = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dim_ += int(normal_[i][j].size());
}

bool Algebra::relations_minimal() const {
    const int n = num_vertices();
    std::vector<std::vector<int>> declared(n, std::vector<int>(n, 0));
    for (const RelationExpr& r : bq_.relations) ++declared[r.src][r.tgt];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (declared[i][j] != min_rel_[i][j]) return false;
    return true;
}

LinComb Algebra::reduce(const Path& p) const {
    auto it = expansion_.find(p);
    // Echelon rows only involve normal paths past the pivot, so one lookup
    // already is the normal form.
    if (it == expansion_.end()) return LinComb::of(p);
    return it->second;
}

LinComb Algebra::reduce(const LinComb& x) const {
    LinComb r;
    for (const auto& [p, c] : x.terms) {
        LinComb red = reduce(p);
        for (const auto& [np, nc] : red.terms) r.add(np, nc * c);
    }
    return r;
}

LinComb Algebra::multiply(const LinComb& x, const LinComb& y) const {
    LinComb r;
    const Quiver& q = bq_.quiver;
    for (const auto& [px, cx] : x.terms) {
        for (const auto& [py, cy] : y.terms) {
            if (!composable(q, px, py)) continue;
            LinComb red = reduce(compose_paths(q, px, py));
            for (const auto& [np, nc] : red.terms) r.add(np, nc * cx * cy);
        }
    }
    return r;
}

AlgebraPtr make_algebra(BoundQuiver bq) {
    return std::make_shared<const Algebra>(std::move(bq));
}

}  // namespace qvc
