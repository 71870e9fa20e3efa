#include "homalg.hpp"

#include <algorithm>

namespace qvc {

namespace {

// Column offsets of each summand's block at each vertex inside a direct sum
// of projectives.
std::vector<std::vector<int>> sum_offsets(const Algebra& alg, const std::vector<int>& summands) {
    const int n = alg.num_vertices();
    std::vector<std::vector<int>> off(summands.size(), std::vector<int>(n, 0));
    std::vector<int> running(n, 0);
    for (size_t c = 0; c < summands.size(); ++c) {
        for (int u = 0; u < n; ++u) {
            off[c][u] = running[u];
            running[u] += alg.normal_count(summands[c], u);
        }
    }
    return off;
}

// Concrete map out of a direct sum of projectives, rewritten as a matrix of
// algebra elements: entry (r, c) is the image of summand c's generator,
// restricted to summand r's block, read off over the normal path basis.
std::vector<std::vector<LinComb>> algebra_entries(const Algebra& alg, const std::vector<int>& prev,
                                                  const std::vector<int>& curr, const HomMap& d) {
    auto off_prev = sum_offsets(alg, prev);
    auto off_curr = sum_offsets(alg, curr);
    std::vector<std::vector<LinComb>> entries(prev.size(), std::vector<LinComb>(curr.size()));
    for (size_t c = 0; c < curr.size(); ++c) {
        int w = curr[c];
        int gen_col = off_curr[c][w];  // the lazy path e_w leads the (w, w) slice
        for (size_t r = 0; r < prev.size(); ++r) {
            int v = prev[r];
            const std::vector<Path>& basis = alg.normal_paths(v, w);
            LinComb x;
            for (size_t k = 0; k < basis.size(); ++k)
                x.add(basis[k], d.comp[w].at(off_prev[r][w] + int(k), gen_col));
            entries[r][c] = std::move(x);
        }
    }
    return entries;
}

struct Cover {
    std::vector<int> summands;  // projective vertices, declared vertex order
    Representation rep;         // the direct sum
    HomMap map;                 // onto X
};

// Projective cover of X through its top. Lifts are the standard basis vectors
// at the pivot columns of rref([radical | identity]), so the choice is
// canonical.
Cover projective_cover(const Representation& x) {
    const AlgebraPtr& alg = x.alg;
    const Quiver& q = alg->quiver();
    const int n = q.num_vertices();

    std::vector<std::vector<int>> lifts(n);
    for (int u = 0; u < n; ++u) {
        if (x.dims[u] == 0) continue;
        Mat rad(x.dims[u], 0);
        for (int a = 0; a < q.num_arrows(); ++a)
            if (q.arrows[a].tgt == u) rad = Mat::hcat(rad, x.arrow_mat[a]);
        Mat aug = Mat::hcat(rad, Mat::identity(x.dims[u]));
        std::vector<int> pivots = rref(aug);
        for (int p : pivots)
            if (p >= rad.cols()) lifts[u].push_back(p - rad.cols());
    }

    Cover cov;
    std::vector<Representation> parts;
    for (int u = 0; u < n; ++u)
        for (size_t k = 0; k < lifts[u].size(); ++k) {
            cov.summands.push_back(u);
            parts.push_back(projective_rep(alg, u));
        }
    cov.rep = direct_sum_many(alg, parts);

    auto off = sum_offsets(*alg, cov.summands);
    cov.map.comp.resize(n);
    for (int u = 0; u < n; ++u) cov.map.comp[u] = Mat(x.dims[u], cov.rep.dims[u]);
    int c = 0;
    for (int v = 0; v < n; ++v) {
        for (int lift : lifts[v]) {
            for (int u = 0; u < n; ++u) {
                const std::vector<Path>& basis = alg->normal_paths(v, u);
                for (size_t k = 0; k < basis.size(); ++k) {
                    Mat act = evaluate_path(x, basis[k]);  // x.dims[u] x x.dims[v]
                    for (int r = 0; r < x.dims[u]; ++r)
                        cov.map.comp[u].at(r, off[c][u] + int(k)) = act.at(r, lift);
                }
            }
            ++c;
        }
    }
    return cov;
}

}  // namespace

Resolution minimal_resolution(const Representation& m, int length_bound) {
    if (length_bound < 0) throw InputError("resolution length bound must be nonnegative");
    const AlgebraPtr& alg = m.alg;
    const Quiver& q = alg->quiver();
    const int n = q.num_vertices();

    Resolution res;
    res.alg = alg;
    res.target = m;
    res.terminated = false;

    Representation cur = m;
    std::vector<Mat> incl;  // syzygy coordinates inside the previous cover
    for (int k = 0;; ++k) {
        if (cur.total_dim() == 0) {
            res.terminated = true;
            break;
        }
        if (k > length_bound) break;

        Cover cov = projective_cover(cur);
        res.terms.push_back(cov.summands);
        res.term_reps.push_back(cov.rep);
        if (k == 0) {
            res.diff.emplace_back();  // placeholder; differentials start at k = 1
            res.concrete.push_back(cov.map);
        } else {
            HomMap d;
            d.comp.resize(n);
            for (int u = 0; u < n; ++u) d.comp[u] = incl[u] * cov.map.comp[u];
            res.diff.push_back(algebra_entries(*alg, res.terms[k - 1], cov.summands, d));
            res.concrete.push_back(d);
        }

        // Syzygy: vertex-wise kernel of the cover, with restricted arrows.
        std::vector<Mat> kern(n);
        std::vector<int> kdims(n);
        for (int u = 0; u < n; ++u) {
            kern[u] = kernel_basis(cov.map.comp[u]);
            kdims[u] = kern[u].cols();
        }
        std::vector<Mat> kmats(q.num_arrows());
        for (int a = 0; a < q.num_arrows(); ++a) {
            const Arrow& ar = q.arrows[a];
            kmats[a] = solve_exact(kern[ar.tgt], cov.rep.arrow_mat[a] * kern[ar.src]);
        }
        cur = make_representation(alg, kdims, std::move(kmats));
        incl = std::move(kern);
    }
    return res;
}

bool resolution_is_complex(const Resolution& r) {
    for (int k = 1; k + 1 <= r.length(); ++k) {
        const auto& d1 = r.diff[k];
        const auto& d2 = r.diff[k + 1];
        for (size_t row = 0; row < r.terms[k - 1].size(); ++row)
            for (size_t col = 0; col < r.terms[k + 1].size(); ++col) {
                LinComb acc;
                for (size_t mid = 0; mid < r.terms[k].size(); ++mid)
                    acc = acc + r.alg->multiply(d2[mid][col], d1[row][mid]);
                if (!acc.is_zero()) return false;
            }
    }
    // The augmented end: cover after first differential vanishes.
    if (r.length() >= 1)
        for (size_t v = 0; v < r.concrete[0].comp.size(); ++v)
            if (!(r.concrete[0].comp[v] * r.concrete[1].comp[v]).is_zero()) return false;
    return true;
}

namespace {

int hom_rank(const HomMap& f) {
    int t = 0;
    for (const Mat& c : f.comp) t += rank(c);
    return t;
}

}  // namespace

bool resolution_is_exact(const Resolution& r) {
    if (r.terms.empty()) return r.target.total_dim() == 0;
    // Surjectivity onto the target.
    if (hom_rank(r.concrete[0]) != r.target.total_dim()) return false;
    // Rank accounting at each inner term; at the last term only if the
    // resolution terminated (then the incoming map is zero).
    int last = r.length();
    for (int k = 0; k <= last; ++k) {
        int out = hom_rank(r.concrete[k]);
        int in = (k < last) ? hom_rank(r.concrete[k + 1]) : 0;
        if (k == last && !r.terminated) continue;
        if (out + in != r.term_reps[k].total_dim()) return false;
    }
    return true;
}

bool resolution_is_minimal(const Resolution& r) {
    for (int k = 1; k <= r.length(); ++k)
        for (const auto& row : r.diff[k])
            for (const LinComb& entry : row)
                for (const auto& [p, c] : entry.terms)
                    if (p.is_lazy()) return false;
    return true;
}

namespace {

// Matrices of Hom(P^{k-1}, N) -> Hom(P^k, N) under the Yoneda identification
// Hom(P_v, N) = N_v, for k = 1..length. Index 0 is a placeholder.
std::vector<Mat> hom_complex(const Resolution& res, const Representation& nrep) {
    std::vector<Mat> d(res.terms.size());
    for (int k = 1; k <= res.length(); ++k) {
        const auto& prev = res.terms[k - 1];
        const auto& curr = res.terms[k];
        std::vector<int> roff(prev.size() + 1, 0), coff(curr.size() + 1, 0);
        for (size_t r = 0; r < prev.size(); ++r) roff[r + 1] = roff[r] + nrep.dims[prev[r]];
        for (size_t c = 0; c < curr.size(); ++c) coff[c + 1] = coff[c] + nrep.dims[curr[c]];
        Mat m(coff[curr.size()], roff[prev.size()]);
        for (size_t r = 0; r < prev.size(); ++r)
            for (size_t c = 0; c < curr.size(); ++c) {
                Mat blk = evaluate_elem(nrep, res.diff[k][r][c], prev[r], curr[c]);
                for (int i = 0; i < blk.rows(); ++i)
                    for (int j = 0; j < blk.cols(); ++j) m.at(coff[c] + i, roff[r] + j) = blk.at(i, j);
            }
        d[size_t(k)] = std::move(m);
    }
    return d;
}

int hom_space_dim(const Resolution& res, const Representation& nrep, int k) {
    int t = 0;
    for (int v : res.terms[k]) t += nrep.dims[v];
    return t;
}

}  // namespace

std::vector<int> ext_table(const Representation& m, const Representation& n, int kmax) {
    if (kmax < 0) throw InputError("Ext degree must be nonnegative");
    Resolution res = minimal_resolution(m, m.alg->num_vertices());
    std::vector<Mat> d = hom_complex(res, n);
    std::vector<int> dims(size_t(kmax) + 1, 0);
    for (int k = 0; k <= std::min(kmax, res.length()); ++k) {
        int h = hom_space_dim(res, n, k);
        int rank_in = (k >= 1) ? rank(d[size_t(k)]) : 0;
        int rank_out = (k + 1 <= res.length()) ? rank(d[size_t(k) + 1]) : 0;
        dims[size_t(k)] = h - rank_in - rank_out;
    }
    return dims;
}

int ext_dim(const Representation& m, const Representation& n, int k) { return ext_table(m, n, k)[size_t(k)]; }

Int euler_char(const Representation& m, const Representation& n) {
    Resolution res = minimal_resolution(m, m.alg->num_vertices());
    Int chi = 0;
    for (int k = 0; k <= res.length(); ++k) {
        int h = hom_space_dim(res, n, k);
        chi += (k % 2 == 0) ? h : -h;
    }
    return chi;
}

IMat cartan_matrix(const AlgebraPtr& alg) {
    const int n = alg->num_vertices();
    IMat c(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.at(i, j) = alg->normal_count(i, j);
    return c;
}

int global_dimension(const AlgebraPtr& alg, int bound) {
    if (bound < 1) throw InputError("global dimension bound must be at least 1");
    int gd = 0;
    for (int v = 0; v < alg->num_vertices(); ++v) {
        Resolution res = minimal_resolution(simple_rep(alg, v), bound);
        if (!res.terminated) return -1;
        gd = std::max(gd, res.length());
    }
    return gd;
}

GramResult gram_matrix_simples(const AlgebraPtr& alg) {
    const Quiver& q = alg->quiver();
    const int n = q.num_vertices();
    GramResult out;
    out.global_dim = global_dimension(alg, std::max(1, n));
    out.relations_min = alg->relations_minimal();
    out.gram = IMat(n, n);
    if (out.global_dim >= 0 && out.global_dim <= 2 && out.relations_min) {
        out.route = "combinatorial";
        std::vector<std::vector<int>> narrows(n, std::vector<int>(n, 0));
        for (const Arrow& a : q.arrows) ++narrows[a.src][a.tgt];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out.gram.at(i, j) = (i == j ? 1 : 0) - narrows[i][j] + alg->bound_quiver().relations_between(i, j);
    } else {
        out.route = "ext-table";
        for (int i = 0; i < n; ++i) {
            Representation si = simple_rep(alg, i);
            for (int j = 0; j < n; ++j) out.gram.at(i, j) = euler_char(si, simple_rep(alg, j));
        }
    }
    return out;
}

}  // namespace qvc
