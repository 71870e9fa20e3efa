#include "rep.hpp"

#include <cctype>
#include <sstream>

namespace qvc {

int Representation::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

Mat evaluate_path(const Representation& m, const Path& p) {
    if (p.is_lazy()) return Mat::identity(m.dims[p.vertex]);
    Mat acc = m.arrow_mat[p.arrows.back()];
    for (int i = int(p.arrows.size()) - 2; i >= 0; --i) acc = m.arrow_mat[p.arrows[i]] * acc;
    return acc;
}

Mat evaluate_elem(const Representation& m, const LinComb& x, int src, int tgt) {
    const Quiver& q = m.alg->quiver();
    Mat acc(m.dims[tgt], m.dims[src]);
    for (const auto& [p, c] : x.terms) {
        if (p.source(q) != src || p.target(q) != tgt)
            throw InputError("algebra element mixes parallel classes: " + p.str(q) + " does not run " +
                             q.vertices[src] + " -> " + q.vertices[tgt]);
        acc = acc + evaluate_path(m, p).scaled(c);
    }
    return acc;
}

Representation make_representation(AlgebraPtr alg, std::vector<int> dims, std::vector<Mat> matrices) {
    const Quiver& q = alg->quiver();
    if (int(dims.size()) != q.num_vertices())
        throw InputError("expected " + std::to_string(q.num_vertices()) + " vertex dimensions, got " +
                         std::to_string(dims.size()));
    for (size_t v = 0; v < dims.size(); ++v)
        if (dims[v] < 0) throw InputError("negative dimension at vertex " + q.vertices[v]);
    if (int(matrices.size()) != q.num_arrows())
        throw InputError("expected " + std::to_string(q.num_arrows()) + " arrow matrices, got " +
                         std::to_string(matrices.size()));
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[a];
        if (matrices[a].rows() != dims[ar.tgt] || matrices[a].cols() != dims[ar.src])
            throw InputError("matrix for arrow '" + ar.name + "' has shape " +
                             std::to_string(matrices[a].rows()) + "x" + std::to_string(matrices[a].cols()) +
                             ", expected " + std::to_string(dims[ar.tgt]) + "x" + std::to_string(dims[ar.src]));
    }

    Representation m{std::move(alg), std::move(dims), std::move(matrices), {}};
    for (const RelationExpr& rel : m.alg->bound_quiver().relations) {
        Mat residual(m.dims[rel.tgt], m.dims[rel.src]);
        for (const RelationTerm& t : rel.terms) residual = residual + evaluate_path(m, t.path).scaled(t.coeff);
        if (!residual.is_zero()) {
            for (int r = 0; r < residual.rows(); ++r)
                for (int c = 0; c < residual.cols(); ++c)
                    if (residual.at(r, c) != 0)
                        throw InputError("relation '" + rel.str(q) + "' evaluates to a nonzero matrix (entry (" +
                                         std::to_string(r + 1) + "," + std::to_string(c + 1) + ") = " +
                                         residual.at(r, c).get_str() + ")");
        }
    }
    return m;
}

Representation zero_rep(AlgebraPtr alg) {
    const Quiver& q = alg->quiver();
    std::vector<int> dims(q.num_vertices(), 0);
    std::vector<Mat> mats(q.num_arrows());
    return Representation{std::move(alg), std::move(dims), std::move(mats), {}};
}

Representation simple_rep(AlgebraPtr alg, int v) {
    const Quiver& q = alg->quiver();
    if (v < 0 || v >= q.num_vertices()) throw InputError("unknown vertex index " + std::to_string(v));
    std::vector<int> dims(q.num_vertices(), 0);
    dims[v] = 1;
    std::vector<Mat> mats(q.num_arrows());
    for (int a = 0; a < q.num_arrows(); ++a) mats[a] = Mat(dims[q.arrows[a].tgt], dims[q.arrows[a].src]);
    return Representation{std::move(alg), std::move(dims), std::move(mats), {}};
}

Representation projective_rep(AlgebraPtr alg, int v) {
    const Quiver& q = alg->quiver();
    if (v < 0 || v >= q.num_vertices()) throw InputError("unknown vertex index " + std::to_string(v));
    const int n = q.num_vertices();
    std::vector<int> dims(n);
    std::vector<std::vector<std::string>> labels(n);
    for (int u = 0; u < n; ++u) {
        dims[u] = alg->normal_count(v, u);
        for (const Path& p : alg->normal_paths(v, u)) labels[u].push_back(p.str(q));
    }
    auto index_of = [&](int u, const Path& p) {
        const auto& basis = alg->normal_paths(v, u);
        for (size_t k = 0; k < basis.size(); ++k)
            if (basis[k] == p) return int(k);
        throw InputError("internal error: path " + p.str(q) + " missing from projective basis");
    };
    std::vector<Mat> mats(q.num_arrows());
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[a];
        Mat m(dims[ar.tgt], dims[ar.src]);
        const auto& basis = alg->normal_paths(v, ar.src);
        for (size_t c = 0; c < basis.size(); ++c) {
            Path step{ar.src, {a}};
            LinComb red = alg->reduce(compose_paths(q, step, basis[c]));
            for (const auto& [np, coeff] : red.terms) m.at(index_of(ar.tgt, np), int(c)) = coeff;
        }
        mats[a] = std::move(m);
    }
    return Representation{std::move(alg), std::move(dims), std::move(mats), std::move(labels)};
}

namespace {

// Flat coordinate layout for morphisms M -> N: blocks per vertex in declared
// order, each block row-major.
struct HomLayout {
    std::vector<int> offset;
    int total = 0;

    HomLayout(const Representation& m, const Representation& n) {
        offset.resize(m.dims.size());
        for (size_t v = 0; v < m.dims.size(); ++v) {
            offset[v] = total;
            total += n.dims[v] * m.dims[v];
        }
    }
    int index(const Representation& m, int v, int r, int c) const { return offset[v] + r * m.dims[v] + c; }
};

Mat flatten_hom(const Representation& m, const Representation& n, const HomLayout& lay, const HomMap& f) {
    Mat col(lay.total, 1);
    for (size_t v = 0; v < m.dims.size(); ++v)
        for (int r = 0; r < n.dims[v]; ++r)
            for (int c = 0; c < m.dims[v]; ++c) col.at(lay.index(m, int(v), r, c), 0) = f.comp[v].at(r, c);
    return col;
}

HomMap unflatten_hom(const Representation& m, const Representation& n, const HomLayout& lay, const Mat& col,
                     int which) {
    HomMap f;
    f.comp.resize(m.dims.size());
    for (size_t v = 0; v < m.dims.size(); ++v) {
        Mat block(n.dims[v], m.dims[v]);
        for (int r = 0; r < n.dims[v]; ++r)
            for (int c = 0; c < m.dims[v]; ++c) block.at(r, c) = col.at(lay.index(m, int(v), r, c), which);
        f.comp[v] = std::move(block);
    }
    return f;
}

}  // namespace

std::vector<HomMap> hom_basis(const Representation& m, const Representation& n) {
    if (m.alg.get() != n.alg.get() && !(m.alg->bound_quiver().quiver.vertices == n.alg->bound_quiver().quiver.vertices))
        throw InputError("representations live over different quivers");
    const Quiver& q = m.alg->quiver();
    HomLayout lay(m, n);

    int eqs = 0;
    for (int a = 0; a < q.num_arrows(); ++a) eqs += n.dims[q.arrows[a].tgt] * m.dims[q.arrows[a].src];
    Mat sys(eqs, lay.total);
    int row = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[a];
        const Mat& ma = m.arrow_mat[a];
        const Mat& na = n.arrow_mat[a];
        // N_a f_src - f_tgt M_a = 0, entrywise.
        for (int r = 0; r < n.dims[ar.tgt]; ++r) {
            for (int c = 0; c < m.dims[ar.src]; ++c) {
                for (int k = 0; k < n.dims[ar.src]; ++k)
                    sys.at(row, lay.index(m, ar.src, k, c)) += na.at(r, k);
                for (int l = 0; l < m.dims[ar.tgt]; ++l)
                    sys.at(row, lay.index(m, ar.tgt, r, l)) -= ma.at(l, c);
                ++row;
            }
        }
    }
    Mat kern = kernel_basis(sys);
    std::vector<HomMap> basis;
    basis.reserve(kern.cols());
    for (int k = 0; k < kern.cols(); ++k) basis.push_back(unflatten_hom(m, n, lay, kern, k));
    return basis;
}

int hom_dim(const Representation& m, const Representation& n) { return int(hom_basis(m, n).size()); }

HomMap compose_hom(const HomMap& f, const HomMap& g) {
    HomMap h;
    h.comp.reserve(f.comp.size());
    for (size_t v = 0; v < f.comp.size(); ++v) h.comp.push_back(g.comp[v] * f.comp[v]);
    return h;
}

HomMap identity_hom(const Representation& m) {
    HomMap f;
    for (int d : m.dims) f.comp.push_back(Mat::identity(d));
    return f;
}

bool is_intertwiner(const Representation& m, const Representation& n, const HomMap& f) {
    const Quiver& q = m.alg->quiver();
    if (f.comp.size() != m.dims.size()) return false;
    for (size_t v = 0; v < m.dims.size(); ++v)
        if (f.comp[v].rows() != n.dims[v] || f.comp[v].cols() != m.dims[v]) return false;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[a];
        if (!(n.arrow_mat[a] * f.comp[ar.src] == f.comp[ar.tgt] * m.arrow_mat[a])) return false;
    }
    return true;
}

CompositionKernel kernel_of_composition(const Representation& m, const Representation& n,
                                        const Representation& l) {
    std::vector<HomMap> mn = hom_basis(m, n);
    std::vector<HomMap> nl = hom_basis(n, l);
    std::vector<HomMap> ml = hom_basis(m, l);
    CompositionKernel out;
    out.dim_mn = int(mn.size());
    out.dim_nl = int(nl.size());
    out.dim_ml = int(ml.size());

    HomLayout lay(m, l);
    Mat span(lay.total, out.dim_ml);
    for (int k = 0; k < out.dim_ml; ++k) {
        Mat col = flatten_hom(m, l, lay, ml[k]);
        for (int r = 0; r < lay.total; ++r) span.at(r, k) = col.at(r, 0);
    }

    // Column (i,j) holds the Hom(M,L) coordinates of nl[j] after mn[i].
    Mat t(out.dim_ml, out.dim_mn * out.dim_nl);
    for (int i = 0; i < out.dim_mn; ++i) {
        for (int j = 0; j < out.dim_nl; ++j) {
            HomMap composite = compose_hom(mn[i], nl[j]);
            Mat b = flatten_hom(m, l, lay, composite);
            if (out.dim_ml > 0) {
                Mat coords = solve_exact(span, b);
                for (int r = 0; r < out.dim_ml; ++r) t.at(r, i * out.dim_nl + j) = coords.at(r, 0);
            }
        }
    }
    out.rank = rank(t);
    Mat kern = kernel_basis(t);
    for (int k = 0; k < kern.cols(); ++k) {
        Mat coeffs(out.dim_mn, out.dim_nl);
        for (int i = 0; i < out.dim_mn; ++i)
            for (int j = 0; j < out.dim_nl; ++j) coeffs.at(i, j) = kern.at(i * out.dim_nl + j, k);
        out.kernel.push_back(std::move(coeffs));
    }
    return out;
}

Representation direct_sum(const Representation& m, const Representation& n) {
    const Quiver& q = m.alg->quiver();
    std::vector<int> dims(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) dims[v] = m.dims[v] + n.dims[v];
    std::vector<Mat> mats(q.num_arrows());
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[a];
        Mat blk(dims[ar.tgt], dims[ar.src]);
        for (int r = 0; r < m.dims[ar.tgt]; ++r)
            for (int c = 0; c < m.dims[ar.src]; ++c) blk.at(r, c) = m.arrow_mat[a].at(r, c);
        for (int r = 0; r < n.dims[ar.tgt]; ++r)
            for (int c = 0; c < n.dims[ar.src]; ++c)
                blk.at(m.dims[ar.tgt] + r, m.dims[ar.src] + c) = n.arrow_mat[a].at(r, c);
        mats[a] = std::move(blk);
    }
    std::vector<std::vector<std::string>> labels;
    if (!m.basis_labels.empty() || !n.basis_labels.empty()) {
        labels.resize(q.num_vertices());
        for (int v = 0; v < q.num_vertices(); ++v) {
            for (int k = 0; k < m.dims[v]; ++k)
                labels[v].push_back(m.basis_labels.empty() ? q.vertices[v] + "_" + std::to_string(k + 1)
                                                           : m.basis_labels[v][k]);
            for (int k = 0; k < n.dims[v]; ++k)
                labels[v].push_back(n.basis_labels.empty() ? q.vertices[v] + "_" + std::to_string(k + 1)
                                                           : n.basis_labels[v][k]);
        }
    }
    return Representation{m.alg, std::move(dims), std::move(mats), std::move(labels)};
}

Representation direct_sum_many(AlgebraPtr alg, const std::vector<Representation>& parts) {
    Representation acc = zero_rep(alg);
    for (const Representation& p : parts) acc = direct_sum(acc, p);
    return acc;
}

namespace {

bool parse_rat_token(const std::string& tok, Rat& out) {
    size_t i = 0;
    bool neg = false;
    if (i < tok.size() && (tok[i] == '-' || tok[i] == '+')) {
        neg = tok[i] == '-';
        ++i;
    }
    size_t num_start = i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == num_start) return false;
    std::string num = tok.substr(num_start, i - num_start);
    std::string den = "1";
    if (i < tok.size() && tok[i] == '/') {
        ++i;
        size_t den_start = i;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
        if (i == den_start) return false;
        den = tok.substr(den_start, i - den_start);
        if (Int(den) == 0) return false;
    }
    if (i != tok.size()) return false;
    out = Rat(Int(num), Int(den));
    out.canonicalize();
    if (neg) out = -out;
    return true;
}

std::string strip_comment(std::string line) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    return line;
}

bool is_blank(const std::string& line) {
    for (char ch : line)
        if (ch != ' ' && ch != '\t' && ch != '\r') return false;
    return true;
}

}  // namespace

std::string rep_file_quiver_path(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (is_blank(line)) continue;
        std::istringstream ls(line);
        std::string kw, path, extra;
        ls >> kw >> path;
        if (kw != "rep" || path.empty())
            throw ParseError("representation file must start with 'rep <quiver-file>'", lineno, 1);
        if (ls >> extra) throw ParseError("trailing characters after quiver file name", lineno, 1);
        return path;
    }
    throw ParseError("representation file is empty", lineno ? lineno : 1, 1);
}

Representation parse_rep_file(const std::string& text, AlgebraPtr alg) {
    const Quiver& q = alg->quiver();
    std::vector<int> dims(q.num_vertices(), 0);
    std::vector<bool> dim_seen(q.num_vertices(), false);
    std::vector<Mat> mats(q.num_arrows());
    std::vector<bool> mat_seen(q.num_arrows(), false);

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool saw_header = false;
    bool in_arrows = false;
    int cur_arrow = -1;
    int rows_needed = 0;
    std::vector<std::vector<Rat>> rows;

    auto close_block = [&](int at_line) {
        if (cur_arrow < 0) return;
        if (int(rows.size()) != rows_needed)
            throw ParseError("matrix for arrow '" + q.arrows[cur_arrow].name + "' has " +
                                 std::to_string(rows.size()) + " rows, expected " + std::to_string(rows_needed),
                             at_line, 1);
        const Arrow& ar = q.arrows[cur_arrow];
        Mat m(dims[ar.tgt], dims[ar.src]);
        for (int r = 0; r < int(rows.size()); ++r)
            for (int c = 0; c < dims[ar.src]; ++c) m.at(r, c) = rows[r][c];
        mats[cur_arrow] = std::move(m);
        mat_seen[cur_arrow] = true;
        cur_arrow = -1;
        rows.clear();
    };

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (is_blank(line)) continue;
        std::istringstream ls(line);
        std::string first;
        ls >> first;

        if (!saw_header) {
            if (first != "rep") throw ParseError("representation file must start with 'rep <quiver-file>'", lineno, 1);
            saw_header = true;
            continue;
        }
        if (first == "dim") {
            if (in_arrows) throw ParseError("'dim' lines must precede the arrow matrices", lineno, 1);
            std::string vname, eq, val, extra;
            ls >> vname >> eq >> val;
            int v = q.vertex_index(vname);
            if (vname.empty() || eq != "=" || val.empty())
                throw ParseError("expected 'dim <vertex> = <n>'", lineno, 1);
            if (v < 0) throw ParseError("unknown vertex '" + vname + "'", lineno, 1);
            if (dim_seen[v]) throw ParseError("duplicate dimension for vertex '" + vname + "'", lineno, 1);
            if (ls >> extra) throw ParseError("trailing characters after dimension", lineno, 1);
            for (char ch : val)
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw ParseError("dimension must be a nonnegative integer", lineno, 1);
            dims[v] = std::stoi(val);
            dim_seen[v] = true;
            continue;
        }
        if (first == "arrow") {
            close_block(lineno);
            in_arrows = true;
            std::string aname, extra;
            ls >> aname;
            if (aname.empty() || aname.back() != ':')
                throw ParseError("expected 'arrow <name>:'", lineno, 1);
            aname.pop_back();
            int a = q.arrow_index(aname);
            if (a < 0) throw ParseError("unknown arrow '" + aname + "'", lineno, 1);
            if (mat_seen[a]) throw ParseError("duplicate matrix for arrow '" + aname + "'", lineno, 1);
            if (ls >> extra) throw ParseError("trailing characters after arrow name", lineno, 1);
            cur_arrow = a;
            rows_needed = (dims[q.arrows[a].src] == 0) ? 0 : dims[q.arrows[a].tgt];
            continue;
        }
        // Matrix row.
        if (cur_arrow < 0) throw ParseError("unexpected line; expected 'dim', 'arrow' or a matrix row", lineno, 1);
        if (int(rows.size()) == rows_needed)
            throw ParseError("too many rows for arrow '" + q.arrows[cur_arrow].name + "'", lineno, 1);
        std::vector<Rat> row;
        std::istringstream rs(line);
        std::string tok;
        while (rs >> tok) {
            Rat r;
            if (!parse_rat_token(tok, r)) throw ParseError("invalid rational entry '" + tok + "'", lineno, 1);
            row.push_back(r);
        }
        int want = dims[q.arrows[cur_arrow].src];
        if (int(row.size()) != want)
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(want),
                             lineno, 1);
        rows.push_back(std::move(row));
    }
    close_block(lineno ? lineno : 1);
    if (!saw_header) throw ParseError("representation file is empty", lineno ? lineno : 1, 1);

    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows[a];
        bool empty_shape = dims[ar.tgt] == 0 || dims[ar.src] == 0;
        if (!mat_seen[a]) {
            if (!empty_shape)
                throw ParseError("missing matrix for arrow '" + ar.name + "'", lineno ? lineno : 1, 1);
            mats[a] = Mat(dims[ar.tgt], dims[ar.src]);
        }
    }
    return make_representation(std::move(alg), std::move(dims), std::move(mats));
}

}  // namespace qvc
