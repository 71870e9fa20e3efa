#include "commands.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sha256.hpp"

namespace qvc {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

struct LoadedQuiver {
    std::string path;
    std::string text;
    BoundQuiver bq;
    AlgebraPtr alg;
};

LoadedQuiver load_quiver(const std::string& path) {
    LoadedQuiver lq;
    lq.path = path;
    lq.text = read_file(path);
    lq.bq = parse_quiver_spec(lq.text);
    lq.alg = make_algebra(lq.bq);
    return lq;
}

InputFile hashed(const std::string& role, const std::string& path, const std::string& bytes) {
    return InputFile{role, path, sha256_hex(bytes)};
}

CmdResult finish(const std::string& command, const std::vector<InputFile>& inputs,
                 const ReportParams& p, ojson result, int exit_code) {
    ojson rep = report_envelope(command, inputs, p);
    rep["result"] = std::move(result);
    return CmdResult{exit_code, std::move(rep)};
}

// Path named by a rep file header, resolved against the rep file's directory.
fs::path resolve_ref(const std::string& base_file, const std::string& ref) {
    fs::path r(ref);
    if (r.is_absolute()) return r;
    return fs::path(base_file).parent_path() / r;
}

bool same_file(const fs::path& a, const fs::path& b) {
    std::error_code ec;
    if (fs::equivalent(a, b, ec)) return true;
    return fs::weakly_canonical(a, ec) == fs::weakly_canonical(b, ec);
}

ojson json_word(const std::vector<int>& word) {
    ojson arr = ojson::array();
    for (int t : word) arr.push_back(std::to_string(t));
    return arr;
}

ojson json_ext_row(const std::vector<int>& ext) {
    ojson arr = ojson::array();
    for (int e : ext) arr.push_back(int_str(Int(e)));
    return arr;
}

}  // namespace

KClass parse_class_spec(const std::string& spec, int expect_len) {
    KClass v;
    std::string tok;
    std::istringstream ss(spec);
    while (std::getline(ss, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw InputError("class '" + spec + "' has an empty coordinate");
        tok = tok.substr(b, e - b + 1);
        size_t k = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
        if (k == tok.size()) throw InputError("class '" + spec + "': bad integer '" + tok + "'");
        for (; k < tok.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(tok[k])))
                throw InputError("class '" + spec + "': bad integer '" + tok + "'");
        v.push_back(Int(tok));
    }
    if (expect_len >= 0 && int(v.size()) != expect_len)
        throw InputError("class '" + spec + "' has " + std::to_string(v.size()) +
                         " coordinates, expected " + std::to_string(expect_len));
    return v;
}

std::vector<int> parse_braid_word(const std::string& word, int seq_len) {
    std::string cleaned = word;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::vector<int> out;
    std::istringstream ss(cleaned);
    std::string tok;
    while (ss >> tok) {
        try {
            size_t pos = 0;
            int t = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(t);
        } catch (const std::exception&) {
            throw InputError("braid word: bad token '" + tok + "'");
        }
    }
    for (int t : out) {
        if (t == 0) throw InputError("braid word: generator indices are nonzero (negative = inverse)");
        if (std::abs(t) > seq_len - 1)
            throw InputError("braid word: generator " + std::to_string(t) +
                             " out of range for a sequence of length " + std::to_string(seq_len));
    }
    return out;
}

CmdResult cmd_check(const std::string& quiver_path, const ReportParams& p) {
    LoadedQuiver lq = load_quiver(quiver_path);
    const Quiver& q = lq.bq.quiver;

    ojson result;
    result["quiver"] = lq.bq.name;
    ojson verts = ojson::array();
    for (const auto& name : q.vertices) verts.push_back(name);
    result["vertices"] = std::move(verts);
    ojson arrows = ojson::array();
    for (const Arrow& a : q.arrows) {
        ojson ja;
        ja["name"] = a.name;
        ja["source"] = q.vertices[a.src];
        ja["target"] = q.vertices[a.tgt];
        arrows.push_back(std::move(ja));
    }
    result["arrows"] = std::move(arrows);
    ojson rels = ojson::array();
    for (const RelationExpr& r : lq.bq.relations) rels.push_back(r.str(q));
    result["relations"] = std::move(rels);
    result["path_algebra_dimension"] = int_str(Int(lq.alg->path_algebra_dimension()));
    result["algebra_dimension"] = int_str(Int(lq.alg->dimension()));
    result["relations_minimal"] = lq.alg->relations_minimal();
    result["global_dimension"] = int_str(Int(global_dimension(lq.alg, q.num_vertices())));

    ojson basis = ojson::array();
    for (int i = 0; i < q.num_vertices(); ++i)
        for (int j = 0; j < q.num_vertices(); ++j) {
            const auto& paths = lq.alg->normal_paths(i, j);
            if (paths.empty()) continue;
            ojson slice;
            slice["source"] = q.vertices[i];
            slice["target"] = q.vertices[j];
            slice["dimension"] = int_str(Int(int(paths.size())));
            ojson names = ojson::array();
            for (const Path& pth : paths) names.push_back(pth.str(q));
            slice["paths"] = std::move(names);
            basis.push_back(std::move(slice));
        }
    result["normal_basis"] = std::move(basis);

    return finish("check", {hashed("quiver", quiver_path, lq.text)}, p, std::move(result), 0);
}

CmdResult cmd_gram(const std::string& quiver_path, const ReportParams& p) {
    LoadedQuiver lq = load_quiver(quiver_path);
    const Quiver& q = lq.bq.quiver;
    GramResult gr = gram_matrix_simples(lq.alg);
    IMat cartan = cartan_matrix(lq.alg);
    std::vector<KClass> projs = projective_classes(lq.alg);
    std::vector<int> order = exceptional_vertex_order(lq.alg);

    ojson result;
    result["quiver"] = lq.bq.name;
    result["cartan"] = json_imat(cartan);
    result["gram"] = json_gram(gr);
    result["cartan_gram_identity"] = (cartan * gr.gram == IMat::identity(q.num_vertices()));
    ojson jorder = ojson::array();
    for (int v : order) jorder.push_back(q.vertices[v]);
    result["exceptional_order"] = std::move(jorder);
    ojson jp = ojson::array();
    for (int v : order) {
        ojson e;
        e["vertex"] = q.vertices[v];
        e["class"] = json_kclass(projs[v]);
        jp.push_back(std::move(e));
    }
    result["projective_classes"] = std::move(jp);

    return finish("gram", {hashed("quiver", quiver_path, lq.text)}, p, std::move(result), 0);
}

namespace {

ojson json_rep_summary(const std::string& path, const Representation& r) {
    ojson j;
    j["path"] = path;
    j["dims"] = json_kclass(class_of(r));
    j["total_dim"] = int_str(Int(r.total_dim()));
    return j;
}

}  // namespace

CmdResult cmd_ext(const std::string& m_rep_path, const std::string& n_rep_path, const ReportParams& p) {
    std::string mtext = read_file(m_rep_path);
    std::string ntext = read_file(n_rep_path);
    fs::path mq = resolve_ref(m_rep_path, rep_file_quiver_path(mtext));
    fs::path nq = resolve_ref(n_rep_path, rep_file_quiver_path(ntext));
    if (!same_file(mq, nq))
        throw InputError("representation files reference different quiver specs: '" + mq.string() +
                         "' vs '" + nq.string() + "'");

    std::string qpath = mq.lexically_normal().generic_string();
    LoadedQuiver lq = load_quiver(qpath);
    Representation m = parse_rep_file(mtext, lq.alg);
    Representation n = parse_rep_file(ntext, lq.alg);

    int kmax = lq.bq.quiver.num_vertices() - 1;
    std::vector<int> ext = ext_table(m, n, kmax);

    ojson result;
    result["quiver"] = lq.bq.name;
    result["m"] = json_rep_summary(m_rep_path, m);
    result["n"] = json_rep_summary(n_rep_path, n);
    result["ext"] = json_ext_row(ext);
    result["hom_dim"] = int_str(Int(ext.empty() ? 0 : ext[0]));
    result["euler_characteristic"] = int_str(euler_char(m, n));

    std::vector<InputFile> inputs = {hashed("quiver", qpath, lq.text),
                                     hashed("rep_m", m_rep_path, mtext),
                                     hashed("rep_n", n_rep_path, ntext)};
    return finish("ext", inputs, p, std::move(result), 0);
}

CmdResult cmd_exceptional(const std::string& quiver_path, const std::string& rep_path,
                          const ReportParams& p) {
    std::string rtext = read_file(rep_path);
    fs::path ref = resolve_ref(rep_path, rep_file_quiver_path(rtext));
    if (!same_file(ref, fs::path(quiver_path)))
        throw InputError("representation file references quiver spec '" + ref.string() +
                         "', not '" + quiver_path + "'");

    LoadedQuiver lq = load_quiver(quiver_path);
    Representation m = parse_rep_file(rtext, lq.alg);

    int kmax = lq.bq.quiver.num_vertices() - 1;
    std::vector<int> ext = ext_table(m, m, kmax);
    bool higher_vanish = true;
    for (size_t k = 1; k < ext.size(); ++k)
        if (ext[k] != 0) higher_vanish = false;
    bool exceptional = !ext.empty() && ext[0] == 1 && higher_vanish;

    ojson result;
    result["quiver"] = lq.bq.name;
    result["rep"] = json_rep_summary(rep_path, m);
    result["class"] = json_kclass(class_of(m));
    result["self_ext"] = json_ext_row(ext);
    result["end_dim"] = int_str(Int(ext.empty() ? 0 : ext[0]));
    result["higher_ext_vanish"] = higher_vanish;
    result["exceptional"] = exceptional;
    result["verdict"] = exceptional ? "exceptional" : "not exceptional";

    std::vector<InputFile> inputs = {hashed("quiver", quiver_path, lq.text),
                                     hashed("rep", rep_path, rtext)};
    return finish("exceptional", inputs, p, std::move(result), exceptional ? 0 : 1);
}

CmdResult cmd_mutate(const std::string& quiver_path, const std::string& word,
                     const std::vector<std::string>& class_specs, const ReportParams& p) {
    LoadedQuiver lq = load_quiver(quiver_path);
    int nv = lq.bq.quiver.num_vertices();
    GramResult gr = gram_matrix_simples(lq.alg);

    std::vector<KClass> seq;
    if (class_specs.empty()) {
        std::vector<KClass> projs = projective_classes(lq.alg);
        for (int v : exceptional_vertex_order(lq.alg)) seq.push_back(projs[v]);
    } else {
        for (const std::string& s : class_specs) seq.push_back(parse_class_spec(s, nv));
    }
    std::vector<int> gens = parse_braid_word(word, int(seq.size()));

    std::vector<KClass> cur = seq;
    if (gens.empty() && !is_numerical_exceptional_sequence(cur, gr.gram))
        throw InputError("input classes do not form a numerical exceptional sequence");
    for (int t : gens) cur = braid_act(cur, std::abs(t) - 1, t < 0, gr.gram);

    ojson result;
    result["quiver"] = lq.bq.name;
    result["gram"] = json_imat(gr.gram);
    result["word"] = json_word(gens);
    result["initial"] = json_int_rows(seq);
    result["final"] = json_int_rows(cur);
    result["exceptional"] = true;
    if (int(cur.size()) == nv) {
        IMat stack(nv, nv);
        for (int r = 0; r < nv; ++r)
            for (int c = 0; c < nv; ++c) stack.at(r, c) = cur[r][c];
        result["determinant"] = int_str(det_bareiss(stack));
    } else {
        result["determinant"] = nullptr;
    }

    return finish("mutate", {hashed("quiver", quiver_path, lq.text)}, p, std::move(result), 0);
}

CmdResult cmd_certify_nonext(const std::string& quiver_path, const std::string& class_spec,
                             const ReportParams& p) {
    LoadedQuiver lq = load_quiver(quiver_path);
    GramResult gr = gram_matrix_simples(lq.alg);
    KClass v = parse_class_spec(class_spec, lq.bq.quiver.num_vertices());
    NonextResult r = certify_nonextendable(v, gr.gram, p.box_bound, p.modulus_cap);

    ojson result;
    result["quiver"] = lq.bq.name;
    result["gram"] = json_gram(gr);
    result.update(json_nonext(r));

    return finish("certify-nonext", {hashed("quiver", quiver_path, lq.text)}, p, std::move(result),
                  r.verified ? 0 : 1);
}

CmdResult cmd_certify_jh(const std::string& quiver_path, const std::vector<std::string>& candidate_specs,
                         const ReportParams& p) {
    LoadedQuiver lq = load_quiver(quiver_path);
    GramResult gr = gram_matrix_simples(lq.alg);
    std::vector<KClass> candidates;
    if (candidate_specs.empty()) {
        candidates = builtin_candidates(lq.bq);
    } else {
        for (const std::string& s : candidate_specs)
            candidates.push_back(parse_class_spec(s, lq.bq.quiver.num_vertices()));
    }
    JHResult jr = certify_jh_violation(lq.alg, gr.gram, candidates, p.box_bound, p.modulus_cap);
    ojson result = json_jh(jr, gr, lq.bq.name);

    return finish("certify-jh", {hashed("quiver", quiver_path, lq.text)}, p, std::move(result),
                  jr.witnessed ? 0 : 1);
}

CmdResult cmd_verify(const std::string& report_path, const ReportParams& p) {
    std::string text = read_file(report_path);
    ojson rep;
    try {
        rep = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("report is not valid JSON: ") + e.what());
    }
    CheckOutcome outcome = check_report(rep);

    ojson result;
    result["report_command"] = rep.value("command", "");
    result["accepted"] = outcome.accepted;
    ojson checks = ojson::array();
    for (const auto& [name, ok] : outcome.checks) {
        ojson c;
        c["name"] = name;
        c["ok"] = ok;
        checks.push_back(std::move(c));
    }
    result["checks"] = std::move(checks);
    if (outcome.accepted)
        result["detail"] = nullptr;
    else
        result["detail"] = outcome.detail;

    return finish("verify", {hashed("report", report_path, text)}, p, std::move(result),
                  outcome.accepted ? 0 : 1);
}

}  // namespace qvc
