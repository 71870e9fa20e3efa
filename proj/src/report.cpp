#include "report.hpp"

#include <sstream>

#ifndef QVC_VERSION
#define QVC_VERSION "0.0.0"
#endif

namespace qvc {

std::string int_str(const Int& v) { return v.get_str(); }

ojson json_kclass(const KClass& v) {
    ojson a = ojson::array();
    for (const Int& x : v) a.push_back(x.get_str());
    return a;
}

ojson json_imat(const IMat& m) {
    ojson rows = ojson::array();
    for (int r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ojson json_int_rows(const std::vector<KClass>& rows) {
    ojson a = ojson::array();
    for (const KClass& r : rows) a.push_back(json_kclass(r));
    return a;
}

ojson json_certificate(const Certificate& c) {
    ojson j;
    j["kind"] = c.kind;
    if (c.kind == "modular") j["modulus"] = std::to_string(c.modulus);
    if (c.kind == "box") {
        j["bound"] = std::to_string(c.box_bound);
        j["note"] = "bounded evidence only";
    }
    return j;
}

ojson json_side(const SideResult& s) {
    ojson j;
    j["side"] = s.side;
    j["lattice_rank"] = std::to_string(s.basis.rows());
    j["lattice_basis"] = json_imat(s.basis);
    j["restricted_gram"] = json_imat(s.restricted);
    j["certificate"] = json_certificate(s.cert);
    j["certified"] = s.certified();
    j["witness"] = s.witness ? json_kclass(*s.witness) : ojson(nullptr);
    return j;
}

ojson json_nonext(const NonextResult& r) {
    ojson j;
    j["class"] = json_kclass(r.cls);
    j["sides"] = ojson::array({json_side(r.left), json_side(r.right)});
    j["verdict"] = r.verdict;
    j["verified"] = r.verified;
    return j;
}

ojson json_gram(const GramResult& g) {
    ojson j;
    j["matrix"] = json_imat(g.gram);
    j["route"] = g.route;
    j["global_dimension"] = g.global_dim < 0 ? ojson(nullptr) : ojson(std::to_string(g.global_dim));
    j["relations_minimal"] = g.relations_min;
    return j;
}

ojson json_jh(const JHResult& r, const GramResult& g, const std::string& quiver_name) {
    ojson j;
    j["quiver"] = quiver_name;
    j["gram"] = json_gram(g);

    ojson full;
    full["classes"] = json_int_rows(r.full_seq);
    full["length"] = std::to_string(r.full_seq.size());
    full["exceptional"] = r.full_exceptional;
    full["determinant"] = r.full_det.get_str();
    j["full_sequence"] = std::move(full);

    ojson cands = ojson::array();
    for (const CandidateResult& c : r.candidates) {
        ojson jc;
        jc["class"] = json_kclass(c.cls);
        jc["exceptional"] = c.exceptional;
        jc["nonext"] = c.nonext ? json_nonext(*c.nonext) : ojson(nullptr);
        cands.push_back(std::move(jc));
    }
    j["candidates"] = std::move(cands);

    ojson viol;
    viol["witnessed"] = r.witnessed;
    if (r.witnessed) {
        const KClass& win = r.candidates[size_t(r.winner)].cls;
        viol["winner_class"] = json_kclass(win);
        ojson shortseq;
        shortseq["classes"] = ojson::array({json_kclass(win)});
        shortseq["length"] = "1";
        viol["short_sequence"] = std::move(shortseq);
        ojson rem;
        rem["rank"] = std::to_string(r.remainder_basis.rows());
        rem["basis"] = json_imat(r.remainder_basis);
        rem["restricted_gram"] = json_imat(r.remainder_restricted);
        rem["certificate"] = json_certificate(*r.remainder_cert);
        viol["remainder"] = std::move(rem);
        ojson lengths;
        lengths["full"] = std::to_string(r.full_seq.size());
        lengths["short"] = "1";
        viol["lengths"] = std::move(lengths);
    }
    j["violation"] = std::move(viol);

    if (r.surveyed) {
        ojson survey;
        ojson entries = ojson::array();
        bool all_ext = true;
        for (const SurveyEntry& e : r.survey) {
            ojson je;
            je["class"] = json_kclass(e.cls);
            je["extendable"] = e.extendable;
            je["witness"] = e.witness ? json_kclass(*e.witness) : ojson(nullptr);
            je["nonextendable_certified"] = e.nonextendable_certified;
            entries.push_back(std::move(je));
            all_ext = all_ext && e.extendable;
        }
        survey["entries"] = std::move(entries);
        survey["all_extendable"] = all_ext;
        j["survey"] = std::move(survey);
    } else {
        j["survey"] = nullptr;
    }
    j["message"] = r.message;
    return j;
}

ojson report_envelope(const std::string& command, const std::vector<InputFile>& inputs,
                      const ReportParams& params) {
    ojson j;
    j["tool"] = "quivercert";
    j["version"] = QVC_VERSION;
    j["command"] = command;
    ojson in;
    for (const InputFile& f : inputs) {
        ojson jf;
        jf["path"] = f.path;
        jf["sha256"] = f.sha256;
        in[f.role] = std::move(jf);
    }
    j["inputs"] = std::move(in);
    ojson p;
    p["box_bound"] = std::to_string(params.box_bound);
    p["modulus_cap"] = std::to_string(params.modulus_cap);
    p["seed"] = std::to_string(params.seed);
    j["params"] = std::move(p);
    return j;
}

namespace {

bool is_scalar(const ojson& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_str(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_null()) return "-";
    return v.dump();
}

bool is_scalar_array(const ojson& a) {
    for (const auto& v : a)
        if (!is_scalar(v)) return false;
    return true;
}

std::string inline_array(const ojson& a) {
    std::string s = "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        s += scalar_str(a[i]);
    }
    return s + "]";
}

void render(const ojson& v, int depth, std::ostringstream& out) {
    std::string pad(size_t(depth) * 2, ' ');
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            if (is_scalar(val)) {
                out << pad << key << ": " << scalar_str(val) << "\n";
            } else if (val.is_array() && is_scalar_array(val)) {
                out << pad << key << ": " << inline_array(val) << "\n";
            } else {
                out << pad << key << ":\n";
                render(val, depth + 1, out);
            }
        }
    } else if (v.is_array()) {
        for (const auto& item : v) {
            if (is_scalar(item)) {
                out << pad << "- " << scalar_str(item) << "\n";
            } else if (item.is_array() && is_scalar_array(item)) {
                out << pad << inline_array(item) << "\n";
            } else {
                out << pad << "-\n";
                render(item, depth + 1, out);
            }
        }
    } else {
        out << pad << scalar_str(v) << "\n";
    }
}

}  // namespace

std::string render_text(const ojson& report) {
    std::ostringstream out;
    render(report, 0, out);
    return out.str();
}

}  // namespace qvc
