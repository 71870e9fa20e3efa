#include "quivercert/quivercert.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "commands.hpp"

using namespace qvc;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ReportParams to_params(const qvc_params* p) {
    ReportParams rp;
    if (p) {
        rp.box_bound = p->box_bound;
        rp.modulus_cap = p->modulus_cap;
        rp.seed = p->seed;
    }
    if (rp.box_bound < 1) throw InputError("box bound must be >= 1");
    if (rp.modulus_cap < 2) throw InputError("modulus cap must be >= 2");
    return rp;
}

// Runs a command, serializes its report and maps exceptions to statuses.
template <typename Fn>
qvc_status run_command(char** report_json, Fn&& fn) {
    if (report_json) *report_json = nullptr;
    try {
        CmdResult res = fn();
        if (report_json) {
            std::string text = res.report.dump(2) + "\n";
            *report_json = dup_string(text);
            if (!*report_json) {
                g_last_error = "out of memory";
                return QVC_ERR_INTERNAL;
            }
        }
        return res.exit_code == 0 ? QVC_OK : QVC_NOT_VERIFIED;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return QVC_ERR_INPUT;
    } catch (const InputError& e) {
        g_last_error = e.what();
        return QVC_ERR_INPUT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QVC_ERR_INTERNAL;
    }
}

std::vector<std::string> collect(const char* const* items, size_t n) {
    std::vector<std::string> out;
    for (size_t i = 0; i < n; ++i) {
        if (!items || !items[i]) throw InputError("null string in argument list");
        out.emplace_back(items[i]);
    }
    return out;
}

std::string require(const char* s, const char* what) {
    if (!s) throw InputError(std::string("missing ") + what);
    return s;
}

// Only what the introspection calls need; commands reload from disk so that
// reports always hash the bytes they actually used.
struct LoadedSession {
    BoundQuiver bq;
    AlgebraPtr alg;
};

}  // namespace

struct qvc_session {
    LoadedSession data;
};

extern "C" {

void qvc_params_init(qvc_params* p) {
    if (!p) return;
    p->box_bound = 100;
    p->modulus_cap = 16;
    p->seed = 0;
}

const char* qvc_version(void) { return QVC_VERSION; }

const char* qvc_last_error(void) { return g_last_error.c_str(); }

void qvc_string_free(char* s) { std::free(s); }

qvc_status qvc_session_open(const char* quiver_path, qvc_session** out) {
    if (out) *out = nullptr;
    try {
        if (!out) throw InputError("missing session out parameter");
        std::string path = require(quiver_path, "quiver path");
        std::string text = read_file(path);
        BoundQuiver bq = parse_quiver_spec(text);
        AlgebraPtr alg = make_algebra(bq);
        *out = new qvc_session{LoadedSession{std::move(bq), std::move(alg)}};
        return QVC_OK;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return QVC_ERR_INPUT;
    } catch (const InputError& e) {
        g_last_error = e.what();
        return QVC_ERR_INPUT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QVC_ERR_INTERNAL;
    }
}

void qvc_session_close(qvc_session* s) { delete s; }

qvc_status qvc_session_quiver_name(const qvc_session* s, char** out) {
    if (out) *out = nullptr;
    if (!s || !out) {
        g_last_error = "null argument";
        return QVC_ERR_INPUT;
    }
    *out = dup_string(s->data.bq.name);
    if (!*out) {
        g_last_error = "out of memory";
        return QVC_ERR_INTERNAL;
    }
    return QVC_OK;
}

qvc_status qvc_session_num_vertices(const qvc_session* s, long* out) {
    if (!s || !out) {
        g_last_error = "null argument";
        return QVC_ERR_INPUT;
    }
    *out = s->data.bq.quiver.num_vertices();
    return QVC_OK;
}

qvc_status qvc_session_algebra_dimension(const qvc_session* s, long* out) {
    if (!s || !out) {
        g_last_error = "null argument";
        return QVC_ERR_INPUT;
    }
    *out = s->data.alg->dimension();
    return QVC_OK;
}

qvc_status qvc_cmd_check(const char* quiver_path, const qvc_params* params, char** report_json) {
    return run_command(report_json, [&] {
        return cmd_check(require(quiver_path, "quiver path"), to_params(params));
    });
}

qvc_status qvc_cmd_gram(const char* quiver_path, const qvc_params* params, char** report_json) {
    return run_command(report_json, [&] {
        return cmd_gram(require(quiver_path, "quiver path"), to_params(params));
    });
}

qvc_status qvc_cmd_ext(const char* m_rep_path, const char* n_rep_path, const qvc_params* params,
                       char** report_json) {
    return run_command(report_json, [&] {
        return cmd_ext(require(m_rep_path, "first representation path"),
                       require(n_rep_path, "second representation path"), to_params(params));
    });
}

qvc_status qvc_cmd_exceptional(const char* quiver_path, const char* rep_path,
                               const qvc_params* params, char** report_json) {
    return run_command(report_json, [&] {
        return cmd_exceptional(require(quiver_path, "quiver path"),
                               require(rep_path, "representation path"), to_params(params));
    });
}

qvc_status qvc_cmd_mutate(const char* quiver_path, const char* braid_word, const char* const* classes,
                          size_t num_classes, const qvc_params* params, char** report_json) {
    return run_command(report_json, [&] {
        return cmd_mutate(require(quiver_path, "quiver path"), require(braid_word, "braid word"),
                          collect(classes, num_classes), to_params(params));
    });
}

qvc_status qvc_cmd_certify_nonext(const char* quiver_path, const char* class_spec,
                                  const qvc_params* params, char** report_json) {
    return run_command(report_json, [&] {
        return cmd_certify_nonext(require(quiver_path, "quiver path"),
                                  require(class_spec, "class"), to_params(params));
    });
}

qvc_status qvc_cmd_certify_jh(const char* quiver_path, const char* const* candidates,
                              size_t num_candidates, const qvc_params* params, char** report_json) {
    return run_command(report_json, [&] {
        return cmd_certify_jh(require(quiver_path, "quiver path"),
                              collect(candidates, num_candidates), to_params(params));
    });
}

qvc_status qvc_cmd_verify(const char* report_path, const qvc_params* params, char** report_json) {
    return run_command(report_json, [&] {
        return cmd_verify(require(report_path, "report path"), to_params(params));
    });
}

qvc_status qvc_render_text(const char* report_json, char** text_out) {
    if (text_out) *text_out = nullptr;
    try {
        if (!text_out) throw InputError("missing text out parameter");
        std::string raw = require(report_json, "report JSON");
        ojson rep;
        try {
            rep = ojson::parse(raw);
        } catch (const nlohmann::json::parse_error& e) {
            throw InputError(std::string("report is not valid JSON: ") + e.what());
        }
        *text_out = dup_string(render_text(rep));
        if (!*text_out) {
            g_last_error = "out of memory";
            return QVC_ERR_INTERNAL;
        }
        return QVC_OK;
    } catch (const InputError& e) {
        g_last_error = e.what();
        return QVC_ERR_INPUT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QVC_ERR_INTERNAL;
    }
}

}  // extern "C"
