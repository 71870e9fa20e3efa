// quivercert: exact Hom/Ext computations, Euler-Gram forms, braid mutations
// and machine-checkable nonextendability certificates for bound quiver
// algebras. Thin front end over the C API; all reports come from the library.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quivercert/quivercert.h"

namespace {

struct Options {
    qvc_params params{};
    std::string format = "json";
};

// Prints the report in the selected format; returns the process exit code.
int emit(const Options& opt, qvc_status status, char* report) {
    if (status >= QVC_ERR_INPUT) {
        std::fprintf(stderr, "error: %s\n", qvc_last_error());
        qvc_string_free(report);
        return status;
    }
    int code = static_cast<int>(status);
    if (!report) return code;
    if (opt.format == "text") {
        char* text = nullptr;
        qvc_status rs = qvc_render_text(report, &text);
        if (rs != QVC_OK) {
            std::fprintf(stderr, "error: %s\n", qvc_last_error());
            qvc_string_free(report);
            return rs;
        }
        std::fputs(text, stdout);
        qvc_string_free(text);
    } else {
        std::fputs(report, stdout);
    }
    qvc_string_free(report);
    return code;
}

std::vector<const char*> c_strings(const std::vector<std::string>& items) {
    std::vector<const char*> out;
    out.reserve(items.size());
    for (const std::string& s : items) out.push_back(s.c_str());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    qvc_params_init(&opt.params);

    CLI::App app{std::string("quivercert ") + qvc_version() +
                 ": certified numerics for bound quiver algebras"};
    app.require_subcommand(1);
    app.set_version_flag("--version", qvc_version());

    app.add_option("-B,--box-bound", opt.params.box_bound,
                   "Coefficient box half-width for lattice searches")
        ->default_val(100)
        ->check(CLI::PositiveNumber);
    app.add_option("-M,--modulus-cap", opt.params.modulus_cap,
                   "Largest modulus tried for residue proofs")
        ->default_val(16)
        ->check(CLI::Range(2, 1 << 20));
    app.add_option("--seed", opt.params.seed, "Seed recorded in reports")->default_val(0);
    app.add_option("--format", opt.format, "Report format")
        ->envname("QVC_FORMAT")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "text"}));

    std::string quiver_path, rep_path, rep_path_n, class_spec, word, report_path;
    std::vector<std::string> classes, candidates;

    CLI::App* c_check = app.add_subcommand("check", "Validate a quiver spec and print the algebra");
    c_check->add_option("quiver", quiver_path, "Quiver spec file")->required();

    CLI::App* c_gram = app.add_subcommand("gram", "Cartan matrix, Gram form and projective classes");
    c_gram->add_option("quiver", quiver_path, "Quiver spec file")->required();

    CLI::App* c_ext = app.add_subcommand("ext", "Ext table of two representations");
    c_ext->add_option("M", rep_path, "First representation file")->required();
    c_ext->add_option("N", rep_path_n, "Second representation file")->required();

    CLI::App* c_exc = app.add_subcommand("exceptional", "Self Hom/Ext table and exceptionality verdict");
    c_exc->add_option("quiver", quiver_path, "Quiver spec file")->required();
    c_exc->add_option("rep", rep_path, "Representation file")->required();

    CLI::App* c_mut = app.add_subcommand("mutate", "Apply a braid word to a sequence of classes");
    c_mut->add_option("quiver", quiver_path, "Quiver spec file")->required();
    c_mut->add_option("-w,--word", word, "Braid word, e.g. \"1 2 -1\" (negative = inverse)")
        ->required();
    c_mut->add_option("--class", classes,
                      "Class as comma-separated coordinates; repeatable, in sequence order "
                      "(default: projective classes, sinks first)");

    CLI::App* c_non = app.add_subcommand("certify-nonext", "Certify numerical nonextendability of a class");
    c_non->add_option("quiver", quiver_path, "Quiver spec file")->required();
    c_non->add_option("class", class_spec, "Class as comma-separated coordinates, e.g. 1,1,1")
        ->required();

    CLI::App* c_jh = app.add_subcommand("certify-jh", "Certify a Jordan-Hoelder violation");
    c_jh->add_option("quiver", quiver_path, "Quiver spec file")->required();
    c_jh->add_option("--candidate", candidates,
                     "Candidate nonextendable class; repeatable (default: built-in candidates)");

    CLI::App* c_ver = app.add_subcommand("verify", "Replay the certificates of an emitted report");
    c_ver->add_option("report", report_path, "Report JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Fold CLI11's usage-error codes into the documented contract:
        // 0 stays 0 (--help, --version), everything else is an input error.
        int rc = app.exit(e);
        return rc == 0 ? 0 : QVC_ERR_INPUT;
    }

    char* report = nullptr;
    qvc_status status = QVC_ERR_INTERNAL;
    if (c_check->parsed()) {
        status = qvc_cmd_check(quiver_path.c_str(), &opt.params, &report);
    } else if (c_gram->parsed()) {
        status = qvc_cmd_gram(quiver_path.c_str(), &opt.params, &report);
    } else if (c_ext->parsed()) {
        status = qvc_cmd_ext(rep_path.c_str(), rep_path_n.c_str(), &opt.params, &report);
    } else if (c_exc->parsed()) {
        status = qvc_cmd_exceptional(quiver_path.c_str(), rep_path.c_str(), &opt.params, &report);
    } else if (c_mut->parsed()) {
        std::vector<const char*> cs = c_strings(classes);
        status = qvc_cmd_mutate(quiver_path.c_str(), word.c_str(), cs.data(), cs.size(),
                                &opt.params, &report);
    } else if (c_non->parsed()) {
        status = qvc_cmd_certify_nonext(quiver_path.c_str(), class_spec.c_str(), &opt.params, &report);
    } else if (c_jh->parsed()) {
        std::vector<const char*> cs = c_strings(candidates);
        status = qvc_cmd_certify_jh(quiver_path.c_str(), cs.data(), cs.size(), &opt.params, &report);
    } else if (c_ver->parsed()) {
        status = qvc_cmd_verify(report_path.c_str(), &opt.params, &report);
    }

    return emit(opt, status, report);
}
