#ifndef QUIVERCERT_COMMANDS_HPP
#define QUIVERCERT_COMMANDS_HPP

// Subcommand implementations shared by the C API, the CLI and the tests.
// Each command loads its inputs, runs the computation and assembles the
// complete report. Input problems (unreadable files, parse errors, malformed
// classes) are raised as ParseError or InputError; the caller maps them to
// exit code 2. A successfully assembled report carries exit code 0
// (verified / computed) or 1 (not verified).

#include "checker.hpp"
#include "report.hpp"

namespace qvc {

struct CmdResult {
    int exit_code = 0;
    ojson report;
};

// Validate a quiver spec and describe the bound path algebra.
CmdResult cmd_check(const std::string& quiver_path, const ReportParams& p);

// Cartan matrix, Gram form of the simples, projective classes.
CmdResult cmd_gram(const std::string& quiver_path, const ReportParams& p);

// Ext table for two representation files over the same quiver spec.
CmdResult cmd_ext(const std::string& m_rep_path, const std::string& n_rep_path, const ReportParams& p);

// Self Hom/Ext table of one representation and the exceptionality verdict.
CmdResult cmd_exceptional(const std::string& quiver_path, const std::string& rep_path,
                          const ReportParams& p);

// Apply a braid word to a sequence of classes (default: projective classes
// in exceptional order). Word tokens are 1-based positions; negative tokens
// apply the inverse generator.
CmdResult cmd_mutate(const std::string& quiver_path, const std::string& word,
                     const std::vector<std::string>& class_specs, const ReportParams& p);

// Nonextendability certificate for a class given as "c1,c2,...,cn".
CmdResult cmd_certify_nonext(const std::string& quiver_path, const std::string& class_spec,
                             const ReportParams& p);

// Full Jordan-Hoelder violation report; candidates as "c1,...,cn" strings.
CmdResult cmd_certify_jh(const std::string& quiver_path, const std::vector<std::string>& candidate_specs,
                         const ReportParams& p);

// Replay the certificates of a previously emitted JSON report.
CmdResult cmd_verify(const std::string& report_path, const ReportParams& p);

// Shared input helpers (also used by the tests).
std::string read_file(const std::string& path);
KClass parse_class_spec(const std::string& spec, int expect_len);
std::vector<int> parse_braid_word(const std::string& word, int seq_len);

}  // namespace qvc

#endif
