#ifndef QUIVERCERT_TESTS_FIXTURES_HPP
#define QUIVERCERT_TESTS_FIXTURES_HPP

// Shared test fixtures: the data-dir algebras, seeded random representation
// corpora and a tiny process runner for the CLI round trips.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "commands.hpp"
#include "homalg.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(QVC_DATA_DIR) + "/" + name; }

inline qvc::AlgebraPtr load_algebra(const std::string& file) {
    return qvc::make_algebra(qvc::parse_quiver_spec(qvc::read_file(data_path(file))));
}

inline qvc::AlgebraPtr bondal_algebra() {
    static qvc::AlgebraPtr alg = load_algebra("bondal.quiver");
    return alg;
}

inline qvc::AlgebraPtr a2_algebra() {
    static qvc::AlgebraPtr alg = load_algebra("a2.quiver");
    return alg;
}

// The representation P: k -> k -> k through a1 and b1.
inline qvc::Representation rep_P(const qvc::AlgebraPtr& alg) {
    std::vector<qvc::Mat> mats(4, qvc::Mat(1, 1));
    mats[0].at(0, 0) = 1;  // a1
    mats[2].at(0, 0) = 1;  // b1
    return qvc::make_representation(alg, {1, 1, 1}, mats);
}

inline qvc::Mat random_mat(std::mt19937_64& rng, int rows, int cols, int spread = 3) {
    std::uniform_int_distribution<int> d(-spread, spread);
    qvc::Mat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = d(rng);
    return m;
}

// Random bondal representation with a2 = b2 = 0; both relations then hold
// for any a1, b1.
inline qvc::Representation random_bondal_left(const qvc::AlgebraPtr& alg, std::mt19937_64& rng,
                                              int maxdim = 2) {
    std::uniform_int_distribution<int> d(0, maxdim);
    std::vector<int> dims = {d(rng), d(rng), d(rng)};
    std::vector<qvc::Mat> mats = {random_mat(rng, dims[1], dims[0]), qvc::Mat(dims[1], dims[0]),
                                  random_mat(rng, dims[2], dims[1]), qvc::Mat(dims[2], dims[1])};
    return qvc::make_representation(alg, dims, mats);
}

// Mirror family with a1 = b1 = 0.
inline qvc::Representation random_bondal_right(const qvc::AlgebraPtr& alg, std::mt19937_64& rng,
                                               int maxdim = 2) {
    std::uniform_int_distribution<int> d(0, maxdim);
    std::vector<int> dims = {d(rng), d(rng), d(rng)};
    std::vector<qvc::Mat> mats = {qvc::Mat(dims[1], dims[0]), random_mat(rng, dims[1], dims[0]),
                                  qvc::Mat(dims[2], dims[1]), random_mat(rng, dims[2], dims[1])};
    return qvc::make_representation(alg, dims, mats);
}

// General corpus element: direct sum of the two one-sided families plus an
// occasional projective or simple summand, so all four arrows act.
inline qvc::Representation random_bondal_rep(const qvc::AlgebraPtr& alg, std::mt19937_64& rng,
                                             int maxdim = 2) {
    std::vector<qvc::Representation> parts;
    parts.push_back(random_bondal_left(alg, rng, maxdim));
    parts.push_back(random_bondal_right(alg, rng, maxdim));
    std::uniform_int_distribution<int> extra(0, 3);
    int e = extra(rng);
    if (e == 1) parts.push_back(qvc::projective_rep(alg, int(rng() % 3)));
    if (e == 2) parts.push_back(qvc::simple_rep(alg, int(rng() % 3)));
    if (e == 3) parts.push_back(rep_P(alg));
    return qvc::direct_sum_many(alg, parts);
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI through the shell, capturing stdout. `prefix` may set a
// working directory or environment variables, e.g. "cd /x && QVC_FORMAT=text".
inline RunResult run_cli(const std::string& args, const std::string& prefix = "") {
    std::string cmd;
    if (!prefix.empty()) cmd += prefix + " ";
    cmd += std::string(QVC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace fixtures

#endif
