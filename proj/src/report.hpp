#ifndef QUIVERCERT_REPORT_HPP
#define QUIVERCERT_REPORT_HPP

// JSON report assembly and the text rendering. Reports are deterministic:
// stable key order, no timestamps, and every integer serialized as a decimal
// string so arbitrary precision survives any JSON reader.

#include <json.hpp>

#include "homalg.hpp"
#include "search.hpp"

namespace qvc {

using ojson = nlohmann::ordered_json;

std::string int_str(const Int& v);
ojson json_kclass(const KClass& v);
ojson json_imat(const IMat& m);
ojson json_int_rows(const std::vector<KClass>& rows);

ojson json_certificate(const Certificate& c);
ojson json_side(const SideResult& s);
ojson json_nonext(const NonextResult& r);
ojson json_gram(const GramResult& g);
ojson json_jh(const JHResult& r, const GramResult& g, const std::string& quiver_name);

struct ReportParams {
    long long box_bound = 100;
    int modulus_cap = 16;
    unsigned long seed = 0;
};

struct InputFile {
    std::string role;  // key under "inputs"
    std::string path;
    std::string sha256;
};

ojson report_envelope(const std::string& command, const std::vector<InputFile>& inputs,
                      const ReportParams& params);

// Human-readable rendering of a report; derived from the JSON itself so the
// two formats cannot disagree on values.
std::string render_text(const ojson& report);

}  // namespace qvc

#endif
