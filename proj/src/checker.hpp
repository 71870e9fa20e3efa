#ifndef QUIVERCERT_CHECKER_HPP
#define QUIVERCERT_CHECKER_HPP

// Independent certificate replay. Everything here re-verifies reports from
// their JSON alone, with its own matrix arithmetic (fresh elimination, rank,
// determinant and lattice-saturation code), deliberately not reusing the
// library's linear algebra. A report is accepted only if every check passes.

#include "report.hpp"

namespace qvc {

struct CheckOutcome {
    bool accepted = true;
    std::vector<std::pair<std::string, bool>> checks;
    std::string detail;  // description of the first failure

    void record(const std::string& name, bool ok, const std::string& why = "");
};

// Replays a certify-nonext or certify-jh report. Throws InputError for
// malformed reports or commands that carry no certificate.
CheckOutcome check_report(const ojson& report);

}  // namespace qvc

#endif
