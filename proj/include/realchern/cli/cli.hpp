#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "realchern/io/workspace.hpp"

namespace realchern::cli {

/// One reported fact. Human and machine output are two renderings of the
/// same list of records.
struct Record {
    enum Kind { Check, Query } kind = Query;
    std::string name;     ///< check id ("AXIOM I", "RANK", ...) or query name
    std::string subject;
    std::string result;   ///< PASS/FAIL for checks
    std::string detail;

    bool failed() const { return kind == Check && result != "PASS"; }
};

/// "<name> <subject> PASS|FAIL <detail>" or "<name> <subject> = <result>  # <detail>".
std::string human_line(const Record& r);
/// {"check"|"query": name, "subject": ..., "result": ..., "detail": ...}
std::string machine_line(const Record& r);

enum class Twists { Zero, One, Both };

std::vector<Record> groups_report(const Workspace& ws, const std::string& space, std::optional<int> max,
                                  Twists twists);
std::vector<Record> chern_report(const Workspace& ws, const std::string& bundle, std::optional<int> n);

struct VerifyOptions {
    std::string suite = "all";  ///< axioms, conjugation, ranks, wu, all
    std::optional<std::string> space;
    std::optional<int> max;
    bool parallel = true;
};

std::vector<Record> verify_report(const Workspace& ws, const VerifyOptions& options);

/// action: wu, sw-numbers, kappa-check, duality, compare (needs `other`).
std::vector<Record> manifold_report(const Workspace& ws, const std::string& manifold, const std::string& action,
                                    const std::string& other = "");

/// Entry point behind the executable. Exit codes: 0 success, 1 a check
/// failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace realchern::cli
