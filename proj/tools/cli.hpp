#pragma once

// `stcut` command-line front end. Exit codes: 0 success, 1 input error,
// 2 t unreachable from s, 3 verification mismatch.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "stcut/graph.hpp"
#include "stcut/stbridge.hpp"

namespace stcut::cli {

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int { kOk = 0, kInputError = 1, kNoPath = 2, kMismatch = 3 };

struct ReportOptions {
    bool include_path = false;
    // Optional node labels indexed by NodeId.
    const std::vector<std::string>* labels = nullptr;
};

nlohmann::ordered_json report_document(const CutReport& report, const DirectedGraph& g, NodeId s, NodeId t,
                                       const ReportOptions& options = {});
nlohmann::ordered_json no_path_document(CutKind kind, const DirectedGraph& g, NodeId s, NodeId t);

// Tab-separated rendering of the same content.
std::string report_tsv(const CutReport& report, const DirectedGraph& g, NodeId s, NodeId t,
                       const ReportOptions& options = {});

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace stcut::cli
