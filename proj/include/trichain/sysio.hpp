/*
 * sysio.hpp
 * System-file parsing and the batch command layer shared by the CLI and
 * the tests: decompose / mult / isolate / oracle / check with a stable
 * JSON document format.
 */
#ifndef TRICHAIN_SYSIO_HPP
#define TRICHAIN_SYSIO_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trichain/chains.hpp"
#include "trichain/parse.hpp"

namespace trichain {

struct SystemFile {
    VarOrder vars;
    TriangularSet chain;
};

/// Format: `vars: <names ascending>`, `chain:`, one polynomial per line,
/// `#` comments. Rejects non-triangular input with line diagnostics.
SystemFile parse_system(const std::string& text);

struct BranchDoc {
    std::vector<std::string> chain;
    std::vector<int> array;
    long long product = 0;
    bool operator==(const BranchDoc&) const = default;
};

struct ZeroDoc {
    std::vector<std::array<std::string, 2>> box;  // exact "p/q" endpoints
    long long multiplicity = 0;
    bool operator==(const ZeroDoc&) const = default;
};

struct ResultDocument {
    std::string command;
    std::vector<std::string> vars;
    std::optional<std::vector<BranchDoc>> branches;
    std::optional<std::vector<ZeroDoc>> zeros;
    std::optional<std::string> point;
    std::optional<std::vector<int>> array;
    std::optional<long long> product;
    std::optional<long long> multiplicity;
    std::optional<bool> regular;
    long long ms = 0;
    bool operator==(const ResultDocument&) const = default;
};

std::string document_to_json(const ResultDocument& doc);
ResultDocument document_from_json(const std::string& json);
std::string document_to_text(const ResultDocument& doc);

struct RunOptions {
    Rational width = 0;  // isolate refinement target; 0 = none
    int threads = 1;
    int depth_cap = 256;
    int oracle_cap = 64;
};

ResultDocument run_decompose(const SystemFile& sys, const RunOptions& opt = {});
ResultDocument run_mult(const SystemFile& sys, const std::string& point, const RunOptions& opt = {});
ResultDocument run_isolate(const SystemFile& sys, const RunOptions& opt = {});
ResultDocument run_oracle(const SystemFile& sys, const std::string& point, const RunOptions& opt = {});
ResultDocument run_check(const SystemFile& sys, const RunOptions& opt = {});

} // namespace trichain

#endif
