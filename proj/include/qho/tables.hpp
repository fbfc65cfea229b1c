#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qho {

enum class RunMode { single, two };

std::string_view run_mode_name(RunMode m);

/// "single" or "two"; throws std::invalid_argument otherwise.
RunMode parse_run_mode(std::string_view name);

/// Published hardware measurement tables (probabilities in percent, 1024-shot
/// runs on a five-qubit device). Cells are stored verbatim as text so that
/// printing and checksumming are exact; `percent` holds the parsed values.
struct ReferenceTable {
    std::string id;
    RunMode mode = RunMode::single;
    double drive_freq = 1.0;
    std::vector<std::string> labels;
    std::vector<double> times;
    std::vector<std::vector<std::string>> percent_text;  // [row][label]
    std::vector<std::vector<double>> percent;
};

/// {"single_w1", "single_w2", "two_w1", "two_w5"}.
const std::vector<std::string>& reference_table_ids();

/// Throws std::invalid_argument on an unknown id (message lists valid ids).
ReferenceTable load_reference_table(const std::string& id);

/// FNV-1a 64-bit over the table's canonical text form (id, labels, rows).
std::uint64_t reference_checksum(const ReferenceTable& t);

std::uint64_t fnv1a64(std::string_view data);

}  // namespace qho
