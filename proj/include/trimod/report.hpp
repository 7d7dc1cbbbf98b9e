#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace trimod {

enum class CheckStatus { Pass, Fail, Inconclusive, NoWitness };

std::string to_string(CheckStatus s);

/* One verified statement: name, outcome, a concrete numeric witness
 * (dimensions, residuals, failing indices) and the anchor naming the
 * statement the check would falsify. */
struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
    std::string anchor;
    double wall_ms = 0.0;
};

struct CheckReport {
    std::string tool_version;
    std::uint64_t seed = 0;
    std::vector<std::string> sample_inventory;
    std::vector<CheckRecord> records;

    /* wall_ms of each record is the time since the previous one was added */
    void add(std::string name, CheckStatus status, std::string witness, std::string anchor);
    void add_timed(std::string name, CheckStatus status, std::string witness, std::string anchor, double wall_ms);
    void append(const CheckReport& other, const std::string& prefix = "");

    bool all_passed() const;       // no Fail records
    bool has_inconclusive() const;
    std::size_t fail_count() const;

    /* canonical JSON; stable=true zeroes the timing fields so identical
     * inputs and seed produce byte-identical output */
    std::string to_json(bool stable) const;
    std::string summary_lines() const;

  private:
    std::chrono::steady_clock::time_point mark_ = std::chrono::steady_clock::now();
};

}  // namespace trimod
