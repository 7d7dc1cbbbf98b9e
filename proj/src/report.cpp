#include "trimod/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace trimod {

std::string to_string(CheckStatus s)
{
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Inconclusive: return "inconclusive";
        case CheckStatus::NoWitness: return "no-witness";
    }
    return "?";
}

void CheckReport::add(std::string name, CheckStatus status, std::string witness, std::string anchor)
{
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - mark_).count();
    mark_ = now;
    records.push_back(CheckRecord{std::move(name), status, std::move(witness), std::move(anchor), ms});
}

void CheckReport::add_timed(std::string name, CheckStatus status, std::string witness, std::string anchor, double wall_ms)
{
    records.push_back(CheckRecord{std::move(name), status, std::move(witness), std::move(anchor), wall_ms});
}

void CheckReport::append(const CheckReport& other, const std::string& prefix)
{
    for (const CheckRecord& r : other.records) {
        CheckRecord copy = r;
        copy.name = prefix.empty() ? r.name : prefix + "/" + r.name;
        records.push_back(std::move(copy));
    }
    for (const std::string& s : other.sample_inventory)
        sample_inventory.push_back(prefix.empty() ? s : prefix + "/" + s);
}

bool CheckReport::all_passed() const
{
    return std::none_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.status == CheckStatus::Fail; });
}

bool CheckReport::has_inconclusive() const
{
    return std::any_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.status == CheckStatus::Inconclusive; });
}

std::size_t CheckReport::fail_count() const
{
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.status == CheckStatus::Fail; }));
}

std::string CheckReport::to_json(bool stable) const
{
    nlohmann::json j;
    j["tool_version"] = tool_version;
    j["seed"] = seed;
    j["samples"] = sample_inventory;
    nlohmann::json recs = nlohmann::json::array();
    for (const CheckRecord& r : records) {
        nlohmann::json rec;
        rec["name"] = r.name;
        rec["status"] = to_string(r.status);
        rec["witness"] = r.witness;
        rec["anchor"] = r.anchor;
        rec["wall_ms"] = stable ? 0.0 : r.wall_ms;
        recs.push_back(std::move(rec));
    }
    j["records"] = std::move(recs);
    return j.dump(2) + "\n";
}

std::string CheckReport::summary_lines() const
{
    std::ostringstream out;
    for (const CheckRecord& r : records)
        out << "[" << to_string(r.status) << "] " << r.name << (r.witness.empty() ? "" : "  (" + r.witness + ")") << "\n";
    return out.str();
}

}  // namespace trimod
