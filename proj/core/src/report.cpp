#include "slicekit/report.hpp"

#include <sstream>

#include <json.hpp>

namespace slicekit {

std::string_view status_tag(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skip: return "skip";
        case CheckStatus::Unknown: return "unknown";
    }
    return "?";
}

void Report::add(std::string name, CheckStatus status, std::string detail) {
    checks_.push_back({std::move(name), status, std::move(detail)});
}

void Report::absorb(const std::string& prefix, const Report& sub) {
    for (const auto& line : sub.checks_)
        checks_.push_back({prefix + "/" + line.name, line.status, line.detail});
    for (const auto& n : sub.notes_) notes_.push_back(prefix + ": " + n);
    for (const auto& [k, v] : sub.data_) data_.emplace_back(prefix + "/" + k, v);
}

std::size_t Report::count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& line : checks_)
        if (line.status == s) ++n;
    return n;
}

std::string Report::render_text(bool quiet) const {
    std::ostringstream out;
    out << "== slicekit " << command_ << " ==\n";
    for (const auto& line : checks_) {
        out << "[" << status_tag(line.status) << "] " << line.name;
        if (!quiet && !line.detail.empty()) out << ": " << line.detail;
        out << "\n";
    }
    if (!quiet)
        for (const auto& n : notes_) out << "note: " << n << "\n";
    out << "summary: " << count(CheckStatus::Pass) << " pass, " << count(CheckStatus::Fail)
        << " fail, " << count(CheckStatus::Skip) << " skip, " << count(CheckStatus::Unknown)
        << " unknown\n";
    return out.str();
}

std::string Report::render_json() const {
    nlohmann::ordered_json doc;
    doc["command"] = command_;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& line : checks_) {
        nlohmann::ordered_json entry;
        entry["name"] = line.name;
        entry["status"] = std::string(status_tag(line.status));
        entry["detail"] = line.detail;
        doc["checks"].push_back(std::move(entry));
    }
    doc["notes"] = notes_;
    doc["data"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : data_) doc["data"][k] = v;
    doc["summary"] = {{"pass", count(CheckStatus::Pass)},
                      {"fail", count(CheckStatus::Fail)},
                      {"skip", count(CheckStatus::Skip)},
                      {"unknown", count(CheckStatus::Unknown)}};
    doc["exit_code"] = exit_code();
    return doc.dump(2);
}

}  // namespace slicekit
