#pragma once

#include <string>
#include <vector>

namespace slicekit {

enum class CheckStatus { Pass, Fail, Skip, Unknown };

std::string_view status_tag(CheckStatus s);

struct CheckLine {
    std::string name;
    CheckStatus status;
    std::string detail;
};

// Accumulated result of one CLI command: named check lines, free-form notes,
// and key/value data (certificates, bases).  Rendering is deterministic:
// identical inputs produce byte-identical text and JSON.
class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    void add(std::string name, CheckStatus status, std::string detail = "");
    void pass(std::string name, std::string detail = "") {
        add(std::move(name), CheckStatus::Pass, std::move(detail));
    }
    void fail(std::string name, std::string detail = "") {
        add(std::move(name), CheckStatus::Fail, std::move(detail));
    }
    void skip(std::string name, std::string detail = "") {
        add(std::move(name), CheckStatus::Skip, std::move(detail));
    }
    void unknown(std::string name, std::string detail = "") {
        add(std::move(name), CheckStatus::Unknown, std::move(detail));
    }

    void note(std::string text) { notes_.push_back(std::move(text)); }
    void attach(std::string key, std::string value) {
        data_.emplace_back(std::move(key), std::move(value));
    }

    // Merge a sub-report, prefixing its lines and data with "<prefix>/".
    void absorb(const std::string& prefix, const Report& sub);

    const std::string& command() const { return command_; }
    const std::vector<CheckLine>& checks() const { return checks_; }
    const std::vector<std::string>& notes() const { return notes_; }
    const std::vector<std::pair<std::string, std::string>>& data() const { return data_; }

    std::size_t count(CheckStatus s) const;
    bool any(CheckStatus s) const { return count(s) > 0; }

    // 0 when nothing failed and nothing is unresolved, 1 otherwise.
    int exit_code() const {
        return (any(CheckStatus::Fail) || any(CheckStatus::Unknown)) ? 1 : 0;
    }

    std::string render_text(bool quiet = false) const;
    std::string render_json() const;

private:
    std::string command_;
    std::vector<CheckLine> checks_;
    std::vector<std::string> notes_;
    std::vector<std::pair<std::string, std::string>> data_;
};

}  // namespace slicekit
