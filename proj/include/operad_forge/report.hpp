#pragma once

// Deterministic reports rendered as aligned text or JSON.

#include "operad_forge/serialize.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace operad_forge {

inline constexpr int kReportSchemaVersion = 1;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Section {
    std::string title;
    std::vector<std::string> notes;
    std::optional<Table> table;
    Json data; // optional machine-readable payload, JSON output only
};

class Report {
public:
    explicit Report(std::string title) : title_(std::move(title)) {}

    void provenance(const std::string& key, const std::string& value) { provenance_.emplace_back(key, value); }
    Section& add_section(std::string title);
    void set_verified(bool v) { verified_ = v; }
    const std::optional<bool>& verified() const { return verified_; }
    const std::vector<Section>& sections() const { return sections_; }

    std::string text() const;
    Json json() const;

private:
    std::string title_;
    std::vector<std::pair<std::string, std::string>> provenance_;
    std::vector<Section> sections_;
    std::optional<bool> verified_;
};

std::string yes_no(bool b);

} // namespace operad_forge
