#include "operad_forge/report.hpp"

#include <algorithm>
#include <sstream>

namespace operad_forge {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Section& Report::add_section(std::string title) {
    sections_.push_back(Section{std::move(title), {}, std::nullopt, Json()});
    return sections_.back();
}

namespace {

void render_table(std::ostringstream& out, const Table& t) {
    std::vector<std::size_t> width(t.columns.size(), 0);
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s = " ";
        for (std::size_t c = 0; c < width.size(); ++c) {
            std::string cell = c < cells.size() ? cells[c] : "";
            s += " " + cell;
            if (c + 1 < width.size()) s += std::string(width[c] - cell.size() + 1, ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out << s << "\n";
    };
    line(t.columns);
    std::vector<std::string> rule;
    for (auto w : width) rule.push_back(std::string(w, '-'));
    line(rule);
    for (const auto& row : t.rows) line(row);
}

} // namespace

std::string Report::text() const {
    std::ostringstream out;
    out << title_ << "\n" << std::string(title_.size(), '=') << "\n";
    for (const auto& [k, v] : provenance_) out << k << ": " << v << "\n";
    if (verified_) out << "verified: " << (*verified_ ? "true" : "false") << "\n";
    for (const auto& s : sections_) {
        out << "\n" << s.title << "\n" << std::string(s.title.size(), '-') << "\n";
        for (const auto& n : s.notes) out << "  " << n << "\n";
        if (s.table) render_table(out, *s.table);
    }
    return out.str();
}

Json Report::json() const {
    Json prov = Json::object();
    for (const auto& [k, v] : provenance_) prov[k] = v;
    Json sections = Json::array();
    for (const auto& s : sections_) {
        Json js{{"title", s.title}, {"notes", s.notes}};
        if (s.table) js["table"] = {{"columns", s.table->columns}, {"rows", s.table->rows}};
        if (!s.data.is_null()) js["data"] = s.data;
        sections.push_back(js);
    }
    Json out{{"schema_version", kReportSchemaVersion}, {"title", title_}, {"provenance", prov}};
    if (verified_) out["verified"] = *verified_;
    out["sections"] = sections;
    return out;
}

} // namespace operad_forge
