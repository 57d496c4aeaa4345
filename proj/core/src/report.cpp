#include "hlzeta/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>

namespace hlzeta {

IdentityReport make_report(std::string id, std::string anchor, cplx lhs, cplx rhs, double tolerance) {
    IdentityReport r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_diff = std::abs(lhs - rhs);
    r.tolerance = tolerance;
    r.pass = std::isfinite(r.abs_diff) && r.abs_diff <= tolerance;
    return r;
}

std::string fmt_num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // folds -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string report_csv_header() {
    return "id,lhs_re,lhs_im,rhs_re,rhs_im,abs_diff,tolerance,pass,anchor,extras";
}

namespace {
std::string joined_extras(const IdentityReport& r) {
    std::string s;
    for (const auto& [k, v] : r.extras) {
        if (!s.empty()) s += ';';
        s += k + '=' + v;
    }
    return s;
}
}  // namespace

std::string report_csv_row(const IdentityReport& r) {
    std::string row = csv_escape(r.id);
    for (double v : {r.lhs.real(), r.lhs.imag(), r.rhs.real(), r.rhs.imag(), r.abs_diff, r.tolerance})
        row += ',' + fmt_num(v);
    row += r.pass ? ",true," : ",false,";
    row += csv_escape(r.anchor) + ',' + csv_escape(joined_extras(r));
    return row;
}

namespace {
// round through the 15-digit text so shortest-repr output matches the CSV digits
nlohmann::ordered_json jnum(double v) {
    if (!std::isfinite(v)) return nullptr;
    return std::stod(fmt_num(v));
}
}  // namespace

std::string report_jsonl(const IdentityReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["lhs"] = {jnum(r.lhs.real()), jnum(r.lhs.imag())};
    j["rhs"] = {jnum(r.rhs.real()), jnum(r.rhs.imag())};
    j["abs_diff"] = jnum(r.abs_diff);
    j["tolerance"] = jnum(r.tolerance);
    j["pass"] = r.pass;
    j["anchor"] = r.anchor;
    nlohmann::ordered_json ex = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.extras) ex[k] = v;
    j["extras"] = ex;
    return j.dump();
}

void CsvTable::add(std::vector<std::string> row) {
    if (row.size() != header_.size()) throw DomainError("csv: row width does not match header");
    rows_.push_back(std::move(row));
}

void CsvTable::write(std::ostream& os) const {
    auto line = [&os](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ',';
            os << csv_escape(cells[i]);
        }
        os << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
}

void CsvTable::write_jsonl(std::ostream& os) const {
    for (const auto& r : rows_) {
        nlohmann::ordered_json j;
        for (std::size_t i = 0; i < header_.size(); ++i) {
            // numeric cells stay numbers, everything else is text
            char* end = nullptr;
            double v = std::strtod(r[i].c_str(), &end);
            bool numeric = !r[i].empty() && end && *end == '\0' && std::isfinite(v);
            if (numeric && r[i].find_first_of(".eEn") == std::string::npos && std::abs(v) < 9e15)
                j[header_[i]] = static_cast<std::int64_t>(v);
            else if (numeric)
                j[header_[i]] = v;
            else
                j[header_[i]] = r[i];
        }
        os << j.dump() << '\n';
    }
}

}  // namespace hlzeta
