#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hlzeta/common.hpp"

namespace hlzeta {

// fixed column order for report rows
std::string report_csv_header();
std::string report_csv_row(const IdentityReport& r);
std::string report_jsonl(const IdentityReport& r);

std::string csv_escape(const std::string& field);

// deterministic CSV: header first, LF endings, numbers through fmt_num
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
    void add(std::vector<std::string> row);
    void write(std::ostream& os) const;
    // one object per row keyed by header, numeric cells as numbers
    void write_jsonl(std::ostream& os) const;
    std::size_t rows() const { return rows_.size(); }
    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<std::string>>& data() const { return rows_; }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace hlzeta
