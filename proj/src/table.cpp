#include "table.hpp"

#include <cstdio>

#include "errors.hpp"

namespace uwbpc {

Table::Cell Table::number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return Cell{buf, v, true};
}

Table::Cell Table::integer(long long v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", v);
    return Cell{buf, (double)v, true};
}

Table::Cell Table::text(std::string s) { return Cell{std::move(s), 0.0, false}; }

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size())
        throw DomainError("row width " + std::to_string(row.size()) +
                          " does not match table with " + std::to_string(columns_.size()) +
                          " columns");
    rows_.push_back(std::move(row));
}

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (j) out += ',';
        out += columns_[j];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += row[j].text;
        }
        out += '\n';
    }
    return out;
}

}  // namespace uwbpc
