#pragma once

#include <string>
#include <vector>

namespace uwbpc {

// Result table with a fixed column order, serialized as CSV: one header row,
// '.' decimal separator, floating values printed with 17 significant digits.
class Table {
public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    struct Cell {
        std::string text;
        double value = 0.0;
        bool numeric = false;
    };

    static Cell number(double v);
    static Cell integer(long long v);
    static Cell text(std::string s);

    void add_row(std::vector<Cell> row);  // throws DomainError on width mismatch

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return columns_.size(); }
    const std::string& column_name(std::size_t j) const { return columns_[j]; }
    const Cell& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    std::string to_csv() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

}  // namespace uwbpc
