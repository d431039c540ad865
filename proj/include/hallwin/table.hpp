#pragma once

// Tabular output shared by the CLI subcommands. TSV and JSON carry the same
// data: parameter echo, column header, string rows, and a pass flag.
//
// TSV layout:
//   # param <key> <value>     (one line per parameter, input order)
//   <col>\t<col>...           (header)
//   <cell>\t<cell>...         (rows)
//   # pass <0|1>

#include <string>
#include <utility>
#include <vector>

namespace hallwin {

struct Table {
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    bool pass = true;

    void add_row(std::vector<std::string> row);

    std::string to_tsv() const;
    std::string to_json() const;  // {"params": {...}, "rows": [...], "pass": ...}

    static Table from_tsv(const std::string& text);

    friend bool operator==(const Table&, const Table&) = default;
};

}  // namespace hallwin
