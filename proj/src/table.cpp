#include "hallwin/table.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hallwin {

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("Table: row width does not match header");
    rows.push_back(std::move(row));
}

std::string Table::to_tsv() const {
    std::ostringstream os;
    for (const auto& [k, v] : params) os << "# param " << k << ' ' << v << '\n';
    for (size_t i = 0; i < columns.size(); ++i) {
        if (i) os << '\t';
        os << columns[i];
    }
    os << '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << '\t';
            os << row[i];
        }
        os << '\n';
    }
    os << "# pass " << (pass ? 1 : 0) << '\n';
    return os.str();
}

std::string Table::to_json() const {
    nlohmann::ordered_json j;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (size_t i = 0; i < columns.size(); ++i) r[columns[i]] = row[i];
        j["rows"].push_back(std::move(r));
    }
    j["pass"] = pass;
    return j.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        const size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

}  // namespace

Table Table::from_tsv(const std::string& text) {
    Table t;
    t.columns.clear();
    std::istringstream is(text);
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.rfind("# param ", 0) == 0) {
            const std::string rest = line.substr(8);
            const size_t sp = rest.find(' ');
            if (sp == std::string::npos) throw std::invalid_argument("Table: bad param line");
            t.params.emplace_back(rest.substr(0, sp), rest.substr(sp + 1));
            continue;
        }
        if (line.rfind("# pass ", 0) == 0) {
            t.pass = line.substr(7) == "1";
            continue;
        }
        if (!have_header) {
            t.columns = split_tabs(line);
            have_header = true;
            continue;
        }
        t.rows.push_back(split_tabs(line));
    }
    if (!have_header) throw std::invalid_argument("Table: missing header");
    return t;
}

}  // namespace hallwin
