#ifndef OUPAIRS_TABLE_HPP
#define OUPAIRS_TABLE_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace oupairs {

using Cell = std::variant<double, std::int64_t, bool, std::string>;

/// Column-named rows, written as CSV (header + rows) or as a JSON array of objects.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Shortest decimal string that parses back to exactly x.
std::string format_double(double x);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

}  // namespace oupairs

#endif  // OUPAIRS_TABLE_HPP
