#include "fairauc/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace fairauc {

namespace {

// One CSV record; handles quoted fields with embedded commas and "" escapes.
std::vector<std::string> split_record(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

bool is_missing(const std::string& s) {
    return s.empty() || s == "NA" || s == "NaN" || s == "nan" || s == "null";
}

bool parse_number(const std::string& s, Scalar& out) {
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end != s.c_str() && *end == '\0';
}

}  // namespace

GroupedColumns ingest(const std::string& path, const std::string& group_col,
                      const std::string& class_col, const IngestOptions& opts) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw DataError(path + ": missing header row");
    const std::vector<std::string> header = split_record(line);

    std::vector<std::vector<std::string>> cells(header.size());
    std::size_t n_rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> rec = split_record(line);
        if (rec.size() != header.size())
            throw DataError(path + ": row " + std::to_string(n_rows + 1) + " has " +
                            std::to_string(rec.size()) + " fields, expected " +
                            std::to_string(header.size()));
        for (std::size_t j = 0; j < rec.size(); ++j) cells[j].push_back(rec[j]);
        ++n_rows;
    }
    if (n_rows == 0) throw DataError(path + ": no data rows");

    auto find_col = [&](const std::string& name) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw DataError(path + ": no column named " + name);
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t gj = find_col(group_col);
    const std::size_t cj = find_col(class_col);

    GroupedColumns data;
    data.group.resize(n_rows);
    data.label.resize(n_rows);

    // Group column: exactly two distinct values; lexicographic first is a.
    std::set<std::string> group_values(cells[gj].begin(), cells[gj].end());
    if (group_values.size() != 2)
        throw DataError(path + ": group column has " +
                        std::to_string(group_values.size()) +
                        " distinct values, expected exactly 2");
    const std::string first_group = *group_values.begin();
    for (std::size_t i = 0; i < n_rows; ++i)
        data.group[i] = cells[gj][i] == first_group ? Group::a : Group::b;

    for (std::size_t i = 0; i < n_rows; ++i) {
        const std::string& v = cells[cj][i];
        if (v == "0")
            data.label[i] = 0;
        else if (v == "1")
            data.label[i] = 1;
        else
            throw std::domain_error(path + ": class column value '" + v + "' at row " +
                                    std::to_string(i + 1) + " is not 0/1");
    }

    for (std::size_t j = 0; j < header.size(); ++j) {
        if (j == gj || j == cj) continue;
        const std::vector<std::string>& col = cells[j];
        bool numeric = true;
        bool any_value = false;
        for (const std::string& s : col) {
            if (is_missing(s)) continue;
            any_value = true;
            Scalar tmp;
            if (!parse_number(s, tmp)) {
                numeric = false;
                break;
            }
        }
        if (!any_value)
            throw DataError(path + ": column " + header[j] + " is entirely missing");

        if (numeric) {
            Vec v(static_cast<Index>(n_rows));
            Scalar sum[2] = {0, 0};
            Index cnt[2] = {0, 0};
            std::vector<std::size_t> missing;
            for (std::size_t i = 0; i < n_rows; ++i) {
                if (is_missing(col[i])) {
                    missing.push_back(i);
                    continue;
                }
                Scalar x;
                parse_number(col[i], x);
                if (opts.log1p) {
                    if (!(x > -1.0))
                        throw std::domain_error(path + ": column " + header[j] +
                                                " row " + std::to_string(i + 1) +
                                                " is <= -1, log1p undefined");
                    x = std::log1p(x);
                }
                v(static_cast<Index>(i)) = x;
                const int g = static_cast<int>(data.group[i]);
                sum[g] += x;
                ++cnt[g];
            }
            for (std::size_t i : missing) {
                const int g = static_cast<int>(data.group[i]);
                if (cnt[g] == 0)
                    throw DataError(path + ": column " + header[j] + " row " +
                                    std::to_string(i + 1) +
                                    " cannot be imputed: group " +
                                    group_name(data.group[i]) + " has no values");
                v(static_cast<Index>(i)) = sum[g] / static_cast<Scalar>(cnt[g]);
            }
            data.features.push_back(std::move(v));
            data.names.push_back(header[j]);
        } else {
            // Categorical: one-hot with the first (sorted) category dropped.
            std::set<std::string> values;
            for (std::size_t i = 0; i < n_rows; ++i) {
                if (is_missing(col[i]))
                    throw DataError(path + ": column " + header[j] + " row " +
                                    std::to_string(i + 1) +
                                    " is missing in a categorical column");
                values.insert(col[i]);
            }
            bool first = true;
            for (const std::string& value : values) {
                if (first) {
                    first = false;
                    continue;
                }
                Vec v(static_cast<Index>(n_rows));
                for (std::size_t i = 0; i < n_rows; ++i)
                    v(static_cast<Index>(i)) = col[i] == value ? 1.0 : 0.0;
                data.features.push_back(std::move(v));
                data.names.push_back(header[j] + "=" + value);
            }
        }
    }
    return data;
}

void write_dataset_csv(const GroupedColumns& data, const std::string& path,
                       const std::string& group_col, const std::string& class_col) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    for (std::size_t j = 0; j < data.features.size(); ++j) {
        const std::string name =
            j < data.names.size() ? data.names[j] : "f" + std::to_string(j);
        out << name << ',';
    }
    out << group_col << ',' << class_col << '\n';
    char buf[64];
    for (Index i = 0; i < data.rows(); ++i) {
        for (const Vec& col : data.features) {
            std::snprintf(buf, sizeof buf, "%.17g", col(i));
            out << buf << ',';
        }
        out << group_name(data.group[i]) << ',' << data.label[i] << '\n';
    }
}

}  // namespace fairauc
