#include "projdepth/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace projdepth {

std::string format_double(double value, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, value);
    return buf;
}

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    size_t start = 0;
    for (;;) {
        const size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            return fields;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
}

bool parse_field(const std::string& field, double& out) {
    if (field.empty())
        return false;
    char* end = nullptr;
    out = std::strtod(field.c_str(), &end);
    return end == field.c_str() + field.size();
}

} // namespace

Dataset read_dataset_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    bool saw_first_content = false;
    Eigen::Index width = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        const std::vector<std::string> fields = split_csv_line(line);

        if (!saw_first_content) {
            saw_first_content = true;
            bool all_numeric = true;
            double tmp;
            for (const auto& f : fields)
                if (!parse_field(f, tmp)) {
                    all_numeric = false;
                    break;
                }
            if (!all_numeric) { // header row
                width = static_cast<Eigen::Index>(fields.size());
                continue;
            }
        }

        if (width < 0)
            width = static_cast<Eigen::Index>(fields.size());
        if (static_cast<Eigen::Index>(fields.size()) != width)
            throw Error("CSV row " + std::to_string(line_no) + " has " +
                        std::to_string(fields.size()) + " fields, expected " +
                        std::to_string(width));
        std::vector<double> row(fields.size());
        for (size_t j = 0; j < fields.size(); ++j)
            if (!parse_field(fields[j], row[j]))
                throw Error("CSV parse error at row " + std::to_string(line_no) +
                            ", column " + std::to_string(j + 1) + ": '" +
                            fields[j] + "'");
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw Error("CSV contains no data rows");
    Matrix m(static_cast<Eigen::Index>(rows.size()), width);
    for (size_t i = 0; i < rows.size(); ++i)
        for (Eigen::Index j = 0; j < width; ++j)
            m(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<size_t>(j)];
    return Dataset(std::move(m));
}

Dataset read_dataset_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open file: " + path);
    return read_dataset_csv(in);
}

void write_dataset_csv(std::ostream& out, const Dataset& data, int significant) {
    for (Eigen::Index i = 0; i < data.size(); ++i) {
        for (Eigen::Index j = 0; j < data.dim(); ++j) {
            if (j > 0)
                out << ',';
            out << format_double(data.rows()(i, j), significant);
        }
        out << '\n';
    }
}

Vector parse_point(const std::string& text) {
    const std::vector<std::string> fields = split_csv_line(text);
    Vector v(static_cast<Eigen::Index>(fields.size()));
    for (size_t j = 0; j < fields.size(); ++j) {
        double x;
        if (!parse_field(fields[j], x))
            throw Error("cannot parse coordinate " + std::to_string(j + 1) + ": '" +
                        fields[j] + "'");
        v[static_cast<Eigen::Index>(j)] = x;
    }
    return v;
}

} // namespace projdepth
