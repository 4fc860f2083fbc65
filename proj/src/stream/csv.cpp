#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "streameval/stream/source.hpp"

namespace streameval {
namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return cells;
}

double parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    while (begin != end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end != begin && (*(end - 1) == ' ' || *(end - 1) == '\t' || *(end - 1) == '\r')) --end;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        std::ostringstream msg;
        msg << "csv: cannot parse cell '" << cell << "' at row " << row << ", column " << col;
        throw std::runtime_error(msg.str());
    }
    return value;
}

}  // namespace

std::unique_ptr<StreamSource> csv_open(const std::string& path, int target_col,
                                       bool has_header) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("csv: cannot open file '" + path + "'");

    auto backing = std::make_shared<MaterializedSource::Backing>();
    std::vector<double> raw_labels;

    std::string line;
    std::size_t row = 0;           // 0-based physical row, including the header
    std::size_t width = 0;         // total column count
    std::size_t target = 0;        // resolved label column
    bool first_data_row = true;

    while (std::getline(in, line)) {
        const std::size_t this_row = row++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (has_header && this_row == 0) continue;
        if (line.empty()) continue;

        const auto cells = split_line(line);
        if (first_data_row) {
            width = cells.size();
            if (width < 2) throw std::runtime_error("csv: need at least two columns");
            const long resolved = target_col >= 0
                                      ? target_col
                                      : static_cast<long>(width) + target_col;
            if (resolved < 0 || resolved >= static_cast<long>(width))
                throw std::runtime_error("csv: target column out of range");
            target = static_cast<std::size_t>(resolved);
            first_data_row = false;
        } else if (cells.size() != width) {
            std::ostringstream msg;
            msg << "csv: row " << this_row << " has " << cells.size() << " columns, expected "
                << width;
            throw std::runtime_error(msg.str());
        }

        std::vector<double> feat;
        feat.reserve(width - 1);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const double v = parse_cell(cells[c], this_row, c);
            if (c == target)
                raw_labels.push_back(v);
            else
                feat.push_back(v);
        }
        backing->features.append_row(feat);
    }
    if (raw_labels.empty()) throw std::runtime_error("csv: no data rows in '" + path + "'");

    // coerce labels to dense class ids via sorted distinct values
    std::vector<double> distinct = raw_labels;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::map<double, int> to_id;
    for (std::size_t i = 0; i < distinct.size(); ++i) to_id[distinct[i]] = static_cast<int>(i);

    backing->labels.reserve(raw_labels.size());
    for (double v : raw_labels) backing->labels.push_back(to_id[v]);
    backing->classes.resize(distinct.size());
    for (std::size_t i = 0; i < distinct.size(); ++i) backing->classes[i] = static_cast<int>(i);

    return std::make_unique<MaterializedSource>(std::move(backing));
}

}  // namespace streameval
