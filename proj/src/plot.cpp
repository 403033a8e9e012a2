#include "evoland/plot.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "evoland/experiment.hpp"

namespace evoland {

SchemaError::SchemaError(std::string column, const std::string& what)
    : std::runtime_error(column.empty() ? "schema error: " + what
                                        : "schema error in column '" + column + "': " + what),
      column_(std::move(column)) {}

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        cells.push_back(line.substr(start, comma == std::string_view::npos ? line.npos
                                                                           : comma - start));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return cells;
}

template <typename T>
std::optional<T> parse_cell(std::string_view cell) {
    T value{};
    const auto* end = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(cell.data(), end, value);
    if (ec != std::errc{} || ptr != end || cell.empty()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

std::vector<TauCurve> read_tau_curves(std::string_view csv) {
    std::vector<std::string_view> header;
    std::size_t col_n = 0;
    std::size_t col_m = 0;
    std::size_t col_tau = 0;
    // N -> m -> (sum, count)
    std::map<std::size_t, std::map<std::size_t, std::pair<double, std::size_t>>> groups;
    std::size_t data_rows = 0;

    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t eol = csv.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = csv.size();
        }
        std::string_view line = csv.substr(pos, eol - pos);
        pos = eol + 1;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (header.empty()) {
            header = split_commas(line);
            auto find = [&](std::string_view name) {
                const auto it = std::find(header.begin(), header.end(), name);
                if (it == header.end()) {
                    throw SchemaError(std::string(name), "column missing from header");
                }
                return static_cast<std::size_t>(it - header.begin());
            };
            col_n = find("N");
            col_m = find("m");
            col_tau = find("tau");
            continue;
        }

        const auto cells = split_commas(line);
        if (cells.size() != header.size()) {
            throw SchemaError("", "row has " + std::to_string(cells.size()) + " cells, header has " +
                                      std::to_string(header.size()));
        }
        const auto n = parse_cell<std::size_t>(cells[col_n]);
        if (!n || *n == 0) {
            throw SchemaError("N", "expected a positive integer, got '" +
                                       std::string(cells[col_n]) + "'");
        }
        const auto m = parse_cell<std::size_t>(cells[col_m]);
        if (!m) {
            throw SchemaError("m", "expected an integer, got '" + std::string(cells[col_m]) + "'");
        }
        ++data_rows;
        auto& slot = groups[*n][*m];
        if (cells[col_tau] == "NA") {
            continue;
        }
        const auto tau = parse_cell<double>(cells[col_tau]);
        if (!tau) {
            throw SchemaError("tau", "expected a number or NA, got '" +
                                         std::string(cells[col_tau]) + "'");
        }
        slot.first += *tau;
        ++slot.second;
    }

    if (header.empty()) {
        throw SchemaError("", "no header row");
    }
    if (data_rows == 0) {
        throw SchemaError("", "no data rows");
    }

    std::vector<TauCurve> curves;
    for (const auto& [n, by_m] : groups) {
        TauCurve curve;
        curve.num_vars = n;
        curve.threshold_clauses = kThresholdAlpha * static_cast<double>(n);
        for (const auto& [m, acc] : by_m) {
            if (acc.second > 0) {
                curve.points.emplace_back(m, acc.first / static_cast<double>(acc.second));
            }
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

std::string render_gnuplot(const std::vector<TauCurve>& curves, const std::string& image_name) {
    std::ostringstream out;
    out << "# " << kCsvSchemaVersion << " plot: correlation length of maximal evolvability\n"
        << "# usage: gnuplot <this file>\n"
        << "set terminal pngcairo size 900,540\n"
        << "set output '" << image_name << "'\n"
        << "set title 'Correlation length of maximal evolvability'\n"
        << "set xlabel 'number of clauses m'\n"
        << "set ylabel 'correlation length tau'\n"
        << "set key top right\n"
        << "set grid\n"
        << "set yrange [0:*]\n";

    for (const TauCurve& c : curves) {
        out << "$tau_N" << c.num_vars << " << EOD\n";
        for (const auto& [m, tau] : c.points) {
            out << m << ' ' << format_number(tau) << '\n';
        }
        out << "EOD\n";
    }
    int arrow = 1;
    for (const TauCurve& c : curves) {
        const std::string x = format_number(c.threshold_clauses);
        out << "set arrow " << arrow++ << " from " << x << ", graph 0 to " << x
            << ", graph 1 nohead dashtype 2  # alpha_c = 4.3 for N = " << c.num_vars << '\n';
    }
    out << "plot ";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (i > 0) {
            out << ", \\\n     ";
        }
        out << "$tau_N" << curves[i].num_vars << " using 1:2 with linespoints title 'N = "
            << curves[i].num_vars << "'";
    }
    out << '\n';
    return out.str();
}

}  // namespace evoland
