#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace evoland {

/// Result CSV does not have the expected shape.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string column, const std::string& what);
    /// Offending column, empty when the problem is not column-specific.
    const std::string& column() const noexcept { return column_; }

private:
    std::string column_;
};

struct TauCurve {
    std::size_t num_vars = 0;
    /// (m, tau) pairs in ascending m; tau averaged over rows sharing m,
    /// NA rows skipped.
    std::vector<std::pair<std::size_t, double>> points;
    /// Number of clauses at the k = 3 threshold, 4.3 * N.
    double threshold_clauses = 0.0;
};

inline constexpr double kThresholdAlpha = 4.3;

/// Reads a result CSV (lines starting with '#' skipped; needs columns N, m
/// and tau) into one curve per N, ascending N. Throws SchemaError naming
/// the missing or malformed column, or when there are no data rows.
std::vector<TauCurve> read_tau_curves(std::string_view csv);

/// Self-contained gnuplot script drawing tau vs m with one curve per N and a
/// dashed vertical line at m = 4.3 N for each N.
std::string render_gnuplot(const std::vector<TauCurve>& curves,
                           const std::string& image_name = "tau_vs_m.png");

inline std::string emit_plot_script(std::string_view csv,
                                    const std::string& image_name = "tau_vs_m.png") {
    return render_gnuplot(read_tau_curves(csv), image_name);
}

}  // namespace evoland
