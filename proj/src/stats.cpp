#include "evoland/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace evoland::stats {

UndefinedCorrelationLengthError::UndefinedCorrelationLengthError(double rho1)
    : std::domain_error("correlation length undefined for rho(1) = " + std::to_string(rho1) +
                        " (requires 0 < rho(1) < 1)"),
      rho1_(rho1) {}

NoUsableSeriesError::NoUsableSeriesError(std::size_t discarded, std::size_t degenerate)
    : std::runtime_error("no usable series: " + std::to_string(discarded) + " discarded (" +
                         std::to_string(degenerate) + " degenerate)"),
      discarded_(discarded), degenerate_(degenerate) {}

std::vector<double> autocorrelation(std::span<const double> series, std::size_t max_lag) {
    const std::size_t n = series.size();
    if (n < 2) {
        throw std::invalid_argument("autocorrelation needs at least 2 observations");
    }
    if (max_lag >= n) {
        throw std::invalid_argument("max_lag must be smaller than the series length");
    }

    const double mean = std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(n);
    std::vector<double> dev(n);
    double denom = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        dev[t] = series[t] - mean;
        denom += dev[t] * dev[t];
    }
    if (denom == 0.0) {
        throw DegenerateSeriesError();
    }

    std::vector<double> rho(max_lag + 1);
    rho[0] = 1.0;
    for (std::size_t k = 1; k <= max_lag; ++k) {
        double num = 0.0;
        for (std::size_t t = 0; t + k < n; ++t) {
            num += dev[t] * dev[t + k];
        }
        rho[k] = num / denom;
    }
    return rho;
}

double correlation_length(double rho1) {
    if (!(rho1 > 0.0 && rho1 < 1.0)) {
        throw UndefinedCorrelationLengthError(rho1);
    }
    return -1.0 / std::log(rho1);
}

AutocorrReport average_autocorrelation(std::span<const WalkTrace> traces, std::size_t max_lag,
                                       std::size_t min_usable_length) {
    const std::size_t needed = std::max({min_usable_length, max_lag + 1, std::size_t{2}});
    AutocorrReport report;
    report.rho.assign(max_lag + 1, 0.0);
    double tau_sum = 0.0;

    for (const WalkTrace& trace : traces) {
        if (trace.observations.size() < needed) {
            ++report.num_series_discarded;
            continue;
        }
        std::vector<double> r;
        try {
            r = autocorrelation(trace.observations, max_lag);
        } catch (const DegenerateSeriesError&) {
            ++report.num_series_discarded;
            ++report.num_series_degenerate;
            continue;
        }
        for (std::size_t k = 0; k <= max_lag; ++k) {
            report.rho[k] += r[k];
        }
        ++report.num_series_used;
        report.total_observations += trace.observations.size();
        if (max_lag >= 1 && r[1] > 0.0 && r[1] < 1.0) {
            tau_sum += correlation_length(r[1]);
            ++report.num_series_with_tau;
        }
    }

    if (report.num_series_used == 0) {
        throw NoUsableSeriesError(report.num_series_discarded, report.num_series_degenerate);
    }
    for (double& r : report.rho) {
        r /= static_cast<double>(report.num_series_used);
    }
    report.rho[0] = 1.0;
    if (max_lag >= 1 && report.rho[1] > 0.0 && report.rho[1] < 1.0) {
        report.tau = correlation_length(report.rho[1]);
    }
    if (report.num_series_with_tau > 0) {
        report.tau_per_series_mean = tau_sum / static_cast<double>(report.num_series_with_tau);
    }
    return report;
}

NeutralDegreeSummary neutral_degree_stats(const Landscape& landscape, std::size_t samples,
                                          Rng& rng) {
    if (samples == 0) {
        throw std::invalid_argument("neutral_degree_stats: samples must be at least 1");
    }
    const std::size_t n = landscape.dimension();
    NeutralDegreeSummary summary;
    summary.histogram.assign(n + 1, 0);
    summary.samples = samples;

    const auto starts = sample_starts(landscape, samples, rng);
    NeighborhoodScan scan;
    double sum = 0.0;
    for (const BitString& s : starts) {
        const auto cursor = landscape.cursor(s);
        scan_neighborhood(*cursor, scan);
        const std::size_t degree = scan.neutral_bits.size();
        ++summary.histogram[degree];
        sum += static_cast<double>(degree);
    }
    summary.mean = sum / static_cast<double>(samples);
    double sq = 0.0;
    for (std::size_t d = 0; d <= n; ++d) {
        const double diff = static_cast<double>(d) - summary.mean;
        sq += static_cast<double>(summary.histogram[d]) * diff * diff;
    }
    summary.variance = sq / static_cast<double>(samples);
    return summary;
}

}  // namespace evoland::stats
