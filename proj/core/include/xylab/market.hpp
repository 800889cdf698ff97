#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "xylab/embeddings.hpp"

namespace xylab {

/// Per-month return statistics for one price panel.
struct MonthStats {
    std::string month;                        // "YYYY-MM"
    std::vector<std::string> tickers;         // tickers with >= 2 trading days
    std::vector<double> mean_return;          // p^m_a, aligned with tickers
    std::vector<std::vector<double>> covariance;  // C^m_{a,b}
};

/// Parsed price history and derived monthly statistics.
struct MarketData {
    std::vector<std::string> tickers;  // all tickers seen, sorted
    std::vector<MonthStats> months;    // chronologically sorted
    std::vector<std::string> warnings;
};

/// Parses `date,ticker,close` CSV (ISO dates, header required).  Daily
/// returns are p^i = (q^i - q^{i-1}) / q^{i-1} within a calendar month;
/// the monthly mean and covariance both divide by the return-sample count
/// |d_m| - 1.  Months with fewer than 2 trading days for a ticker exclude
/// that ticker with a warning.
MarketData ingest_prices(std::istream& csv);
MarketData ingest_prices_file(const std::string& path);

/// Selects the top-n tickers of one month by mean return (ties broken by
/// ticker lexicographic order) and builds the portfolio instance with risk
/// aversion q and cardinality k.
ProblemInstance portfolio_instance(const MonthStats& month, int n, double q, int k);

}  // namespace xylab
