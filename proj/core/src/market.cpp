#include "xylab/market.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace xylab {

namespace {

struct Row {
    std::string date, ticker;
    double close;
};

bool looks_like_iso_date(const std::string& s) {
    if (s.size() < 10 || s[4] != '-' || s[7] != '-') return false;
    for (int i : {0, 1, 2, 3, 5, 6, 8, 9})
        if (!std::isdigit(static_cast<unsigned char>(s[static_cast<std::size_t>(i)])))
            return false;
    return true;
}

}  // namespace

MarketData ingest_prices(std::istream& csv) {
    std::string line;
    long lineno = 0;
    if (!std::getline(csv, line)) throw parse_error("empty price CSV");
    ++lineno;
    // Tolerate an optional UTF-8 BOM on the header.
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (line.rfind("date,ticker,close", 0) != 0)
        throw parse_error("expected header 'date,ticker,close'", lineno);

    std::vector<Row> rows;
    while (std::getline(csv, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ss(line);
        Row r;
        std::string close_s;
        if (!std::getline(ss, r.date, ',') || !std::getline(ss, r.ticker, ',') ||
            !std::getline(ss, close_s))
            throw parse_error("malformed row", lineno);
        if (!looks_like_iso_date(r.date)) throw parse_error("bad ISO date '" + r.date + "'", lineno);
        try {
            std::size_t pos = 0;
            r.close = std::stod(close_s, &pos);
        } catch (const std::exception&) {
            throw parse_error("bad close price '" + close_s + "'", lineno);
        }
        if (!(r.close > 0.0)) throw parse_error("close price must be positive", lineno);
        rows.push_back(std::move(r));
    }

    // (month, ticker) -> date-sorted closes.
    std::map<std::string, std::map<std::string, std::map<std::string, double>>> panel;
    MarketData md;
    std::map<std::string, bool> seen;
    for (const auto& r : rows) {
        panel[r.date.substr(0, 7)][r.ticker][r.date] = r.close;
        seen[r.ticker] = true;
    }
    for (const auto& [t, _] : seen) md.tickers.push_back(t);

    for (const auto& [month, by_ticker] : panel) {
        MonthStats ms;
        ms.month = month;
        std::vector<std::vector<double>> returns;  // aligned with ms.tickers
        std::size_t expected_days = 0;
        for (const auto& [ticker, closes] : by_ticker)
            expected_days = std::max(expected_days, closes.size());
        for (const auto& [ticker, closes] : by_ticker) {
            if (closes.size() < 2) {
                md.warnings.push_back("month " + month + ": ticker " + ticker +
                                      " has < 2 trading days, excluded");
                continue;
            }
            if (closes.size() < expected_days)
                md.warnings.push_back("month " + month + ": ticker " + ticker +
                                      " missing trading days, using available ones");
            std::vector<double> r;
            double prev = 0.0;
            bool first = true;
            for (const auto& [date, q] : closes) {
                if (!first) r.push_back((q - prev) / prev);
                prev = q;
                first = false;
            }
            ms.tickers.push_back(ticker);
            returns.push_back(std::move(r));
        }
        if (ms.tickers.empty()) continue;
        const std::size_t na = ms.tickers.size();
        ms.mean_return.resize(na);
        for (std::size_t a = 0; a < na; ++a) {
            double s = 0.0;
            for (double x : returns[a]) s += x;
            ms.mean_return[a] = s / static_cast<double>(returns[a].size());
        }
        ms.covariance.assign(na, std::vector<double>(na, 0.0));
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = a; b < na; ++b) {
                const std::size_t m = std::min(returns[a].size(), returns[b].size());
                double s = 0.0;
                for (std::size_t i = 0; i < m; ++i)
                    s += (returns[a][i] - ms.mean_return[a]) * (returns[b][i] - ms.mean_return[b]);
                const double c = s / static_cast<double>(m);
                ms.covariance[a][b] = ms.covariance[b][a] = c;
            }
        md.months.push_back(std::move(ms));
    }
    return md;
}

MarketData ingest_prices_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open price CSV: " + path);
    return ingest_prices(in);
}

ProblemInstance portfolio_instance(const MonthStats& month, int n, double q, int k) {
    if (static_cast<std::size_t>(n) > month.tickers.size())
        throw validation_error("month has fewer tickers than requested n");
    // Rank by mean return descending, ties by ticker name ascending.
    std::vector<std::size_t> order(month.tickers.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (month.mean_return[a] != month.mean_return[b])
            return month.mean_return[a] > month.mean_return[b];
        return month.tickers[a] < month.tickers[b];
    });
    order.resize(static_cast<std::size_t>(n));
    std::vector<double> p(static_cast<std::size_t>(n));
    std::vector<std::vector<double>> C(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
        p[static_cast<std::size_t>(a)] = month.mean_return[order[static_cast<std::size_t>(a)]];
        for (int b = 0; b < n; ++b)
            C[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                month.covariance[order[static_cast<std::size_t>(a)]]
                                [order[static_cast<std::size_t>(b)]];
    }
    ProblemInstance inst = embed_portfolio(p, C, q, k);
    inst.label = "portfolio-" + month.month;
    return inst;
}

}  // namespace xylab
