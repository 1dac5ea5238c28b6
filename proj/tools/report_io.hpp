#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "polyspec/growth.hpp"
#include "polyspec/types.hpp"
#include "run_config.hpp"

namespace cli {

// Human-facing number: exact small-denominator fractions print as p/q, the
// rest with nine significant digits.
std::string fmt_num(double x);
std::string fmt_coords(const Eigen::VectorXd& v);

// Machine-facing number for CSV cells, full precision.
std::string csv_num(double x);

// JSON value that survives infinities as the strings "inf" / "-inf".
Json json_num(double x);

Json json_functional(const polyspec::Functional& f);
Json json_estimate(const polyspec::GrowthEstimate& e);

std::string iso_timestamp_utc();

// Two-column aligned plain text accumulated line by line.
class TextReport {
  public:
    void line(const std::string& label, const std::string& value);
    void raw(const std::string& text);
    void blank();
    std::string str() const;

  private:
    struct Row {
        std::string label;
        std::string value;
        bool verbatim = false;
    };
    std::vector<Row> rows_;
};

// Owns the output directory and the format/timestamp switches; every command
// funnels its artifacts through one sink.
class OutputSink {
  public:
    OutputSink(const OutputConfig& out, std::string command);

    Json envelope() const;
    void emit_json(Json payload) const;                                  // report.json
    void emit_csv(const std::string& name, const std::string& content) const;
    void emit_text(const TextReport& report) const;  // stdout, plus report.txt when enabled

  private:
    OutputConfig out_;
    std::string command_;
};

}  // namespace cli
