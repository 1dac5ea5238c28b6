#include "report_io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>

#include "polyspec/errors.hpp"

namespace cli {

namespace {

constexpr int kLabelWidth = 24;

std::string printf_num(const char* fmt, double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, fmt, x);
    return buf;
}

}  // namespace

std::string fmt_num(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) x = 0.0;  // flush -0
    for (long long den : {1, 2, 3, 4, 6, 8, 16}) {
        const double scaled = x * static_cast<double>(den);
        if (std::abs(scaled) < 1e6 && std::abs(scaled - std::round(scaled)) < 1e-12) {
            long long num = std::llround(scaled);
            const long long g = std::gcd(std::abs(num), den);
            const long long p = num / g, q = den / g;
            if (q == 1) return std::to_string(p);
            return std::to_string(p) + "/" + std::to_string(q);
        }
    }
    return printf_num("%.9g", x);
}

std::string fmt_coords(const Eigen::VectorXd& v) {
    std::string s = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += fmt_num(v(i));
    }
    return s + ")";
}

std::string csv_num(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) x = 0.0;  // flush -0
    return printf_num("%.12g", x);
}

Json json_num(double x) {
    if (std::isinf(x)) return x > 0 ? Json("inf") : Json("-inf");
    return Json(x);
}

Json json_functional(const polyspec::Functional& f) {
    Json j;
    j["std"] = std::vector<double>(f.std_coords.data(), f.std_coords.data() + f.std_coords.size());
    j["root"] =
        std::vector<double>(f.root_coords.data(), f.root_coords.data() + f.root_coords.size());
    return j;
}

Json json_estimate(const polyspec::GrowthEstimate& e) {
    Json j;
    j["value"] = e.minus_infinity ? Json("-inf") : json_num(e.value);
    j["window"] = {{"lo", e.window.lo}, {"hi", e.window.hi}};
    j["residual"] = e.residual;
    j["window_samples"] = e.window_samples;
    j["total_samples"] = e.total_samples;
    if (e.degenerate_mu) j["degenerate_mu"] = true;
    return j;
}

std::string iso_timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void TextReport::line(const std::string& label, const std::string& value) {
    rows_.push_back({label, value, false});
}

void TextReport::raw(const std::string& text) { rows_.push_back({text, "", true}); }

void TextReport::blank() { rows_.push_back({"", "", true}); }

std::string TextReport::str() const {
    std::string out;
    for (const Row& r : rows_) {
        if (r.verbatim) {
            out += r.label;
        } else {
            out += r.label;
            const int pad = kLabelWidth - static_cast<int>(r.label.size());
            out.append(static_cast<std::size_t>(std::max(pad, 1)), ' ');
            out += r.value;
        }
        out += '\n';
    }
    return out;
}

OutputSink::OutputSink(const OutputConfig& out, std::string command)
    : out_(out), command_(std::move(command)) {
    std::error_code ec;
    std::filesystem::create_directories(out_.dir, ec);
    if (ec) throw polyspec::ParameterError("cannot create output directory '" + out_.dir + "'");
}

Json OutputSink::envelope() const {
    Json j;
    j["tool"] = "polyspec";
    j["schema_version"] = kConfigSchemaVersion;
    j["command"] = command_;
    if (out_.timestamp) j["generated_at"] = iso_timestamp_utc();
    return j;
}

void OutputSink::emit_json(Json payload) const {
    if (!out_.json) return;
    Json j = envelope();
    for (auto& item : payload.items()) j[item.key()] = item.value();
    std::ofstream file(std::filesystem::path(out_.dir) / "report.json");
    file << j.dump(2) << '\n';
}

void OutputSink::emit_csv(const std::string& name, const std::string& content) const {
    if (!out_.csv) return;
    std::ofstream file(std::filesystem::path(out_.dir) / name);
    file << content;
}

void OutputSink::emit_text(const TextReport& report) const {
    const std::string body = report.str();
    std::cout << body;
    if (out_.text) {
        std::ofstream file(std::filesystem::path(out_.dir) / "report.txt");
        file << body;
    }
}

}  // namespace cli
