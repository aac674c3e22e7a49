#include "ssga/harness/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "ssga/ga/config.hpp"

namespace ssga::harness {

namespace {

std::string optional_number(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

std::string warning_text(std::uint64_t capped) {
    return std::to_string(capped) + " run(s) hit the evaluation cap; their statistics are not comparable";
}

} // namespace

std::string format_number(double value, int precision) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}

void round_numbers(nlohmann::json& j, int precision) {
    if (j.is_number_float()) {
        const double v = j.get<double>();
        if (!std::isfinite(v)) return;
        const std::string text = format_number(v, precision);
        double rounded = 0.0;
        std::from_chars(text.data(), text.data() + text.size(), rounded);
        j = rounded;
    } else if (j.is_structured()) {
        for (auto& child : j) round_numbers(child, precision);
    }
}

void write_csv(const ExperimentResult& result, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& p : result.points) {
        const auto& cfg = p.point.config;
        const auto& s = p.stats;
        out << result.name << ',' << ga::display_name(cfg) << ',' << cfg.n << ',' << cfg.mu << ','
            << format_number(cfg.c) << ',' << p.runs.size() << ',' << format_number(s.mean) << ','
            << format_number(s.std_dev) << ',' << optional_number(s.normalized_mean) << ','
            << optional_number(s.normalized_std) << ',' << s.capped_count << '\n';
    }
}

std::string to_csv(const ExperimentResult& result) {
    std::ostringstream out;
    write_csv(result, out);
    return out.str();
}

nlohmann::json to_json(const ExperimentResult& result) {
    // Rounded like the CSV so both formats carry the same digits.
    const auto num = [](double v) -> nlohmann::json {
        if (!std::isfinite(v)) return nullptr;
        nlohmann::json j = v;
        round_numbers(j);
        return j;
    };
    const auto opt = [&](const std::optional<double>& v) { return v ? num(*v) : nlohmann::json(nullptr); };
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : result.points) {
        const auto& cfg = p.point.config;
        const auto& s = p.stats;
        rows.push_back({{"name", result.name},
                        {"algorithm", ga::display_name(cfg)},
                        {"n", cfg.n},
                        {"mu", cfg.mu},
                        {"c", num(cfg.c)},
                        {"runs", p.runs.size()},
                        {"mean", num(s.mean)},
                        {"std_dev", num(s.std_dev)},
                        {"normalized_mean", opt(s.normalized_mean)},
                        {"normalized_std", opt(s.normalized_std)},
                        {"capped_count", s.capped_count}});
    }
    nlohmann::json j = {{"name", result.name},
                        {"normalization", to_string(result.normalization)},
                        {"sweep", to_string(result.sweep)},
                        {"rows", std::move(rows)}};
    if (const auto capped = result.capped_runs()) j["warning"] = warning_text(capped);
    return j;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    if (!dir.empty()) fs::create_directories(dir);
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

} // namespace ssga::harness
