#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsparith {

/// Minimal CSV emitter: comma-separated, header row, '.' decimal point,
/// LF line endings, %.17g numbers (so identical runs are byte-identical).
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

    template <typename... Ts>
    void row(const Ts&... cells) {
        std::vector<std::string> r;
        (r.push_back(format(cells)), ...);
        if (r.size() != header_.size())
            throw std::invalid_argument("csv: row width differs from header");
        rows_.push_back(std::move(r));
    }

    std::string str() const {
        std::ostringstream os;
        join(os, header_);
        for (const auto& r : rows_) join(os, r);
        return os.str();
    }

    void save(const std::string& path) const {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("csv: cannot open " + path);
        f << str();
    }

  private:
    static std::string format(double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }
    static std::string format(long long v) { return std::to_string(v); }
    static std::string format(int v) { return std::to_string(v); }
    static std::string format(const std::string& v) { return v; }
    static std::string format(const char* v) { return v; }

    static void join(std::ostringstream& os, const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            os << (i ? "," : "") << cells[i];
        os << "\n";
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace qsparith
