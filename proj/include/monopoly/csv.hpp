#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace monopoly {

// shortest round-trip representation; byte-identical across runs
inline std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Minimal CSV builder: '#' comment lines, data rows, deterministic number
/// formatting. Suites document their columns in a leading comment.
class CsvWriter {
public:
    void comment(const std::string& line) { out_ += "# " + line + "\n"; }

    class Row {
    public:
        explicit Row(std::string& out) : out_(out) {}
        Row& cell(const std::string& s) {
            if (!first_) out_ += ',';
            out_ += s;
            first_ = false;
            return *this;
        }
        Row& cell(const char* s) { return cell(std::string(s)); }
        Row& cell(double v) { return cell(csv_double(v)); }
        Row& cell(int v) { return cell(std::to_string(v)); }
        Row& cell(unsigned long v) { return cell(std::to_string(v)); }
        Row& cell(unsigned long long v) { return cell(std::to_string(v)); }
        ~Row() { out_ += '\n'; }

    private:
        std::string& out_;
        bool first_ = true;
    };

    Row row() { return Row(out_); }

    const std::string& str() const { return out_; }

private:
    std::string out_;
};

} // namespace monopoly
