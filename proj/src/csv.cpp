#include "pqwf/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "pqwf/errors.hpp"
#include "pqwf/json_io.hpp"

namespace pqwf {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& field, long line) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ParseError("bad float '" + field + "'", line);
    return v;
}

long parse_long(const std::string& field, long line) {
    long v = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ParseError("bad integer '" + field + "'", line);
    return v;
}

std::uint64_t parse_u64(const std::string& field, long line) {
    std::uint64_t v = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ParseError("bad unsigned integer '" + field + "'", line);
    return v;
}

std::string quote_csv(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

// RFC-4180 field splitting; quoted fields must not span lines.
std::vector<std::string> split_csv_line(const std::string& line, long line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (quoted) throw ParseError("unterminated quoted field", line_no);
    fields.push_back(std::move(current));
    return fields;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    return in;
}

} // namespace

void write_dataset_csv(const std::string& path, const std::vector<SignalRecord>& records) {
    std::ofstream out = open_out(path);
    const std::size_t n_samples = records.empty() ? 0 : records.front().samples.size();
    out << "id,class_code,class_name,seed,param_json";
    for (std::size_t s = 0; s < n_samples; ++s) out << ",s" << s;
    out << "\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const SignalRecord& r = records[i];
        const nlohmann::json pj = r.params;
        out << i << ',' << class_code(r.label) << ',' << class_name(r.label) << ','
            << r.params.rng_seed << ',' << quote_csv(pj.dump());
        for (double v : r.samples) out << ',' << format_double(v);
        out << "\n";
    }
    if (!out) throw IoError("write failed: " + path);
}

std::vector<SignalRecord> read_dataset_csv(const std::string& path) {
    std::ifstream in = open_in(path);
    std::string line;
    long line_no = 0;
    if (!std::getline(in, line)) throw ParseError("empty dataset file: " + path, 1);
    ++line_no;
    const auto header = split_csv_line(line, line_no);
    if (header.size() < 6 || header[0] != "id" || header[4] != "param_json")
        throw ParseError("unexpected dataset header", line_no);
    const std::size_t n_samples = header.size() - 5;

    std::vector<SignalRecord> records;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_csv_line(line, line_no);
        if (fields.size() != header.size())
            throw ParseError("expected " + std::to_string(header.size()) +
                                 " fields, got " + std::to_string(fields.size()),
                             line_no);
        SignalRecord r;
        r.label = class_from_code(static_cast<int>(parse_long(fields[1], line_no)));
        try {
            r.params = nlohmann::json::parse(fields[4]).get<SignalParams>();
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad param_json: ") + e.what(), line_no);
        }
        r.params.rng_seed = parse_u64(fields[3], line_no);
        r.samples.reserve(n_samples);
        for (std::size_t s = 0; s < n_samples; ++s)
            r.samples.push_back(parse_double(fields[5 + s], line_no));
        records.push_back(std::move(r));
    }
    return records;
}

void write_features_csv(const std::string& path, const std::vector<FeatureRow>& rows) {
    std::ofstream out = open_out(path);
    out << "id,class_code,entropy,std_dev,mean,skewness,kurtosis\n";
    for (const FeatureRow& row : rows) {
        const auto a = row.features.as_array();
        out << row.id << ',' << class_code(row.label);
        for (double v : a) out << ',' << format_double(v);
        out << "\n";
    }
    if (!out) throw IoError("write failed: " + path);
}

std::vector<FeatureRow> read_features_csv(const std::string& path) {
    std::ifstream in = open_in(path);
    std::string line;
    long line_no = 0;
    if (!std::getline(in, line)) throw ParseError("empty feature file: " + path, 1);
    ++line_no;
    if (split_csv_line(line, line_no).size() != 7)
        throw ParseError("unexpected feature header", line_no);

    std::vector<FeatureRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_csv_line(line, line_no);
        if (fields.size() != 7)
            throw ParseError("expected 7 fields, got " + std::to_string(fields.size()),
                             line_no);
        FeatureRow row;
        row.id = static_cast<std::size_t>(parse_long(fields[0], line_no));
        row.label = class_from_code(static_cast<int>(parse_long(fields[1], line_no)));
        row.features.entropy = parse_double(fields[2], line_no);
        row.features.std_dev = parse_double(fields[3], line_no);
        row.features.mean = parse_double(fields[4], line_no);
        row.features.skewness = parse_double(fields[5], line_no);
        row.features.kurtosis = parse_double(fields[6], line_no);
        row.features.label = row.label;
        rows.push_back(row);
    }
    return rows;
}

void write_series_csv(const std::string& path, const std::vector<double>& values) {
    std::ofstream out = open_out(path);
    out << "index,value\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        out << i << ',' << format_double(values[i]) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

void write_detail_csv(const std::string& path, const DecompositionResult& decomp) {
    std::ofstream out = open_out(path);
    out << "level,index,value\n";
    for (std::size_t level = 0; level < decomp.details.size(); ++level)
        for (std::size_t i = 0; i < decomp.details[level].size(); ++i)
            out << (level + 1) << ',' << i << ','
                << format_double(decomp.details[level][i]) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

void write_series_svg(const std::string& path, const std::vector<double>& values) {
    std::ofstream out = open_out(path);
    const int width = 800, height = 240, pad = 10;
    double lo = values.empty() ? -1.0 : values.front();
    double hi = lo;
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi == lo) hi = lo + 1.0;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\">\n<polyline fill=\"none\" stroke=\"black\" "
        << "stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double x = pad + (width - 2.0 * pad) * static_cast<double>(i) /
                                   static_cast<double>(std::max<std::size_t>(values.size() - 1, 1));
        const double y = height - pad - (height - 2.0 * pad) * (values[i] - lo) / (hi - lo);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", x, y);
        out << buf;
    }
    out << "\"/>\n</svg>\n";
    if (!out) throw IoError("write failed: " + path);
}

} // namespace pqwf
