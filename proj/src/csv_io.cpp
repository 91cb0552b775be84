#include "mmb/csv_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mmb {

namespace {

[[noreturn]] void fail_line(const std::string& path, size_t line_no, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_number(const std::string& s, const std::string& path, size_t line_no) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) fail_line(path, line_no, "non-numeric field '" + s + "'");
        if (!std::isfinite(v)) fail_line(path, line_no, "non-finite field '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        fail_line(path, line_no, "non-numeric field '" + s + "'");
    } catch (const std::out_of_range&) {
        fail_line(path, line_no, "numeric field out of range '" + s + "'");
    }
}

}  // namespace

std::string format_number(double v) {
    const double r = std::round(v);
    if (r == v && std::fabs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(r));
        return buf;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::vector<GroundTruthRecord> load_annotations(const std::string& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error(csv_path + ": cannot open");

    std::vector<GroundTruthRecord> records;
    std::set<std::pair<int, long>> seen;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto f = split_csv(line);
        if (f.size() != 7)
            fail_line(csv_path, line_no,
                      "expected 7 fields (frame,track_id,x,y,w,h,label), got " +
                          std::to_string(f.size()));
        GroundTruthRecord r;
        r.frame = static_cast<int>(parse_number(f[0], csv_path, line_no));
        r.track_id = static_cast<long>(parse_number(f[1], csv_path, line_no));
        r.box = {parse_number(f[2], csv_path, line_no), parse_number(f[3], csv_path, line_no),
                 parse_number(f[4], csv_path, line_no), parse_number(f[5], csv_path, line_no)};
        if (r.box.w < 1.0 || r.box.h < 1.0)
            fail_line(csv_path, line_no, "box sides must be >= 1");
        try {
            r.label = class_label_from_string(f[6]);
        } catch (const std::exception& e) {
            fail_line(csv_path, line_no, e.what());
        }
        if (r.track_id >= 0 && !seen.emplace(r.frame, r.track_id).second)
            fail_line(csv_path, line_no,
                      "duplicate (frame, track_id) = (" + std::to_string(r.frame) + ", " +
                          std::to_string(r.track_id) + ")");
        records.push_back(r);
    }
    std::sort(records.begin(), records.end(),
              [](const GroundTruthRecord& a, const GroundTruthRecord& b) {
                  if (a.frame != b.frame) return a.frame < b.frame;
                  return a.track_id < b.track_id;
              });
    return records;
}

void save_annotations(const std::string& csv_path,
                      const std::vector<GroundTruthRecord>& records) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::runtime_error(csv_path + ": cannot open for writing");
    out << "# frame,track_id,x,y,w,h,label\n";
    for (const auto& r : records) {
        out << r.frame << ',' << r.track_id << ',' << format_number(r.box.x) << ','
            << format_number(r.box.y) << ',' << format_number(r.box.w) << ','
            << format_number(r.box.h) << ',' << to_string(r.label) << '\n';
    }
    if (!out) throw std::runtime_error(csv_path + ": write failed");
}

std::vector<Detection> load_detections(const std::string& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error(csv_path + ": cannot open");

    std::vector<Detection> dets;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto f = split_csv(line);
        if (f.size() != 7 && f.size() != 8)
            fail_line(csv_path, line_no,
                      "expected 7 or 8 fields (frame,track_id,x,y,w,h,label[,score]), got " +
                          std::to_string(f.size()));
        Detection d;
        d.frame = static_cast<int>(parse_number(f[0], csv_path, line_no));
        d.track_id = static_cast<long>(parse_number(f[1], csv_path, line_no));
        d.box = {parse_number(f[2], csv_path, line_no), parse_number(f[3], csv_path, line_no),
                 parse_number(f[4], csv_path, line_no), parse_number(f[5], csv_path, line_no)};
        d.source = detection_source_from_string(f[6]);
        d.score = f.size() == 8 ? parse_number(f[7], csv_path, line_no) : 1.0;
        dets.push_back(d);
    }
    std::sort(dets.begin(), dets.end(), [](const Detection& a, const Detection& b) {
        if (a.frame != b.frame) return a.frame < b.frame;
        return a.track_id < b.track_id;
    });
    return dets;
}

void save_detections(const std::string& csv_path, const std::vector<Detection>& detections) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::runtime_error(csv_path + ": cannot open for writing");
    out << "# frame,track_id,x,y,w,h,label,score\n";
    char score[32];
    for (const auto& d : detections) {
        std::snprintf(score, sizeof(score), "%.6f", d.score);
        out << d.frame << ',' << d.track_id << ',' << format_number(d.box.x) << ','
            << format_number(d.box.y) << ',' << format_number(d.box.w) << ','
            << format_number(d.box.h) << ',' << to_string(d.source) << ',' << score << '\n';
    }
    if (!out) throw std::runtime_error(csv_path + ": write failed");
}

const char* to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::car: return "car";
        case ClassLabel::airplane: return "airplane";
        case ClassLabel::ship: return "ship";
        case ClassLabel::train: return "train";
        case ClassLabel::synthetic: return "synthetic";
    }
    return "synthetic";
}

ClassLabel class_label_from_string(const std::string& s) {
    if (s == "car") return ClassLabel::car;
    if (s == "airplane") return ClassLabel::airplane;
    if (s == "ship") return ClassLabel::ship;
    if (s == "train") return ClassLabel::train;
    if (s == "synthetic") return ClassLabel::synthetic;
    throw std::runtime_error("unknown class label '" + s + "'");
}

}  // namespace mmb
