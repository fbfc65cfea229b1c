#include "qho/tables.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qho {

std::string_view run_mode_name(RunMode m) {
    return m == RunMode::single ? "single" : "two";
}

RunMode parse_run_mode(std::string_view name) {
    if (name == "single") return RunMode::single;
    if (name == "two") return RunMode::two;
    throw std::invalid_argument("mode: expected \"single\" or \"two\", got \"" + std::string(name) + "\"");
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

namespace {

struct RawTable {
    const char* id;
    RunMode mode;
    double drive_freq;
    std::vector<const char*> labels;
    std::vector<const char*> times;
    std::vector<std::vector<const char*>> cells;
};

// Hardware measurement tables, cells verbatim (percent, 1024 shots per point).
const std::vector<RawTable>& raw_tables() {
    static const std::vector<RawTable> tables = {
        {"single_w1",
         RunMode::single,
         1.0,
         {"0", "1"},
         {"1", "2", "3", "4", "5", "6", "7"},
         {{"98.45", "1.55"},
          {"95.91", "4.09"},
          {"90.61", "9.39"},
          {"42.74", "57.26"},
          {"40.62", "59.38"},
          {"25.88", "74.12"},
          {"15.61", "84.39"}}},
        {"single_w2",
         RunMode::single,
         2.0,
         {"0", "1"},
         {"1", "2", "3", "4", "5", "6", "7"},
         {{"96.58", "3.42"},
          {"97.35", "2.65"},
          {"95.11", "4.89"},
          {"57.51", "42.49"},
          {"64.36", "35.64"},
          {"88.14", "11.86"},
          {"9.52", "90.48"}}},
        {"two_w1",
         RunMode::two,
         1.0,
         {"00", "01", "10", "11"},
         {"1", "2", "3", "4", "5"},
         {{"22.949", "32.52", "21.68", "22.852"},
          {"21.191", "29.785", "23.145", "25.879"},
          {"30.762", "30.371", "22.363", "16.504"},
          {"28.125", "29.004", "20.705", "22.168"},
          {"26.66", "23.145", "30.176", "20.02"}}},
        {"two_w5",
         RunMode::two,
         5.0,
         {"00", "01", "10", "11"},
         {"1", "2", "3", "4", "5"},
         {{"21.973", "27.93", "24.121", "25.977"},
          {"18.75", "19.531", "28.418", "33.301"},
          {"14.844", "35.84", "16.211", "33.105"},
          {"26.953", "25.195", "27.832", "20.02"},
          {"22.363", "34.961", "24.023", "18.652"}}},
    };
    return tables;
}

}  // namespace

const std::vector<std::string>& reference_table_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const RawTable& t : raw_tables()) v.emplace_back(t.id);
        return v;
    }();
    return ids;
}

ReferenceTable load_reference_table(const std::string& id) {
    for (const RawTable& raw : raw_tables()) {
        if (id != raw.id) continue;
        ReferenceTable t;
        t.id = raw.id;
        t.mode = raw.mode;
        t.drive_freq = raw.drive_freq;
        for (const char* l : raw.labels) t.labels.emplace_back(l);
        for (const char* s : raw.times) t.times.push_back(std::strtod(s, nullptr));
        for (const auto& row : raw.cells) {
            std::vector<std::string> text;
            std::vector<double> vals;
            for (const char* cell : row) {
                text.emplace_back(cell);
                vals.push_back(std::strtod(cell, nullptr));
            }
            t.percent_text.push_back(std::move(text));
            t.percent.push_back(std::move(vals));
        }
        return t;
    }
    std::string msg = "unknown reference table '" + id + "'; valid ids:";
    for (const std::string& v : reference_table_ids()) msg += " " + v;
    throw std::invalid_argument(msg);
}

std::uint64_t reference_checksum(const ReferenceTable& t) {
    std::string canon = t.id;
    canon += '\n';
    for (const std::string& l : t.labels) {
        canon += l;
        canon += ' ';
    }
    canon += '\n';
    for (std::size_t r = 0; r < t.percent_text.size(); ++r) {
        canon += std::to_string(static_cast<long long>(t.times[r]));
        for (const std::string& cell : t.percent_text[r]) {
            canon += ' ';
            canon += cell;
        }
        canon += '\n';
    }
    return fnv1a64(canon);
}

}  // namespace qho
