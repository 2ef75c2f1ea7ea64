#include "chromatic/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chromatic/errors.hpp"

namespace chromatic::io {

using nlohmann::json;

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header)
    : out_(out), columns_(header.size()) {
    for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
    out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) { row({}, values); }

void CsvWriter::row(const std::vector<std::string>& text, const std::vector<double>& values) {
    if (text.size() + values.size() != columns_)
        throw ArgumentError("csv row has " + std::to_string(text.size() + values.size()) +
                            " cells, header has " + std::to_string(columns_));
    bool first = true;
    for (const auto& t : text) {
        out_ << (first ? "" : ",") << t;
        first = false;
    }
    for (double v : values) {
        out_ << (first ? "" : ",") << format_number(v);
        first = false;
    }
    out_ << '\n';
    ++rows_;
}

std::string table_to_json(const ChromaticTable& table) {
    json doc;
    doc["version"] = table_format_version;
    doc["family"] = table.family.to_string();
    doc["N"] = table.N;
    doc["K"] = table.K;
    json entries = json::array();
    for (const auto& c : table.b) entries.push_back({c.real(), c.imag()});
    doc["b"] = std::move(entries);
    return doc.dump();
}

std::optional<ChromaticTable> table_from_json(const std::string& text) {
    try {
        const json doc = json::parse(text);
        if (doc.at("version").get<int>() != table_format_version) return std::nullopt;
        ChromaticTable t;
        t.family = FamilyId::parse(doc.at("family").get<std::string>());
        t.N = doc.at("N").get<std::size_t>();
        t.K = doc.at("K").get<std::size_t>();
        const auto& b = doc.at("b");
        if (b.size() != (t.N + 1) * (t.K + 1)) throw ArgumentError("table entry count mismatch");
        t.b.reserve(b.size());
        for (const auto& e : b) t.b.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
        return t;
    } catch (const json::exception& e) {
        throw ArgumentError(std::string("malformed table document: ") + e.what());
    }
}

std::filesystem::path cache_directory() {
    if (const char* d = std::getenv("CHROMATIC_CACHE_DIR"); d && *d) return d;
    if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d)
        return std::filesystem::path(d) / "chromatic";
    if (const char* h = std::getenv("HOME"); h && *h)
        return std::filesystem::path(h) / ".cache" / "chromatic";
    return std::filesystem::temp_directory_path() / "chromatic";
}

std::filesystem::path table_cache_path(const std::filesystem::path& dir, const FamilyId& family,
                                       std::size_t N, std::size_t K) {
    std::string name = family.to_string();
    for (char& c : name)
        if (c == '(' || c == ')' || c == ',') c = '_';
    return dir / (name + "-N" + std::to_string(N) + "-K" + std::to_string(K) + "-v" +
                  std::to_string(table_format_version) + ".json");
}

CachedTable load_or_build_table(const FamilySpec& family, std::size_t N, std::size_t K,
                                const std::filesystem::path& dir) {
    const auto path = table_cache_path(dir, family.id(), N, K);
    if (std::filesystem::exists(path)) {
        try {
            if (auto t = table_from_json(read_file(path));
                t && t->family == family.id() && t->N == N && t->K == K)
                return {std::move(*t), true};
        } catch (const ArgumentError&) {
            // corrupt file: rebuild below
        }
    }
    CachedTable out{build_table(family, N, K), false};
    std::filesystem::create_directories(dir);
    // write then rename so concurrent readers never see a partial file
    auto tmp = path;
    tmp += ".tmp";
    write_file(tmp, table_to_json(out.table));
    std::filesystem::rename(tmp, path);
    return out;
}

std::string filter_to_json(const FirFilter& filter, const DesignReport* report) {
    json doc;
    doc["family"] = filter.family.to_string();
    doc["n"] = filter.order;
    doc["N"] = filter.half_width;
    doc["passband_edge"] = filter.passband_edge;
    doc["stopband_edge"] = filter.stopband_edge;
    doc["taps"] = filter.taps;
    if (report) {
        doc["report"] = {{"passband_max_error", report->passband_max_error},
                         {"stopband_max_magnitude", report->stopband_max_magnitude},
                         {"grid_size", report->grid_size},
                         {"condition_number", report->condition_number},
                         {"refine_iterations", report->refine_iterations}};
    }
    return doc.dump(2);
}

FirFilter filter_from_json(const std::string& text) {
    try {
        const json doc = json::parse(text);
        FirFilter f;
        f.family = FamilyId::parse(doc.at("family").get<std::string>());
        f.order = doc.at("n").get<std::size_t>();
        f.half_width = doc.at("N").get<std::size_t>();
        f.passband_edge = doc.at("passband_edge").get<double>();
        f.stopband_edge = doc.at("stopband_edge").get<double>();
        f.taps = doc.at("taps").get<std::vector<double>>();
        if (f.taps.size() != 2 * f.half_width + 1)
            throw ArgumentError("filter has " + std::to_string(f.taps.size()) + " taps, expected " +
                                std::to_string(2 * f.half_width + 1));
        return f;
    } catch (const json::exception& e) {
        throw ArgumentError(std::string("malformed filter document: ") + e.what());
    }
}

std::vector<double> read_signal_csv(std::istream& in) {
    std::vector<double> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const std::string cell = line.substr(first, line.find(',', first) - first);
        char* end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (end == cell.c_str()) {
            if (lineno == 1) continue;  // header
            throw ArgumentError("signal csv line " + std::to_string(lineno) + ": not a number");
        }
        out.push_back(v);
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ArgumentError("cannot write " + path.string());
    out << contents;
}

}  // namespace chromatic::io
