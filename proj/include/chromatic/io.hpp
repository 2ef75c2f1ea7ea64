/**
 * @file io.hpp
 * CSV emission, filter documents and the on-disk coefficient-table cache.
 */
#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "chromatic/chromatic_core.hpp"
#include "chromatic/fir_design.hpp"

namespace chromatic::io {

// 17 significant digits, round-trips any double.
std::string format_number(double x);

class CsvWriter {
public:
    CsvWriter(std::ostream& out, std::vector<std::string> header);
    void row(const std::vector<double>& values);
    // Leading text cells, then numbers.
    void row(const std::vector<std::string>& text, const std::vector<double>& values);
    std::size_t rows() const { return rows_; }

private:
    std::ostream& out_;
    std::size_t columns_;
    std::size_t rows_ = 0;
};

inline constexpr int table_format_version = 1;

std::string table_to_json(const ChromaticTable& table);
// Throws ArgumentError on malformed documents; returns nullopt on a version mismatch.
std::optional<ChromaticTable> table_from_json(const std::string& text);

// $CHROMATIC_CACHE_DIR, else $XDG_CACHE_HOME/chromatic, else ~/.cache/chromatic.
std::filesystem::path cache_directory();
std::filesystem::path table_cache_path(const std::filesystem::path& dir, const FamilyId& family,
                                       std::size_t N, std::size_t K);

struct CachedTable {
    ChromaticTable table;
    bool from_cache = false;
};

// Reads the cached table, or builds and writes it when absent or stale.
CachedTable load_or_build_table(const FamilySpec& family, std::size_t N, std::size_t K,
                                const std::filesystem::path& dir);

std::string filter_to_json(const FirFilter& filter, const DesignReport* report = nullptr);
FirFilter filter_from_json(const std::string& text);

std::vector<double> read_signal_csv(std::istream& in);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace chromatic::io
