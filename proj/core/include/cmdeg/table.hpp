#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Bulk tabulation of least CM-point degrees over both base fields on a
// rectangular grid of orders and levels, with deterministic rendering
// (JSON lines or CSV) and an optional on-disk cache keyed by the library
// version and a fingerprint of the generating configuration.

namespace cmdeg {

inline constexpr const char* kLibraryVersion = "0.1.0";

struct TableConfig {
    std::int64_t max_abs_delta = 40;  // orders with |delta| up to this bound
    std::int64_t max_n = 12;          // levels (M, N) with M | N <= this bound
    bool csv = false;                 // JSON lines when false
    int workers = 1;                  // render parallelism; never affects bytes
};

struct TableRow {
    std::int64_t delta_k = 0;
    std::int64_t f = 1;
    std::int64_t delta = 0;
    std::int64_t m = 1;
    std::int64_t n = 1;
    std::int64_t t_kf = 1;            // least degree over K(f)
    std::int64_t t_qf = 1;            // least degree over Q(f)
    std::string clause;               // which doubling clause decided t_qf
    std::int64_t class_number = 1;    // h(delta)
    std::int64_t weighted_t_qf = 1;   // h(delta) * t_qf

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

// All rows for the configured grid, sorted by (|delta|, f, n, m). Output is a
// pure function of the config; `workers` only changes how the work is split.
std::vector<TableRow> degree_table(const TableConfig& config);

// Byte-deterministic rendering: one JSON object or CSV record per row, '\n'
// terminated; CSV carries a header line.
std::string render_rows(const std::vector<TableRow>& rows, bool csv);

// FNV-1a fingerprint of the content-relevant config fields plus the library
// version; workers are excluded on purpose.
std::uint64_t config_fingerprint(const TableConfig& config);

// Cache file name for this config inside an arbitrary directory.
std::string cache_file_name(const TableConfig& config);

// Loads a previously stored rendering; false when absent or unreadable.
bool cache_load(const std::string& dir, const TableConfig& config,
                std::string& text);

// Stores a rendering; creates the directory if needed. Throws on I/O failure.
void cache_store(const std::string& dir, const TableConfig& config,
                 const std::string& text);

}  // namespace cmdeg
