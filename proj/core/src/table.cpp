#include "cmdeg/table.hpp"

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cmdeg/checked.hpp"
#include "cmdeg/degrees.hpp"
#include "cmdeg/order.hpp"
#include "cmdeg/parallel.hpp"
#include "cmdeg/rational.hpp"
#include "cmdeg/verify.hpp"

namespace cmdeg {

namespace {

std::vector<TableRow> rows_for_order(const Order& o, std::int64_t max_n) {
    std::vector<TableRow> rows;
    const std::int64_t h = class_number(o.delta);
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t m = 1; m <= n; ++m) {
            if (n % m != 0) continue;
            const auto [qf, trace] = t_qf_full_traced(o, m, n);
            TableRow row;
            row.delta_k = o.delta_k;
            row.f = o.f;
            row.delta = o.delta;
            row.m = m;
            row.n = n;
            row.t_kf = t_kf(o, m, n).value;
            row.t_qf = qf.value;
            row.clause = trace.case_id;
            row.class_number = h;
            row.weighted_t_qf = checked_mul(h, qf.value);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void append_json_row(std::string& out, const TableRow& r) {
    std::ostringstream oss;
    oss << "{\"delta_k\":" << r.delta_k << ",\"f\":" << r.f
        << ",\"delta\":" << r.delta << ",\"m_level\":" << r.m
        << ",\"n_level\":" << r.n << ",\"t_kf\":" << r.t_kf
        << ",\"t_qf\":" << r.t_qf << ",\"clause\":\"" << r.clause
        << "\",\"class_number\":" << r.class_number
        << ",\"weighted_t_qf\":" << r.weighted_t_qf << "}\n";
    out += oss.str();
}

void append_csv_row(std::string& out, const TableRow& r) {
    std::ostringstream oss;
    oss << r.delta_k << ',' << r.f << ',' << r.delta << ',' << r.m << ','
        << r.n << ',' << r.t_kf << ',' << r.t_qf << ',' << r.clause << ','
        << r.class_number << ',' << r.weighted_t_qf << '\n';
    out += oss.str();
}

std::string fingerprint_hex(std::uint64_t fp) {
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[static_cast<std::size_t>(i)] = digits[fp & 0xf];
        fp >>= 4;
    }
    return hex;
}

}  // namespace

std::vector<TableRow> degree_table(const TableConfig& config) {
    if (config.max_abs_delta < 3 || config.max_n < 1)
        throw invalid_input("degree_table: grid bounds must be positive");
    const std::vector<Order> orders = orders_up_to(config.max_abs_delta);
    std::vector<std::vector<TableRow>> per_order(orders.size());
    parallel_for(orders.size(), config.workers, [&](std::size_t i) {
        per_order[i] = rows_for_order(orders[i], config.max_n);
    });
    std::vector<TableRow> rows;
    for (auto& chunk : per_order)
        rows.insert(rows.end(), std::make_move_iterator(chunk.begin()),
                    std::make_move_iterator(chunk.end()));
    std::sort(rows.begin(), rows.end(), [](const TableRow& x, const TableRow& y) {
        return std::tuple(-x.delta, x.f, x.n, x.m) <
               std::tuple(-y.delta, y.f, y.n, y.m);
    });
    return rows;
}

std::string render_rows(const std::vector<TableRow>& rows, bool csv) {
    std::string out;
    if (csv) {
        out += "delta_k,f,delta,m_level,n_level,t_kf,t_qf,clause,class_number,"
               "weighted_t_qf\n";
        for (const TableRow& r : rows) append_csv_row(out, r);
    } else {
        for (const TableRow& r : rows) append_json_row(out, r);
    }
    return out;
}

std::uint64_t config_fingerprint(const TableConfig& config) {
    std::ostringstream oss;
    oss << "version=" << kLibraryVersion
        << ";max_abs_delta=" << config.max_abs_delta << ";max_n=" << config.max_n
        << ";csv=" << (config.csv ? 1 : 0);
    const std::string key = oss.str();
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64-bit offset basis
    for (unsigned char ch : key) {
        h ^= ch;
        h *= 1099511628211ull;  // FNV prime
    }
    return h;
}

std::string cache_file_name(const TableConfig& config) {
    return std::string("cmdeg-table-") + fingerprint_hex(config_fingerprint(config)) +
           (config.csv ? ".csv" : ".jsonl");
}

bool cache_load(const std::string& dir, const TableConfig& config,
                std::string& text) {
    const std::filesystem::path path =
        std::filesystem::path(dir) / cache_file_name(config);
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) return false;
    text = buf.str();
    return true;
}

void cache_store(const std::string& dir, const TableConfig& config,
                 const std::string& text) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);  // ok if it already exists
    const fs::path path = fs::path(dir) / cache_file_name(config);
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cache_store: cannot open " + tmp.string());
        out << text;
        if (!out.good()) throw std::runtime_error("cache_store: write failed");
    }
    fs::rename(tmp, path, ec);
    if (ec) throw std::runtime_error("cache_store: rename failed: " + ec.message());
}

}  // namespace cmdeg
