#include <cstdint>
#include <filesystem>
#include <string>
#include <tuple>
#include <vector>

#include "doctest.h"

#include "cmdeg/order.hpp"
#include "cmdeg/table.hpp"

using namespace cmdeg;

namespace {
TableConfig small_config() {
    TableConfig config;
    config.max_abs_delta = 12;
    config.max_n = 4;
    return config;
}

std::string render(const TableConfig& config) {
    return render_rows(degree_table(config), config.csv);
}
}  // namespace

TEST_CASE("table rows are sorted by |delta|, f, N, M") {
    const std::vector<TableRow> rows = degree_table(small_config());
    CHECK(!rows.empty());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto key = [](const TableRow& r) {
            return std::make_tuple(-r.delta, r.f, r.n, r.m);
        };
        CHECK(key(rows[i - 1]) < key(rows[i]));
    }
}

TEST_CASE("table rows carry consistent arithmetic") {
    for (const TableRow& row : degree_table(small_config())) {
        CHECK(row.delta == row.delta_k * row.f * row.f);
        CHECK(row.n % row.m == 0);
        CHECK(row.weighted_t_qf == row.class_number * row.t_qf);
        CHECK((row.t_qf == row.t_kf || row.t_qf == 2 * row.t_kf));
        CHECK(row.class_number == class_number(row.delta));
        CHECK(!row.clause.empty());
    }
}

TEST_CASE("table spot rows") {
    TableConfig config;  // default grid
    bool found_eisenstein_nine = false;
    bool found_gauss_two_four = false;
    for (const TableRow& row : degree_table(config)) {
        if (row.delta == -3 && row.m == 1 && row.n == 9) {
            found_eisenstein_nine = true;
            CHECK(row.t_qf == 3);
            CHECK(row.t_kf == 3);
        }
        if (row.delta == -4 && row.m == 2 && row.n == 4) {
            found_gauss_two_four = true;
            CHECK(row.t_qf == 2);
            CHECK(row.t_kf == 1);
        }
    }
    CHECK(found_eisenstein_nine);
    CHECK(found_gauss_two_four);
}

TEST_CASE("rendering is deterministic and worker-independent") {
    TableConfig config = small_config();
    config.workers = 1;
    const std::string once = render(config);
    const std::string twice = render(config);
    CHECK(once == twice);
    config.workers = 8;
    CHECK(render(config) == once);

    TableConfig csv = small_config();
    csv.csv = true;
    const std::string csv_text = render(csv);
    CHECK(csv_text.substr(0, 8) == "delta_k,");
    CHECK(csv_text != once);
}

TEST_CASE("config fingerprint keys content, not parallelism") {
    TableConfig a = small_config();
    TableConfig b = small_config();
    b.workers = 8;
    CHECK(config_fingerprint(a) == config_fingerprint(b));
    b.max_n = 6;
    CHECK(config_fingerprint(a) != config_fingerprint(b));
    TableConfig c = small_config();
    c.csv = true;
    CHECK(config_fingerprint(a) != config_fingerprint(c));
    CHECK(cache_file_name(a).ends_with(".jsonl"));
    CHECK(cache_file_name(c).ends_with(".csv"));
}

TEST_CASE("cache round-trips bytes") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "cmdeg-table-cache-test";
    fs::remove_all(dir);
    const TableConfig config = small_config();
    const std::string text = render(config);

    std::string loaded;
    CHECK_FALSE(cache_load(dir.string(), config, loaded));
    cache_store(dir.string(), config, text);
    CHECK(cache_load(dir.string(), config, loaded));
    CHECK(loaded == text);

    // A different config hashes to a different file.
    TableConfig other = config;
    other.max_n = 3;
    std::string other_loaded;
    CHECK_FALSE(cache_load(dir.string(), other, other_loaded));
    fs::remove_all(dir);
}
