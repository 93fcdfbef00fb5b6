#include "tsim/io.hpp"

#include <charconv>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "tsim/errors.hpp"

namespace tsim {

namespace {

// Splits into lines, tolerating CRLF and a missing trailing newline.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t end = line.find(',', start);
        std::string_view field = end == std::string_view::npos
                                     ? line.substr(start)
                                     : line.substr(start, end - start);
        while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
            field.remove_prefix(1);
        }
        while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) {
            field.remove_suffix(1);
        }
        fields.emplace_back(field);
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return fields;
}

std::int64_t parse_count(const std::string& field, std::size_t line) {
    std::int64_t value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || field.empty()) {
        throw ParseError("not an integer: '" + field + "'", line);
    }
    return value;
}

double parse_real(const std::string& field, std::size_t line) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || field.empty()) {
        throw ParseError("not a number: '" + field + "'", line);
    }
    return value;
}

std::string format_value(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

bool blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

Dataset parse_basket_file(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) {
        throw ParseError("empty input file");
    }

    const auto header = split_fields(lines[0]);
    bool has_count = false;
    if (header.size() == 3 && header[0] == "transaction_id" && header[1] == "item" &&
        header[2] == "count") {
        has_count = true;
    } else if (!(header.size() == 2 && header[0] == "transaction_id" &&
                 header[1] == "item")) {
        throw ParseError("expected header 'transaction_id,item[,count]'", 1);
    }

    std::vector<BasketRecord> records;
    std::unordered_map<std::string, std::size_t> record_of;  // first-appearance order
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        if (blank(lines[i])) continue;
        const auto fields = split_fields(lines[i]);
        if (fields.size() != header.size()) {
            throw ParseError("expected " + std::to_string(header.size()) +
                                 " fields, got " + std::to_string(fields.size()),
                             line_no);
        }
        const std::string& tid = fields[0];
        const std::string& item = fields[1];
        if (tid.empty()) throw ParseError("empty transaction id", line_no);
        if (item.empty()) throw ParseError("empty item", line_no);
        std::int64_t count = 1;
        if (has_count) {
            count = parse_count(fields[2], line_no);
            if (count < 1) {
                throw ParseError("count must be >= 1, got " + fields[2], line_no);
            }
        }
        auto [it, inserted] = record_of.emplace(tid, records.size());
        if (inserted) records.push_back({tid, {}});
        records[it->second].items.push_back({item, count});
    }
    if (records.empty()) {
        throw ParseError("no data rows");
    }
    return build_dataset(records);
}

Dataset parse_matrix_file(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) {
        throw ParseError("empty input file");
    }

    const auto header = split_fields(lines[0]);
    if (header.size() < 2) {
        throw ParseError("expected at least one item column", 1);
    }
    std::vector<std::string> items(header.begin() + 1, header.end());
    for (const std::string& item : items) {
        if (item.empty()) throw ParseError("empty item name in header", 1);
    }
    ItemCatalog catalog = ItemCatalog::from_items(items);

    const std::size_t m = catalog.size();
    std::vector<TransactionVector> transactions;
    bool binary = true;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        if (blank(lines[i])) continue;
        const auto fields = split_fields(lines[i]);
        if (fields.size() != m + 1) {
            throw ParseError("expected " + std::to_string(m + 1) + " fields, got " +
                                 std::to_string(fields.size()),
                             line_no);
        }
        TransactionVector tx;
        tx.tid = fields[0];
        if (tx.tid.empty()) throw ParseError("empty transaction id", line_no);
        tx.counts.reserve(m);
        tx.presence.reserve(m);
        for (std::size_t k = 0; k < m; ++k) {
            const std::int64_t count = parse_count(fields[k + 1], line_no);
            if (count < 0) {
                throw ParseError("counts must be non-negative, got " + fields[k + 1],
                                 line_no);
            }
            if (count > 1) binary = false;
            tx.counts.push_back(count);
            tx.presence.push_back(count >= 1);
        }
        transactions.push_back(std::move(tx));
    }
    if (transactions.empty()) {
        throw ParseError("no data rows");
    }
    try {
        return Dataset(std::move(catalog), std::move(transactions),
                       binary ? DatasetMode::Binary : DatasetMode::Counted);
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
}

std::string write_matrix(const SimilarityMatrix& matrix) {
    std::string out;
    for (const std::string& id : matrix.ids()) {
        out += ",";
        out += id;
    }
    out += "\n";
    const std::size_t n = matrix.size();
    for (std::size_t i = 0; i < n; ++i) {
        out += matrix.ids()[i];
        for (std::size_t j = 0; j < n; ++j) {
            out += ",";
            out += format_value(matrix.at(i, j));
        }
        out += "\n";
    }
    return out;
}

SimilarityMatrix read_matrix(std::string_view text, Measure measure) {
    const auto lines = split_lines(text);
    if (lines.empty()) {
        throw ParseError("empty input file");
    }
    const auto header = split_fields(lines[0]);
    if (header.size() < 2) {
        throw ParseError("expected at least one id column", 1);
    }
    std::vector<std::string> ids(header.begin() + 1, header.end());
    const std::size_t n = ids.size();
    std::vector<double> cells(n * n, 0.0);

    std::size_t row = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        if (blank(lines[i])) continue;
        if (row >= n) throw ParseError("more rows than header ids", line_no);
        const auto fields = split_fields(lines[i]);
        if (fields.size() != n + 1) {
            throw ParseError("expected " + std::to_string(n + 1) + " fields, got " +
                                 std::to_string(fields.size()),
                             line_no);
        }
        if (fields[0] != ids[row]) {
            throw ParseError("row id '" + fields[0] + "' does not match header id '" +
                                 ids[row] + "'",
                             line_no);
        }
        for (std::size_t j = 0; j < n; ++j) {
            cells[row * n + j] = parse_real(fields[j + 1], line_no);
        }
        ++row;
    }
    if (row != n) {
        throw ParseError("matrix has " + std::to_string(row) + " rows but " +
                         std::to_string(n) + " header ids");
    }

    SimilarityMatrix matrix(ids, measure);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (cells[i * n + j] != cells[j * n + i]) {
                throw ParseError("matrix is not symmetric at (" + ids[i] + "," +
                                 ids[j] + ")");
            }
            matrix.set(i, j, cells[i * n + j]);
        }
    }
    return matrix;
}

std::string write_stats(const Dataset& ds, const ItemStats& stats) {
    if (stats.sigma.size() != ds.item_count()) {
        throw ValidationError("stats cover a different catalog than the dataset");
    }
    std::string out = "item,sigma,mismatch_penalty\n";
    for (std::size_t k = 0; k < ds.item_count(); ++k) {
        out += ds.catalog().item(k);
        out += ",";
        out += format_value(stats.sigma[k]);
        out += ",";
        out += format_value(gauss_weight(1, stats.sigma[k]));
        out += "\n";
    }
    return out;
}

std::string write_clusters(const Clustering& clustering) {
    nlohmann::ordered_json doc;
    doc["measure"] = std::string(measure_name(clustering.measure));
    doc["threshold"] = clustering.threshold;
    doc["clusters"] = clustering.clusters;
    return doc.dump(2) + "\n";
}

}  // namespace tsim
