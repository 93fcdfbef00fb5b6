#include "tsim/dataset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tsim/errors.hpp"

namespace tsim {

ItemCatalog ItemCatalog::from_items(std::vector<std::string> items) {
    if (items.empty()) {
        throw ValidationError("catalog must contain at least one item");
    }
    ItemCatalog catalog;
    catalog.items_ = std::move(items);
    catalog.index_.reserve(catalog.items_.size());
    for (std::size_t k = 0; k < catalog.items_.size(); ++k) {
        const std::string& item = catalog.items_[k];
        if (item.empty()) {
            throw ValidationError("item identifiers must be non-empty");
        }
        if (!catalog.index_.emplace(item, k).second) {
            throw ValidationError("duplicate item identifier: " + item);
        }
    }
    return catalog;
}

std::size_t ItemCatalog::index_of(const std::string& item) const {
    const auto it = index_.find(item);
    if (it == index_.end()) {
        throw NotFoundError("unknown item: " + item);
    }
    return it->second;
}

bool TransactionVector::all_absent() const noexcept {
    return std::none_of(presence.begin(), presence.end(), [](bool p) { return p; });
}

Dataset::Dataset(ItemCatalog catalog, std::vector<TransactionVector> transactions,
                 DatasetMode mode)
    : catalog_(std::move(catalog)),
      transactions_(std::move(transactions)),
      mode_(mode) {
    const std::size_t m = catalog_.size();
    tid_index_.reserve(transactions_.size());
    for (std::size_t i = 0; i < transactions_.size(); ++i) {
        const TransactionVector& tx = transactions_[i];
        if (tx.tid.empty()) {
            throw ValidationError("transaction ids must be non-empty");
        }
        if (!tid_index_.emplace(tx.tid, i).second) {
            throw ValidationError("duplicate transaction id: " + tx.tid);
        }
        if (tx.counts.size() != m || tx.presence.size() != m) {
            throw ValidationError("transaction " + tx.tid +
                                  " is not indexed against the catalog");
        }
        for (std::size_t k = 0; k < m; ++k) {
            if (tx.counts[k] < 0) {
                throw ValidationError("negative count in transaction " + tx.tid);
            }
            if (tx.presence[k] != (tx.counts[k] >= 1)) {
                throw ValidationError("presence/count mismatch in transaction " +
                                      tx.tid);
            }
            if (mode_ == DatasetMode::Binary && tx.counts[k] > 1) {
                throw ValidationError("binary dataset holds count > 1 in " + tx.tid);
            }
        }
    }
}

std::size_t Dataset::index_of(const std::string& tid) const {
    const auto it = tid_index_.find(tid);
    if (it == tid_index_.end()) {
        throw NotFoundError("unknown transaction id: " + tid);
    }
    return it->second;
}

const TransactionVector& Dataset::vector_of(const std::string& tid) const {
    return transactions_[index_of(tid)];
}

Dataset build_dataset(const std::vector<BasketRecord>& records) {
    if (records.empty()) {
        throw ValidationError("no records");
    }

    // Per-record item totals; duplicate items within a record are summed.
    std::vector<std::map<std::string, std::int64_t>> totals(records.size());
    std::set<std::string> seen_tids;
    std::set<std::string> item_union;
    for (std::size_t r = 0; r < records.size(); ++r) {
        const BasketRecord& rec = records[r];
        if (rec.tid.empty()) {
            throw ValidationError("transaction ids must be non-empty");
        }
        if (!seen_tids.insert(rec.tid).second) {
            throw ValidationError("duplicate transaction id: " + rec.tid);
        }
        for (const ItemEntry& entry : rec.items) {
            if (entry.item.empty()) {
                throw ValidationError("item identifiers must be non-empty");
            }
            if (entry.count < 1) {
                throw ValidationError("count must be >= 1 for item " + entry.item +
                                      " in transaction " + rec.tid);
            }
            totals[r][entry.item] += entry.count;
            item_union.insert(entry.item);
        }
    }
    if (item_union.empty()) {
        throw ValidationError("records define no items");
    }

    ItemCatalog catalog = ItemCatalog::from_items(
        std::vector<std::string>(item_union.begin(), item_union.end()));

    const std::size_t m = catalog.size();
    bool binary = true;
    std::vector<TransactionVector> transactions;
    transactions.reserve(records.size());
    for (std::size_t r = 0; r < records.size(); ++r) {
        TransactionVector tx;
        tx.tid = records[r].tid;
        tx.counts.assign(m, 0);
        tx.presence.assign(m, false);
        for (const auto& [item, count] : totals[r]) {
            const std::size_t k = catalog.index_of(item);
            tx.counts[k] = count;
            tx.presence[k] = true;
            if (count > 1) binary = false;
        }
        transactions.push_back(std::move(tx));
    }

    return Dataset(std::move(catalog), std::move(transactions),
                   binary ? DatasetMode::Binary : DatasetMode::Counted);
}

}  // namespace tsim
