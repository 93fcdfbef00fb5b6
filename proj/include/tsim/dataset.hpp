#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace tsim {

/// Whether every stored count is 0/1 or counts carry multiplicities.
enum class DatasetMode { Binary, Counted };

/// The fixed, ordered item set shared by every transaction of a dataset.
/// Item ids are unique and non-empty; order never changes once built.
class ItemCatalog {
public:
    /// Builds a catalog from item ids in the given order.
    /// Throws ValidationError on empty/duplicate ids or an empty list.
    static ItemCatalog from_items(std::vector<std::string> items);

    std::size_t size() const noexcept { return items_.size(); }
    const std::vector<std::string>& items() const noexcept { return items_; }
    const std::string& item(std::size_t k) const { return items_.at(k); }

    bool contains(const std::string& item) const noexcept {
        return index_.find(item) != index_.end();
    }

    /// 0-based position of an item id; throws NotFoundError if absent.
    std::size_t index_of(const std::string& item) const;

private:
    ItemCatalog() = default;

    std::vector<std::string> items_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// One transaction encoded over the catalog: per-item counts and presence
/// flags. Invariant: presence[k] == (counts[k] >= 1) for every k.
struct TransactionVector {
    std::string tid;
    std::vector<std::int64_t> counts;
    std::vector<bool> presence;

    bool all_absent() const noexcept;
};

struct ItemEntry {
    std::string item;
    std::int64_t count = 1;
};

/// Raw input row for build_dataset: one transaction and its item list.
/// An empty item list is a legal all-absent transaction.
struct BasketRecord {
    std::string tid;
    std::vector<ItemEntry> items;
};

/// Immutable collection of transactions over one catalog. Safe to read from
/// any number of threads after construction.
class Dataset {
public:
    Dataset(ItemCatalog catalog, std::vector<TransactionVector> transactions,
            DatasetMode mode);

    const ItemCatalog& catalog() const noexcept { return catalog_; }
    const std::vector<TransactionVector>& transactions() const noexcept {
        return transactions_;
    }
    DatasetMode mode() const noexcept { return mode_; }

    /// m: number of items in the catalog.
    std::size_t item_count() const noexcept { return catalog_.size(); }
    /// n: number of transactions.
    std::size_t size() const noexcept { return transactions_.size(); }

    bool contains(const std::string& tid) const noexcept {
        return tid_index_.find(tid) != tid_index_.end();
    }

    /// Position of a transaction id in dataset order; throws NotFoundError.
    std::size_t index_of(const std::string& tid) const;

    /// Stored vector for a transaction id; throws NotFoundError.
    const TransactionVector& vector_of(const std::string& tid) const;

private:
    ItemCatalog catalog_;
    std::vector<TransactionVector> transactions_;
    std::unordered_map<std::string, std::size_t> tid_index_;
    DatasetMode mode_;
};

/// Materializes a dataset from raw records. The catalog is the sorted union
/// of all items seen; absent items get count 0. Duplicate items within one
/// record are summed. Mode is Binary iff every resulting count is 0 or 1.
/// Throws ValidationError on duplicate tids, counts < 1, or no items at all.
Dataset build_dataset(const std::vector<BasketRecord>& records);

}  // namespace tsim
