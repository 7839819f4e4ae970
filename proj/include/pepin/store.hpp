// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pepin/dnf.hpp"
#include "pepin/rand.hpp"

namespace pepin {

/// Three-valued cell of a lazy sample. MARK means "uniform bit not drawn
/// yet". The encodings are the dense layout: 00, 01, 11; pattern 10 never
/// occurs.
enum class CellValue : uint8_t { false_v = 0b00, true_v = 0b01, mark = 0b11 };

inline CellValue cell_from_bool(bool b) {
    return b ? CellValue::true_v : CellValue::false_v;
}

enum class StoreBackend { dense, sparse };

const char* to_string(StoreBackend b);
StoreBackend backend_from_string(const std::string& name);

/// Fixed-capacity multiset of lazy samples over n variables, with a stack of
/// free slot ids. |occupied| + |free| == capacity at all times. Slot and
/// bit-consumption discipline lives in this base class, so the dense and
/// sparse backends behave bit-identically under the same RandomSource seed:
///
///   * append_lazy pops the top free slot, re-MARKs the row, and writes the
///     cube's literals; it consumes no random bits;
///   * check_materialize walks the cube's literals in ascending variable
///     order, draws one bit (1 = TRUE) for each MARK cell, and only then
///     reports whether every literal agrees with its cell (no short-circuit,
///     so the bits consumed never depend on cell values);
///   * thin_half visits occupied slots in ascending order, one bit each,
///     removing the sample iff the bit is 1;
///   * scan_remove_satisfying visits occupied slots in ascending order and
///     removes those check_materialize accepts.
///
/// A store instance is single-owner and single-threaded. Cells are
/// write-once: MARK may become TRUE/FALSE exactly once per slot lifetime.
class SampleStore {
 public:
    virtual ~SampleStore() = default;

    SampleStore(const SampleStore&) = delete;
    SampleStore& operator=(const SampleStore&) = delete;

    /// Append one lazy sample of `cube` (normalized); returns its slot id.
    int append_lazy(const Cube& cube);

    /// Materialize the cube's MARK cells of this sample, then report whether
    /// the sample satisfies the cube. Cells outside the cube are untouched.
    bool check_materialize(int slot, const Cube& cube, RandomSource& rng);

    /// Free an occupied slot.
    void remove(int slot);

    /// Remove each occupied sample independently with probability 1/2.
    void thin_half(RandomSource& rng);

    /// Remove every occupied sample satisfying `cube`; returns how many.
    int scan_remove_satisfying(const Cube& cube, RandomSource& rng);

    int size() const { return occupied_count_; }
    int free_slots() const { return int(free_stack_.size()); }
    int capacity() const { return capacity_; }
    uint32_t num_vars() const { return n_; }
    bool is_occupied(int slot) const;

    /// Cell of an occupied slot; var is 1-based.
    CellValue cell(int slot, uint32_t var) const;

    /// One line per occupied slot in ascending order, '0'/'1'/'?' per cell.
    std::string dump() const;

    /// Bytes of cell payload held by the backend.
    virtual size_t payload_bytes() const = 0;

 protected:
    SampleStore(int capacity, uint32_t n);

    virtual CellValue get_cell(int slot, uint32_t var0) const = 0;
    virtual void set_cell(int slot, uint32_t var0, bool value) = 0;
    virtual void fill_row_mark(int slot) = 0;

    const int capacity_;
    const uint32_t n_;

 private:
    void check_accounting() const;

    int occupied_count_ = 0;
    std::vector<int> free_stack_;
    std::vector<uint64_t> occ_bits_;
};

/// Backend factory. The whole cell payload is allocated up front; an
/// allocation failure propagates as std::bad_alloc.
std::unique_ptr<SampleStore> make_store(StoreBackend backend, int capacity,
                                        uint32_t n);

}  // namespace pepin
