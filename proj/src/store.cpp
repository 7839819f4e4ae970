// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "pepin/store.hpp"

#include <bit>
#include <cassert>

#include "pepin/errors.hpp"

namespace pepin {

const char* to_string(StoreBackend b) {
    return b == StoreBackend::dense ? "dense" : "sparse";
}

StoreBackend backend_from_string(const std::string& name) {
    if (name == "dense") return StoreBackend::dense;
    if (name == "sparse") return StoreBackend::sparse;
    throw ParamError("unknown backend '" + name + "' (dense|sparse)");
}

SampleStore::SampleStore(int capacity, uint32_t n)
    : capacity_(capacity), n_(n), occ_bits_((size_t(capacity) + 63) / 64, 0) {
    if (capacity < 1) throw ParamError("store capacity must be >= 1");
    if (n < 1) throw ParamError("store needs at least one variable");
    free_stack_.reserve(size_t(capacity));
    for (int slot = capacity - 1; slot >= 0; --slot) free_stack_.push_back(slot);
}

bool SampleStore::is_occupied(int slot) const {
    assert(slot >= 0 && slot < capacity_);
    return (occ_bits_[size_t(slot) >> 6] >> (slot & 63)) & 1u;
}

void SampleStore::check_accounting() const {
    assert(occupied_count_ + int(free_stack_.size()) == capacity_);
    assert(occupied_count_ >= 0 && occupied_count_ <= capacity_);
}

int SampleStore::append_lazy(const Cube& cube) {
    if (free_stack_.empty())
        throw InternalError("sample store full: append without free slot");
    const int slot = free_stack_.back();
    free_stack_.pop_back();
    occ_bits_[size_t(slot) >> 6] |= uint64_t(1) << (slot & 63);
    ++occupied_count_;
    fill_row_mark(slot);
    for (Lit l : cube.lits) set_cell(slot, l.var() - 1, l.positive());
    check_accounting();
    return slot;
}

bool SampleStore::check_materialize(int slot, const Cube& cube,
                                    RandomSource& rng) {
    assert(is_occupied(slot));
    // materialize every MARK cell of the cube first, then compare; the bits
    // consumed depend only on which cells were MARK
    bool agree = true;
    for (Lit l : cube.lits) {
        const uint32_t var0 = l.var() - 1;
        CellValue c = get_cell(slot, var0);
        if (c == CellValue::mark) {
            const bool bit = rng.next_bit() != 0;
            set_cell(slot, var0, bit);
            c = cell_from_bool(bit);
        }
        agree = agree && (c == cell_from_bool(l.positive()));
    }
    return agree;
}

void SampleStore::remove(int slot) {
    assert(is_occupied(slot) && "remove of a free slot");
    occ_bits_[size_t(slot) >> 6] &= ~(uint64_t(1) << (slot & 63));
    free_stack_.push_back(slot);
    --occupied_count_;
    check_accounting();
}

void SampleStore::thin_half(RandomSource& rng) {
    for (size_t w = 0; w < occ_bits_.size(); ++w) {
        uint64_t bits = occ_bits_[w];
        while (bits) {
            const int slot = int(w * 64) + std::countr_zero(bits);
            bits &= bits - 1;
            if (rng.next_bit()) remove(slot);
        }
    }
    check_accounting();
}

int SampleStore::scan_remove_satisfying(const Cube& cube, RandomSource& rng) {
    int removed = 0;
    for (size_t w = 0; w < occ_bits_.size(); ++w) {
        uint64_t bits = occ_bits_[w];
        while (bits) {
            const int slot = int(w * 64) + std::countr_zero(bits);
            bits &= bits - 1;
            if (check_materialize(slot, cube, rng)) {
                remove(slot);
                ++removed;
            }
        }
    }
    check_accounting();
    return removed;
}

CellValue SampleStore::cell(int slot, uint32_t var) const {
    assert(is_occupied(slot));
    assert(var >= 1 && var <= n_);
    return get_cell(slot, var - 1);
}

std::string SampleStore::dump() const {
    std::string out;
    for (size_t w = 0; w < occ_bits_.size(); ++w) {
        uint64_t bits = occ_bits_[w];
        while (bits) {
            const int slot = int(w * 64) + std::countr_zero(bits);
            bits &= bits - 1;
            for (uint32_t v = 0; v < n_; ++v) {
                switch (get_cell(slot, v)) {
                    case CellValue::false_v: out += '0'; break;
                    case CellValue::true_v: out += '1'; break;
                    case CellValue::mark: out += '?'; break;
                }
            }
            out += '\n';
        }
    }
    return out;
}

namespace {

//==============================================================================
// Dense backend: one contiguous array of capacity*n 2-bit cells. Row stride
// is n cells, so the payload is exactly ceil(capacity*n*2/8) bytes; rows may
// start mid-word, but a 2-bit cell never straddles a word.

class DenseStore final : public SampleStore {
 public:
    DenseStore(int capacity, uint32_t n)
        : SampleStore(capacity, n),
          words_((uint64_t(capacity) * n * 2 + 63) / 64, ~uint64_t(0)) {}

    size_t payload_bytes() const override {
        return size_t((uint64_t(capacity_) * n_ * 2 + 7) / 8);
    }

 protected:
    CellValue get_cell(int slot, uint32_t var0) const override {
        const uint64_t off = (uint64_t(slot) * n_ + var0) * 2;
        const uint32_t v = uint32_t(words_[off >> 6] >> (off & 63)) & 3u;
        assert(v != 0b10 && "invalid cell pattern");
        return CellValue(v);
    }

    void set_cell(int slot, uint32_t var0, bool value) override {
        const uint64_t off = (uint64_t(slot) * n_ + var0) * 2;
        uint64_t& w = words_[off >> 6];
        const unsigned sh = unsigned(off & 63);
        assert(((w >> sh) & 3u) == 3u && "cell written twice");
        w &= ~(uint64_t(3) << sh);
        if (value) w |= uint64_t(1) << sh;
    }

    void fill_row_mark(int slot) override {
        const uint64_t lo = uint64_t(slot) * n_ * 2;
        const uint64_t hi = lo + uint64_t(n_) * 2;  // exclusive
        const size_t wlo = size_t(lo >> 6);
        const size_t whi = size_t((hi - 1) >> 6);
        if (wlo == whi) {
            words_[wlo] |= span_mask(unsigned(lo & 63), unsigned(hi - lo));
            return;
        }
        words_[wlo] |= ~uint64_t(0) << (lo & 63);
        for (size_t w = wlo + 1; w < whi; ++w) words_[w] = ~uint64_t(0);
        const unsigned tail = unsigned(hi & 63);
        words_[whi] |= tail == 0 ? ~uint64_t(0) : (uint64_t(1) << tail) - 1;
    }

 private:
    static uint64_t span_mask(unsigned start, unsigned len) {
        const uint64_t ones =
            len >= 64 ? ~uint64_t(0) : (uint64_t(1) << len) - 1;
        return ones << start;
    }

    std::vector<uint64_t> words_;
};

//==============================================================================
// Sparse backend: per row, a leading MARK run followed by (value,
// trailing-MARK-run) pairs. Materializing a cell splits the run it lands in.

class SparseStore final : public SampleStore {
 public:
    SparseStore(int capacity, uint32_t n)
        : SampleStore(capacity, n), rows_(size_t(capacity), Row{n, {}}) {}

    size_t payload_bytes() const override {
        size_t bytes = rows_.size() * sizeof(Row);
        for (const Row& r : rows_) bytes += r.runs.capacity() * sizeof(Run);
        return bytes;
    }

 protected:
    CellValue get_cell(int slot, uint32_t var0) const override {
        const Row& r = rows_[size_t(slot)];
        if (var0 < r.lead_marks) return CellValue::mark;
        uint32_t pos = var0 - r.lead_marks;
        for (const Run& run : r.runs) {
            if (pos == 0) return cell_from_bool(run.value);
            pos -= 1;
            if (pos < run.marks_after) return CellValue::mark;
            pos -= run.marks_after;
        }
        assert(false && "cell index beyond row");
        return CellValue::mark;
    }

    void set_cell(int slot, uint32_t var0, bool value) override {
        Row& r = rows_[size_t(slot)];
        if (var0 < r.lead_marks) {
            const uint32_t after = r.lead_marks - var0 - 1;
            r.runs.insert(r.runs.begin(), Run{value, after});
            r.lead_marks = var0;
            return;
        }
        uint32_t pos = var0 - r.lead_marks;
        for (size_t i = 0; i < r.runs.size(); ++i) {
            assert(pos != 0 && "cell written twice");
            pos -= 1;
            if (pos < r.runs[i].marks_after) {
                const uint32_t after = r.runs[i].marks_after - pos - 1;
                r.runs[i].marks_after = pos;
                r.runs.insert(r.runs.begin() + long(i) + 1, Run{value, after});
                return;
            }
            pos -= r.runs[i].marks_after;
        }
        assert(false && "cell index beyond row");
    }

    void fill_row_mark(int slot) override {
        Row& r = rows_[size_t(slot)];
        r.lead_marks = n_;
        r.runs.clear();
    }

 private:
    struct Run {
        bool value;
        uint32_t marks_after;
    };
    struct Row {
        uint32_t lead_marks;
        std::vector<Run> runs;
    };

    std::vector<Row> rows_;
};

}  // namespace

std::unique_ptr<SampleStore> make_store(StoreBackend backend, int capacity,
                                        uint32_t n) {
    if (backend == StoreBackend::dense)
        return std::make_unique<DenseStore>(capacity, n);
    return std::make_unique<SparseStore>(capacity, n);
}

}  // namespace pepin
