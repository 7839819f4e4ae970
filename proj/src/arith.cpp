// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "pepin/arith.hpp"

namespace pepin {

BigCount estimate(int64_t size, int64_t k) {
    assert(size >= 0);
    assert(k >= 0);
    BigCount out(static_cast<unsigned long>(size));
    out <<= static_cast<mp_bitcnt_t>(k);
    return out;
}

}  // namespace pepin
