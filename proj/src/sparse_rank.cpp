#include "aq/sparse_rank.hpp"

#include <algorithm>

namespace aq {

void SparseRank::add_column(std::vector<std::pair<uint32_t, uint32_t>> entries)
{
    std::sort(entries.begin(), entries.end());
    for (auto& e : entries) {
        if (e.first >= n_rows_)
            invariant_error("SparseRank: row index out of range");
        e.second %= fp_.p;
    }
    entries.erase(std::remove_if(entries.begin(), entries.end(),
                                 [](const auto& e) { return e.second == 0; }),
                  entries.end());
    cols_.push_back(std::move(entries));
}

size_t SparseRank::rank()
{
    const size_t ncols = cols_.size();
    std::vector<uint8_t> col_live(ncols, 1), row_live(n_rows_, 1);
    std::vector<uint32_t> row_nnz(n_rows_, 0);
    std::vector<std::vector<uint32_t>> row_cols(n_rows_);
    for (size_t c = 0; c < ncols; ++c)
        for (auto& e : cols_[c]) {
            ++row_nnz[e.first];
            row_cols[e.first].push_back(static_cast<uint32_t>(c));
        }

    auto col_entry = [&](uint32_t c, uint32_t r) -> std::pair<uint32_t, uint32_t>* {
        auto it = std::lower_bound(cols_[c].begin(), cols_[c].end(), std::make_pair(r, 0u),
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        if (it != cols_[c].end() && it->first == r)
            return &*it;
        return nullptr;
    };

    /* bucket queue over column nnz; entries validated on pop */
    constexpr size_t kCap = 48;
    std::vector<std::vector<uint32_t>> buckets(kCap + 1);
    auto push_col = [&](uint32_t c) {
        if (!col_live[c])
            return;
        size_t b = std::min(cols_[c].size(), kCap);
        buckets[b].push_back(c);
    };
    for (size_t c = 0; c < ncols; ++c) {
        if (cols_[c].empty())
            col_live[c] = 0;
        else
            push_col(static_cast<uint32_t>(c));
    }

    size_t rk = 0;

    auto erase_row_entry = [&](uint32_t c, uint32_t r) {
        auto* e = col_entry(c, r);
        if (e) {
            cols_[c].erase(cols_[c].begin() + (e - cols_[c].data()));
            push_col(c);
        }
    };

    /* retire a row: drop its entries from all live columns (no arithmetic) */
    auto retire_row = [&](uint32_t r) {
        row_live[r] = 0;
        for (uint32_t c : row_cols[r])
            if (col_live[c])
                erase_row_entry(c, r);
        row_cols[r].clear();
        row_cols[r].shrink_to_fit();
    };
    /* retire a column: its entries stop counting toward row occupancy */
    auto retire_col = [&](uint32_t c) {
        col_live[c] = 0;
        for (auto& e : cols_[c])
            if (row_live[e.first])
                --row_nnz[e.first];
        cols_[c].clear();
        cols_[c].shrink_to_fit();
    };

    /* live columns of a row, compacting stale references */
    auto live_cols_of_row = [&](uint32_t r) {
        auto& v = row_cols[r];
        std::vector<uint32_t> out;
        out.reserve(v.size());
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        for (uint32_t c : v)
            if (col_live[c] && col_entry(c, r))
                out.push_back(c);
        v.assign(out.begin(), out.end());
        return out;
    };

    while (true) {
        /* pop the live column with smallest recorded nnz */
        uint32_t pc = UINT32_MAX;
        for (size_t b = 1; b <= kCap && pc == UINT32_MAX; ++b) {
            auto& q = buckets[b];
            while (!q.empty()) {
                uint32_t c = q.back();
                q.pop_back();
                if (!col_live[c] || cols_[c].empty())
                    continue;
                size_t actual = std::min(cols_[c].size(), kCap);
                if (actual != b) {
                    buckets[actual].push_back(c);
                    continue;
                }
                pc = c;
                break;
            }
        }
        if (pc == UINT32_MAX) {
            /* remaining columns all sit in the overflow bucket */
            auto& q = buckets[kCap];
            while (!q.empty()) {
                uint32_t c = q.back();
                q.pop_back();
                if (!col_live[c] || cols_[c].empty())
                    continue;
                size_t actual = std::min(cols_[c].size(), kCap);
                if (actual != kCap) {
                    buckets[actual].push_back(c);
                    continue;
                }
                pc = c;
                break;
            }
        }
        if (pc == UINT32_MAX)
            break;

        /* pivot row: fewest live entries within the chosen column */
        uint32_t pr = UINT32_MAX;
        uint32_t best = UINT32_MAX;
        for (auto& e : cols_[pc]) {
            if (!row_live[e.first])
                continue;
            if (row_nnz[e.first] < best) {
                best = row_nnz[e.first];
                pr = e.first;
            }
        }
        if (pr == UINT32_MAX) {
            retire_col(pc);
            continue;
        }

        ++rk;
        uint32_t pv = col_entry(pc, pr)->second;
        uint32_t pv_inv = fp_.inv(pv);

        auto touched = live_cols_of_row(pr);
        std::vector<std::pair<uint32_t, uint32_t>> pivot_col;
        pivot_col.reserve(cols_[pc].size());
        for (auto& e : cols_[pc])
            if (row_live[e.first])
                pivot_col.push_back(e);

        for (uint32_t c : touched) {
            if (c == pc)
                continue;
            auto* e = col_entry(c, pr);
            if (!e)
                continue;
            uint32_t f = fp_.mul(e->second, pv_inv); /* c := c - f * pivot_col */
            std::vector<std::pair<uint32_t, uint32_t>> merged;
            merged.reserve(cols_[c].size() + pivot_col.size());
            auto a = cols_[c].begin();
            auto b = pivot_col.begin();
            while (a != cols_[c].end() || b != pivot_col.end()) {
                if (b == pivot_col.end() || (a != cols_[c].end() && a->first < b->first)) {
                    merged.push_back(*a);
                    ++a;
                } else if (a == cols_[c].end() || b->first < a->first) {
                    uint32_t nv = fp_.neg(fp_.mul(f, b->second));
                    if (nv && row_live[b->first]) {
                        merged.emplace_back(b->first, nv);
                        ++row_nnz[b->first];
                        row_cols[b->first].push_back(c);
                    }
                    ++b;
                } else {
                    uint32_t nv = fp_.sub(a->second, fp_.mul(f, b->second));
                    if (nv)
                        merged.emplace_back(a->first, nv);
                    else if (row_live[a->first])
                        --row_nnz[a->first];
                    ++a;
                    ++b;
                }
            }
            cols_[c] = std::move(merged);
            push_col(c);
        }

        retire_col(pc);
        retire_row(pr);
    }
    return rk;
}

} // namespace aq
