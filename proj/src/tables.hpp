#pragma once

#include "fixtures.hpp"

namespace periods::tables {

struct RowResult {
    std::string label;
    long k = 0;
    bool tensor_ok = false;
    bool q_ok = false;
    std::string computed;
    std::string expected;
    bool ok() const { return tensor_ok && q_ok; }
};

struct TableReport {
    long N = 0;
    long qprec = 0;
    std::vector<RowResult> rows;
    bool degenerate_expected = false; // level 7 minus space
    bool degenerate_seen = false;
    std::string degenerate_note;
    std::vector<std::string> errors;

    bool all_ok() const {
        if (!errors.empty()) return false;
        if (degenerate_expected && !degenerate_seen) return false;
        for (const auto& r : rows)
            if (!r.ok()) return false;
        return true;
    }
};

// Recomputes every table row for the level from the generating function and
// compares exactly against the stored values.
TableReport run_tables(long N, long qprec_override = 0);

std::string render_table_text(const TableReport& rep);

} // namespace periods::tables
