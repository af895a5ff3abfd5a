// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "rootfrac/mfun.hpp"

namespace rootfrac {

enum class OutputFormat { Grid, Csv, JsonLines };

struct OutputSpec {
    OutputFormat format = OutputFormat::Grid;
    long columns_per_row = 15;  // grid only
    bool mark_n0 = true;        // box the N0 entry as [x]
};

/// Render a computed M sequence.  Grid prints `inf` for infinite entries and
/// `[x]` around the N0 entry; csv has header `n,M`; json-lines emits one
/// object per n with fields n, m (integer or null), infinite (boolean).
std::string render_sequence(const MSequence& seq, const OutputSpec& spec);

}  // namespace rootfrac
