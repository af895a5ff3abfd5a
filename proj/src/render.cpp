// SPDX-License-Identifier: Apache-2.0
#include "rootfrac/render.hpp"

#include <sstream>

#include "rootfrac/errors.hpp"

namespace rootfrac {

namespace {

std::string entry_text(const MValue& v) {
    return v.is_infinite() ? "inf" : v.value().get_str();
}

std::string render_grid(const MSequence& seq, const OutputSpec& spec) {
    if (spec.columns_per_row < 1) throw Error("columns_per_row must be >= 1");
    std::ostringstream os;
    long count = static_cast<long>(seq.values.size());
    for (long i = 0; i < count; ++i) {
        long n = seq.start + i;
        std::string cell = entry_text(seq.values[static_cast<size_t>(i)]);
        if (spec.mark_n0 && seq.n0_marker != 0 && n == seq.n0_marker)
            cell = "[" + cell + "]";
        os << cell;
        bool row_end = (i + 1) % spec.columns_per_row == 0 || i + 1 == count;
        os << (row_end ? "\n" : " ");
    }
    return os.str();
}

std::string render_csv(const MSequence& seq) {
    std::ostringstream os;
    os << "n,M\n";
    for (long i = 0; i < static_cast<long>(seq.values.size()); ++i)
        os << seq.start + i << "," << entry_text(seq.values[static_cast<size_t>(i)])
           << "\n";
    return os.str();
}

std::string render_json_lines(const MSequence& seq) {
    std::ostringstream os;
    for (long i = 0; i < static_cast<long>(seq.values.size()); ++i) {
        const MValue& v = seq.values[static_cast<size_t>(i)];
        os << "{\"n\":" << seq.start + i << ",\"m\":"
           << (v.is_infinite() ? std::string("null") : v.value().get_str())
           << ",\"infinite\":" << (v.is_infinite() ? "true" : "false") << "}\n";
    }
    return os.str();
}

}  // namespace

std::string render_sequence(const MSequence& seq, const OutputSpec& spec) {
    switch (spec.format) {
        case OutputFormat::Grid: return render_grid(seq, spec);
        case OutputFormat::Csv: return render_csv(seq);
        case OutputFormat::JsonLines: return render_json_lines(seq);
    }
    throw Error("unknown output format");
}

}  // namespace rootfrac
