#pragma once

#include "immcoh/specseq.hpp"

#include <string>

namespace immcoh {

/// Writes via a temp file and rename so readers never see partial output.
void write_text_atomic(const std::string& path, const std::string& content);

/// One line per nonzero entry of every recorded page: r <tab> p <tab> q
/// <tab> dim.
std::string pages_tsv(const ImmersionSSRun& run);

/// Chart of the starting page: one dot per free module generator over the
/// base polynomial algebra, radius growing with multiplicity, and arrows
/// for the generator-level differentials.
std::string chart_svg(const ImmersionSSRun& run);

std::string run_json(const ImmersionSSRun& run, bool verified);

}  // namespace immcoh
