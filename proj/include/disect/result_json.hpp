#pragma once

#include <string>

#include "disect/partition_engine.hpp"

namespace disect {

/// Machine-readable result document; key order is fixed so identical runs
/// serialize byte-identically. Layout:
///   input{n,m,d} mode bisection{part1,part2} stats{e12,e21,minDir,ratio}
///   certificate{...} rng{seed,trials}
std::string result_json_text(const PartitionResult& res);

} // namespace disect
