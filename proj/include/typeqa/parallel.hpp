#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "typeqa/jsonl.hpp"

namespace typeqa {

// Applies fn to every record line (comments skipped) with `workers` threads,
// writing each returned blob to `out` in input order. An empty blob drops the
// line. Lines are processed in batches so memory stays bounded by the batch,
// and the output is byte-identical regardless of worker count. The first
// exception thrown by fn is rethrown on the calling thread.
void transform_lines_parallel(std::istream& in, std::ostream& out, std::size_t workers,
                              const std::function<std::string(const JsonlLine&)>& fn,
                              std::size_t batch_size = 256);

}  // namespace typeqa
