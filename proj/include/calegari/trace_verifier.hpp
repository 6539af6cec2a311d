#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "calegari/presentation.hpp"
#include "calegari/tietze.hpp"

namespace calegari {

  struct TraceVerdict {
    bool ok = false;
    std::optional<std::size_t> failing_index;  // 0-based move index
    std::string reason;
  };

  // Replays the trace with its own word arithmetic (no calls into the
  // search's move application) and accepts iff every move is legal and the
  // final presentation has no generators and no relators.
  TraceVerdict verify_trace(Presentation const& start,
                            TrivializationTrace const& trace);

}  // namespace calegari
