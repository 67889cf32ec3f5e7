#pragma once

#include <functional>
#include <utility>

#include "newton/rational.hpp"

namespace newton {

// Bisect a predicate over [lo, hi] down to a bracket of the given width
// containing the verdict boundary. The verdicts at lo and hi must differ.
std::pair<Rat, Rat> isolate_threshold(const std::function<bool(const Rat&)>& predicate,
                                      const Rat& lo, const Rat& hi, const Rat& width);

}  // namespace newton
