#include "newton/threshold.hpp"

#include "newton/errors.hpp"

namespace newton {

std::pair<Rat, Rat> isolate_threshold(const std::function<bool(const Rat&)>& predicate,
                                      const Rat& lo, const Rat& hi, const Rat& width) {
    if (!(lo < hi)) throw AnalysisError("isolate_threshold: lo < hi required");
    if (width <= 0) throw AnalysisError("isolate_threshold: width must be positive");
    bool at_lo = predicate(lo);
    if (predicate(hi) == at_lo)
        throw AnalysisError("isolate_threshold: same verdict at both endpoints");
    Rat a = lo, b = hi;
    while (b - a > width) {
        Rat mid = (a + b) / 2;
        if (predicate(mid) == at_lo)
            a = mid;
        else
            b = mid;
    }
    return {a, b};
}

}  // namespace newton
