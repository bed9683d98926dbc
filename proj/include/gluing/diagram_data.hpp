#ifndef GLUING_DIAGRAM_DATA_HPP_
#define GLUING_DIAGRAM_DATA_HPP_

#include <string_view>

namespace gluing::data {

// Inclusion diagram of the 40 closed classes, whitespace-separated links exactly as
// drawn (order, duplicates and orientation preserved).
inline constexpr std::string_view inclusion_links = R"(
1,2 1,3 1,4 1,5 2,6 2,7 2,8 2,9 3,7 3,10 3,11 3,12 4,14 4,13 4,16 4,8 4,10 5,16 5,17 5,11 5,9 6,18
6,22 6,23 7,18 7,19 7,20 8,19 8,21 8,22 9,20 9,23 10,19 10,24 10,27 10,25 11,20 11,24 11,28 12,18
12,25 12,28 14,29 14,21 14,27 13,30 13,25 13,22 16,29 17,28 17,30 17,23 18,31 18,32 19,33 20,32
21,33 22,31 23,32 24,34 24,35 25,31 25,35 27,34 26,33 28,35 28,32 29,36 29,34 30,36 30,35 30,36
30,35 31,37 32,37 33,38 34,38 35,37 36,39 37,40 38,40 39,40 11,26 15,5 29,15 26,15 34,26 31,19 24,16
)";

// Differences between the drawn links and links derived from the bases.
// Format: `<listed|derived> a,b  # reason`. Every entry must carry a reason.
inline constexpr std::string_view inclusion_known_diffs = R"(
listed 26,33   # bases ({C1},{O0,O2}) vs ({C1},{O1}) differ by substitution; likely drawn for 27,33
listed 31,37   # trivial class ({K2},{K2}) hangs under ({K2},{O1}); operational bases are not nested
listed 32,37   # trivial class ({K2},{K2}) hangs under ({K2},{O2}); operational bases are not nested
listed 35,37   # trivial class ({K2},{K2}) hangs under ({K2},{O0}); operational bases are not nested
listed 33,38   # trivial class ({C1},{C1}) hangs under ({C1},{O1}); operational bases are not nested
listed 34,38   # trivial class ({C1},{C1}) hangs under ({C1},{O0}); operational bases are not nested
listed 36,39   # trivial class ({O1},{O1}) hangs under ({O1},{O0}); operational bases are not nested
listed 37,40   # class {O0} below a trivial class; both bases are replaced
listed 38,40   # class {O0} below a trivial class; both bases are replaced
listed 39,40   # class {O0} below a trivial class; both bases are replaced
derived 16,30  # B_e {O1,C1,K2} vs {O1,K2} with B_o {O0}; not drawn (30,35 and 30,36 are drawn twice)
derived 21,39  # ({O1,C1},{O1}) over trivial ({O1},{O1}); trivial classes are drawn only from the row above
derived 22,39  # ({O1,K2},{O1}) over trivial ({O1},{O1}); trivial classes are drawn only from the row above
derived 27,33  # ({C1},{O0,O1}) over ({C1},{O1}); drawn as 26,33 instead
)";

}  // namespace gluing::data

#endif  // GLUING_DIAGRAM_DATA_HPP_
