#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pebbling {

struct Cell {
    int i = 0;
    int j = 0;
    auto operator<=>(const Cell&) const = default;
};

// A finite multiset of occupied first-quadrant cells, multiplicities in
// {1,2}.  Cells are kept in lexicographic (i,j) order so equal boards have
// identical canonical encodings.  A pebbling step never drops a pebble on
// an occupied cell, so multiplicity 2 survives only from the doubled cells
// of the initial arrangement.
class Board {
public:
    Board() = default;

    int multiplicity(Cell c) const;  // 0 when empty
    bool occupied(Cell c) const { return multiplicity(c) > 0; }
    long pebble_count() const;
    bool clean() const;  // every multiplicity equals 1

    const std::vector<std::pair<Cell, int>>& cells() const { return cells_; }

    // Insert a pebble stack on an empty cell (board construction).
    void place(Cell c, int mult);

    // Compact canonical encoding, usable as a dedup key.
    std::string key() const;
    // Text encoding, one "i j mult" line per cell in lexicographic order.
    std::string to_text() const;
    static Board from_text(std::string_view text);

    bool operator==(const Board&) const = default;

private:
    std::vector<std::pair<Cell, int>> cells_;  // sorted by cell
};

// The starting arrangement: one pebble at (0,m+1) and (m+1,0), two pebbles
// on each interior cell of the anti-diagonal i+j = m+1 (2m+2 pebbles total;
// for m = 0 just the two single pebbles).
Board initial_board(long m);

// Cells that may move: occupied with both (i+1,j) and (i,j+1) empty.
// Lexicographic order.
std::vector<Cell> legal_moves(const Board& b);

// Remove one pebble at `c`, place one at (i+1,j) and one at (i,j+1).
// Throws std::invalid_argument("illegal move") unless c is a legal move.
Board apply_move(const Board& b, Cell c);

struct EnumerationResult {
    // pebble total -> number of distinct clean reachable boards
    std::map<long, std::uint64_t> clean_counts;
    long last_complete_level = 0;  // counts are complete for totals <= this
    bool exhausted = false;        // stopped early on the state budget
    std::uint64_t states_visited = 0;
};

// Breadth-first search over every board reachable from initial_board(m) in
// at most max_steps moves, deduplicating by canonical key.  A board with k
// pebbles appears exactly at depth k - (2m+2), so the clean counts are
// complete for all totals <= 2m+2+max_steps.  State counts grow like
// 2.33^k: the default budget of 2e7 states (~2 GB) admits max_steps around
// 18 for small m; past the budget the search stops, counts above
// last_complete_level are dropped and `exhausted` is set.
EnumerationResult enumerate_counts(long m, long max_steps,
                                   std::uint64_t max_states = 20'000'000);

}  // namespace pebbling
