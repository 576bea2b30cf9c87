#include "pebbling/board.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace pebbling {

int Board::multiplicity(Cell c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c,
                               [](const auto& e, Cell v) { return e.first < v; });
    if (it != cells_.end() && it->first == c) return it->second;
    return 0;
}

long Board::pebble_count() const {
    long n = 0;
    for (const auto& [c, mult] : cells_) n += mult;
    return n;
}

bool Board::clean() const {
    return std::all_of(cells_.begin(), cells_.end(),
                       [](const auto& e) { return e.second == 1; });
}

void Board::place(Cell c, int mult) {
    if (c.i < 0 || c.j < 0)
        throw std::invalid_argument("place: cell outside the quadrant");
    if (mult < 1 || mult > 2) throw std::invalid_argument("place: multiplicity in {1,2}");
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c,
                               [](const auto& e, Cell v) { return e.first < v; });
    if (it != cells_.end() && it->first == c)
        throw std::invalid_argument("place: cell already occupied");
    cells_.insert(it, {c, mult});
}

std::string Board::key() const {
    std::string k;
    k.reserve(cells_.size() * 3);
    for (const auto& [c, mult] : cells_) {
        // Reachable cells stay within the level sets the search can touch;
        // a byte per coordinate is ample for any feasible enumeration.
        k.push_back(static_cast<char>(c.i));
        k.push_back(static_cast<char>(c.j));
        k.push_back(static_cast<char>(mult));
    }
    return k;
}

std::string Board::to_text() const {
    std::ostringstream os;
    for (const auto& [c, mult] : cells_) os << c.i << ' ' << c.j << ' ' << mult << '\n';
    return os.str();
}

Board Board::from_text(std::string_view text) {
    Board b;
    std::istringstream is{std::string(text)};
    int i, j, mult;
    while (is >> i >> j >> mult) b.place({i, j}, mult);
    return b;
}

Board initial_board(long m) {
    if (m < 0) throw std::invalid_argument("initial_board: m must be >= 0");
    Board b;
    b.place({0, static_cast<int>(m) + 1}, 1);
    b.place({static_cast<int>(m) + 1, 0}, 1);
    for (int i = 1; i <= m; ++i) b.place({i, static_cast<int>(m) + 1 - i}, 2);
    return b;
}

std::vector<Cell> legal_moves(const Board& b) {
    std::vector<Cell> moves;
    for (const auto& [c, mult] : b.cells()) {
        (void)mult;
        if (!b.occupied({c.i + 1, c.j}) && !b.occupied({c.i, c.j + 1}))
            moves.push_back(c);
    }
    return moves;  // cells() is lexicographic already
}

Board apply_move(const Board& b, Cell c) {
    int mult = b.multiplicity(c);
    if (mult == 0 || b.occupied({c.i + 1, c.j}) || b.occupied({c.i, c.j + 1}))
        throw std::invalid_argument("illegal move");
    Board nb;
    for (const auto& [cell, m] : b.cells()) {
        if (cell == c) {
            if (m > 1) nb.place(cell, m - 1);
        } else {
            nb.place(cell, m);
        }
    }
    nb.place({c.i + 1, c.j}, 1);
    nb.place({c.i, c.j + 1}, 1);
    return nb;
}

EnumerationResult enumerate_counts(long m, long max_steps, std::uint64_t max_states) {
    if (m < 0 || max_steps < 0)
        throw std::invalid_argument("enumerate_counts: negative argument");

    EnumerationResult res;
    Board start = initial_board(m);
    long base = start.pebble_count();  // 2m+2

    std::unordered_set<std::string> visited;
    std::vector<Board> frontier;

    auto visit = [&](Board b) -> bool {
        auto [it, inserted] = visited.emplace(b.key());
        (void)it;
        if (!inserted) return false;
        ++res.states_visited;
        if (b.clean()) ++res.clean_counts[b.pebble_count()];
        frontier.push_back(std::move(b));
        return true;
    };

    std::vector<Board> layer;
    visit(start);
    res.last_complete_level = base;

    for (long depth = 1; depth <= max_steps; ++depth) {
        layer.swap(frontier);
        frontier.clear();
        for (const Board& b : layer) {
            for (Cell c : legal_moves(b)) {
                visit(apply_move(b, c));
                if (res.states_visited > max_states) {
                    // Budget tripped mid-layer: results at this pebble level
                    // are partial, drop them.
                    res.exhausted = true;
                    res.clean_counts.erase(
                        res.clean_counts.upper_bound(res.last_complete_level),
                        res.clean_counts.end());
                    return res;
                }
            }
        }
        res.last_complete_level = base + depth;
    }
    return res;
}

}  // namespace pebbling
