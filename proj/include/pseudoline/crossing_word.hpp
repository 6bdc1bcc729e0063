#pragma once

#include <compare>
#include <span>
#include <vector>

namespace pseudoline {

// Wiring diagram of a simple arrangement: a sequence of adjacent swaps.
// Position p (1-based) swaps the wires currently on tracks p and p+1 (tracks
// are counted bottom to top). Starting from the identity order, every pair of
// wires swaps exactly once, so the sweep ends in the full reversal.
//
// Wires are identified by their starting track, 0-based internally.
class CrossingWord {
 public:
  // Throws Error{WrongLength | PairCrossesTwice | PositionOutOfRange}.
  static CrossingWord validate(int wires, std::vector<int> positions);

  int wires() const noexcept { return wires_; }
  std::span<const int> positions() const noexcept { return positions_; }
  std::size_t size() const noexcept { return positions_.size(); }
  int operator[](std::size_t i) const { return positions_[i]; }

  friend bool operator==(const CrossingWord&, const CrossingWord&) = default;
  friend auto operator<=>(const CrossingWord&, const CrossingWord&) = default;

 private:
  CrossingWord(int wires, std::vector<int> positions)
      : wires_(wires), positions_(std::move(positions)) {}

  int wires_ = 0;
  std::vector<int> positions_;
};

constexpr int crossing_count(int wires) { return wires * (wires - 1) / 2; }

// For each wire (0-based), the wires it crosses in sweep order.
std::vector<std::vector<int>> local_sequences(const CrossingWord& word);

// Rebuilds a word from a start order and per-line crossing sequences.
//
// `start` lists line ids bottom to top; `sequences[id]` is the order in which
// line `id` meets the others. At each step the smallest position whose two
// lines are each other's next crossing is emitted, which yields the
// lexicographically smallest word of the commutation class. Throws
// Error{Internal} if the sequences are inconsistent.
std::vector<int> sweep_from_sequences(std::span<const int> start,
                                      const std::vector<std::vector<int>>& sequences);

// Lexicographically smallest word commutation-equivalent to `word`.
CrossingWord normal_form(const CrossingWord& word);

// Wire order (bottom to top) after applying the first `prefix` swaps.
std::vector<int> order_after(const CrossingWord& word, std::size_t prefix);

}  // namespace pseudoline
