#include "pseudoline/crossing_word.hpp"

#include <numeric>
#include <string>

#include "pseudoline/error.hpp"

namespace pseudoline {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::PairCrossesTwice: return "PairCrossesTwice";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::TooFewLines: return "TooFewLines";
    case ErrorCode::UnknownLine: return "UnknownLine";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::MalformedBody: return "MalformedBody";
    case ErrorCode::WrongResidue: return "WrongResidue";
    case ErrorCode::UnknownSeed: return "UnknownSeed";
    case ErrorCode::SeedFailsBound: return "SeedFailsBound";
    case ErrorCode::SeedUnavailable: return "SeedUnavailable";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::ConstructionSelfCheckFailed: return "ConstructionSelfCheckFailed";
    case ErrorCode::StageFailedBound: return "StageFailedBound";
    case ErrorCode::NotATriangle: return "NotATriangle";
    case ErrorCode::FeasibilityCeilingExceeded: return "FeasibilityCeilingExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

CrossingWord CrossingWord::validate(int wires, std::vector<int> positions) {
  if (wires < 2) {
    throw Error(ErrorCode::TooFewLines, "need at least 2 wires, got " + std::to_string(wires));
  }
  const auto expected = static_cast<std::size_t>(crossing_count(wires));
  if (positions.size() != expected) {
    throw Error(ErrorCode::WrongLength, "expected " + std::to_string(expected) +
                                            " crossings, got " + std::to_string(positions.size()));
  }
  std::vector<int> order(wires);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const int p = positions[i];
    if (p < 1 || p >= wires) {
      throw Error(ErrorCode::PositionOutOfRange,
                  "position " + std::to_string(p) + " at index " + std::to_string(i) +
                      " outside [1, " + std::to_string(wires - 1) + "]");
    }
    int& lower = order[p - 1];
    int& upper = order[p];
    // Two wires that already crossed are in decreasing order.
    if (lower > upper) {
      throw Error(ErrorCode::PairCrossesTwice,
                  "wires " + std::to_string(upper + 1) + " and " + std::to_string(lower + 1) +
                      " cross again at index " + std::to_string(i));
    }
    std::swap(lower, upper);
  }
  return CrossingWord(wires, std::move(positions));
}

std::vector<std::vector<int>> local_sequences(const CrossingWord& word) {
  const int n = word.wires();
  std::vector<std::vector<int>> seqs(n);
  for (auto& s : seqs) s.reserve(n - 1);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int p : word.positions()) {
    const int a = order[p - 1];
    const int b = order[p];
    seqs[a].push_back(b);
    seqs[b].push_back(a);
    std::swap(order[p - 1], order[p]);
  }
  return seqs;
}

std::vector<int> sweep_from_sequences(std::span<const int> start,
                                      const std::vector<std::vector<int>>& sequences) {
  const int n = static_cast<int>(start.size());
  std::vector<int> order(start.begin(), start.end());
  std::vector<std::size_t> next(sequences.size(), 0);
  auto peek = [&](int line) {
    const auto& s = sequences[line];
    return next[line] < s.size() ? s[next[line]] : -1;
  };

  const std::size_t total = static_cast<std::size_t>(crossing_count(n));
  std::vector<int> word;
  word.reserve(total);
  while (word.size() < total) {
    int chosen = -1;
    for (int p = 1; p < n; ++p) {
      const int a = order[p - 1];
      const int b = order[p];
      if (peek(a) == b && peek(b) == a) {
        chosen = p;
        break;
      }
    }
    if (chosen < 0) {
      throw Error(ErrorCode::Internal, "crossing sequences admit no sweep after " +
                                           std::to_string(word.size()) + " swaps");
    }
    const int a = order[chosen - 1];
    const int b = order[chosen];
    ++next[a];
    ++next[b];
    std::swap(order[chosen - 1], order[chosen]);
    word.push_back(chosen);
  }
  for (int line : start) {
    if (next[line] != sequences[line].size()) {
      throw Error(ErrorCode::Internal, "crossing sequences not exhausted by sweep");
    }
  }
  return word;
}

CrossingWord normal_form(const CrossingWord& word) {
  std::vector<int> start(word.wires());
  std::iota(start.begin(), start.end(), 0);
  return CrossingWord::validate(word.wires(), sweep_from_sequences(start, local_sequences(word)));
}

std::vector<int> order_after(const CrossingWord& word, std::size_t prefix) {
  std::vector<int> order(word.wires());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i < prefix && i < word.size(); ++i) {
    const int p = word[i];
    std::swap(order[p - 1], order[p]);
  }
  return order;
}

}  // namespace pseudoline
