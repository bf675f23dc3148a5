#include <algorithm>
#include <cstdlib>

#include "millionaire/scoring.hpp"

namespace millionaire {

double distance_score(std::span<const std::string> words, const TokenSet& q_words,
                      const TokenSet& a_words, int radius) {
  const auto n = static_cast<std::ptrdiff_t>(words.size());
  const double rad = radius;
  double score = 0.0;
  std::size_t answer_words = 0;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (!a_words.contains(words[i])) continue;
    ++answer_words;
    const auto lo = std::max<std::ptrdiff_t>(0, i - radius);
    const auto hi = std::min<std::ptrdiff_t>(n - 1, i + radius);
    for (auto j = lo; j <= hi; ++j) {
      if (j != i && q_words.contains(words[j])) {
        score += (rad - static_cast<double>(std::abs(i - j))) / rad;
      }
    }
  }
  return answer_words == 0 ? 0.0 : score / static_cast<double>(answer_words);
}

}  // namespace millionaire
