#pragma once

// Brute-force oracle on explicit binary codes (length <= 64): weight
// enumerators by exhaustive enumeration, the doubly-even subcode and its
// cosets, and the shadow.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minshadow/solver.hpp"

namespace minshadow {

using Word = std::uint64_t;  // bit i = coordinate i

inline constexpr int kMaxLength = 64;
inline constexpr int kDirectDimension = 24;  // 2^k enumerated word by word
inline constexpr int kSplitDimension = 32;   // 2^k via two half-spans

class CodeFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BinaryCode {
  int n = 0;
  int k = 0;
  std::vector<Word> rows;  // linearly independent generators
};

/// One row per line of '0'/'1' characters. Whitespace inside a row, blank
/// lines and '#' comments are ignored. Throws CodeFormatError on bad
/// characters, ragged rows, n > 64 or dependent rows.
BinaryCode parse_code(std::string_view text);
BinaryCode load_code(const std::filesystem::path& path);

std::string format_word(Word w, int n);
int gf2_rank(std::vector<Word> rows);

/// Weight distribution of the code (offset = 0) or of the coset offset + C.
/// Throws BudgetExceeded for k > 32.
WeightEnumerator weight_enumerator(const BinaryCode& c);
WeightEnumerator coset_weight_enumerator(const BinaryCode& c, Word offset);

struct CodeChecks {
  bool self_dual = false;
  bool doubly_even = false;
  bool singly_even = false;
  int min_distance = 0;
  int extremal_bound = 0;  // 4[n/24] + 4, or + 6 when n = 22 mod 24
  bool extremal = false;
  std::optional<int> shadow_min_weight;  // singly-even self-dual codes only
  std::optional<bool> minimal_shadow;
};

CodeChecks checks(const BinaryCode& c);

struct ShadowDecomposition {
  std::vector<Word> c0_generators;  // doubly-even subcode, dimension n/2 - 1
  Word c1_rep = 0;                  // lightest vector of the coset holding the lightest shadow vector
  Word c2_rep = 0;                  // lightest vector of C \ C_0
  Word c3_rep = 0;
  WeightEnumerator c1;
  WeightEnumerator c3;
  WeightEnumerator shadow;  // c1 + c3
};

/// Requires a singly-even self-dual code. Throws std::invalid_argument
/// otherwise, BudgetExceeded beyond the enumeration budget.
ShadowDecomposition shadow_decompose(const BinaryCode& c);

struct CrossValidation {
  std::string solver_outcome;
  WeightEnumerator oracle_w;
  WeightEnumerator oracle_s;
  std::optional<WeightEnumerator> predicted_w;
  std::optional<WeightEnumerator> predicted_s;
  std::optional<int> first_w_mismatch;
  std::optional<int> first_s_mismatch;

  bool ok() const;
};

/// Enumerated W and S against the solver's unique enumerators for the same n.
CrossValidation cross_validate(const BinaryCode& c);

}  // namespace minshadow
