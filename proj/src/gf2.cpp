#include "minshadow/gf2.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

namespace minshadow {

namespace {

int weight(Word w) { return std::popcount(w); }

bool orthogonal(Word a, Word b) { return weight(a & b) % 2 == 0; }

void require_budget(int k) {
  if (k > kSplitDimension) {
    throw BudgetExceeded("dimension " + std::to_string(k) + " exceeds the exhaustive enumeration budget of 2^" +
                         std::to_string(kSplitDimension));
  }
}

std::vector<Word> span_of(const std::vector<Word>& gens, std::size_t first, std::size_t last, Word offset) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << (last - first));
  Word w = offset;
  out.push_back(w);
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << (last - first)); ++i) {
    w ^= gens[first + static_cast<std::size_t>(std::countr_zero(i))];
    out.push_back(w);
  }
  return out;
}

struct Walk {
  std::vector<std::uint64_t> counts;
  Word lightest = 0;
  int lightest_weight = -1;  // over nonzero words
};

// Visits offset + span(gens) once per word.
Walk walk(const std::vector<Word>& gens, Word offset, int n) {
  require_budget(static_cast<int>(gens.size()));
  Walk out;
  out.counts.assign(static_cast<std::size_t>(n + 1), 0);
  auto consider = [&](Word w) {
    const int wt = weight(w);
    ++out.counts[static_cast<std::size_t>(wt)];
    if (wt > 0 && (out.lightest_weight < 0 || wt < out.lightest_weight)) {
      out.lightest_weight = wt;
      out.lightest = w;
    }
  };
  const int k = static_cast<int>(gens.size());
  if (k <= kDirectDimension) {
    Word w = offset;
    consider(w);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
      w ^= gens[static_cast<std::size_t>(std::countr_zero(i))];
      consider(w);
    }
    return out;
  }
  const std::size_t half = static_cast<std::size_t>(k / 2);
  const std::vector<Word> left = span_of(gens, 0, half, offset);
  const std::vector<Word> right = span_of(gens, half, gens.size(), 0);
  for (Word a : left) {
    for (Word b : right) {
      ++out.counts[static_cast<std::size_t>(weight(a ^ b))];
    }
  }
  for (int wt = 1; wt <= n && out.lightest_weight < 0; ++wt) {
    if (out.counts[static_cast<std::size_t>(wt)] == 0) {
      continue;
    }
    for (Word a : left) {
      const auto hit = std::find_if(right.begin(), right.end(), [&](Word b) { return weight(a ^ b) == wt; });
      if (hit != right.end()) {
        out.lightest = a ^ *hit;
        out.lightest_weight = wt;
        break;
      }
    }
  }
  return out;
}

WeightEnumerator to_enumerator(const Walk& w, int n) {
  WeightEnumerator out{n, std::vector<Rational>(static_cast<std::size_t>(n + 1))};
  for (int wt = 0; wt <= n; ++wt) {
    out.coeffs[static_cast<std::size_t>(wt)] = Rational(BigInt(std::to_string(w.counts[static_cast<std::size_t>(wt)])));
  }
  return out;
}

// Basis of {x : <x, row> = 0 for every row}.
std::vector<Word> null_space(const std::vector<Word>& rows, int n) {
  std::vector<Word> m = rows;
  std::vector<int> pivot_cols;
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < m.size(); ++col) {
    const Word bit = Word{1} << col;
    auto it = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(rank), m.end(), [&](Word r) { return (r & bit) != 0; });
    if (it == m.end()) {
      continue;
    }
    std::iter_swap(m.begin() + static_cast<std::ptrdiff_t>(rank), it);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && (m[r] & bit) != 0) {
        m[r] ^= m[rank];
      }
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  std::vector<Word> basis;
  for (int free = 0; free < n; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) {
      continue;
    }
    Word x = Word{1} << free;
    for (std::size_t r = 0; r < rank; ++r) {
      if ((m[r] >> free) & 1U) {
        x |= Word{1} << pivot_cols[r];
      }
    }
    basis.push_back(x);
  }
  return basis;
}

bool in_span(const std::vector<Word>& rows, Word v) {
  std::vector<Word> extended = rows;
  extended.push_back(v);
  return gf2_rank(extended) == gf2_rank(rows);
}

}  // namespace

int gf2_rank(std::vector<Word> rows) {
  int rank = 0;
  for (int col = 0; col < kMaxLength; ++col) {
    const Word bit = Word{1} << col;
    auto it = std::find_if(rows.begin() + rank, rows.end(), [&](Word r) { return (r & bit) != 0; });
    if (it == rows.end()) {
      continue;
    }
    std::iter_swap(rows.begin() + rank, it);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if ((rows[r] & bit) != 0) {
        rows[r] ^= rows[static_cast<std::size_t>(rank)];
      }
    }
    ++rank;
  }
  return rank;
}

std::string format_word(Word w, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((w >> i) & 1U) {
      out[static_cast<std::size_t>(i)] = '1';
    }
  }
  return out;
}

BinaryCode parse_code(std::string_view text) {
  BinaryCode code;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    Word row = 0;
    int len = 0;
    for (char ch : line) {
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        continue;
      }
      if (ch != '0' && ch != '1') {
        throw CodeFormatError("line " + std::to_string(line_no) + ": non-binary character '" + std::string(1, ch) +
                              "'");
      }
      if (len >= kMaxLength) {
        throw CodeFormatError("line " + std::to_string(line_no) + ": length exceeds " +
                              std::to_string(kMaxLength));
      }
      if (ch == '1') {
        row |= Word{1} << len;
      }
      ++len;
    }
    if (len == 0) {
      continue;
    }
    if (code.n == 0) {
      code.n = len;
    } else if (len != code.n) {
      throw CodeFormatError("line " + std::to_string(line_no) + ": row has " + std::to_string(len) +
                            " columns, expected " + std::to_string(code.n));
    }
    code.rows.push_back(row);
  }
  if (code.rows.empty()) {
    throw CodeFormatError("no generator rows");
  }
  code.k = static_cast<int>(code.rows.size());
  const int rank = gf2_rank(code.rows);
  if (rank != code.k) {
    throw CodeFormatError("generator rows are dependent: rank " + std::to_string(rank) + " < " +
                          std::to_string(code.k) + " rows");
  }
  return code;
}

BinaryCode load_code(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw CodeFormatError("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code(buf.str());
}

WeightEnumerator weight_enumerator(const BinaryCode& c) { return to_enumerator(walk(c.rows, 0, c.n), c.n); }

WeightEnumerator coset_weight_enumerator(const BinaryCode& c, Word offset) {
  return to_enumerator(walk(c.rows, offset, c.n), c.n);
}

CodeChecks checks(const BinaryCode& c) {
  CodeChecks out;
  bool self_orthogonal = true;
  bool rows_doubly_even = true;
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    rows_doubly_even = rows_doubly_even && weight(c.rows[i]) % 4 == 0;
    for (std::size_t j = i; j < c.rows.size(); ++j) {
      self_orthogonal = self_orthogonal && orthogonal(c.rows[i], c.rows[j]);
    }
  }
  out.self_dual = self_orthogonal && 2 * c.k == c.n;
  out.doubly_even = self_orthogonal && rows_doubly_even;
  out.singly_even = out.self_dual && !out.doubly_even;

  const Walk all = walk(c.rows, 0, c.n);
  out.min_distance = std::max(all.lightest_weight, 0);
  if (c.n % 2 == 0) {
    out.extremal_bound = ParamSet::from_length(c.n).d;
    out.extremal = out.self_dual && out.min_distance == out.extremal_bound;
  }
  if (out.singly_even) {
    const ShadowDecomposition sd = shadow_decompose(c);
    out.shadow_min_weight = sd.shadow.min_nonzero_weight();
    out.minimal_shadow = out.shadow_min_weight == minimal_shadow_weight(ParamSet::from_length(c.n));
  }
  return out;
}

ShadowDecomposition shadow_decompose(const BinaryCode& c) {
  const CodeChecks basic = [&] {
    CodeChecks b;
    bool self_orthogonal = true;
    bool doubly = true;
    for (std::size_t i = 0; i < c.rows.size(); ++i) {
      doubly = doubly && weight(c.rows[i]) % 4 == 0;
      for (std::size_t j = i; j < c.rows.size(); ++j) {
        self_orthogonal = self_orthogonal && orthogonal(c.rows[i], c.rows[j]);
      }
    }
    b.self_dual = self_orthogonal && 2 * c.k == c.n;
    b.singly_even = b.self_dual && !doubly;
    return b;
  }();
  if (!basic.singly_even) {
    throw std::invalid_argument("shadow decomposition needs a singly-even self-dual code");
  }
  require_budget(c.k);

  ShadowDecomposition out;
  const auto g_it = std::find_if(c.rows.begin(), c.rows.end(), [](Word r) { return weight(r) % 4 == 2; });
  const Word g = *g_it;
  for (auto it = c.rows.begin(); it != c.rows.end(); ++it) {
    if (it == g_it) {
      continue;
    }
    out.c0_generators.push_back(weight(*it) % 4 == 2 ? (*it ^ g) : *it);
  }

  // C_0^perp / C_0 has order 4; any vector of C_0^perp outside C gives the shadow cosets.
  Word s = 0;
  for (Word v : null_space(out.c0_generators, c.n)) {
    if (!in_span(c.rows, v)) {
      s = v;
      break;
    }
  }

  const Walk first = walk(out.c0_generators, s, c.n);
  const Walk second = walk(out.c0_generators, s ^ g, c.n);
  const Walk even = walk(out.c0_generators, g, c.n);
  const bool swap = second.lightest_weight < first.lightest_weight;
  const Walk& c1 = swap ? second : first;
  const Walk& c3 = swap ? first : second;
  out.c1_rep = c1.lightest;
  out.c3_rep = c3.lightest;
  out.c2_rep = even.lightest;
  out.c1 = to_enumerator(c1, c.n);
  out.c3 = to_enumerator(c3, c.n);
  out.shadow = out.c1;
  for (int w = 0; w <= c.n; ++w) {
    out.shadow.coeffs[static_cast<std::size_t>(w)] += out.c3.coeffs[static_cast<std::size_t>(w)];
  }
  return out;
}

bool CrossValidation::ok() const {
  return predicted_w && predicted_s && !first_w_mismatch && !first_s_mismatch;
}

CrossValidation cross_validate(const BinaryCode& c) {
  CrossValidation out;
  const ShadowDecomposition sd = shadow_decompose(c);
  out.oracle_w = weight_enumerator(c);
  out.oracle_s = sd.shadow;

  const ParamSet p = ParamSet::from_length(c.n);
  const SolveOutcome outcome = solve(build_constraints(p));
  out.solver_outcome = outcome_name(outcome);
  if (const auto* u = std::get_if<Unique>(&outcome)) {
    Enumerators e = enumerators_from_c(p, u->c);
    for (int w = 0; w <= c.n; ++w) {
      if (!out.first_w_mismatch && e.w.at(w) != out.oracle_w.at(w)) {
        out.first_w_mismatch = w;
      }
      if (!out.first_s_mismatch && e.s.at(w) != out.oracle_s.at(w)) {
        out.first_s_mismatch = w;
      }
    }
    out.predicted_w = std::move(e.w);
    out.predicted_s = std::move(e.s);
  }
  return out;
}

}  // namespace minshadow
